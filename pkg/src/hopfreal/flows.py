"""Roots f^(1/k) and the real one-parameter group f^t.

For a contraction with real coefficients and positive diagonal::

    IV        f^t = (a^t z, a^t w)
    III       f^t = (d^(rt) z, d^t w)
    IIa~      f^t = (d^(rt) z + c t d^(r(t-1)) w^r, d^t w)
    IIb~      f^t = (a^t z + c t a^(t-1) w, a^t w)
    IIc       f^t = (a^t z, d^t w)

(IIa / IIb are the tilde classes with c = 1.)  The k-th root is f^(1/k).
Real powers are only ever taken of positive reals, as exp(t ln x).
"""
from __future__ import annotations

import math

import numpy as np

from . import polymap as pm
from .contractions import Contraction, _canonical_diagonal, _close, is_iic_prime
from .errors import NotPositiveDiagonal, NotRealCoefficients

TRIANGULAR_R = {"IIa": None, "IIaTilde": None, "IIb": 1, "IIbTilde": 1}


def _real_parts(f: Contraction) -> dict:
    if is_iic_prime(f) or not f.has_real_coefficients():
        raise NotRealCoefficients("flows need real coefficients (class %s)" % f.cls)
    d1, d2 = (x.real for x in f.diagonal())
    return {"d1": d1, "d2": d2, "c": f.c.real if f.c is not None else 0.0}


def _positive_parts(f: Contraction) -> dict:
    parts = _real_parts(f)
    if parts["d1"] <= 0 or parts["d2"] <= 0:
        raise NotPositiveDiagonal("flows need positive diagonal coefficients")
    return parts


def _r(f: Contraction) -> int:
    return 1 if f.cls in ("IIb", "IIbTilde") else f.r


def _is_triangular(f: Contraction) -> bool:
    return f.cls in TRIANGULAR_R


def flow(f: Contraction, t: float) -> pm.PolyMap:
    """The automorphism f^t of W."""
    t = float(t)
    if not math.isfinite(t):
        raise ValueError("t must be finite")
    p = _positive_parts(f)
    d1t = math.exp(t * math.log(p["d1"]))
    d2t = math.exp(t * math.log(p["d2"]))
    if _is_triangular(f):
        r = _r(f)
        off = p["c"] * t * math.exp((t - 1) * math.log(p["d1"]))
        return pm.triangular(d1t, off, r, d2t)
    return pm.diag(d1t, d2t)


def kth_root(f: Contraction, k: int) -> pm.PolyMap:
    """f^(1/k); for IIa the off-diagonal coefficient is (1/k) d^(r(1-k)/k)."""
    k = int(k)
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k == 1:
        _positive_parts(f)
        return f.polymap()
    return flow(f, 1.0 / k)


def flow_apply(f: Contraction, t, Z) -> np.ndarray:
    """f^t(Z) with one time per point: t has shape (N,), Z shape (N, 2)."""
    p = _positive_parts(f)
    t = np.asarray(t, dtype=float)
    Z = np.atleast_2d(np.asarray(Z, dtype=complex))
    l1, l2 = math.log(p["d1"]), math.log(p["d2"])
    z, w = Z[:, 0], Z[:, 1]
    first = np.exp(t * l1) * z
    if _is_triangular(f):
        first = first + p["c"] * t * np.exp((t - 1) * l1) * w ** _r(f)
    return np.stack([first, np.exp(t * l2) * w], -1)


def generator(f: Contraction, Y) -> np.ndarray:
    """The vector field X with d/dt f^t(Y) = X(f^t(Y))."""
    p = _positive_parts(f)
    Y = np.atleast_2d(np.asarray(Y, dtype=complex))
    l1, l2 = math.log(p["d1"]), math.log(p["d2"])
    y1, y2 = Y[:, 0], Y[:, 1]
    first = l1 * y1
    if _is_triangular(f):
        first = first + p["c"] / p["d1"] * y2 ** _r(f)
    return np.stack([first, l2 * y2], -1)


def square_with_orientation(f: Contraction):
    """(g, swapped): g = f^2 as a contraction, and whether g lives in swapped coordinates.

    Squaring a diagonal map can create a resonance d1^2 = (d2^2)^r with the
    roles of the coordinates reversed; the canonical class of g is then
    written for (w, z) and ``swapped`` is True.
    """
    p = _real_parts(f)
    if f.cls in ("IIa", "IIaTilde"):
        d = f.delta.real
        return Contraction("IIaTilde", delta=d * d, r=f.r, c=2 * p["c"] * d**f.r), False
    if f.cls in ("IIb", "IIbTilde"):
        a = f.alpha.real
        return Contraction("IIbTilde", alpha=a * a, c=2 * p["c"] * a), False
    a2, b2 = p["d1"] ** 2, p["d2"] ** 2
    if _close(a2, b2):
        return Contraction("IV", alpha=a2), False
    if f.cls == "III":
        return Contraction("III", delta=b2, r=f.r), False
    g = _canonical_diagonal(complex(a2), complex(b2))
    if g.cls == "IV":
        return g, False
    return g, abs(g.diagonal()[0] - a2) > 1e-12 * a2


def square_for_negatives(f: Contraction) -> Contraction:
    """g = f^2 in its (possibly tilde) extended Wehler class."""
    return square_with_orientation(f)[0]
