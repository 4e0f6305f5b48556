"""Seeded random generators for contractions, lifts and commutant elements.

Used by the verification suites and the test-suite.  Every generator takes a
numpy ``Generator`` so results are reproducible from a seed.
"""
from __future__ import annotations

import cmath
import math

import numpy as np

from . import polymap as pm
from .autgroup import commutant_element
from .contractions import Contraction, power_match
from .realstruct import canonical_lift, half_root

POSITIVE_CLASSES = ("IV", "III", "IIa", "IIb", "IIc")


def _modulus(rng, lo=0.2, hi=0.9) -> float:
    return float(rng.uniform(lo, hi))


def _unit(rng) -> complex:
    return cmath.exp(1j * rng.uniform(-math.pi, math.pi))


def _nonzero(rng, lo=0.5, hi=2.0) -> complex:
    return _modulus(rng, lo, hi) * _unit(rng)


def random_contraction(rng, cls: str, sign: str = "positive") -> Contraction:
    """A random contraction of the given class.

    ``sign`` is 'positive' (positive real coefficients), 'negative' (a
    negative delta / alpha), 'mixed' (IIc with one negative entry) or
    'complex' (generic complex coefficients).
    """
    def num(lo=0.2, hi=0.9):
        x = _modulus(rng, lo, hi)
        if sign == "negative":
            return -x
        if sign == "complex":
            return x * _unit(rng)
        return x

    if cls == "IV":
        return Contraction("IV", alpha=num())
    if cls == "III":
        return Contraction("III", delta=num(0.4, 0.9), r=int(rng.integers(2, 5)))
    if cls == "IIa":
        return Contraction("IIa", delta=num(0.4, 0.9), r=int(rng.integers(2, 5)))
    if cls == "IIb":
        return Contraction("IIb", alpha=num())
    if cls == "IIaTilde":
        return Contraction("IIaTilde", delta=num(0.4, 0.9), r=int(rng.integers(2, 5)), c=rng.uniform(-3, 3))
    if cls == "IIbTilde":
        return Contraction("IIbTilde", alpha=num(), c=rng.uniform(-3, 3))
    if cls == "IIcPrime":
        x = _modulus(rng)
        ang = rng.uniform(0.1, math.pi - 0.1)
        return Contraction("IIcPrime", alpha=x * cmath.exp(1j * ang))
    if cls == "IIc":
        while True:
            a, d = num(), num()
            if sign == "mixed":
                a, d = (-abs(a), abs(d)) if rng.random() < 0.5 else (abs(a), -abs(d))
            if abs(a) > abs(d):
                a, d = d, a
            if abs(abs(a) - abs(d)) < 0.05 or power_match(a, d, 1) is not None:
                continue
            return Contraction("IIc", alpha=a, delta=d)
    raise ValueError("unknown class %r" % cls)


def random_gl2(rng, cond: float = 20.0) -> np.ndarray:
    while True:
        M = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        if np.linalg.cond(M) < cond:
            return M


def random_even_lift(rng, f: Contraction) -> pm.PolyMap:
    """A random anti-holomorphic involution commuting with f.

    Drawn from the solved constraint sets of phi o phi = id in the shape of
    Ah(W)^f for the class of f.
    """
    from .contractions import is_iic_prime

    if is_iic_prime(f):
        a = _nonzero(rng)
        return pm.PolyMap(True, {(0, 1): a}, {(1, 0): 1 / a.conjugate()}, True)
    if f.cls == "IV":
        l = random_gl2(rng)
        return pm.from_matrix(l @ np.linalg.inv(np.conj(l)), conj=True)
    if f.cls == "IIc":
        return pm.diag(_unit(rng), _unit(rng), conj=True)
    x = rng.uniform(-2, 2)
    if f.cls == "III":
        a, d = _unit(rng), _unit(rng)
        b = x * cmath.sqrt(-a * d**f.r)
        return pm.triangular(a, b, f.r, d, conj=True)
    r = 1 if f.cls in ("IIb", "IIbTilde") else f.r
    a = _unit(rng)
    return pm.triangular(a**r, x * 1j * a**r, r, a, conj=True)


def random_odd_lift(rng, f: Contraction) -> pm.PolyMap:
    """A random anti-holomorphic phi commuting with f and with phi o phi = f."""
    if f.cls == "IV" and f.alpha.real < 0:
        P = pm.from_matrix(random_gl2(rng))
        return pm.compose(P, pm.compose(canonical_lift(f, "odd"), pm.invert(P)))
    return pm.compose(half_root(f), random_even_lift(rng, f))


def random_commutant(rng, f: Contraction):
    """A random element of Aut_h(W)^f with parameters of moderate size."""
    from .autgroup import _family

    fam = _family(f)
    if fam == "IV":
        return commutant_element(f, A=random_gl2(rng))
    if fam in ("IIc", "IIcPrime"):
        return commutant_element(f, a=_nonzero(rng), d=_nonzero(rng))
    if fam == "III":
        return commutant_element(f, a=_nonzero(rng), d=_nonzero(rng), b=_nonzero(rng))
    return commutant_element(f, a=_nonzero(rng), b=_nonzero(rng))


def random_real_commutant(rng, f: Contraction):
    """A random element of Aut_h(W)^f commuting with the standard structure."""
    from .autgroup import _family

    fam = _family(f)

    def real():
        return float(rng.choice([-1, 1]) * rng.uniform(0.5, 2.0))

    if fam == "IV":
        while True:
            A = rng.normal(size=(2, 2))
            if abs(np.linalg.det(A)) > 0.1:
                return commutant_element(f, A=A)
    if fam == "IIcPrime":
        a = _nonzero(rng)
        return commutant_element(f, a=a, d=a.conjugate())
    if fam == "IIc":
        return commutant_element(f, a=real(), d=real())
    if fam == "III":
        return commutant_element(f, a=real(), d=real(), b=real())
    return commutant_element(f, a=real(), b=real())


def random_points(rng, n: int, scale: float = 1.0) -> np.ndarray:
    """n points of W with log-uniform norms around ``scale``."""
    Z = rng.normal(size=(n, 2)) + 1j * rng.normal(size=(n, 2))
    Z /= np.linalg.norm(Z, axis=-1, keepdims=True)
    return Z * scale * np.exp(rng.uniform(-1, 1, size=(n, 1)))


def random_sphere_points(rng, n: int) -> np.ndarray:
    """n points (zeta, Z) of S^1 x S^3."""
    zeta = np.exp(1j * rng.uniform(-math.pi, math.pi, size=n))
    Z = rng.normal(size=(n, 2)) + 1j * rng.normal(size=(n, 2))
    Z /= np.linalg.norm(Z, axis=-1, keepdims=True)
    return np.column_stack([zeta, Z])


def random_quaternionic(rng) -> np.ndarray:
    """A random element of R_+ . SU(2): [[a, -conj b], [b, conj a]]."""
    a, b = rng.normal() + 1j * rng.normal(), rng.normal() + 1j * rng.normal()
    return np.array([[a, -np.conj(b)], [b, np.conj(a)]])
