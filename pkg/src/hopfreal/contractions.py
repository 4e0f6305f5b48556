"""Wehler normal forms of holomorphic contractions.

The classes, with their polynomial shapes::

    IV        (a z, a w)
    III       (d^r z, d w)              r >= 2
    IIa       (d^r z + w^r, d w)        r >= 2
    IIb       (a z + w, a w)
    IIc       (a z, d w)                a != d^r for every r >= 1
    IIcPrime  (a z, conj(a) w)          a not real

plus the two extended classes ``IIaTilde`` / ``IIbTilde`` in which the
off-diagonal coefficient ``c`` is free.  These only arise as squares of IIa /
IIb contractions with negative diagonal and are never produced by
:func:`classify` unless asked for.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import polymap as pm
from .errors import NotContraction, NotWehlerForm

CLASSES = ("IV", "III", "IIa", "IIb", "IIc", "IIcPrime", "IIaTilde", "IIbTilde")
R_MAX = 64
COEFF_TOL = 1e-12


def _close(x: complex, y: complex, tol: float = COEFF_TOL) -> bool:
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


def _is_real(x: complex, tol: float = COEFF_TOL) -> bool:
    return abs(x.imag) <= tol * max(1.0, abs(x))


def power_match(a: complex, d: complex, rmin: int = 1, rmax: int = R_MAX) -> Optional[int]:
    """The integer r in [rmin, rmax] with a == d**r, if any.

    |d| < 1 makes |d|^r strictly decreasing, so only r = ln|a| / ln|d| can
    work; that single candidate is rounded and then checked.
    """
    if not (0 < abs(d) < 1) or a == 0:
        return None
    r = int(round(math.log(abs(a)) / math.log(abs(d))))
    if r < rmin or r > rmax:
        return None
    return r if _close(a, d**r) else None


@dataclass(frozen=True)
class Contraction:
    cls: str
    alpha: Optional[complex] = None
    delta: Optional[complex] = None
    r: Optional[int] = None
    c: Optional[complex] = None

    def __post_init__(self):
        if self.cls not in CLASSES:
            raise NotWehlerForm("unknown class %r" % (self.cls,))
        for name in ("alpha", "delta", "c"):
            v = getattr(self, name)
            if v is not None:
                v = complex(v)
                if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                    raise ValueError("%s must be finite" % name)
                object.__setattr__(self, name, v)
        need = {
            "IV": ("alpha",),
            "III": ("delta", "r"),
            "IIa": ("delta", "r"),
            "IIaTilde": ("delta", "r", "c"),
            "IIb": ("alpha",),
            "IIbTilde": ("alpha", "c"),
            "IIc": ("alpha", "delta"),
            "IIcPrime": ("alpha",),
        }[self.cls]
        for name in need:
            if getattr(self, name) is None:
                raise NotWehlerForm("class %s needs %s" % (self.cls, name))
        if self.cls in ("IIa", "IIb"):
            object.__setattr__(self, "c", 1 + 0j)
        if self.cls == "IIcPrime":
            object.__setattr__(self, "delta", self.alpha.conjugate())
        if self.r is not None:
            object.__setattr__(self, "r", int(self.r))
        self._validate()

    def _validate(self):
        for x in self.diagonal():
            if not 0 < abs(x) < 1:
                raise NotContraction("diagonal coefficient %r has modulus outside (0, 1)" % x)
        if self.cls in ("III", "IIa", "IIaTilde"):
            if self.r < 2 and self.cls != "IIaTilde":
                raise NotWehlerForm("class %s needs r >= 2" % self.cls)
            if self.r < 1:
                raise NotWehlerForm("r must be positive")
        if self.cls == "IIc":
            if power_match(self.alpha, self.delta) is not None:
                raise NotWehlerForm("IIc needs alpha != delta^r for every r >= 1")
        if self.cls == "IIcPrime" and _is_real(self.alpha):
            raise NotWehlerForm("IIcPrime needs a non-real alpha")

    # -- coefficients -----------------------------------------------------
    def diagonal(self) -> tuple:
        if self.cls in ("IV", "IIb", "IIbTilde"):
            return (self.alpha, self.alpha)
        if self.cls in ("III", "IIa", "IIaTilde"):
            return (self.delta**self.r, self.delta)
        return (self.alpha, self.delta)

    def off_diagonal(self) -> complex:
        return self.c if self.c is not None else 0j

    @property
    def base(self) -> complex:
        """The coefficient of w in the second coordinate."""
        return self.diagonal()[1]

    def coefficients(self) -> list:
        vals = list(self.diagonal())
        if self.c is not None:
            vals.append(self.c)
        return vals

    def has_real_coefficients(self, tol: float = COEFF_TOL) -> bool:
        return all(_is_real(v, tol) for v in self.coefficients())

    def polymap(self) -> pm.PolyMap:
        d1, d2 = self.diagonal()
        if self.cls in ("IIa", "IIaTilde"):
            return pm.triangular(d1, self.c, self.r, d2)
        if self.cls in ("IIb", "IIbTilde"):
            return pm.triangular(d1, self.c, 1, d2)
        return pm.diag(d1, d2)

    def to_json(self) -> dict:
        out = {"class": self.cls}
        for name in ("alpha", "delta", "c"):
            v = getattr(self, name)
            if v is None or (name == "c" and self.cls in ("IIa", "IIb")):
                continue
            if name == "delta" and self.cls == "IIcPrime":
                continue
            out[name] = [v.real, v.imag]
        if self.r is not None:
            out["r"] = self.r
        return out

    @classmethod
    def from_json(cls, data) -> "Contraction":
        def num(key):
            v = data.get(key)
            if v is None:
                return None
            if isinstance(v, (int, float)):
                return complex(v)
            return complex(v[0], v[1])

        return cls(data["class"], num("alpha"), num("delta"), data.get("r"), num("c"))


def render_polymap(f: Contraction) -> pm.PolyMap:
    return f.polymap()


def _canonical_diagonal(a: complex, b: complex) -> Contraction:
    """Diagonal (a, b) with a != b: III in either orientation, else canonical IIc."""
    r = power_match(a, b, rmin=2)
    if r is not None:
        return Contraction("III", delta=b, r=r)
    r = power_match(b, a, rmin=2)
    if r is not None:
        return Contraction("III", delta=a, r=r)
    if _close(b, a.conjugate()) and not _is_real(a):
        return Contraction("IIcPrime", alpha=a if a.imag > 0 else b)
    if abs(a) > abs(b) or (abs(a) == abs(b) and (a.real, a.imag) > (b.real, b.imag)):
        a, b = b, a
    return Contraction("IIc", alpha=a, delta=b)


def classify(f: pm.PolyMap, allow_tilde: bool = False) -> Contraction:
    """Read off the Wehler class and coefficients of a holomorphic map."""
    if f.conj:
        raise NotWehlerForm("an anti-holomorphic map is not a contraction")
    if set(f.Q) != {(0, 1)} or (1, 0) not in f.P:
        raise NotWehlerForm("monomial support does not match a Wehler class")
    extra = [m for m in f.P if m != (1, 0)]
    if len(extra) > 1 or (extra and extra[0][0] != 0):
        raise NotWehlerForm("monomial support does not match a Wehler class")
    a, b = f.P[(1, 0)], f.Q[(0, 1)]
    for x in (a, b):
        if not 0 < abs(x) < 1:
            raise NotContraction("diagonal coefficient %r has modulus outside (0, 1)" % x)

    if not extra:
        if _close(a, b):
            return Contraction("IV", alpha=a)
        return _canonical_diagonal(a, b)

    r = extra[0][1]
    lam = f.P[(0, r)]
    if r == 1:
        if not _close(a, b):
            raise NotWehlerForm("(a z + c w, d w) needs a == d")
        if _close(lam, 1):
            return Contraction("IIb", alpha=b)
        if allow_tilde:
            return Contraction("IIbTilde", alpha=b, c=lam)
        raise NotWehlerForm("off-diagonal coefficient of IIb must be 1")
    if not _close(a, b**r):
        raise NotWehlerForm("(a z + c w^r, d w) needs a == d^r")
    if _close(lam, 1):
        return Contraction("IIa", delta=b, r=r)
    if allow_tilde:
        return Contraction("IIaTilde", delta=b, r=r, c=lam)
    raise NotWehlerForm("off-diagonal coefficient of IIa must be 1")


def _diag_family(f: Contraction) -> bool:
    return f.cls in ("IIc", "IIcPrime")


def is_biholomorphic_pair(f1: Contraction, f2: Contraction, tol: float = COEFF_TOL) -> bool:
    """Whether H_f1 and H_f2 are biholomorphic (both in normal form)."""
    if _diag_family(f1) and _diag_family(f2):
        a1, d1 = f1.diagonal()
        a2, d2 = f2.diagonal()
        return (_close(a1, a2, tol) and _close(d1, d2, tol)) or (
            _close(a1, d2, tol) and _close(d1, a2, tol)
        )
    if f1.cls != f2.cls or f1.r != f2.r:
        return False
    return all(_close(x, y, tol) for x, y in zip(f1.coefficients(), f2.coefficients()))


def is_iic_prime(f: Contraction) -> bool:
    if f.cls == "IIcPrime":
        return True
    if f.cls != "IIc":
        return False
    return _close(f.delta, f.alpha.conjugate()) and not _is_real(f.alpha)


def structural_flags(f: Contraction) -> dict:
    real = f.has_real_coefficients()
    diag = f.diagonal()
    neg = sum(1 for x in diag if _is_real(x) and x.real < 0) if real else 0
    return {
        "real_coeffs": real,
        "positive_diagonal": real and all(x.real > 0 for x in diag),
        "negative_diagonal_count": neg,
        "is_iic_prime": is_iic_prime(f),
    }


def as_polymap(f) -> pm.PolyMap:
    return f.polymap() if isinstance(f, Contraction) else f


def principal_sqrt(x: complex) -> complex:
    return cmath.sqrt(x)


def diagonal_array(f: Contraction) -> np.ndarray:
    return np.array(f.diagonal(), dtype=complex)
