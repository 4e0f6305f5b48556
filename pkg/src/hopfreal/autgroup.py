"""Automorphism groups: the commutant Aut_h(W)^f, cosets modulo <f>, descriptors.

Commutant shapes by class::

    IV        A Z,                    A in GL(2, C)
    III       (a z + b w^r, d w)
    IIa       (a^r z + b w^r, a w)
    IIb       (a z + b w, a w)
    IIc       (a z, d w)              (also II'c)

Aut_h(H_f) = Aut_h(W)^f / <f>; a coset is represented by the element whose
scale parameter lies in the fundamental annulus [|base|, 1).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import polymap as pm
from .contractions import Contraction, _is_real, is_iic_prime
from .errors import NoSuchStructure, NotCommuting, NotQuaternionicShape
from .realstruct import RealStructureSpec

COSET_TOL = 1e-9
BOUNDARY_SNAP = 1e-9  # |x - round(x)| below this counts as on the annulus boundary


@dataclass(frozen=True)
class CommutantElement:
    underlying: pm.PolyMap
    params: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        enc = {}
        for k, v in self.params.items():
            if isinstance(v, np.ndarray):
                enc[k] = [[[x.real, x.imag] for x in row] for row in v]
            elif isinstance(v, (int,)) and not isinstance(v, bool):
                enc[k] = v
            else:
                enc[k] = [complex(v).real, complex(v).imag]
        return {"map": self.underlying.to_json(), "params": enc}


def _family(f: Contraction) -> str:
    if f.cls == "IV":
        return "IV"
    if f.cls in ("IIa", "IIaTilde"):
        return "IIa"
    if f.cls in ("IIb", "IIbTilde"):
        return "IIb"
    if f.cls == "III":
        return "III"
    return "IIcPrime" if is_iic_prime(f) else "IIc"


def commutant_element(f: Contraction, **params) -> CommutantElement:
    """Build an element of Aut_h(W)^f from its table parameters."""
    fam = _family(f)
    if fam == "IV":
        A = np.asarray(params["A"], dtype=complex)
        return CommutantElement(pm.from_matrix(A), {"A": A})
    if fam in ("IIc", "IIcPrime"):
        a, d = complex(params["a"]), complex(params["d"])
        return CommutantElement(pm.diag(a, d), {"a": a, "d": d})
    b = complex(params.get("b", 0))
    if fam == "III":
        a, d = complex(params["a"]), complex(params["d"])
        return CommutantElement(pm.triangular(a, b, f.r, d), {"a": a, "d": d, "b": b})
    a = complex(params["a"])
    r = f.r if fam == "IIa" else 1
    return CommutantElement(pm.triangular(a**r, b, r, a), {"a": a, "b": b})


def from_polymap(f: Contraction, g: pm.PolyMap, tol: float = COSET_TOL) -> CommutantElement:
    """Read the table parameters off a map commuting with f."""
    if g.conj or not pm.commutes(g, f.polymap(), tol * max(1.0, np.abs(g.coefficients()).max())):
        raise NotCommuting("map does not commute with f")
    fam = _family(f)
    if fam == "IV":
        return CommutantElement(g, {"A": g.matrix()})
    parts = pm._triangular_parts(g)
    if parts is None:
        raise NotCommuting("map does not have the commutant shape of class %s" % fam)
    a, b, r, d = parts
    if fam in ("IIc", "IIcPrime"):
        return CommutantElement(g, {"a": a, "d": d})
    if fam == "III":
        return CommutantElement(g, {"a": a, "d": d, "b": b})
    return CommutantElement(g, {"a": d, "b": b})


def _as_element(f: Contraction, g) -> CommutantElement:
    return g if isinstance(g, CommutantElement) else from_polymap(f, g)


def _scale_and_base(f: Contraction, g: CommutantElement):
    m = g.underlying
    if f.cls == "IV":
        return abs(np.linalg.det(m.matrix())), abs(f.alpha) ** 2
    if is_iic_prime(f):
        return abs(m.coeff("P", 1, 0)), abs(f.alpha)
    return abs(m.coeff("Q", 0, 1)), abs(f.base)


def coset_shift(f: Contraction, g) -> int:
    """k such that g o f^k has its scale parameter in [|base|, 1)."""
    g = _as_element(f, g)
    s, base = _scale_and_base(f, g)
    x = 1 - math.log(s) / math.log(base)
    # a scale on the annulus boundary maps to the lower edge whatever the rounding noise
    n = round(x)
    return int(n) if abs(x - n) < BOUNDARY_SNAP else int(math.floor(x))


def canonical_rep(f: Contraction, g) -> CommutantElement:
    g = _as_element(f, g)
    k = coset_shift(f, g)
    rep = pm.compose(g.underlying, pm.power(f.polymap(), k))
    return from_polymap(f, rep)


def same_coset(f: Contraction, g1, g2, tol: float = COSET_TOL) -> bool:
    r1, r2 = canonical_rep(f, g1).underlying, canonical_rep(f, g2).underlying
    scale = max(1.0, np.abs(r1.coefficients()).max(), np.abs(r2.coefficients()).max())
    return pm.maps_equal(r1, r2, tol * scale)


def membership_even(f: Contraction, g, tol: float = 1e-12) -> bool:
    """Whether g descends to an automorphism of (H_f, s_f)."""
    g = _as_element(f, g)
    m = g.underlying
    if is_iic_prime(f):
        a, d = m.coeff("P", 1, 0), m.coeff("Q", 0, 1)
        return abs(d - a.conjugate()) <= tol * max(1.0, abs(a))
    return m.has_real_coefficients(tol * max(1.0, np.abs(m.coefficients()).max()))


def _fmt(x: complex) -> str:
    x = complex(x)
    return "%g" % x.real if _is_real(x) else "%g%+gi" % (x.real, x.imag)


def real_automorphism_group(f: Contraction, s: RealStructureSpec) -> dict:
    if s.parity not in ("even", "odd"):
        raise NoSuchStructure("unknown parity")
    fam = _family(f)
    if fam != "IIcPrime" and not f.has_real_coefficients():
        raise NoSuchStructure("H_f admits no Real structure")
    if s.parity == "odd" and fam == "IV" and f.alpha.real < 0:
        return {
            "presentation": "Spin^c(3)",
            "dimension": 4,
            "notes": [
                "S¹×_{ℤ₂}SU(2), via Phi(A) = (det(A)^(1/2), det(A)^(-1/2) A) on ℝ₊·SU(2)",
                "alpha = %s" % _fmt(f.alpha),
            ],
        }
    if fam == "IV":
        desc = ("GL(2,ℝ)/⟨%s·I₂⟩" % _fmt(f.alpha), 4, [])
    elif fam == "III":
        desc = (
            "((ℝ*×ℝ*)/⟨(δ^r,δ)⟩)⋉_ρ̂ᵣ ℝ",
            3,
            ["delta = %s, r = %d" % (_fmt(f.delta), f.r), "rho_r(a,d)(b) = a d^(-r) b"],
        )
    elif fam in ("IIa", "IIb"):
        desc = ("(ℝ*⋉ℝ)/⟨f⟩", 2, ["commutant (a^r z + b w^r, a w) with a, b real"])
    elif fam == "IIc":
        desc = ("(ℝ*×ℝ*)/⟨(α,δ)⟩", 2, ["alpha = %s, delta = %s" % (_fmt(f.alpha), _fmt(f.delta))])
    else:
        desc = ("ℂ*/⟨α⟩", 2, ["1-dimensional complex torus", "alpha = %s" % _fmt(f.alpha)])
    notes = list(desc[2])
    if s.parity == "odd":
        notes.append("equal to the group of the standard (even) structure")
    return {"presentation": desc[0], "dimension": desc[1], "notes": notes}


def spinc_witness(A) -> tuple:
    """Phi(A) = (det(A)^(1/2), det(A)^(-1/2) A) for A in R_+ . SU(2)."""
    A = np.asarray(A, dtype=complex)
    if A.shape != (2, 2):
        raise NotQuaternionicShape("expected a 2x2 matrix")
    a, b = A[0, 0], A[1, 0]
    scale = max(1.0, np.abs(A).max())
    if abs(A[0, 1] + np.conj(b)) > 1e-12 * scale or abs(A[1, 1] - np.conj(a)) > 1e-12 * scale:
        raise NotQuaternionicShape("A is not of the form [[a, -conj b], [b, conj a]]")
    det = abs(a) ** 2 + abs(b) ** 2
    if det == 0:
        raise NotQuaternionicShape("(a, b) must be non-zero")
    rho = math.sqrt(det)
    return rho, A / rho


def spinc_circle(rho: float, alpha: complex) -> complex:
    """The circle coordinate exp(pi i ln(rho) / ln|alpha|) of the class of rho."""
    return cmath.exp(1j * math.pi * math.log(rho) / math.log(abs(alpha)))


# ---------------------------------------------------------------------------
# the semidirect structure of class III

def iii_element(a: complex, d: complex, b: complex, r: int) -> pm.PolyMap:
    """g_{a,d,b}(z, w) = (a z + a b w^r, d w)."""
    return pm.triangular(a, a * b, r, d)


def iii_params(g: pm.PolyMap):
    a, ab, r, d = pm._triangular_parts(g)
    return a, d, ab / a


def rho_r(a: complex, d: complex, b: complex, r: int) -> complex:
    return a * d ** (-r) * b


def semidirect_product(x1: complex, h1, x2: complex, h2, r: int):
    """(x, h)(x', h') = (x + rho(h) x', h h') with h = (a, d)."""
    (a1, d1), (a2, d2) = h1, h2
    return x1 + rho_r(a1, d1, x2, r), (a1 * a2, d1 * d2)
