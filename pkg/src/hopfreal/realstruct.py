"""Real structures on H_f: parity, existence, canonical models, normalization.

A Real structure s on H_f = W/<f> is represented by an anti-holomorphic lift
phi to W commuting with f.  phi^2 = f^n for a unique n (the deck power); the
structure is even or odd with n.  Every even structure is conjugate by an
element psi of Aut_h(W)^f to the standard one (c, or c' in class II'c), every
odd one to c o f^(1/2), c' o f^(1/2) or J o f^(1/2).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import polymap as pm
from .contractions import Contraction, _is_real, is_iic_prime, structural_flags
from .errors import (
    NoAntiholomorphic,
    NoSuchStructure,
    NotCommuting,
    NotDeckPower,
    NotInvolution,
    NotOddSquare,
    NumericallySingular,
)
from .flows import kth_root

MAX_DECK_POWER = 8
VERIFY_TOL = 1e-9

MODELS = ("StandardC", "StandardCPrime", "OddCF", "OddCPrimeF", "OddJF")


def _scaled_tol(tol: float, *maps) -> float:
    scale = max([1.0] + [float(np.max(np.abs(m.coefficients()), initial=0.0)) for m in maps])
    return tol * scale


def _close_maps(m1: pm.PolyMap, m2: pm.PolyMap, tol: float) -> bool:
    return pm.maps_equal(m1, m2, _scaled_tol(tol, m1, m2))


@dataclass(frozen=True)
class RealStructureSpec:
    lift: pm.PolyMap
    parity: str
    deck_power: int
    model: str

    def to_json(self) -> dict:
        return {
            "lift": self.lift.to_json(),
            "parity": self.parity,
            "deck_power": self.deck_power,
            "model": self.model,
        }


def _is_negative_iv(f: Contraction) -> bool:
    return f.cls == "IV" and _is_real(f.alpha) and f.alpha.real < 0


def model_tag(f: Contraction, parity: str) -> str:
    if parity == "even":
        return "StandardCPrime" if is_iic_prime(f) else "StandardC"
    if is_iic_prime(f):
        return "OddCPrimeF"
    return "OddJF" if _is_negative_iv(f) else "OddCF"


def _check_commutes(f: Contraction, phi: pm.PolyMap, tol: float) -> pm.PolyMap:
    if not phi.conj:
        raise NotCommuting("a lift of a Real structure must be anti-holomorphic")
    F = f.polymap()
    if not _close_maps(pm.compose(phi, F), pm.compose(F, phi), tol):
        raise NotCommuting("lift does not commute with f")
    return F


def parity_of_lift(f: Contraction, phi: pm.PolyMap, tol: float = VERIFY_TOL):
    """(n, parity) with phi^2 = f^n."""
    F = _check_commutes(f, phi, tol)
    sq = pm.compose(phi, phi)
    top = abs(sq.coeff("Q", 0, 1))
    if top == 0:
        raise NotDeckPower("phi^2 has no w-coefficient in its second coordinate")
    n = int(round(math.log(top) / math.log(abs(f.base))))
    if abs(n) > MAX_DECK_POWER:
        raise NotDeckPower("deck power %d exceeds the bound %d" % (n, MAX_DECK_POWER))
    fn = pm.power(F, n)
    if not _close_maps(sq, fn, tol):
        raise NotDeckPower("phi^2 is not a power of f")
    return n, ("even" if n % 2 == 0 else "odd")


def make_structure(f: Contraction, phi: pm.PolyMap, tol: float = VERIFY_TOL) -> RealStructureSpec:
    n, parity = parity_of_lift(f, phi, tol)
    return RealStructureSpec(phi, parity, n, model_tag(f, parity))


def existence(f: Contraction) -> dict:
    flags = structural_flags(f)
    anyah = flags["real_coeffs"] or flags["is_iic_prime"]
    odd = (
        (flags["real_coeffs"] and flags["positive_diagonal"])
        or flags["is_iic_prime"]
        or (f.cls == "IV" and flags["real_coeffs"])
    )
    return {"any_antiholomorphic": anyah, "even_exists": anyah, "odd_exists": bool(odd)}


def half_root(f: Contraction) -> pm.PolyMap:
    """The square root of f used by the canonical odd structure."""
    if is_iic_prime(f):
        s = cmath.sqrt(f.alpha)
        return pm.diag(s, s.conjugate())
    if _is_negative_iv(f):
        s = 1j * math.sqrt(abs(f.alpha))
        return pm.diag(s, s)
    return kth_root(f, 2)


def canonical_lift(f: Contraction, parity: str) -> pm.PolyMap:
    ex = existence(f)
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    if not ex[parity + "_exists"]:
        raise NoSuchStructure("H_f has no %s Real structure" % parity)
    base = pm.swap_conjugation() if is_iic_prime(f) else pm.conjugation()
    if parity == "even":
        return base
    if _is_negative_iv(f):
        base = pm.quaternionic_j()
    return pm.compose(base, half_root(f))


def canonical_structure(f: Contraction, parity: str) -> RealStructureSpec:
    lift = canonical_lift(f, parity)
    return RealStructureSpec(lift, parity, 0 if parity == "even" else 1, model_tag(f, parity))


# ---------------------------------------------------------------------------
# normalization

def _half_angle(x: complex) -> complex:
    """A with A^2 = x / |x|, principal argument."""
    return cmath.exp(0.5j * cmath.phase(x))


def _real_basis_of_antilinear(A: np.ndarray) -> np.ndarray:
    """l with A conj(l) = l, for an anti-linear involution Z -> A conj(Z)."""
    cands = []
    for v in (np.array([1, 0]), np.array([1j, 0]), np.array([0, 1]), np.array([0, 1j])):
        cands.append(0.5 * (v + A @ np.conj(v)))
    best, bestdet = None, 0.0
    for i in range(len(cands)):
        for j in range(i + 1, len(cands)):
            l = np.column_stack([cands[i], cands[j]])
            d = abs(np.linalg.det(l))
            if d > bestdet:
                best, bestdet = l, d
    if best is None or bestdet < 1e-12:
        raise NumericallySingular("no real frame for the anti-linear involution")
    return best


def _solve_lambda(b: complex, u: complex, v: complex) -> complex:
    """Least-norm B with b = u B - v conj(B) (a real-linear 2x2 system)."""
    M = np.array([[(u - v).real, (1j * (u + v)).real], [(u - v).imag, (1j * (u + v)).imag]])
    sol, *_ = np.linalg.lstsq(M, np.array([b.real, b.imag]), rcond=1e-12)
    return complex(sol[0], sol[1])


def _conjugate_by(psi: pm.PolyMap, base: pm.PolyMap) -> pm.PolyMap:
    return pm.compose(psi, pm.compose(base, pm.invert(psi)))


def _even_conjugator(f: Contraction, phi: pm.PolyMap) -> pm.PolyMap:
    if is_iic_prime(f):
        a = phi.coeff("P", 0, 1)
        if a == 0:
            raise NotCommuting("lift does not have the II'c shape (a conj w, d conj z)")
        return pm.diag(a, 1)
    if f.cls == "IV":
        return pm.from_matrix(_real_basis_of_antilinear(phi.matrix()))
    parts = pm._triangular_parts(phi)
    if parts is None:
        raise NotCommuting("lift does not have the shape of Ah(W)^f")
    a, b, r, d = parts
    if f.cls == "IIc" or (f.cls == "III" and b == 0):
        return pm.diag(_half_angle(a), _half_angle(d))
    if f.cls == "III":
        A, D = _half_angle(a), _half_angle(d)
        u = D.conjugate() ** (-r)
        v = A * A * u
        B = _solve_lambda(b, u, v)
        return pm.triangular(A, B, r, D)
    # IIa / IIb: psi = (A^r z + B w^r, A w) with A^2 = the w-coefficient of phi
    A = _half_angle(d)
    r = 1 if f.cls in ("IIb", "IIbTilde") else f.r
    B = _solve_lambda(b, A**r, A ** (3 * r))
    return pm.triangular(A**r, B, r, A)


def normalize_even(f: Contraction, phi: pm.PolyMap, tol: float = VERIFY_TOL) -> pm.PolyMap:
    """psi in Aut_h(W)^f with psi o c o psi^-1 = phi (c' in class II'c)."""
    if not existence(f)["even_exists"]:
        raise NoAntiholomorphic("H_f admits no anti-holomorphic automorphism")
    _check_commutes(f, phi, tol)
    if not _close_maps(pm.compose(phi, phi), pm.identity(), tol):
        raise NotInvolution("phi o phi is not the identity")
    psi = _even_conjugator(f, phi)
    base = pm.swap_conjugation() if is_iic_prime(f) else pm.conjugation()
    if not _close_maps(_conjugate_by(psi, base), phi, tol):
        raise NumericallySingular("normalizing conjugator failed verification")
    return psi


def normalize_odd(f: Contraction, phi: pm.PolyMap, tol: float = VERIFY_TOL) -> pm.PolyMap:
    """psi in Aut_h(W)^f conjugating the canonical odd lift to phi."""
    if not existence(f)["odd_exists"]:
        raise NoSuchStructure("H_f has no odd Real structure")
    F = _check_commutes(f, phi, tol)
    if not _close_maps(pm.compose(phi, phi), F, tol):
        raise NotOddSquare("phi o phi is not f")
    if _is_negative_iv(f):
        Bm = phi.matrix()
        Ba = 1j * Bm / math.sqrt(abs(f.alpha))
        if not np.allclose(Ba @ np.conj(Ba), -np.eye(2), atol=1e-12 * max(1.0, np.abs(Ba).max() ** 2)):
            raise NotOddSquare("phi o f^(-1/2) does not square to -id")
        l = np.column_stack([[1, 0], Ba[:, 0]])
        if abs(np.linalg.det(l)) < 1e-14:
            raise NumericallySingular("quaternionic frame is degenerate")
        psi = pm.from_matrix(l)
    else:
        inv_half = pm.invert(half_root(f))
        psi = _even_conjugator(f, pm.compose(inv_half, phi))
    if not _close_maps(_conjugate_by(psi, canonical_lift(f, "odd")), phi, tol):
        raise NumericallySingular("normalizing conjugator failed verification")
    return psi


def reduce_lift(f: Contraction, phi: pm.PolyMap, n: int) -> pm.PolyMap:
    """phi o f^(-k) with n = 2k or 2k + 1: an involution or a square root of f."""
    k = n // 2
    if k == 0:
        return phi
    return pm.compose(phi, pm.power(f.polymap(), -k))


def normalize(f: Contraction, phi: pm.PolyMap, tol: float = VERIFY_TOL):
    """(structure, psi) for any lift: reduces the deck power, then normalizes."""
    spec = make_structure(f, phi, tol)
    reduced = reduce_lift(f, phi, spec.deck_power)
    if spec.parity == "even":
        return spec, normalize_even(f, reduced, tol)
    return spec, normalize_odd(f, reduced, tol)


# ---------------------------------------------------------------------------
# the family Ah(W)^f

_FAMILIES = {
    "IV": ("A conj(Z)", ["A"], ["A in GL(2,C)"]),
    "III": ("(a conj(z) + b conj(w)^r, d conj(w))", ["a", "b", "d"], ["a, d in C*", "b in C"]),
    "IIa": ("(a^r conj(z) + b conj(w)^r, a conj(w))", ["a", "b"], ["a in C*", "b in C"]),
    "IIb": ("(a conj(z) + b conj(w), a conj(w))", ["a", "b"], ["a in C*", "b in C"]),
    "IIc": ("(a conj(z), d conj(w))", ["a", "d"], ["a, d in C*"]),
    "IIcPrime": ("(a conj(w), d conj(z))", ["a", "d"], ["a, d in C*"]),
}


def _family_key(f: Contraction) -> str:
    if is_iic_prime(f):
        return "IIcPrime"
    return {"IIaTilde": "IIa", "IIbTilde": "IIb"}.get(f.cls, f.cls)


def list_antiholomorphic_family(f: Contraction) -> dict:
    if not existence(f)["any_antiholomorphic"]:
        raise NoAntiholomorphic("H_f admits no anti-holomorphic automorphism")
    key = _family_key(f)
    shape, params, constraints = _FAMILIES[key]
    out = {"class": key, "shape": shape, "parameters": params, "constraints": constraints}
    if f.r is not None and key in ("III", "IIa"):
        out["r"] = f.r
    return out


def instantiate_family(f: Contraction, params: dict) -> pm.PolyMap:
    """The element of Ah(W)^f with the given parameters."""
    key = list_antiholomorphic_family(f)["class"]
    if key == "IV":
        return pm.from_matrix(np.asarray(params["A"], dtype=complex), conj=True)
    if key == "IIcPrime":
        return pm.PolyMap(True, {(0, 1): params["a"]}, {(1, 0): params["d"]}, True)
    if key == "IIc":
        return pm.diag(params["a"], params["d"], conj=True)
    a, b = complex(params["a"]), complex(params.get("b", 0))
    if key == "III":
        return pm.triangular(a, b, f.r, params["d"], conj=True)
    r = 1 if key == "IIb" else f.r
    return pm.triangular(a**r, b, r, a, conj=True)

