"""Real Picard data.

Pic(H_f) is identified with C* through zeta -> [L_zeta], where L_zeta is the
quotient of W x C by f_zeta(x, z) = (f(x), zeta z).  A Real structure s acts
on Pic by zeta -> conj(zeta).  For real zeta the bundle map
phi_0(x, z) = (s^(x), conj z) descends to L_zeta, and the anti-holomorphic
Real structures on L_zeta are the involutive maps nu phi_0.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import polymap as pm
from .contractions import Contraction
from .errors import NotRealZeta, ZeroArgument
from .realstruct import RealStructureSpec
from .topology import same_orbit_power

REAL_TOL = 1e-12


def _is_real(zeta: complex) -> bool:
    return abs(zeta.imag) <= REAL_TOL * abs(zeta)


def pic_involution(zeta: complex) -> complex:
    zeta = complex(zeta)
    if zeta == 0:
        raise ZeroArgument("zeta must be non-zero")
    return zeta.conjugate()


@dataclass(frozen=True)
class PicardDatum:
    zeta: complex
    parity: str
    circle_radius: Optional[float]

    @property
    def exists(self) -> bool:
        return self.circle_radius is not None

    def to_json(self) -> dict:
        status = "none" if self.circle_radius is None else {"circle_radius": self.circle_radius}
        return {"zeta": [self.zeta.real, self.zeta.imag], "parity": self.parity, "status": status}


def real_structures_on_line_bundle(parity: str, zeta: complex) -> PicardDatum:
    zeta = complex(zeta)
    if zeta == 0:
        raise ZeroArgument("zeta must be non-zero")
    if not _is_real(zeta):
        return PicardDatum(zeta, parity, None)
    if parity == "even":
        return PicardDatum(zeta, parity, 1.0)
    if zeta.real > 0:
        return PicardDatum(zeta, parity, math.sqrt(zeta.real))
    return PicardDatum(zeta, parity, None)


def pic_real_group(parity: str) -> dict:
    if parity == "even":
        return {
            "presentation": "ℝ*",
            "components": 2,
            "non_surjective_classes": [],
            "notes": ["Pic_R(H) -> Pic(H)(R) = R* is an isomorphism"],
        }
    return {
        "presentation": "ℝ_{>0}",
        "components": 1,
        "non_surjective_classes": ["zeta < 0"],
        "notes": ["classes zeta < 0 are fixed by the involution but carry no Real structure"],
    }


def non_surjective(parity: str, zeta: float) -> bool:
    """Whether the real class zeta is missed by Pic_R(H) -> Pic(H)(R)."""
    return parity == "odd" and zeta < 0


def bundle_map_square(s: RealStructureSpec, nu: complex, X, z):
    """(nu phi_0)^2 on total-space points: phi(x, z) = (s^(x), nu conj z), applied twice."""
    X1 = pm.evaluate(s.lift, X)
    z1 = nu * np.conj(z)
    return pm.evaluate(s.lift, X1), nu * np.conj(z1)


def verify_bundle_involution(
    f: Contraction,
    s: RealStructureSpec,
    zeta: complex,
    nu: complex,
    samples: int = 32,
    seed: int = 0,
    tol: float = 1e-8,
) -> bool:
    """Whether nu phi_0 squares to the identity of L_zeta, tested on samples of W x C."""
    zeta = complex(zeta)
    if zeta == 0 or not _is_real(zeta):
        raise NotRealZeta("the bundle map descends only for real non-zero zeta")
    zeta = zeta.real
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(samples, 2)) + 1j * rng.normal(size=(samples, 2))
    z = rng.normal(size=samples) + 1j * rng.normal(size=samples)
    Y, w = bundle_map_square(s, complex(nu), X, z)
    k, ok = same_orbit_power(f, X, Y)
    if not ok.all():
        return False
    fiber = zeta ** k.astype(float) * z
    return bool(np.all(np.abs(fiber - w) <= tol * np.maximum(1.0, np.abs(w))))


def conjugating_unit(nu: complex, target: complex) -> complex:
    """A unit u with u^2 nu = target (|target| = |nu|): the gauge map (x, z) -> (x, u z)."""
    return cmath.exp(0.5j * (cmath.phase(target) - cmath.phase(nu)))
