"""Equivariant topology of Real primary Hopf surfaces.

For a contraction f with real coefficients and positive diagonal, the weight
eta(z, w) = |z|^2 + B |w|^(2q) decreases strictly along the flow f^t, so each
orbit of the flow meets the slice Sigma = {eta = 1} exactly once and

    F : R x Sigma -> W,  F(t, Z) = f^t(Z)

is a diffeomorphism.  Dividing by f (t -> t + 1), exponentiating t and
normalizing Sigma onto S^3 gives a chart H_f -> S^1 x S^3.  Composing with the
covers a', a'', the II'c flattening and the odd-route maps turns the Real
structure into one of the model involutions tau, tau', mu_0.

Points of W are complex arrays (N, 2); points of R x Sigma and S^1 x S^3 are
(N, 3) with t (stored as a complex number with zero imaginary part) or zeta in
column 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import polymap as pm
from .contractions import Contraction, _is_real, is_iic_prime
from .errors import ConvergenceFailure, NoSuchStructure, NotPositiveDiagonal, NotRealCoefficients
from .flows import flow_apply, generator, square_with_orientation
from .realstruct import RealStructureSpec, normalize_even, normalize_odd, reduce_lift

ROOT_TOL = 1e-12
MAX_ITER = 200
MAX_DOUBLINGS = 60

L_MATRIX = np.array([[1, 1j], [1, -1j]])


# ---------------------------------------------------------------------------
# weights and the slice

@dataclass(frozen=True)
class EtaSpec:
    q: int
    B: float
    C: float

    def to_json(self) -> dict:
        return {"q": self.q, "B": self.B, "C": self.C}

    @classmethod
    def from_json(cls, data) -> "EtaSpec":
        return cls(int(data["q"]), float(data["B"]), float(data["C"]))


def _positive_diagonal(f: Contraction):
    if is_iic_prime(f) or not f.has_real_coefficients():
        raise NotRealCoefficients("eta weights need real coefficients")
    d1, d2 = (x.real for x in f.diagonal())
    if d1 <= 0 or d2 <= 0:
        raise NotPositiveDiagonal("eta weights need positive diagonal coefficients")
    return d1, d2


def eta_params(f: Contraction) -> EtaSpec:
    d1, d2 = _positive_diagonal(f)
    c = f.c.real if f.c is not None else 0.0
    if f.cls in ("IV", "III"):
        return EtaSpec(1, 1.0, 2 * math.log(d2))
    if f.cls == "IIc":
        return EtaSpec(1, 1.0, 2 * max(math.log(d1), math.log(d2)))
    if f.cls in ("IIa", "IIaTilde"):
        r, ld = f.r, math.log(d2)
        bound = c * c / (r * r * d2 ** (2 * r) * ld * ld)
        return EtaSpec(r, max(1.0, bound), r * ld)
    la = math.log(d2)
    return EtaSpec(1, max(1.0, c * c / (d2 * d2 * la * la)), la)


def eta(spec: EtaSpec, Z) -> np.ndarray:
    Z = np.atleast_2d(np.asarray(Z, dtype=complex))
    return np.abs(Z[:, 0]) ** 2 + spec.B * np.abs(Z[:, 1]) ** (2 * spec.q)


def eta_derivative(f: Contraction, spec: EtaSpec, Z) -> np.ndarray:
    """d/dt eta(f^t Z) at t = 0, from the closed-form generator of the flow."""
    Z = np.atleast_2d(np.asarray(Z, dtype=complex))
    X = generator(f, Z)
    d1 = 2 * np.real(np.conj(Z[:, 0]) * X[:, 0])
    a2 = np.abs(Z[:, 1])
    d2 = spec.B * spec.q * a2 ** (2 * spec.q - 2) * 2 * np.real(np.conj(Z[:, 1]) * X[:, 1])
    return d1 + d2


def solve_increasing(h: Callable, lo, hi, tol: float = ROOT_TOL, maxiter: int = MAX_ITER):
    """Roots of increasing functions, one per array entry.

    ``h(x)`` returns (value, derivative).  The bracket [lo, hi] is widened by
    doubling until it straddles 0, then Newton steps are taken, falling back
    to bisection whenever a step leaves the bracket.
    """
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    for _ in range(MAX_DOUBLINGS):
        vlo, _d = h(lo)
        bad = vlo > 0
        if not bad.any():
            break
        width = hi - lo
        lo = np.where(bad, lo - 2 * width, lo)
    else:
        raise ConvergenceFailure("could not bracket the root from below")
    for _ in range(MAX_DOUBLINGS):
        vhi, _d = h(hi)
        bad = vhi < 0
        if not bad.any():
            break
        width = hi - lo
        hi = np.where(bad, hi + 2 * width, hi)
    else:
        raise ConvergenceFailure("could not bracket the root from above")

    x = 0.5 * (lo + hi)
    for _ in range(MAX_ITER if maxiter is None else maxiter):
        v, dv = h(x)
        done = np.abs(v) <= tol
        if done.all():
            return x
        lo = np.where(v < 0, x, lo)
        hi = np.where(v > 0, x, hi)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = x - v / dv
        ok = np.isfinite(step) & (step > lo) & (step < hi)
        nxt = np.where(ok, step, 0.5 * (lo + hi))
        x = np.where(done, x, nxt)
    v, _ = h(x)
    if np.all(np.abs(v) <= tol):
        return x
    raise ConvergenceFailure("root finding did not converge in %d iterations" % MAX_ITER)


def sigma_project(spec: EtaSpec, Z) -> np.ndarray:
    """rho Z with rho > 0 and eta(rho Z) = 1."""
    Z = np.asarray(Z, dtype=complex)
    single = Z.ndim == 1
    Z = np.atleast_2d(Z)
    if np.any(np.all(Z == 0, axis=-1)):
        raise ValueError("0 is not a point of W")
    a = np.abs(Z[:, 0]) ** 2
    b = spec.B * np.abs(Z[:, 1]) ** (2 * spec.q)
    q = spec.q

    def h(s):
        e1, e2 = np.exp(2 * s) * a, np.exp(2 * q * s) * b
        tot = e1 + e2
        return np.log(tot), (2 * e1 + 2 * q * e2) / tot

    le = np.log(a + b)
    s1, s2 = -le / 2, -le / (2 * q)
    s = solve_increasing(h, np.minimum(s1, s2) - 1, np.maximum(s1, s2) + 1)
    out = np.exp(s)[:, None] * Z
    return out[0] if single else out


def big_F(f: Contraction, t, Z) -> np.ndarray:
    Z = np.asarray(Z, dtype=complex)
    single = Z.ndim == 1
    Z = np.atleast_2d(Z)
    t = np.broadcast_to(np.asarray(t, dtype=float), (len(Z),))
    out = flow_apply(f, t, Z)
    return out[0] if single else out


def big_F_inverse(f: Contraction, Y):
    """(t, Z) with Z on Sigma and f^t(Z) = Y."""
    spec = eta_params(f)
    Y = np.asarray(Y, dtype=complex)
    single = Y.ndim == 1
    Y = np.atleast_2d(Y)
    if np.any(np.all(Y == 0, axis=-1)):
        raise ValueError("0 is not a point of W")

    def h(t):
        P = flow_apply(f, -t, Y)
        e = eta(spec, P)
        return np.log(e), -eta_derivative(f, spec, P) / e

    est = np.abs(np.log(eta(spec, Y)) / spec.C)
    t = solve_increasing(h, -1 - est, 1 + est)
    Z = flow_apply(f, -t, Y)
    if single:
        return float(t[0]), Z[0]
    return t, Z


# ---------------------------------------------------------------------------
# model involutions and chart nodes

MODEL_NAMES = ("Tau", "TauPrime", "Mu0")


def model_involution(model: str, X) -> np.ndarray:
    X = np.asarray(X, dtype=complex)
    single = X.ndim == 1
    X = np.atleast_2d(X)
    zeta, u, v = X[:, 0], X[:, 1], X[:, 2]
    if model == "Tau":
        out = np.stack([zeta, np.conj(u), np.conj(v)], -1)
    elif model == "TauPrime":
        out = np.stack([zeta, np.conj(u), zeta * np.conj(v)], -1)
    elif model == "Mu0":
        out = np.stack([-zeta, u, v], -1)
    else:
        raise ValueError("unknown model %r" % model)
    return out[0] if single else out


def deck_involution(variant: str, X) -> np.ndarray:
    """j'(zeta, (u, v)) = (-zeta, (u, -v)) and j''(zeta, Z) = (-zeta, -Z)."""
    X = np.atleast_2d(np.asarray(X, dtype=complex))
    if variant == "prime":
        return np.stack([-X[:, 0], X[:, 1], -X[:, 2]], -1)
    return -X


@pm.register_node
class FTrivialize(pm.Node):
    """W -> R x Sigma, the inverse of F(t, Z) = f^t(Z)."""

    kind = "FTrivialize"

    def __init__(self, contraction):
        if not isinstance(contraction, Contraction):
            contraction = Contraction.from_json(contraction)
        self.contraction = contraction

    def forward(self, X):
        t, Z = big_F_inverse(self.contraction, np.atleast_2d(X))
        return np.column_stack([t.astype(complex), Z])

    def backward(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=complex))
        return flow_apply(self.contraction, X[:, 0].real, X[:, 1:])

    def params(self):
        return {"contraction": self.contraction.to_json()}


@pm.register_node
class SphereNormalize(pm.Node):
    """Sigma -> S^3, Z -> Z / |Z| on columns 1, 2; the inverse projects back to Sigma."""

    kind = "SphereNormalize"

    def __init__(self, eta):
        self.eta = eta if isinstance(eta, EtaSpec) else EtaSpec.from_json(eta)

    def forward(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=complex))
        Z = X[:, 1:]
        return np.column_stack([X[:, 0], Z / np.linalg.norm(Z, axis=-1, keepdims=True)])

    def backward(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=complex))
        return np.column_stack([X[:, 0], sigma_project(self.eta, X[:, 1:])])

    def params(self):
        return {"eta": self.eta.to_json()}


@pm.register_node
class CircleExp(pm.Node):
    """t -> exp(2 pi i t) in column 0; the inverse returns t in (-1/2, 1/2]."""

    kind = "CircleExp"

    def forward(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=complex)).copy()
        X[:, 0] = np.exp(2j * np.pi * X[:, 0].real)
        return X

    def backward(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=complex)).copy()
        X[:, 0] = np.angle(X[:, 0]) / (2 * np.pi)
        return X


@pm.register_node
class Swap(pm.Node):
    """Exchange the last two columns (z <-> w)."""

    kind = "Swap"

    def forward(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=complex)).copy()
        X[:, [-2, -1]] = X[:, [-1, -2]]
        return X

    backward = forward


@pm.register_node
class PhaseScale(pm.Node):
    """(zeta, Z) -> (zeta, exp(i angle) Z)."""

    kind = "PhaseScale"

    def __init__(self, angle: float):
        self.angle = float(angle)

    def _apply(self, X, angle):
        X = np.atleast_2d(np.asarray(X, dtype=complex)).copy()
        X[:, 1:] *= np.exp(1j * angle)
        return X

    def forward(self, X):
        return self._apply(X, self.angle)

    def backward(self, X):
        return self._apply(X, -self.angle)

    def params(self):
        return {"angle": self.angle}


@pm.register_node
class RealFrame(pm.Node):
    """(zeta, (z, w)) -> (zeta, (Re z + i Re w, Im z + i Im w))."""

    kind = "RealFrame"

    def forward(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=complex))
        z, w = X[:, 1], X[:, 2]
        return np.stack([X[:, 0], z.real + 1j * w.real, z.imag + 1j * w.imag], -1)

    def backward(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=complex))
        m, n = X[:, 1], X[:, 2]
        return np.stack([X[:, 0], m.real + 1j * n.real, m.imag + 1j * n.imag], -1)


@pm.register_node
class ZetaTwist(pm.Node):
    """(zeta, (m, n)) -> (zeta, (m, zeta n))."""

    kind = "ZetaTwist"

    def forward(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=complex)).copy()
        X[:, 2] *= X[:, 0]
        return X

    def backward(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=complex)).copy()
        X[:, 2] *= np.conj(X[:, 0])
        return X


# ---------------------------------------------------------------------------
# charts

@dataclass
class ModelChart:
    model: str
    route: str
    forward: pm.ChainMap
    backward: pm.ChainMap

    def __call__(self, Y):
        return self.forward(Y)

    def to_json(self) -> dict:
        return {"model": self.model, "route": self.route, "forward": self.forward.to_json()}


def flattening_inverse(f: Contraction) -> pm.ChainMap:
    """The map l^-1 (Psi_tau^-1 o l^-1) conjugating diag(alpha, conj alpha) to |alpha| id."""
    alpha = f.alpha
    coef = math.atan2(alpha.imag, alpha.real) / math.log(abs(alpha))
    linv = pm.from_matrix(np.linalg.inv(L_MATRIX))
    return pm.ChainMap([pm.PolyNode(linv, pm.from_matrix(L_MATRIX)), pm.RadialTwist(-coef)])


def flattened_contraction(f: Contraction) -> Contraction:
    return Contraction("IV", alpha=abs(f.alpha))


def _direct_nodes(f: Contraction) -> list:
    return [FTrivialize(f), SphereNormalize(eta_params(f)), CircleExp()]


def _diag_signs(f: Contraction):
    d1, d2 = (x.real for x in f.diagonal())
    return d1 < 0, d2 < 0


def _square_nodes(f: Contraction, first_swapped: bool) -> list:
    """Trivialization of g = f^2 in the coordinates of f (after an optional swap)."""
    g, sw = square_with_orientation(f)
    inner = sw ^ first_swapped
    nodes = []
    if first_swapped:
        nodes.append(Swap())
    if inner:
        nodes.append(Swap())
    nodes += [FTrivialize(g), SphereNormalize(eta_params(g))]
    if inner:
        nodes.append(Swap())
    nodes.append(CircleExp())
    return nodes


def _odd_tail() -> list:
    return [RealFrame(), ZetaTwist()]


def select_route(f: Contraction, parity: str):
    """(route, model) from the trichotomy of the classification theorems."""
    if parity == "odd":
        return "OddRoute", "Mu0"
    if is_iic_prime(f):
        return "ViaIIcPrimeFlattening", "Tau"
    if not f.has_real_coefficients():
        raise NoSuchStructure("H_f admits no Real structure")
    neg = sum(_diag_signs(f))
    return [("Direct", "Tau"), ("ViaQPrime", "TauPrime"), ("ViaQDoublePrime", "Tau")][neg]


def _canonical_nodes(f: Contraction, parity: str) -> list:
    route, _ = select_route(f, parity)
    if is_iic_prime(f):
        nodes = list(flattening_inverse(f).nodes) + _direct_nodes(flattened_contraction(f))
        return nodes + (_odd_tail() if parity == "odd" else [])
    if parity == "odd":
        if f.alpha is not None and f.cls == "IV" and f.alpha.real < 0:
            g = Contraction("IV", alpha=f.alpha.real**2)
            return _direct_nodes(g) + [
                pm.CircleSquareCover("double"),
                PhaseScale(-math.pi / 4),
            ] + _odd_tail()
        return _direct_nodes(f) + _odd_tail()
    if route == "Direct":
        return _direct_nodes(f)
    if route == "ViaQPrime":
        n1, _ = _diag_signs(f)
        return _square_nodes(f, n1) + [pm.CircleSquareCover("prime")]
    return _square_nodes(f, False) + [pm.CircleSquareCover("double")]


def build_chart(f: Contraction, s: RealStructureSpec) -> ModelChart:
    """Chart H_f -> S^1 x S^3 carrying s to the model involution."""
    route, model = select_route(f, s.parity)
    phi = reduce_lift(f, s.lift, s.deck_power)
    psi = normalize_even(f, phi) if s.parity == "even" else normalize_odd(f, phi)
    nodes = [pm.PolyNode(pm.invert(psi), psi)] + _canonical_nodes(f, s.parity)
    fwd = pm.ChainMap(nodes)
    return ModelChart(model, route, fwd, fwd.inverse())


# ---------------------------------------------------------------------------
# points of H_f

def hopf_time(f: Contraction, Y) -> np.ndarray:
    """A function tau on W with tau(f(Y)) = tau(Y) + 1."""
    Y = np.atleast_2d(np.asarray(Y, dtype=complex))
    if is_iic_prime(f):
        return big_F_inverse(flattened_contraction(f), flattening_inverse(f)(Y))[0]
    if not f.has_real_coefficients():
        raise NotRealCoefficients("points of H_f are only handled for real or II'c contractions")
    if not any(_diag_signs(f)):
        return big_F_inverse(f, Y)[0]
    g, sw = square_with_orientation(f)
    if sw:
        Y = Y[:, ::-1]
    return 2 * big_F_inverse(g, Y)[0]


def apply_power(f: Contraction, k, Y) -> np.ndarray:
    """f^k(Y) with one integer k per point."""
    Y = np.atleast_2d(np.asarray(Y, dtype=complex))
    k = np.broadcast_to(np.asarray(k, dtype=int), (len(Y),))
    out = np.empty_like(Y)
    F = f.polymap()
    for kk in np.unique(k):
        idx = k == kk
        out[idx] = pm.evaluate(pm.power(F, int(kk)), Y[idx])
    return out


def canonical_representative(f: Contraction, Y) -> np.ndarray:
    """The point f^-k(Y) of the orbit whose time lies in [0, 1)."""
    Y = np.asarray(Y, dtype=complex)
    single = Y.ndim == 1
    Y = np.atleast_2d(Y)
    k = np.floor(hopf_time(f, Y)).astype(int)
    out = apply_power(f, -k, Y)
    return out[0] if single else out


@dataclass(frozen=True, eq=False)
class HopfPoint:
    """A point of H_f, stored as any lift to W."""

    representative: np.ndarray
    contraction: Contraction

    def same_as(self, other: "HopfPoint", tol: float = 1e-8) -> bool:
        """Whether both lifts lie on one <f>-orbit."""
        _, ok = same_orbit_power(self.contraction, self.representative, other.representative, tol)
        return bool(ok.all())

    def canonical(self) -> "HopfPoint":
        return HopfPoint(canonical_representative(self.contraction, self.representative), self.contraction)

    def time(self) -> float:
        return float(hopf_time(self.contraction, self.representative)[0])


def same_orbit_power(f: Contraction, X, Y, tol: float = 1e-8):
    """Per point, the integer k with f^k(X) = Y and a mask ok marking where it holds."""
    X = np.atleast_2d(np.asarray(X, dtype=complex))
    Y = np.atleast_2d(np.asarray(Y, dtype=complex))
    k = np.rint(hopf_time(f, Y) - hopf_time(f, X)).astype(int)
    img = apply_power(f, k, X)
    ok = np.linalg.norm(img - Y, axis=-1) <= tol * np.maximum(1.0, np.linalg.norm(Y, axis=-1))
    return k, ok


# ---------------------------------------------------------------------------
# real locus and quotient

def real_locus(f: Contraction, s: RealStructureSpec) -> dict:
    if s.parity == "odd":
        return {"locus": "Empty"}
    if is_iic_prime(f):
        return {"locus": "Torus", "elliptic_parameter": [f.alpha.real, f.alpha.imag]}
    if not f.has_real_coefficients():
        raise NoSuchStructure("H_f admits no Real structure")
    d1, d2 = (x.real for x in f.diagonal())
    return {"locus": "Torus" if d1 * d2 > 0 else "KleinBottle"}


def quotient_descriptor(f: Contraction, s: RealStructureSpec) -> dict:
    if s.parity == "odd":
        return {"space": "S¹×S³", "cover": "double, anti-holomorphic deck"}
    return {
        "space": "S¹×S³",
        "locus_image": real_locus(f, s)["locus"],
        "beta": "zeta -> zeta^2 on the unit circle of the V_- plane",
    }


def beta(X) -> np.ndarray:
    """beta(x, y) = (Re zeta^2, Im zeta^2) for zeta = x + i y."""
    X = np.asarray(X, dtype=float)
    single = X.ndim == 1
    X = np.atleast_2d(X)
    z = (X[:, 0] + 1j * X[:, 1]) ** 2
    out = np.stack([z.real, z.imag], -1)
    return out[0] if single else out


def chart_distance(X1, X2) -> np.ndarray:
    """Product-metric distance on S^1 x S^3 (Euclidean on each factor)."""
    X1 = np.atleast_2d(X1)
    X2 = np.atleast_2d(X2)
    return np.abs(X1[:, 0] - X2[:, 0]) + np.linalg.norm(X1[:, 1:] - X2[:, 1:], axis=-1)


def is_negative_real(x: complex) -> bool:
    return _is_real(x) and x.real < 0
