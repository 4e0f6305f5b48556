"""Polynomial self-maps of W = C^2 minus the origin.

A :class:`PolyMap` is a pair of sparse bivariate polynomials together with a
conjugation flag.  When the flag is set the map is anti-holomorphic: the
polynomials are evaluated at the conjugated input ``(conj z, conj w)``.  This
single representation covers the contractions, their roots and flows, the
lifts of Real structures and the conjugating automorphisms.

:class:`ChainMap` strings invertible maps (polynomial or not) together; it is
used to build the charts onto S^1 x S^3.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Mapping, Tuple

import numpy as np

from .errors import DegreeOverflow, DomainError, NotInvertibleShape

DEDUP_EPS = 1e-14
EQ_TOL = 1e-10
DEGREE_CAP = 16

Monomial = Tuple[int, int]
Poly = Dict[Monomial, complex]


# ---------------------------------------------------------------------------
# sparse bivariate polynomials

def _clean(poly: Mapping[Monomial, complex]) -> Poly:
    out = {}
    for (p, q), c in poly.items():
        c = complex(c)
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise ValueError("non-finite coefficient for monomial %r" % ((p, q),))
        if p < 0 or q < 0:
            raise ValueError("negative exponent in monomial %r" % ((p, q),))
        if abs(c) >= DEDUP_EPS:
            out[(int(p), int(q))] = c
    return out


def _add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, 0j) + c
    return out


def _mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for (p1, q1), c1 in a.items():
        for (p2, q2), c2 in b.items():
            m = (p1 + p2, q1 + q2)
            out[m] = out.get(m, 0j) + c1 * c2
    return out


def _pow(a: Poly, n: int, cache: dict) -> Poly:
    if n in cache:
        return cache[n]
    if n == 0:
        res = {(0, 0): 1 + 0j}
    elif n == 1:
        res = dict(a)
    else:
        half = _pow(a, n // 2, cache)
        res = _mul(half, half)
        if n % 2:
            res = _mul(res, a)
    cache[n] = res
    return res


def _degree(poly: Poly) -> int:
    return max((p + q for (p, q) in poly), default=0)


def _substitute(poly: Poly, X: Poly, Y: Poly) -> Poly:
    """poly(X, Y) for polynomials X, Y in (z, w)."""
    xs: dict = {}
    ys: dict = {}
    out: Poly = {}
    for (p, q), c in poly.items():
        term = _mul(_pow(X, p, xs), _pow(Y, q, ys))
        for m, t in term.items():
            out[m] = out.get(m, 0j) + c * t
    return out


def _eval_poly(poly: Poly, z: np.ndarray, w: np.ndarray) -> np.ndarray:
    out = np.zeros(np.broadcast(z, w).shape, dtype=complex)
    for (p, q), c in poly.items():
        out = out + c * z**p * w**q
    return out


def _fmt_poly(poly: Poly) -> str:
    if not poly:
        return "0"
    parts = []
    for (p, q), c in sorted(poly.items()):
        mono = "".join(
            s for s in (
                "" if p == 0 else ("z" if p == 1 else "z^%d" % p),
                "" if q == 0 else ("w" if q == 1 else "w^%d" % q),
            )
        )
        parts.append("(%.6g%+.6gj)%s" % (c.real, c.imag, mono))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# PolyMap

@dataclass(frozen=True, eq=False)
class PolyMap:
    """(z, w) -> (P, Q), evaluated at (conj z, conj w) when ``conj`` is set."""

    conj: bool
    P: Poly
    Q: Poly
    automorphism: bool = False

    def __post_init__(self):
        object.__setattr__(self, "P", _clean(self.P))
        object.__setattr__(self, "Q", _clean(self.Q))

    @property
    def degree(self) -> int:
        return max(_degree(self.P), _degree(self.Q))

    def coeff(self, which: str, p: int, q: int) -> complex:
        poly = self.P if which == "P" else self.Q
        return poly.get((p, q), 0j)

    def is_linear(self) -> bool:
        return all(p + q == 1 for (p, q) in self.P) and all(
            p + q == 1 for (p, q) in self.Q
        )

    def matrix(self) -> np.ndarray:
        if not self.is_linear():
            raise NotInvertibleShape("map is not linear")
        return np.array(
            [
                [self.coeff("P", 1, 0), self.coeff("P", 0, 1)],
                [self.coeff("Q", 1, 0), self.coeff("Q", 0, 1)],
            ],
            dtype=complex,
        )

    def coefficients(self) -> np.ndarray:
        return np.array(list(self.P.values()) + list(self.Q.values()), dtype=complex)

    def has_real_coefficients(self, tol: float = 1e-12) -> bool:
        return bool(np.all(np.abs(self.coefficients().imag) <= tol))

    def __call__(self, Z):
        return evaluate(self, Z)

    def __repr__(self):
        tag = "anti" if self.conj else "holo"
        return "PolyMap[%s](%s ; %s)" % (tag, _fmt_poly(self.P), _fmt_poly(self.Q))

    def to_json(self) -> dict:
        def enc(poly):
            return [[p, q, c.real, c.imag] for (p, q), c in sorted(poly.items())]

        return {"conj": bool(self.conj), "P": enc(self.P), "Q": enc(self.Q)}

    @classmethod
    def from_json(cls, data: Mapping, automorphism: bool = False) -> "PolyMap":
        def dec(rows):
            poly: Poly = {}
            for p, q, re, im in rows:
                key = (int(p), int(q))
                if key in poly:
                    raise ValueError("duplicate monomial %r" % (key,))
                poly[key] = complex(re, im)
            return poly

        return cls(bool(data["conj"]), dec(data["P"]), dec(data["Q"]), automorphism)


def identity() -> PolyMap:
    return PolyMap(False, {(1, 0): 1}, {(0, 1): 1}, True)


def from_matrix(M, conj: bool = False) -> PolyMap:
    M = np.asarray(M, dtype=complex)
    return PolyMap(
        conj,
        {(1, 0): M[0, 0], (0, 1): M[0, 1]},
        {(1, 0): M[1, 0], (0, 1): M[1, 1]},
        abs(np.linalg.det(M)) > 0,
    )


def diag(a, d, conj: bool = False) -> PolyMap:
    return PolyMap(conj, {(1, 0): a}, {(0, 1): d}, True)


def triangular(a, b, r: int, d, conj: bool = False) -> PolyMap:
    """(z, w) -> (a z + b w^r, d w)."""
    return PolyMap(conj, {(1, 0): a, (0, r): b}, {(0, 1): d}, True)


def conjugation() -> PolyMap:
    """The standard conjugation c(z, w) = (conj z, conj w)."""
    return PolyMap(True, {(1, 0): 1}, {(0, 1): 1}, True)


def swap_conjugation() -> PolyMap:
    """c'(z, w) = (conj w, conj z)."""
    return PolyMap(True, {(0, 1): 1}, {(1, 0): 1}, True)


def quaternionic_j() -> PolyMap:
    """J(z, w) = (-conj w, conj z); J o J = -id."""
    return PolyMap(True, {(0, 1): -1}, {(1, 0): 1}, True)


def swap() -> PolyMap:
    return PolyMap(False, {(0, 1): 1}, {(1, 0): 1}, True)


# ---------------------------------------------------------------------------
# operations

def _as_points(Z) -> Tuple[np.ndarray, bool]:
    Z = np.asarray(Z, dtype=complex)
    single = Z.ndim == 1
    if Z.shape[-1] != 2:
        raise ValueError("points of W must have a trailing axis of length 2")
    return np.atleast_2d(Z), single


def evaluate(m, Z):
    """Value of a PolyMap or ChainMap at one point (shape (2,)) or a batch (N, 2)."""
    if isinstance(m, ChainMap):
        return m.evaluate(Z)
    pts, single = _as_points(Z)
    if np.any(np.all(pts == 0, axis=-1)):
        raise DomainError("0 is not a point of W")
    z, w = pts[:, 0], pts[:, 1]
    if m.conj:
        z, w = np.conj(z), np.conj(w)
    out = np.stack([_eval_poly(m.P, z, w), _eval_poly(m.Q, z, w)], axis=-1)
    if m.automorphism:
        scale = np.maximum(np.linalg.norm(pts, axis=-1), 1.0)
        if np.any(np.linalg.norm(out, axis=-1) <= 1e-300 * scale):
            raise DomainError("image of a point of W is 0")
    return out[0] if single else out


def compose(g: PolyMap, h: PolyMap, cap: int = DEGREE_CAP) -> PolyMap:
    """g o h.

    When g is anti-holomorphic the coefficients of h are conjugated before
    substitution; the exponents are left alone.
    """
    X, Y = h.P, h.Q
    if g.conj:
        X = {m: c.conjugate() for m, c in X.items()}
        Y = {m: c.conjugate() for m, c in Y.items()}
    P = _substitute(g.P, X, Y)
    Q = _substitute(g.Q, X, Y)
    out = PolyMap(g.conj ^ h.conj, P, Q, g.automorphism and h.automorphism)
    if out.degree > cap:
        raise DegreeOverflow("composed degree %d exceeds cap %d" % (out.degree, cap))
    return out


def _triangular_parts(m: PolyMap):
    """(a, b, r, d) when m = (a z + b w^r, d w), else None."""
    if set(m.Q) != {(0, 1)} or (1, 0) not in m.P:
        return None
    others = [k for k in m.P if k != (1, 0)]
    if len(others) > 1:
        return None
    if others:
        p, r = others[0]
        if p != 0 or r < 1:
            return None
        b = m.P[(0, r)]
    else:
        r, b = 1, 0j
    return m.P[(1, 0)], b, r, m.Q[(0, 1)]


def invert(m: PolyMap) -> PolyMap:
    """Inverse of a linear or triangular (a z + b w^r, d w) map.

    An anti-holomorphic map is written G o c with G holomorphic; its inverse
    is c o G^-1, i.e. G^-1 with conjugated coefficients, still anti.
    """
    if m.is_linear():
        M = m.matrix()
        if abs(np.linalg.det(M)) < 1e-300:
            raise NotInvertibleShape("singular linear map")
        Minv = np.linalg.inv(M)
        if m.conj:
            Minv = np.conj(Minv)
        return from_matrix(Minv, conj=m.conj)
    parts = _triangular_parts(m)
    if parts is None:
        raise NotInvertibleShape("only linear and triangular maps can be inverted")
    a, b, r, d = parts
    if a == 0 or d == 0:
        raise NotInvertibleShape("zero diagonal coefficient")
    ia, ib, idd = 1 / a, -b / (a * d**r), 1 / d
    if m.conj:
        ia, ib, idd = ia.conjugate(), ib.conjugate(), idd.conjugate()
    return triangular(ia, ib, r, idd, conj=m.conj)


def maps_equal(m1: PolyMap, m2: PolyMap, tol: float = EQ_TOL) -> bool:
    if m1.conj != m2.conj:
        return False
    return max_coeff_diff(m1, m2) <= tol


def max_coeff_diff(m1: PolyMap, m2: PolyMap) -> float:
    """Largest coefficient difference over the union of supports (ignores flags)."""
    worst = 0.0
    for a, b in ((m1.P, m2.P), (m1.Q, m2.Q)):
        for k in set(a) | set(b):
            worst = max(worst, abs(a.get(k, 0j) - b.get(k, 0j)))
    return worst


def power(m: PolyMap, n: int, cap: int = DEGREE_CAP) -> PolyMap:
    """n-fold composition; negative n goes through :func:`invert`."""
    if n < 0:
        m, n = invert(m), -n
    out = identity()
    base = m
    while n:
        if n & 1:
            out = compose(out, base, cap)
        n >>= 1
        if n:
            base = compose(base, base, cap)
    return out


def commutes(a: PolyMap, b: PolyMap, tol: float = EQ_TOL) -> bool:
    return maps_equal(compose(a, b), compose(b, a), tol)


# ---------------------------------------------------------------------------
# chains of invertible maps

_NODE_TYPES: Dict[str, Callable] = {}


def register_node(cls):
    _NODE_TYPES[cls.kind] = cls
    return cls


class Node:
    """One invertible step of a chain.

    Points are complex arrays of shape (N, k); a point of W has k = 2, a point
    of R x Sigma or S^1 x S^3 has k = 3 (column 0 holds t or zeta).
    """

    kind = "node"

    def forward(self, X: np.ndarray) -> np.ndarray:  # pragma: no cover - abstract
        raise NotImplementedError

    def backward(self, X: np.ndarray) -> np.ndarray:  # pragma: no cover - abstract
        raise NotImplementedError

    def params(self) -> dict:
        return {}

    def to_json(self) -> dict:
        return {"kind": self.kind, **self.params()}

    @classmethod
    def from_json(cls, data: Mapping) -> "Node":
        return cls(**{k: v for k, v in data.items() if k != "kind"})


@register_node
class Inverse(Node):
    kind = "Inverse"

    def __init__(self, node):
        self.node = node_from_json(node) if isinstance(node, Mapping) else node

    def forward(self, X):
        return self.node.backward(X)

    def backward(self, X):
        return self.node.forward(X)

    def params(self):
        return {"node": self.node.to_json()}


@register_node
class PolyNode(Node):
    kind = "Poly"

    def __init__(self, map, inverse=None):
        self.map = PolyMap.from_json(map, True) if isinstance(map, Mapping) else map
        if isinstance(inverse, Mapping):
            inverse = PolyMap.from_json(inverse, True)
        self.inverse = inverse if inverse is not None else invert(self.map)

    def forward(self, X):
        return evaluate(self.map, X)

    def backward(self, X):
        return evaluate(self.inverse, X)

    def params(self):
        return {"map": self.map.to_json(), "inverse": self.inverse.to_json()}


def rotation_matrices(zeta: np.ndarray) -> np.ndarray:
    """R_zeta in SO(2) for each unit complex number zeta, shape (N, 2, 2)."""
    zeta = np.asarray(zeta, dtype=complex)
    x, y = zeta.real, zeta.imag
    return np.stack([np.stack([x, -y], -1), np.stack([y, x], -1)], -2)


def rotate(zeta: np.ndarray, Z: np.ndarray) -> np.ndarray:
    """Apply R_zeta complex-linearly to each row of Z."""
    return np.einsum("nij,nj->ni", rotation_matrices(zeta), Z)


@register_node
class RadialTwist(Node):
    """Z -> R_{exp(i coef ln|Z|)} Z; the inverse flips the sign of ``coef``."""

    kind = "RadialTwist"

    def __init__(self, coef: float):
        self.coef = float(coef)

    def _apply(self, X, coef):
        X = np.atleast_2d(np.asarray(X, dtype=complex))
        ang = coef * np.log(np.linalg.norm(X, axis=-1))
        return rotate(np.exp(1j * ang), X)

    def forward(self, X):
        return self._apply(X, self.coef)

    def backward(self, X):
        return self._apply(X, -self.coef)

    def params(self):
        return {"coef": self.coef}


@register_node
class Scale(Node):
    kind = "Scale"

    def __init__(self, factor: float):
        if not factor > 0:
            raise ValueError("scale factor must be positive")
        self.factor = float(factor)

    def forward(self, X):
        return np.asarray(X, dtype=complex) * self.factor

    def backward(self, X):
        return np.asarray(X, dtype=complex) / self.factor

    def params(self):
        return {"factor": self.factor}


@register_node
class Conj(Node):
    kind = "Conj"

    def forward(self, X):
        return np.conj(np.asarray(X, dtype=complex))

    backward = forward


@register_node
class FlowSegment(Node):
    """Z -> f^t(Z) for a contraction with a real flow."""

    kind = "FlowSegment"

    def __init__(self, contraction, t: float):
        from .contractions import Contraction

        if isinstance(contraction, Mapping):
            contraction = Contraction.from_json(contraction)
        self.contraction = contraction
        self.t = float(t)

    def _apply(self, X, t):
        from .flows import flow_apply

        X = np.atleast_2d(np.asarray(X, dtype=complex))
        return flow_apply(self.contraction, np.full(len(X), t), X)

    def forward(self, X):
        return self._apply(X, self.t)

    def backward(self, X):
        return self._apply(X, -self.t)

    def params(self):
        return {"contraction": self.contraction.to_json(), "t": self.t}


@register_node
class CircleSquareCover(Node):
    """The double covers a', a'' of S^1 x S^3 onto itself.

    ``variant='prime'``:  (zeta, (u, v)) -> (zeta^2, (u, zeta v))
    ``variant='double'``: (zeta, (u, v)) -> (zeta^2, R_zeta (u, v))

    ``backward`` returns the preimage whose circle coordinate has argument in
    (-pi/2, pi/2]; it is a right inverse, and a left inverse modulo the deck
    involution j' (resp. j'').
    """

    kind = "CircleSquareCover"

    def __init__(self, variant: str):
        if variant not in ("prime", "double"):
            raise ValueError("variant must be 'prime' or 'double'")
        self.variant = variant

    def forward(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=complex))
        zeta, Z = X[:, 0], X[:, 1:]
        if self.variant == "prime":
            img = np.stack([Z[:, 0], zeta * Z[:, 1]], -1)
        else:
            img = rotate(zeta, Z)
        return np.column_stack([zeta**2, img])

    def backward(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=complex))
        xi, Y = X[:, 0], X[:, 1:]
        zeta = np.sqrt(xi)
        if self.variant == "prime":
            Z = np.stack([Y[:, 0], Y[:, 1] / zeta], -1)
        else:
            Z = rotate(np.conj(zeta), Y)
        return np.column_stack([zeta, Z])

    def params(self):
        return {"variant": self.variant}


def node_from_json(data: Mapping) -> Node:
    try:
        cls = _NODE_TYPES[data["kind"]]
    except KeyError:
        raise ValueError("unknown chain node kind %r" % data.get("kind"))
    return cls.from_json(data)


@dataclass
class ChainMap:
    """Composition of nodes, applied first to last."""

    nodes: list = field(default_factory=list)

    def evaluate(self, X):
        X = np.asarray(X, dtype=complex)
        single = X.ndim == 1
        X = np.atleast_2d(X)
        for node in self.nodes:
            X = node.forward(X)
        return X[0] if single else X

    __call__ = evaluate

    def inverse(self) -> "ChainMap":
        return ChainMap([Inverse(n) for n in reversed(self.nodes)])

    def then(self, other: "ChainMap | Node | Iterable[Node]") -> "ChainMap":
        if isinstance(other, ChainMap):
            return ChainMap(self.nodes + other.nodes)
        if isinstance(other, Node):
            return ChainMap(self.nodes + [other])
        return ChainMap(self.nodes + list(other))

    def to_json(self) -> list:
        return [n.to_json() for n in self.nodes]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "ChainMap":
        return cls([node_from_json(d) for d in data])
