"""Seeded property-verification suites.

Each suite checks one group of claims on random samples and returns a report
dict::

    {"suite": name, "seed": s, "pass": bool,
     "properties": [{"property", "samples", "max_residual", "tolerance",
                     "pass", "counterexample"?}, ...]}

The counterexample (present only on failure) holds the worst sample with
everything needed to replay it.
"""
from __future__ import annotations

import math
from typing import Callable, Dict, Optional

import numpy as np

from . import autgroup as ag
from . import picard as pc
from . import polymap as pm
from . import realstruct as rs
from . import sampling as sp
from . import topology as tp
from .contractions import Contraction, classify, is_biholomorphic_pair
from .errors import HopfError, NotRealZeta
from .flows import flow, kth_root

POSITIVE = ("IV", "III", "IIa", "IIb", "IIc", "IIaTilde", "IIbTilde")
REAL_CLASSES = ("IV", "III", "IIa", "IIb", "IIc")


def _jsonable(x):
    if isinstance(x, (Contraction, pm.PolyMap)):
        return x.to_json()
    if isinstance(x, np.ndarray):
        if np.iscomplexobj(x):
            return [_jsonable(v) for v in x.tolist()]
        return x.tolist()
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (np.floating, np.integer)):
        return x.item()
    return x


class Prop:
    """Running maximum of a residual, with the worst sample kept for replay."""

    def __init__(self, name: str, tol: float):
        self.name, self.tol = name, tol
        self.samples = 0
        self.worst = 0.0
        self.context = None

    def add(self, residual, context: Optional[Callable] = None, count: int = 1):
        residual = float(residual)
        self.samples += count
        if not math.isfinite(residual):
            residual = math.inf
        if residual > self.worst or (self.context is None and residual > self.tol):
            self.worst = residual
            self.context = context
        return residual

    def add_many(self, residuals, context: Callable):
        residuals = np.asarray(residuals, dtype=float)
        if residuals.size == 0:
            return
        bad = ~np.isfinite(residuals)
        residuals = np.where(bad, np.inf, residuals)
        i = int(np.argmax(residuals))
        self.add(residuals[i], lambda: context(i), count=0)
        self.samples += residuals.size

    def report(self) -> dict:
        ok = self.worst <= self.tol
        out = {
            "property": self.name,
            "samples": self.samples,
            "max_residual": self.worst if math.isfinite(self.worst) else "inf",
            "tolerance": self.tol,
            "pass": bool(ok),
        }
        if not ok and self.context is not None:
            out["counterexample"] = _jsonable(self.context())
        return out


class Suite:
    def __init__(self, tol_override: Optional[float] = None):
        self.props: Dict[str, Prop] = {}
        self.tol_override = tol_override

    def prop(self, name: str, tol: float) -> Prop:
        if name not in self.props:
            self.props[name] = Prop(name, self.tol_override if self.tol_override is not None else tol)
        return self.props[name]

    def check(self, name: str, ok: bool, context: Optional[Callable] = None):
        """A boolean property: residual 0 when it holds, 1 when it fails."""
        self.prop(name, 0.5).add(0.0 if ok else 1.0, context)

    def report(self, name: str, seed: int) -> dict:
        props = [p.report() for p in self.props.values()]
        return {"suite": name, "seed": seed, "pass": all(p["pass"] for p in props), "properties": props}


def _scale(*maps) -> float:
    return max([1.0] + [float(np.abs(m.coefficients()).max(initial=0.0)) for m in maps])


def _rel_diff(m1: pm.PolyMap, m2: pm.PolyMap) -> float:
    if m1.conj != m2.conj:
        return math.inf
    return pm.max_coeff_diff(m1, m2) / _scale(m1, m2)


def _conj_by(psi, base):
    return pm.compose(psi, pm.compose(base, pm.invert(psi)))


# ---------------------------------------------------------------------------
# polymap and contractions

def suite_polymap(samples: int = 1000, seed: int = 0, tol: Optional[float] = None) -> dict:
    rng = np.random.default_rng(seed)
    S = Suite(tol)
    pool = []
    for cls in POSITIVE:
        f = sp.random_contraction(rng, cls)
        pool += [f.polymap(), kth_root(f, 2)]
    pool += [pm.conjugation(), pm.swap_conjugation(), pm.quaternionic_j(), pm.from_matrix(sp.random_gl2(rng))]
    pool += [pm.from_matrix(sp.random_gl2(rng), conj=True)]
    lin = [m for m in pool if m.is_linear()]
    for _ in range(max(1, samples // 10)):
        a, b, c = (lin[i] for i in rng.integers(0, len(lin), 3))
        S.prop("compose is associative", 1e-12).add(
            _rel_diff(pm.compose(a, pm.compose(b, c)), pm.compose(pm.compose(a, b), c)),
            lambda a=a, b=b, c=c: {"a": a, "b": b, "c": c},
        )
    for _ in range(samples):
        g, h = (pool[i] for i in rng.integers(0, len(pool), 2))
        Z = sp.random_points(rng, 1)[0]
        try:
            gh = pm.compose(g, h)
        except HopfError:
            continue
        lhs, rhs = pm.evaluate(gh, Z), pm.evaluate(g, pm.evaluate(h, Z))
        S.prop("evaluate(compose(g, h)) = g(h(Z))", 1e-10).add(
            np.linalg.norm(lhs - rhs) / max(1.0, np.linalg.norm(rhs)),
            lambda g=g, h=h, Z=Z: {"g": g, "h": h, "Z": Z},
        )
    c = pm.conjugation()
    for m in pool:
        if not m.conj and m.has_real_coefficients():
            S.prop("c o m o c = m for real m", 1e-12).add(_rel_diff(pm.compose(c, pm.compose(m, c)), m), lambda m=m: {"m": m})
        try:
            mi = pm.invert(m)
        except HopfError:
            continue
        for prod in (pm.compose(m, mi), pm.compose(mi, m)):
            S.prop("invert is a two-sided inverse", 1e-12).add(_rel_diff(prod, pm.identity()), lambda m=m: {"m": m})
    return S.report("polymap", seed)


def suite_contractions(samples: int = 100, seed: int = 0, tol: Optional[float] = None) -> dict:
    rng = np.random.default_rng(seed)
    S = Suite(tol)
    pool = []
    for i in range(samples):
        cls = ("IV", "III", "IIa", "IIb", "IIc", "IIcPrime")[i % 6]
        sign = ("positive", "negative", "complex")[int(rng.integers(0, 3))] if cls != "IIcPrime" else "positive"
        f = sp.random_contraction(rng, cls, sign)
        pool.append(f)
        c2 = classify(f.polymap())
        S.check("classify(render(C)) = C", is_biholomorphic_pair(c2, f) and c2.cls == f.cls, lambda f=f: {"f": f})
        if f.cls in ("IIc",):
            a, d = f.diagonal()
            S.check("IIc classify is swap invariant", is_biholomorphic_pair(classify(pm.diag(a, d)), classify(pm.diag(d, a))) and classify(pm.diag(a, d)) == classify(pm.diag(d, a)), lambda f=f: {"f": f})
    # a few coincident pairs so the relation is exercised on non-trivial classes
    pool += [Contraction("IIc", alpha=f.delta, delta=f.alpha) for f in pool if f.cls == "IIc"][:10]
    rel = [[is_biholomorphic_pair(a, b) for b in pool] for a in pool]
    n = len(pool)
    S.check("biholomorphic pair: reflexive", all(rel[i][i] for i in range(n)))
    S.check("biholomorphic pair: symmetric", all(rel[i][j] == rel[j][i] for i in range(n) for j in range(n)))
    trans = True
    for i in range(n):
        for j in range(n):
            if rel[i][j]:
                for k in range(n):
                    if rel[j][k] and not rel[i][k]:
                        trans = False
    S.check("biholomorphic pair: transitive", trans)
    return S.report("contractions", seed)


# ---------------------------------------------------------------------------
# flows (criterion 1)

def suite_flows(samples: int = 200, seed: int = 0, tol: Optional[float] = None) -> dict:
    rng = np.random.default_rng(seed)
    S = Suite(tol)
    for cls in POSITIVE:
        for _ in range(3):
            f = sp.random_contraction(rng, cls)
            F = f.polymap()
            for k in range(2, 7):
                root = kth_root(f, k)
                S.prop("k-fold composition of kth_root equals f", 1e-12).add(
                    _rel_diff(pm.power(root, k), F), lambda f=f, k=k: {"f": f, "k": k}
                )
            for n in range(-3, 4):
                S.prop("flow(f, n) equals n-fold composition", 1e-12).add(
                    _rel_diff(flow(f, n), pm.power(F, n)), lambda f=f, n=n: {"f": f, "n": n}
                )
    for i in range(samples):
        f = sp.random_contraction(rng, POSITIVE[i % len(POSITIVE)])
        t, s = rng.uniform(-3, 3, 2)
        S.prop("flow(t + s) = flow(t) o flow(s)", 1e-10).add(
            _rel_diff(flow(f, t + s), pm.compose(flow(f, t), flow(f, s))),
            lambda f=f, t=t, s=s: {"f": f, "t": t, "s": s},
        )
    for cls in POSITIVE[:5]:
        f = sp.random_contraction(rng, cls)
        root = kth_root(f, int(rng.integers(2, 7)))
        for _ in range(50):
            g = sp.random_commutant(rng, f).underlying
            phi = sp.random_even_lift(rng, f)
            for h in (g, phi):
                S.prop("kth_root commutes with the commutant of f", 1e-10).add(
                    _rel_diff(pm.compose(root, h), pm.compose(h, root)), lambda f=f, h=h: {"f": f, "h": h}
                )
    return S.report("flows", seed)


# ---------------------------------------------------------------------------
# normalization (criteria 2-4)

def _even_pool(rng, i):
    cls = ("IV", "III", "IIa", "IIb", "IIc", "IIcPrime")[i % 6]
    if cls in ("IIcPrime",):
        return sp.random_contraction(rng, cls)
    sign = ("positive", "negative")[int(rng.integers(0, 2))]
    if cls == "IIc":
        sign = ("positive", "negative", "mixed")[int(rng.integers(0, 3))]
    return sp.random_contraction(rng, cls, sign)


def suite_even(samples: int = 100, seed: int = 0, tol: Optional[float] = None) -> dict:
    rng = np.random.default_rng(seed)
    S = Suite(tol)
    for i in range(6 * samples):
        f = _even_pool(rng, i)
        phi = sp.random_even_lift(rng, f)
        ctx = lambda f=f, phi=phi: {"f": f, "phi": phi}
        try:
            psi = rs.normalize_even(f, phi)
        except HopfError as e:
            S.prop("normalize_even succeeds", 0.5).add(1.0, lambda f=f, phi=phi, e=e: {"f": f, "phi": phi, "error": repr(e)})
            continue
        S.prop("normalize_even succeeds", 0.5).add(0.0)
        base = pm.swap_conjugation() if rs.is_iic_prime(f) else pm.conjugation()
        S.prop("psi o c o psi^-1 = phi", 1e-9).add(_rel_diff(_conj_by(psi, base), phi), ctx)
        F = f.polymap()
        S.prop("psi commutes with f", 1e-9).add(_rel_diff(pm.compose(psi, F), pm.compose(F, psi)), ctx)
    return S.report("even", seed)


def _odd_pool(rng, i):
    kinds = ("IV", "III", "IIa", "IIb", "IIc", "IIcPrime", "IVneg")
    k = kinds[i % len(kinds)]
    if k == "IVneg":
        return sp.random_contraction(rng, "IV", "negative")
    return sp.random_contraction(rng, k)


def suite_odd(samples: int = 100, seed: int = 0, tol: Optional[float] = None) -> dict:
    rng = np.random.default_rng(seed)
    S = Suite(tol)
    for i in range(7 * samples):
        f = _odd_pool(rng, i)
        can = rs.canonical_lift(f, "odd")
        S.prop("canonical odd lift squares to f", 1e-12).add(_rel_diff(pm.compose(can, can), f.polymap()), lambda f=f: {"f": f})
        phi = sp.random_odd_lift(rng, f)
        ctx = lambda f=f, phi=phi: {"f": f, "phi": phi}
        if f.cls == "IV" and f.alpha.real < 0:
            Ba = 1j * phi.matrix() / math.sqrt(abs(f.alpha))
            S.prop("a o a = -id in the quaternionic case", 1e-12).add(
                np.abs(Ba @ np.conj(Ba) + np.eye(2)).max() / max(1.0, np.abs(Ba).max() ** 2), ctx
            )
        try:
            psi = rs.normalize_odd(f, phi)
        except HopfError as e:
            S.prop("normalize_odd succeeds", 0.5).add(1.0, lambda f=f, phi=phi, e=e: {"f": f, "phi": phi, "error": repr(e)})
            continue
        S.prop("normalize_odd succeeds", 0.5).add(0.0)
        S.prop("psi o phi_canonical o psi^-1 = phi", 1e-9).add(_rel_diff(_conj_by(psi, can), phi), ctx)
        F = f.polymap()
        S.prop("psi commutes with f", 1e-9).add(_rel_diff(pm.compose(psi, F), pm.compose(F, psi)), ctx)
    return S.report("odd", seed)


def suite_parity(samples: int = 50, seed: int = 0, tol: Optional[float] = None) -> dict:
    rng = np.random.default_rng(seed)
    S = Suite(tol)
    for i in range(samples):
        if i % 2:
            f = _odd_pool(rng, i)
            phi = sp.random_odd_lift(rng, f)
        else:
            f = _even_pool(rng, i)
            phi = sp.random_even_lift(rng, f)
        n0, p0 = rs.parity_of_lift(f, phi)
        F = f.polymap()
        for k in range(-3, 4):
            lift = pm.compose(phi, pm.power(F, k))
            ctx = lambda f=f, phi=phi, k=k: {"f": f, "phi": phi, "k": k}
            try:
                n, p = rs.parity_of_lift(f, lift)
            except HopfError as e:
                S.check("parity_of_lift succeeds", False, lambda ctx=ctx, e=e: {**ctx(), "error": repr(e)})
                continue
            S.check("parity(phi o f^k) = parity(phi)", p == p0, ctx)
            S.check("deck power shifts by 2k", n == n0 + 2 * k, ctx)
    return S.report("parity", seed)


# ---------------------------------------------------------------------------
# topology (criteria 5-8)

def suite_diffineq(samples: int = 10000, seed: int = 0, tol: Optional[float] = None) -> dict:
    rng = np.random.default_rng(seed)
    S = Suite(tol)
    for cls in POSITIVE:
        f = sp.random_contraction(rng, cls)
        spec = tp.eta_params(f)
        Z = sp.random_points(rng, samples)
        e, de = tp.eta(spec, Z), tp.eta_derivative(f, spec, Z)
        S.prop("eta' <= C eta", 1e-9).add_many(de - spec.C * e, lambda i, f=f, Z=Z: {"f": f, "Z": Z[i]})
        if cls == "IV":
            S.prop("class IV: eta' = C eta", 1e-12).add_many(np.abs(de - spec.C * e), lambda i, f=f, Z=Z: {"f": f, "Z": Z[i]})
        t1 = rng.uniform(-2, 2, samples)
        t2 = t1 + rng.uniform(1e-3, 2, samples)
        from .flows import flow_apply

        e1, e2 = tp.eta(spec, flow_apply(f, t1, Z)), tp.eta(spec, flow_apply(f, t2, Z))
        S.check("eta strictly decreasing along the flow", bool(np.all(e2 < e1)), lambda f=f: {"f": f})
    return S.report("diffineq", seed)


def _hopf_pool(rng):
    return [
        sp.random_contraction(rng, "IV"),
        sp.random_contraction(rng, "III"),
        sp.random_contraction(rng, "IIa"),
        sp.random_contraction(rng, "IIb"),
        sp.random_contraction(rng, "IIc"),
        sp.random_contraction(rng, "IIaTilde"),
        sp.random_contraction(rng, "IIbTilde"),
        sp.random_contraction(rng, "IV", "negative"),
        sp.random_contraction(rng, "IIa", "negative"),
        sp.random_contraction(rng, "IIc", "mixed"),
        sp.random_contraction(rng, "IIcPrime"),
    ]


def suite_trivialization(samples: int = 1000, seed: int = 0, tol: Optional[float] = None) -> dict:
    rng = np.random.default_rng(seed)
    S = Suite(tol)
    for f in _hopf_pool(rng):
        if f.has_real_coefficients() and all(x.real > 0 for x in f.diagonal()):
            spec = tp.eta_params(f)
            Z = tp.sigma_project(spec, sp.random_points(rng, samples))
            t = rng.uniform(-3, 3, samples)
            t2, Z2 = tp.big_F_inverse(f, tp.big_F(f, t, Z))
            S.prop("big_F_inverse o big_F = id", 1e-8).add_many(
                np.abs(t2 - t) + np.linalg.norm(Z2 - Z, axis=-1), lambda i, f=f, t=t, Z=Z: {"f": f, "t": t[i], "Z": Z[i]}
            )
            S.prop("sigma_project lands on eta = 1", 1e-10).add_many(np.abs(tp.eta(spec, Z) - 1), lambda i, f=f, Z=Z: {"f": f, "Z": Z[i]})
        Y = sp.random_points(rng, samples)
        r1 = tp.canonical_representative(f, Y)
        r2 = tp.canonical_representative(f, pm.evaluate(f.polymap(), Y))
        S.prop("canonical representatives of Z and f(Z) agree", 1e-8).add_many(
            np.linalg.norm(r1 - r2, axis=-1) / np.linalg.norm(r1, axis=-1), lambda i, f=f, Y=Y: {"f": f, "Z": Y[i]}
        )
        tau = tp.hopf_time(f, r1)
        S.check("canonical time lies in [0, 1)", bool(np.all((tau > -1e-9) & (tau < 1 + 1e-9))), lambda f=f: {"f": f})
    return S.report("trivialization", seed)


ROUTES = {
    "even positive": (lambda rng: sp.random_contraction(rng, ("IV", "III", "IIa", "IIb", "IIc")[int(rng.integers(0, 5))]), "even", "Direct", "Tau"),
    "even one negative": (lambda rng: [sp.random_contraction(rng, "IIc", "mixed"), Contraction("IIa", delta=-rng.uniform(0.4, 0.9), r=2), Contraction("III", delta=-rng.uniform(0.4, 0.9), r=4)][int(rng.integers(0, 3))], "even", "ViaQPrime", "TauPrime"),
    "even two negative": (lambda rng: [sp.random_contraction(rng, "IV", "negative"), sp.random_contraction(rng, "IIb", "negative"), Contraction("IIa", delta=-rng.uniform(0.4, 0.9), r=3)][int(rng.integers(0, 3))], "even", "ViaQDoublePrime", "Tau"),
    "even II'c": (lambda rng: sp.random_contraction(rng, "IIcPrime"), "even", "ViaIIcPrimeFlattening", "Tau"),
    "odd positive": (lambda rng: sp.random_contraction(rng, ("IV", "III", "IIa", "IIb", "IIc")[int(rng.integers(0, 5))]), "odd", "OddRoute", "Mu0"),
    "odd II'c": (lambda rng: sp.random_contraction(rng, "IIcPrime"), "odd", "OddRoute", "Mu0"),
    "odd IV negative": (lambda rng: sp.random_contraction(rng, "IV", "negative"), "odd", "OddRoute", "Mu0"),
}


def suite_charts(samples: int = 1000, seed: int = 0, tol: Optional[float] = None) -> dict:
    rng = np.random.default_rng(seed)
    S = Suite(tol)
    for name, (make, parity, route, model) in ROUTES.items():
        batches = 10
        per = max(1, samples // batches)
        for _ in range(batches):
            f = make(rng)
            phi = sp.random_even_lift(rng, f) if parity == "even" else sp.random_odd_lift(rng, f)
            s = rs.make_structure(f, phi)
            ch = tp.build_chart(f, s)
            S.check("%s: route and model" % name, ch.route == route and ch.model == model,
                    lambda f=f, ch=ch: {"f": f, "route": ch.route, "model": ch.model})
            Y = sp.random_points(rng, per)
            lhs = ch.forward(pm.evaluate(s.lift, Y))
            rhs = tp.model_involution(ch.model, ch.forward(Y))
            S.prop("%s: forward o s = model o forward" % name, 1e-8).add_many(
                tp.chart_distance(lhs, rhs), lambda i, f=f, phi=phi, Y=Y: {"f": f, "lift": phi, "point": Y[i]}
            )
            X = sp.random_sphere_points(rng, per)
            S.prop("%s: forward o backward = id" % name, 1e-8).add_many(
                tp.chart_distance(ch.forward(ch.backward(X)), X), lambda i, f=f, X=X: {"f": f, "point": X[i]}
            )
            if parity == "odd":
                res = _odd_fixed_residual(f, s, Y)
                S.prop("%s: s(P) != P (freeness margin)" % name, 0.0).add(
                    max(0.0, 1e-3 - float(res.min())), lambda f=f, phi=phi: {"f": f, "lift": phi}
                )
    X = sp.random_sphere_points(rng, samples)
    for variant in ("prime", "double"):
        cover = pm.CircleSquareCover(variant)
        S.prop("cover invariance a o j = a (%s)" % variant, 1e-12).add_many(
            tp.chart_distance(cover.forward(tp.deck_involution(variant, X)), cover.forward(X)), lambda i, X=X: {"point": X[i]}
        )
    for _ in range(5):
        f = sp.random_contraction(rng, "IIcPrime")
        linv = tp.flattening_inverse(f)
        lfwd = linv.inverse()
        Y = sp.random_points(rng, samples // 5)
        g = tp.flattened_contraction(f).polymap()
        lhs = linv(pm.evaluate(f.polymap(), lfwd(Y)))
        S.prop("l^-1 o f o l = f_|alpha|", 1e-9).add_many(
            np.linalg.norm(lhs - pm.evaluate(g, Y), axis=-1) / np.linalg.norm(Y, axis=-1), lambda i, f=f, Y=Y: {"f": f, "Z": Y[i]}
        )
        lhs = linv(pm.evaluate(pm.swap_conjugation(), lfwd(Y)))
        S.prop("l^-1 o c' o l = c", 1e-9).add_many(
            np.linalg.norm(lhs - np.conj(Y), axis=-1) / np.linalg.norm(Y, axis=-1), lambda i, f=f, Y=Y: {"f": f, "Z": Y[i]}
        )
    f = sp.random_contraction(rng, "IIaTilde")
    node = tp.SphereNormalize(tp.eta_params(f))
    Z = tp.sigma_project(tp.eta_params(f), sp.random_points(rng, samples))
    X = np.column_stack([np.ones(len(Z)), Z])
    n = node.forward(X)
    for label, op in (("(z,-w)", lambda A: A * np.array([1, 1, -1])), ("(-z,-w)", lambda A: A * np.array([1, -1, -1])), ("conj", np.conj)):
        S.prop("sphere normalization commutes with %s" % label, 1e-12).add_many(
            np.abs(node.forward(op(X)) - op(n)).max(axis=-1), lambda i, Z=Z: {"Z": Z[i]}
        )
    return S.report("charts", seed)


def _odd_fixed_residual(f: Contraction, s, Y) -> np.ndarray:
    """min over k in {-1, 0, 1} of |f^k(rep(s(Q))) - Q| / |Q| for Q = rep(Y)."""
    Q = tp.canonical_representative(f, Y)
    SQ = tp.canonical_representative(f, pm.evaluate(s.lift, Q))
    best = np.full(len(Q), np.inf)
    for k in (-1, 0, 1):
        img = tp.apply_power(f, k, SQ)
        best = np.minimum(best, np.linalg.norm(img - Q, axis=-1) / np.linalg.norm(Q, axis=-1))
    return best


def locus_oracle(f: Contraction, s) -> str:
    """Independent classification of the real locus.

    Odd: searched by sampling (a near-fixed point would contradict Empty).
    Even: the fixed set of c in W is R^2 minus 0 (of c', the plane w = conj z);
    its quotient by f is a torus when f preserves its orientation and a Klein
    bottle otherwise.  The orientation is read from a finite-difference
    Jacobian of f restricted to that plane.
    """
    if s.parity == "odd":
        rng = np.random.default_rng(1)
        res = _odd_fixed_residual(f, s, sp.random_points(rng, 2000))
        return "Empty" if res.min() >= 1e-3 else "NonEmpty"
    F = f.polymap()
    if rs.is_iic_prime(f):
        def emb(x):
            z = x[0] + 1j * x[1]
            return np.array([z, np.conj(z)])

        def proj(Z):
            return np.array([Z[0].real, Z[0].imag])
    else:
        def emb(x):
            return np.array([x[0], x[1]], dtype=complex)

        def proj(Z):
            return Z.real

    x0, h = np.array([0.37, 0.61]), 1e-6
    J = np.column_stack([
        (proj(pm.evaluate(F, emb(x0 + h * e))) - proj(pm.evaluate(F, emb(x0 - h * e)))) / (2 * h)
        for e in np.eye(2)
    ])
    return "Torus" if np.linalg.det(J) > 0 else "KleinBottle"


def suite_locus(samples: int = 50, seed: int = 0, tol: Optional[float] = None) -> dict:
    rng = np.random.default_rng(seed)
    S = Suite(tol)
    grid = []
    mods = np.linspace(0.2, 0.85, 5)
    for i, (m1, m2) in enumerate(zip(mods, mods[::-1])):
        if abs(m1 - m2) < 1e-9:
            m2 = 0.9
        for s1 in (1, -1):
            for s2 in (1, -1):
                grid.append(Contraction("IIc", alpha=s1 * min(m1, m2), delta=s2 * max(m1, m2)))
    for m in mods:
        for sg in (1, -1):
            grid.append(Contraction("IV", alpha=sg * m))
            grid.append(Contraction("IIb", alpha=sg * m))
            grid.append(Contraction("III", delta=sg * max(m, 0.4), r=2 + int(m * 10) % 2))
            grid.append(Contraction("IIa", delta=sg * max(m, 0.4), r=2 + int(m * 10) % 2))
    grid = grid[:max(samples, 1)] if samples < len(grid) else grid
    for f in grid:
        s = rs.canonical_structure(f, "even")
        got = tp.real_locus(f, s)["locus"]
        d1, d2 = (x.real for x in f.diagonal())
        expect = "Torus" if d1 * d2 > 0 else "KleinBottle"
        ctx = lambda f=f, got=got, expect=expect: {"f": f, "got": got, "expected": expect}
        S.check("even locus follows the diagonal sign rule", got == expect, ctx)
        S.check("even locus agrees with the orientation oracle", got == locus_oracle(f, s), ctx)
    for _ in range(10):
        f = sp.random_contraction(rng, "IIcPrime")
        s = rs.make_structure(f, sp.random_even_lift(rng, f))
        got = tp.real_locus(f, s)
        S.check("II'c locus is a torus", got["locus"] == "Torus" and locus_oracle(f, rs.canonical_structure(f, "even")) == "Torus",
                lambda f=f: {"f": f})
    for i in range(14):
        f = _odd_pool(rng, i)
        s = rs.make_structure(f, sp.random_odd_lift(rng, f))
        S.check("odd locus is empty", tp.real_locus(f, s)["locus"] == "Empty" and locus_oracle(f, s) == "Empty",
                lambda f=f, s=s: {"f": f, "lift": s.lift})
    return S.report("locus", seed)


# ---------------------------------------------------------------------------
# picard (criterion 9)

def suite_picard(samples: int = 200, seed: int = 0, tol: Optional[float] = None) -> dict:
    rng = np.random.default_rng(seed)
    S = Suite(tol)
    f = Contraction("IV", alpha=0.5)
    structures = {p: rs.canonical_structure(f, p) for p in ("even", "odd")}
    for i in range(samples):
        parity = ("even", "odd")[i % 2]
        kind = rng.integers(0, 3)
        mag = rng.uniform(0.2, 5)
        if kind == 0:
            zeta = complex(mag)
        elif kind == 1:
            zeta = complex(-mag)
        else:
            zeta = mag * complex(np.exp(1j * rng.uniform(0.1, math.pi - 0.1)))
        datum = pc.real_structures_on_line_bundle(parity, zeta)
        if datum.exists and rng.random() < 0.5:
            nu = datum.circle_radius * complex(np.exp(1j * rng.uniform(-math.pi, math.pi)))
        else:
            nu = rng.uniform(0.2, 3) * complex(np.exp(1j * rng.uniform(-math.pi, math.pi)))
        try:
            sim = pc.verify_bundle_involution(f, structures[parity], zeta, nu, samples=8, seed=i)
        except NotRealZeta:
            sim = False
        closed = datum.exists and abs(abs(nu) - datum.circle_radius) <= 1e-9 * max(1.0, datum.circle_radius)
        S.check("simulated (nu phi_0)^2 = id iff closed-form radius rule", sim == closed,
                lambda parity=parity, zeta=zeta, nu=nu: {"parity": parity, "zeta": zeta, "nu": nu})
        S.prop("pic_involution is conjugation", 0.0).add(abs(pc.pic_involution(zeta) - zeta.conjugate()))
        z2 = complex(rng.normal(), rng.normal())
        S.prop("pic_involution is a homomorphism and an involution", 1e-12).add(
            abs(pc.pic_involution(zeta * z2) - pc.pic_involution(zeta) * pc.pic_involution(z2)) / abs(zeta * z2)
            + abs(pc.pic_involution(pc.pic_involution(zeta)) - zeta) / abs(zeta)
        )
        if datum.exists:
            target = datum.circle_radius * complex(np.exp(1j * rng.uniform(-math.pi, math.pi)))
            nu0 = datum.circle_radius * complex(np.exp(1j * rng.uniform(-math.pi, math.pi)))
            u = pc.conjugating_unit(nu0, target)
            S.prop("gauge action reaches every point of the circle", 1e-12).add(abs(u * u * nu0 - target))
    for z in np.linspace(-3, 3, 13):
        if z == 0:
            continue
        for parity in ("even", "odd"):
            missed = pc.non_surjective(parity, z)
            exists = pc.real_structures_on_line_bundle(parity, z).exists
            S.check("odd non-surjectivity set is exactly zeta < 0",
                    missed == (parity == "odd" and z < 0) and missed == (not exists), lambda z=z, parity=parity: {"zeta": z, "parity": parity})
    return S.report("picard", seed)


# ---------------------------------------------------------------------------
# automorphism groups (criterion 10)

def suite_aut(samples: int = 200, seed: int = 0, tol: Optional[float] = None) -> dict:
    rng = np.random.default_rng(seed)
    S = Suite(tol)
    for cls in ("IV", "III", "IIa", "IIb", "IIc", "IIcPrime"):
        f = sp.random_contraction(rng, cls, "positive" if cls == "IIcPrime" else ("positive", "negative")[int(rng.integers(0, 2))])
        F = f.polymap()
        for _ in range(samples):
            g = sp.random_commutant(rng, f)
            rep = ag.canonical_rep(f, g)
            ctx = lambda f=f, g=g: {"f": f, "g": g.underlying}
            S.prop("canonical_rep is idempotent", 1e-9).add(_rel_diff(ag.canonical_rep(f, rep).underlying, rep.underlying), ctx)
            k = int(rng.integers(-3, 4))
            shifted = ag.canonical_rep(f, pm.compose(g.underlying, pm.power(F, k)))
            S.prop("canonical_rep is constant on cosets", 1e-9).add(_rel_diff(shifted.underlying, rep.underlying), ctx)
        for _ in range(max(1, samples // 4)):
            g1, g2 = sp.random_commutant(rng, f), sp.random_commutant(rng, f)
            k1, k2 = (int(x) for x in rng.integers(-2, 3, 2))
            a = pm.compose(g1.underlying, g2.underlying)
            b = pm.compose(
                pm.compose(g1.underlying, pm.power(F, k1)), pm.compose(g2.underlying, pm.power(F, k2))
            )
            S.prop("coset multiplication is well defined", 1e-9).add(
                _rel_diff(ag.canonical_rep(f, a).underlying, ag.canonical_rep(f, b).underlying),
                lambda f=f, g1=g1, g2=g2: {"f": f, "g1": g1.underlying, "g2": g2.underlying},
            )
        base = pm.swap_conjugation() if rs.is_iic_prime(f) else pm.conjugation()
        for _ in range(max(1, samples // 4)):
            g = sp.random_real_commutant(rng, f)
            ok = ag.membership_even(f, g)
            S.check("real commutant elements are members", ok, lambda f=f, g=g: {"f": f, "g": g.underlying})
            S.prop("members commute with the standard structure", 1e-12).add(
                _rel_diff(pm.compose(g.underlying, base), pm.compose(base, g.underlying))
            )
    for _ in range(100):
        A, B = sp.random_quaternionic(rng), sp.random_quaternionic(rng)
        (ra, ua), (rb, ub), (rab, uab) = ag.spinc_witness(A), ag.spinc_witness(B), ag.spinc_witness(A @ B)
        S.prop("Phi is a homomorphism", 1e-10).add(
            abs(rab - ra * rb) / rab + np.abs(uab - ua @ ub).max(), lambda A=A, B=B: {"A": A, "B": B}
        )
    for _ in range(100):
        r = int(rng.integers(2, 5))
        a, d, b, a2, d2, b2 = (sp._nonzero(rng) for _ in range(6))
        g = pm.compose(ag.iii_element(a, d, b, r), ag.iii_element(a2, d2, b2, r))
        A, D, Bp = ag.iii_params(g)
        x, h = ag.semidirect_product(ag.rho_r(a, d, b, r), (a, d), ag.rho_r(a2, d2, b2, r), (a2, d2), r)
        S.prop("III semidirect law", 1e-10).add(
            (abs(A - h[0]) + abs(D - h[1]) + abs(ag.rho_r(A, D, Bp, r) - x)) / max(1.0, abs(x)),
            lambda a=a, d=d, b=b, a2=a2, d2=d2, b2=b2, r=r: {"g1": [a, d, b], "g2": [a2, d2, b2], "r": r},
        )
    return S.report("aut", seed)


SUITES = {
    "polymap": (suite_polymap, 1000),
    "contractions": (suite_contractions, 100),
    "flows": (suite_flows, 200),
    "even": (suite_even, 100),
    "odd": (suite_odd, 100),
    "parity": (suite_parity, 50),
    "diffineq": (suite_diffineq, 10000),
    "trivialization": (suite_trivialization, 1000),
    "charts": (suite_charts, 1000),
    "locus": (suite_locus, 50),
    "picard": (suite_picard, 200),
    "aut": (suite_aut, 200),
}


def run_suite(name: str, samples: Optional[int] = None, seed: int = 0, tol: Optional[float] = None) -> dict:
    fn, default = SUITES[name]
    return fn(samples if samples is not None else default, seed, tol)
