"""Property-based tests (skipped when hypothesis is not installed)."""
import math

import numpy as np
import pytest

hypothesis = pytest.importorskip("hypothesis")
from hypothesis import given, settings  # noqa: E402
from hypothesis import strategies as st  # noqa: E402

from hopfreal import autgroup as ag  # noqa: E402
from hopfreal import picard as pc  # noqa: E402
from hopfreal import polymap as pm  # noqa: E402
from hopfreal import realstruct as rs  # noqa: E402
from hopfreal import topology as tp  # noqa: E402
from hopfreal.contractions import Contraction, classify, is_biholomorphic_pair  # noqa: E402
from hopfreal.flows import flow, kth_root  # noqa: E402

SETTINGS = settings(max_examples=60, deadline=None)

modulus = st.floats(0.2, 0.9)
sign = st.sampled_from([1.0, -1.0])
times = st.floats(-2.0, 2.0)
unit_phase = st.floats(-math.pi, math.pi)


@st.composite
def positive_contractions(draw):
    cls = draw(st.sampled_from(["IV", "III", "IIa", "IIb", "IIc", "IIbTilde", "IIaTilde"]))
    r = draw(st.integers(2, 4))
    if cls == "IV":
        return Contraction("IV", alpha=draw(modulus))
    if cls in ("III", "IIa"):
        return Contraction(cls, delta=draw(st.floats(0.4, 0.9)), r=r)
    if cls == "IIb":
        return Contraction("IIb", alpha=draw(modulus))
    if cls == "IIbTilde":
        return Contraction("IIbTilde", alpha=draw(modulus), c=draw(st.floats(-2, 2)))
    if cls == "IIaTilde":
        return Contraction("IIaTilde", delta=draw(st.floats(0.4, 0.9)), r=r, c=draw(st.floats(-2, 2)))
    a, d = sorted([draw(st.floats(0.2, 0.5)), draw(st.floats(0.55, 0.9))])
    return Contraction("IIc", alpha=a, delta=d)


def rel(m1, m2):
    scale = max([1.0] + [abs(v) for v in list(m1.P.values()) + list(m1.Q.values())])
    return pm.max_coeff_diff(m1, m2) / scale


@SETTINGS
@given(positive_contractions(), times, times)
def test_flow_group_law(f, t, s):
    assert rel(flow(f, t + s), pm.compose(flow(f, t), flow(f, s))) < 1e-10


@SETTINGS
@given(positive_contractions(), st.integers(2, 6))
def test_kth_root(f, k):
    assert rel(pm.power(kth_root(f, k), k), f.polymap()) < 1e-12


@SETTINGS
@given(positive_contractions())
def test_classify_render_round_trip(f):
    if f.cls.endswith("Tilde"):
        return
    g = classify(f.polymap())
    assert g.cls == f.cls and is_biholomorphic_pair(g, f)


@SETTINGS
@given(st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False))
def test_pic_involution_is_involutive(z):
    if z == 0:
        return
    assert pc.pic_involution(pc.pic_involution(z)) == z


@SETTINGS
@given(st.integers(1, 4), st.floats(0.1, 10), st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3))
def test_sigma_projection_lands_on_sigma(q, B, x1, y1, x2, y2):
    Z = np.array([[x1 + 1j * y1, x2 + 1j * y2]])
    if np.linalg.norm(Z) < 1e-3:
        return
    spec = tp.EtaSpec(q, B, 0.0)
    S = tp.sigma_project(spec, Z)
    assert abs(tp.eta(spec, S)[0] - 1) < 1e-10
    # radial: S is a positive multiple of Z
    mask = np.abs(Z) > 1e-9
    ratio = S[mask] / Z[mask]
    assert np.allclose(ratio.imag, 0, atol=1e-9) and np.all(ratio.real > 0)


@SETTINGS
@given(positive_contractions(), st.integers(-3, 3), st.sampled_from(["even", "odd"]))
def test_parity_invariant_under_deck_shift(f, k, parity):
    if f.cls.endswith("Tilde"):
        return
    phi = rs.canonical_lift(f, parity)
    n0, p0 = rs.parity_of_lift(f, phi)
    n1, p1 = rs.parity_of_lift(f, pm.compose(phi, pm.power(f.polymap(), k)))
    assert p1 == p0 and n1 == n0 + 2 * k


@SETTINGS
@given(st.floats(0.2, 0.9), st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2),
       st.integers(-3, 3))
def test_canonical_rep_iv(alpha, a, b, c, d, k):
    A = np.array([[a, b], [c, d]])
    if abs(np.linalg.det(A)) < 0.05:
        return
    f = Contraction("IV", alpha=alpha)
    g = pm.from_matrix(A)
    rep = ag.canonical_rep(f, g).underlying
    det = abs(np.linalg.det(rep.matrix()))
    assert alpha**2 * (1 - 1e-12) <= det < 1
    shifted = ag.canonical_rep(f, pm.compose(g, pm.power(f.polymap(), k))).underlying
    assert rel(shifted, rep) < 1e-9


@SETTINGS
@given(unit_phase, unit_phase, st.floats(0.1, 3))
def test_spinc_homomorphism(p1, p2, s):
    A = s * np.array([[np.exp(1j * p1), 0], [0, np.exp(-1j * p1)]])
    B = np.array([[math.cos(p2), -math.sin(p2)], [math.sin(p2), math.cos(p2)]], dtype=complex)
    r1, U1 = ag.spinc_witness(A)
    r2, U2 = ag.spinc_witness(B)
    r, U = ag.spinc_witness(A @ B)
    assert abs(r - r1 * r2) < 1e-10 * r and np.allclose(U, U1 @ U2, atol=1e-10)
