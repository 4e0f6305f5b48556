import numpy as np
import pytest

from hopfreal import flows as fl
from hopfreal import polymap as pm
from hopfreal.contractions import Contraction

from conftest import IIc, IV, assert_map_close

CLASSES = [
    IV(0.25),
    Contraction("III", delta=0.5, r=2),
    Contraction("IIa", delta=0.25, r=2),
    Contraction("IIb", alpha=0.5),
    IIc(0.3, 0.5),
    Contraction("IIaTilde", delta=0.5, r=3, c=0.7),
    Contraction("IIbTilde", alpha=0.5, c=1.0),
]


def test_kth_root_examples():
    assert_map_close(fl.kth_root(IV(0.25), 2), pm.diag(0.5, 0.5))
    assert_map_close(fl.kth_root(Contraction("IIa", delta=0.25, r=2), 2), pm.triangular(0.25, 2.0, 2, 0.5))
    for f in CLASSES:
        assert_map_close(fl.kth_root(f, 1), f.polymap())


@pytest.mark.parametrize("f", CLASSES, ids=lambda f: f.cls)
@pytest.mark.parametrize("k", [2, 3, 5])
def test_kth_root_power(f, k):
    assert_map_close(pm.power(fl.kth_root(f, k), k), f.polymap())


def test_flow_examples():
    assert_map_close(fl.flow(IV(0.5), 2), pm.diag(0.25, 0.25))
    assert_map_close(fl.flow(Contraction("IIbTilde", alpha=0.5, c=1.0), 2), pm.triangular(0.25, 1.0, 1, 0.25))
    assert_map_close(fl.flow(IIc(0.3, 0.5), 0.5), pm.diag(0.3**0.5, 0.5**0.5))


@pytest.mark.parametrize("f", CLASSES, ids=lambda f: f.cls)
def test_flow_group_law(f, rng):
    for _ in range(5):
        t, s = rng.uniform(-2, 2, 2)
        lhs, rhs = fl.flow(f, t + s), pm.compose(fl.flow(f, t), fl.flow(f, s))
        scale = max(1.0, max(abs(v) for v in list(lhs.P.values()) + list(lhs.Q.values())))
        assert pm.max_coeff_diff(lhs, rhs) <= 1e-10 * scale


def test_square_for_negatives():
    assert fl.square_for_negatives(IV(-0.5)) == IV(0.25)
    g = fl.square_for_negatives(Contraction("IIa", delta=-0.5, r=2))
    assert g.cls == "IIaTilde" and g.r == 2
    assert abs(g.delta - 0.25) < 1e-15 and abs(g.c - 0.5) < 1e-15
    g = fl.square_for_negatives(IIc(0.3, -0.5))
    assert abs(g.alpha - 0.09) < 1e-15 and abs(g.delta - 0.25) < 1e-15


def test_square_orientation_flag():
    g, swapped = fl.square_with_orientation(IIc(-0.3, 0.5))
    assert not swapped and g.cls == "IIc"
    g, swapped = fl.square_with_orientation(IIc(-0.5, 0.6))
    assert g.polymap() is not None
    assert_map_close(pm.compose(IIc(-0.5, 0.6).polymap(), IIc(-0.5, 0.6).polymap()),
                     pm.compose(pm.swap(), pm.compose(g.polymap(), pm.swap())) if swapped else g.polymap())


def test_generator_matches_finite_difference(rng):
    Y = rng.normal(size=(5, 2)) + 1j * rng.normal(size=(5, 2))
    for f in CLASSES:
        h = 1e-6
        fd = (pm.evaluate(fl.flow(f, h), Y) - pm.evaluate(fl.flow(f, -h), Y)) / (2 * h)
        assert np.allclose(fl.generator(f, Y), fd, atol=1e-6)


def test_flow_apply_per_point(rng):
    f = Contraction("IIa", delta=0.5, r=2)
    Z = rng.normal(size=(4, 2)) + 0j
    t = np.array([0.0, 1.0, -1.0, 0.5])
    out = fl.flow_apply(f, t, Z)
    for i in range(4):
        assert np.allclose(out[i], pm.evaluate(fl.flow(f, t[i]), Z[i]))
