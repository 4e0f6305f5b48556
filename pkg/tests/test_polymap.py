import numpy as np
import pytest

from hopfreal import polymap as pm
from hopfreal.errors import DegreeOverflow, NotInvertibleShape

from conftest import assert_map_close


def test_evaluate_conjugations():
    assert np.allclose(pm.evaluate(pm.conjugation(), np.array([1 + 2j, 3])), [1 - 2j, 3])
    assert np.allclose(pm.evaluate(pm.swap_conjugation(), np.array([1 + 1j, 5])), [5, 1 - 1j])
    assert np.allclose(pm.evaluate(pm.quaternionic_j(), np.array([1, 1j])), [1j, 1])


def test_evaluate_batch_shape():
    Z = np.array([[1, 2], [3j, 4]], dtype=complex)
    out = pm.evaluate(pm.diag(2, 3), Z)
    assert out.shape == (2, 2)
    assert np.allclose(out, [[2, 6], [6j, 12]])


def test_compose_involutions():
    assert_map_close(pm.compose(pm.conjugation(), pm.conjugation()), pm.identity())
    J2 = pm.compose(pm.quaternionic_j(), pm.quaternionic_j())
    assert_map_close(J2, pm.diag(-1, -1))


def test_compose_odd_square_roots():
    phi = pm.compose(pm.conjugation(), pm.diag(0.5, 0.5))
    assert_map_close(pm.compose(phi, phi), pm.diag(0.25, 0.25))
    phi = pm.compose(pm.quaternionic_j(), pm.diag(0.5j, 0.5j))
    assert np.allclose(pm.evaluate(phi, np.array([1, 1j])), [0.5j * np.conj(1j), -0.5j])
    assert_map_close(pm.compose(phi, phi), pm.diag(-0.25, -0.25))


def test_invert_examples():
    assert_map_close(pm.invert(pm.diag(2, 4)), pm.diag(0.5, 0.25))
    g = pm.triangular(1j, 0.5, 2, 1)
    expected = pm.PolyMap(False, {(1, 0): -1j, (0, 2): 0.5j}, {(0, 1): 1}, True)
    assert_map_close(pm.invert(g), expected)
    L = np.array([[1, 1j], [1, -1j]])
    expected = pm.from_matrix((1 / (-2j)) * np.array([[-1j, -1j], [-1, 1]]))
    assert_map_close(pm.invert(pm.from_matrix(L)), expected)


def test_invert_antiholomorphic_round_trip(rng):
    for _ in range(20):
        a, b, d = rng.normal(size=3) + 1j * rng.normal(size=3)
        g = pm.triangular(a, b, 3, d, conj=True)
        assert_map_close(pm.compose(g, pm.invert(g)), pm.identity(), 1e-10)
        assert_map_close(pm.compose(pm.invert(g), g), pm.identity(), 1e-10)


def test_invert_rejects_other_shapes():
    m = pm.PolyMap(False, {(2, 0): 1}, {(0, 1): 1}, False)
    with pytest.raises(NotInvertibleShape):
        pm.invert(m)


def test_maps_equal():
    f = pm.diag(0.25, 0.5)
    assert pm.maps_equal(f, f)
    assert not pm.maps_equal(pm.conjugation(), pm.swap_conjugation())
    root = pm.diag(0.5, 0.5**0.5)
    assert pm.maps_equal(pm.compose(root, root), f, 1e-12)


def test_degree_cap():
    g = pm.triangular(1, 1, 10, 1)
    with pytest.raises(DegreeOverflow):
        pm.compose(pm.PolyMap(False, {(2, 0): 1}, {(0, 1): 1}, False), g)


def test_json_round_trip():
    g = pm.triangular(1j, 0.5 - 2j, 2, 0.3, conj=True)
    assert_map_close(pm.PolyMap.from_json(g.to_json()), g, 0)


def test_chain_map_inverse_and_json(rng):
    chain = pm.ChainMap([pm.PolyNode(pm.triangular(2, 1j, 2, 0.5)), pm.RadialTwist(0.3), pm.Scale(2.0)])
    Z = rng.normal(size=(10, 2)) + 1j * rng.normal(size=(10, 2))
    assert np.allclose(chain.inverse().evaluate(chain.evaluate(Z)), Z, atol=1e-12)
    again = pm.ChainMap.from_json(chain.to_json())
    assert np.allclose(again.evaluate(Z), chain.evaluate(Z), atol=1e-14)
