import numpy as np
import pytest

from hopfreal import polymap as pm
from hopfreal import realstruct as rs
from hopfreal import sampling as sp
from hopfreal.contractions import Contraction
from hopfreal.errors import NoAntiholomorphic, NoSuchStructure, NotInvolution, NotRealCoefficients

from conftest import IIc, IV, assert_map_close

EVEN_CLASSES = [
    IV(0.5),
    IV(-0.4),
    Contraction("III", delta=0.5, r=2),
    Contraction("III", delta=-0.6, r=3),
    Contraction("IIa", delta=0.5, r=2),
    Contraction("IIb", alpha=0.4),
    IIc(0.3, 0.5),
    IIc(0.5, -0.6),
    Contraction("IIcPrime", alpha=0.3 + 0.4j),
]
ODD_CLASSES = [
    IV(0.25),
    IV(-0.25),
    Contraction("III", delta=0.5, r=2),
    Contraction("IIa", delta=0.5, r=3),
    Contraction("IIb", alpha=0.4),
    IIc(0.3, 0.5),
    Contraction("IIcPrime", alpha=0.3 + 0.4j),
]


def conj_by(psi, base):
    return pm.compose(psi, pm.compose(base, pm.invert(psi)))


def test_parity_examples():
    f = IV(0.25)
    assert rs.parity_of_lift(IIc(0.3, 0.5), pm.conjugation()) == (0, "even")
    half = rs.canonical_lift(f, "odd")
    assert rs.parity_of_lift(f, half) == (1, "odd")
    assert rs.parity_of_lift(f, pm.compose(half, f.polymap())) == (3, "odd")


def test_existence_examples():
    assert rs.existence(Contraction("III", delta=-0.5, r=2)) == {
        "any_antiholomorphic": True, "even_exists": True, "odd_exists": False
    }
    assert rs.existence(IV(-0.5)) == {"any_antiholomorphic": True, "even_exists": True, "odd_exists": True}
    assert rs.existence(IIc(0.3 + 0.1j, 0.5)) == {
        "any_antiholomorphic": False, "even_exists": False, "odd_exists": False
    }


def test_canonical_structures():
    assert_map_close(rs.canonical_structure(IV(0.25), "odd").lift, pm.diag(0.5, 0.5, conj=True))
    assert_map_close(rs.canonical_structure(Contraction("IIcPrime", alpha=0.3 + 0.4j), "even").lift,
                     pm.swap_conjugation())
    expected = pm.PolyMap(True, {(0, 1): 0.5j}, {(1, 0): -0.5j}, True)
    assert_map_close(rs.canonical_structure(IV(-0.25), "odd").lift, expected)


def test_canonical_structure_missing():
    with pytest.raises(NoSuchStructure):
        rs.canonical_structure(Contraction("III", delta=-0.5, r=2), "odd")


@pytest.mark.parametrize("f", ODD_CLASSES, ids=lambda f: f.cls)
def test_canonical_odd_lift_squares_to_f(f):
    h = rs.canonical_lift(f, "odd")
    assert_map_close(pm.compose(h, h), f.polymap(), 1e-12)


def test_normalize_even_examples():
    assert_map_close(rs.normalize_even(IV(0.5), pm.conjugation()), pm.identity())
    f = Contraction("III", delta=0.5, r=2)
    phi = pm.PolyMap(True, {(1, 0): -1, (0, 2): 1}, {(0, 1): 1}, True)
    psi = rs.normalize_even(f, phi)
    assert_map_close(psi, pm.triangular(1j, 0.5, 2, 1), 1e-12)
    psi = rs.normalize_even(IIc(0.3, 0.5), pm.diag(1j, 1, conj=True))
    assert_map_close(psi, pm.diag(np.exp(1j * np.pi / 4), 1), 1e-12)


def test_normalize_odd_examples():
    f = IV(0.25)
    assert_map_close(rs.normalize_odd(f, rs.canonical_lift(f, "odd")), pm.identity())
    f = IV(-0.25)
    J = rs.canonical_lift(f, "odd")
    assert_map_close(rs.normalize_odd(f, J), pm.identity())
    psi0 = pm.from_matrix([[1, 1], [0, 1]])
    phi = conj_by(psi0, J)
    psi = rs.normalize_odd(f, phi)
    assert pm.max_coeff_diff(conj_by(psi, J), phi) < 1e-10


@pytest.mark.parametrize("f", EVEN_CLASSES, ids=lambda f: f.cls)
def test_normalize_even_random(f, rng):
    base = rs.canonical_lift(f, "even")
    for _ in range(10):
        phi = sp.random_even_lift(rng, f)
        psi = rs.normalize_even(f, phi)
        assert pm.max_coeff_diff(conj_by(psi, base), phi) < 1e-9
        assert pm.commutes(psi, f.polymap(), 1e-9)


@pytest.mark.parametrize("f", ODD_CLASSES, ids=lambda f: f.cls)
def test_normalize_odd_random(f, rng):
    base = rs.canonical_lift(f, "odd")
    for _ in range(10):
        phi = sp.random_odd_lift(rng, f)
        psi = rs.normalize_odd(f, phi)
        assert pm.max_coeff_diff(conj_by(psi, base), phi) < 1e-9


def test_normalize_rejects_non_involution():
    with pytest.raises(NotInvolution):
        rs.normalize_even(IV(0.5), pm.diag(2, 2, conj=True))


def test_normalize_rejects_complex_coefficients():
    with pytest.raises((NoAntiholomorphic, NotRealCoefficients)):
        rs.normalize_even(IIc(0.3 + 0.1j, 0.5), pm.conjugation())


def test_normalize_any_deck_power(rng):
    f = Contraction("IIa", delta=0.5, r=2)
    for n in range(-4, 5):
        parity = "even" if n % 2 == 0 else "odd"
        phi = pm.compose(rs.canonical_lift(f, parity), pm.power(f.polymap(), n // 2))
        spec, psi = rs.normalize(f, phi)
        assert spec.deck_power == n and spec.parity == parity


def test_family_descriptors():
    fam = rs.list_antiholomorphic_family(IV(0.5))
    assert fam["shape"] == "A conj(Z)" and fam["constraints"] == ["A in GL(2,C)"]
    assert rs.list_antiholomorphic_family(Contraction("IIcPrime", alpha=0.3 + 0.4j))["shape"] == \
        "(a conj(w), d conj(z))"
    assert rs.list_antiholomorphic_family(Contraction("IIb", alpha=0.5))["shape"] == "(a conj(z) + b conj(w), a conj(w))"


def test_instantiate_family_commutes():
    f = Contraction("IIb", alpha=0.5)
    phi = rs.instantiate_family(f, {"a": 1j, "b": 2})
    assert pm.commutes(phi, f.polymap())
