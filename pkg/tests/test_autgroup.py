import numpy as np
import pytest

from hopfreal import autgroup as ag
from hopfreal import polymap as pm
from hopfreal import realstruct as rs
from hopfreal import sampling as sp
from hopfreal.contractions import Contraction
from hopfreal.errors import NotCommuting, NotQuaternionicShape

from conftest import IIc, IV, assert_map_close

CLASSES = [IV(0.5), Contraction("III", delta=0.5, r=2), Contraction("IIa", delta=0.5, r=2),
           Contraction("IIb", alpha=0.4), IIc(0.3, 0.5), Contraction("IIcPrime", alpha=0.3 + 0.4j)]


def test_canonical_rep_examples():
    f = IV(0.5)
    assert_map_close(ag.canonical_rep(f, pm.diag(2, 2)).underlying, pm.diag(0.5, 0.5))
    # the identity coset: with the [lower, 1) annulus its representative is f itself
    g = IIc(0.3, 0.5)
    assert ag.same_coset(g, ag.canonical_rep(g, pm.identity()).underlying, pm.identity())
    h = Contraction("III", delta=0.5, r=2)
    assert ag.same_coset(h, ag.canonical_rep(h, h.polymap()).underlying, pm.identity())


def test_canonical_rep_rejects_non_commuting():
    with pytest.raises(NotCommuting):
        ag.canonical_rep(IIc(0.3, 0.5), pm.from_matrix([[1, 1], [0, 1]]))


@pytest.mark.parametrize("f", CLASSES, ids=lambda f: f.cls)
def test_canonical_rep_idempotent_and_coset_constant(f, rng):
    F = f.polymap()
    for _ in range(10):
        g = sp.random_commutant(rng, f).underlying
        rep = ag.canonical_rep(f, g).underlying
        assert_map_close(ag.canonical_rep(f, rep).underlying, rep, 1e-9)
        for k in (-2, 1, 3):
            other = ag.canonical_rep(f, pm.compose(g, pm.power(F, k))).underlying
            assert pm.max_coeff_diff(other, rep) <= 1e-9 * max(1, max(map(abs, rep.P.values())))


def test_real_automorphism_group():
    f = IV(0.5)
    assert ag.real_automorphism_group(f, rs.canonical_structure(f, "even"))["presentation"] == "GL(2,ℝ)/⟨0.5·I₂⟩"
    f = Contraction("IIcPrime", alpha=0.3 + 0.4j)
    d = ag.real_automorphism_group(f, rs.canonical_structure(f, "even"))
    assert d["presentation"] == "ℂ*/⟨α⟩" and any("1-dimensional complex torus" in n for n in d["notes"])
    f = IV(-0.5)
    assert ag.real_automorphism_group(f, rs.canonical_structure(f, "odd"))["presentation"] == "Spin^c(3)"


def test_membership_even(rng):
    f = IV(0.5)
    assert ag.membership_even(f, pm.from_matrix(rng.normal(size=(2, 2))))
    assert not ag.membership_even(f, pm.diag(1j, 1))
    assert ag.membership_even(Contraction("IIcPrime", alpha=0.3 + 0.4j), pm.diag(2 + 1j, 2 - 1j))


@pytest.mark.parametrize("f", CLASSES, ids=lambda f: f.cls)
def test_real_commutant_commutes_with_structure(f, rng):
    c = rs.canonical_lift(f, "even")
    for _ in range(5):
        g = sp.random_real_commutant(rng, f).underlying
        assert ag.membership_even(f, g, 1e-9)
        assert pm.commutes(g, c, 1e-9)


def test_spinc_witness():
    rho, U = ag.spinc_witness(np.eye(2))
    assert rho == 1 and np.allclose(U, np.eye(2))
    rho, U = ag.spinc_witness(2 * np.eye(2))
    assert abs(rho - 2) < 1e-15 and np.allclose(U, np.eye(2))
    A = np.array([[0, -1], [1, 0]])
    rho, U = ag.spinc_witness(A)
    assert abs(rho - 1) < 1e-15 and np.allclose(U, A)
    with pytest.raises(NotQuaternionicShape):
        ag.spinc_witness(np.array([[1, 2], [3, 4]]))


def test_spinc_homomorphism(rng):
    for _ in range(50):
        A, B = sp.random_quaternionic(rng), sp.random_quaternionic(rng)
        r1, U1 = ag.spinc_witness(A)
        r2, U2 = ag.spinc_witness(B)
        r, U = ag.spinc_witness(A @ B)
        assert abs(r - r1 * r2) < 1e-10 * r and np.allclose(U, U1 @ U2, atol=1e-10)


def test_iii_semidirect_law(rng):
    for r in (1, 2, 3):
        for _ in range(20):
            a, d, b, a2, d2, b2 = rng.uniform(0.5, 2, 6) * rng.choice([-1, 1], 6)
            direct = pm.compose(ag.iii_element(a, d, b, r), ag.iii_element(a2, d2, b2, r))
            # translation coordinate x = rho_r(a, d)(b)
            x, (A, D) = ag.semidirect_product(ag.rho_r(a, d, b, r), (a, d), ag.rho_r(a2, d2, b2, r), (a2, d2), r)
            pa, pd, pb = ag.iii_params(direct)
            assert abs(pa - A) < 1e-12 and abs(pd - D) < 1e-12
            assert abs(ag.rho_r(pa, pd, pb, r) - x) < 1e-10 * max(1, abs(x))
