import pytest

from hopfreal import polymap as pm
from hopfreal.contractions import Contraction, classify, is_biholomorphic_pair, power_match, structural_flags
from hopfreal.errors import NotContraction, NotWehlerForm

from conftest import IIc, IV


def test_classify_examples():
    assert classify(pm.diag(0.5, 0.5)) == IV(0.5)
    f = classify(pm.diag(0.25, 0.5))
    assert (f.cls, f.r) == ("III", 2) and abs(f.delta - 0.5) < 1e-15
    f = classify(pm.diag(0.3 + 0.4j, 0.3 - 0.4j))
    assert f.cls == "IIcPrime" and abs(f.alpha - (0.3 + 0.4j)) < 1e-15


def test_classify_swapped_power_is_iii():
    f = classify(pm.diag(0.5, 0.25))
    assert (f.cls, f.r) == ("III", 2)


def test_classify_triangular_classes():
    assert classify(pm.triangular(0.25, 1.0, 2, 0.5)).cls == "IIa"
    assert classify(pm.triangular(0.5, 1.0, 1, 0.5)).cls == "IIb"
    assert classify(pm.triangular(0.25, 0.5, 2, 0.5), allow_tilde=True).cls == "IIaTilde"


def test_classify_rejects():
    with pytest.raises(NotContraction):
        classify(pm.diag(1.5, 0.5))
    with pytest.raises(NotWehlerForm):
        classify(pm.from_matrix([[0.5, 0.1], [0.1, 0.5]]))


def test_classify_json_output():
    assert classify(pm.diag(0.5, 0.5)).to_json() == {"class": "IV", "alpha": [0.5, 0.0]}


def test_biholomorphic_pairs():
    assert is_biholomorphic_pair(IIc(0.3, 0.4), IIc(0.4, 0.3))
    assert is_biholomorphic_pair(IV(0.5), IV(0.5))
    assert not is_biholomorphic_pair(IV(0.5), Contraction("III", delta=0.5, r=2))
    a = 0.3 + 0.4j
    assert is_biholomorphic_pair(Contraction("IIcPrime", alpha=a), Contraction("IIcPrime", alpha=a.conjugate()))


def test_structural_flags():
    assert structural_flags(IV(-0.5)) == {
        "real_coeffs": True, "positive_diagonal": False, "negative_diagonal_count": 2, "is_iic_prime": False
    }
    flags = structural_flags(Contraction("III", delta=-0.5, r=2))
    assert flags["real_coeffs"] and not flags["positive_diagonal"] and flags["negative_diagonal_count"] == 1
    flags = structural_flags(Contraction("IIcPrime", alpha=0.3 + 0.4j))
    assert not flags["real_coeffs"] and flags["is_iic_prime"]


def test_power_match():
    assert power_match(0.25, 0.5) == 2
    assert power_match(0.3, 0.5) is None
    assert power_match(0.5**70, 0.5) is None  # beyond R_MAX


def test_contraction_json_round_trip():
    for f in [IV(0.5), IIc(-0.3, 0.5), Contraction("IIa", delta=0.4, r=3), Contraction("IIbTilde", alpha=0.5, c=1.0)]:
        assert Contraction.from_json(f.to_json()) == f
