import numpy as np
import pytest

from hopfreal import polymap as pm
from hopfreal.contractions import Contraction


@pytest.fixture
def rng():
    return np.random.default_rng(0)


def assert_map_close(m1, m2, tol=1e-12):
    assert m1.conj == m2.conj
    assert pm.max_coeff_diff(m1, m2) <= tol, (m1.to_json(), m2.to_json())


def IV(a):
    return Contraction("IV", alpha=a)


def IIc(a, d):
    return Contraction("IIc", alpha=a, delta=d)
