import pytest
from hypothesis import HealthCheck, settings

from parray_crystal.parray import PArray
from parray_crystal.poset import figure1_poset, poset_q

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def Q():
    return poset_q()


@pytest.fixture(scope="session")
def fig1():
    return figure1_poset()


@pytest.fixture
def arr():
    """``arr(P, rows, N)`` shorthand."""
    def make(P, rows, n_rows=None):
        return PArray(P, rows, n_rows)
    return make
