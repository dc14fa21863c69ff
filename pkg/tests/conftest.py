import pytest
from hypothesis import HealthCheck, settings

from klpaths.coxeter import three_complete, type_a, type_b
from klpaths.reflection_order import height_order

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def A3():
    return type_a(3)


@pytest.fixture(scope="session")
def A4():
    return type_a(4)


@pytest.fixture(scope="session")
def B3():
    return type_b(3)


@pytest.fixture(scope="session")
def K4():
    return three_complete(4)


@pytest.fixture(scope="session")
def A3_pairs(A3):
    els = A3.elements_up_to(100)
    return [(u, v) for u in els for v in els if A3.bruhat_leq(u, v)]


@pytest.fixture(scope="session")
def A3_strict(A3_pairs):
    return [(u, v) for u, v in A3_pairs if u != v]


@pytest.fixture(scope="session")
def A3_height(A3):
    return height_order(A3)
