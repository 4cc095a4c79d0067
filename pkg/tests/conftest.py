import pytest
from hypothesis import HealthCheck, settings

from hypercoop.corpus import hub_and_spokes, path_three

settings.register_profile(
    "exact",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def hub():
    """Six players, three rim pairs plus a three-member hub conference,
    unanimity worth on the rim players {1, 2, 3}."""
    return hub_and_spokes()


@pytest.fixture(scope="session")
def path3():
    """1 - 2 - 3 line with unanimity worth on the endpoints."""
    return path_three()
