import hypothesis
import numpy as np
import pytest

from superarray import interleaved_superarray, supercardioid_order2

hypothesis.settings.register_profile(
    "numeric", deadline=None, max_examples=50,
    suppress_health_check=[hypothesis.HealthCheck.too_slow],
)
hypothesis.settings.load_profile("numeric")


@pytest.fixture
def supercardioid():
    return supercardioid_order2()


@pytest.fixture
def baseline():
    return interleaved_superarray()


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)
