import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

PRIMES = [2, 3, 5]


@pytest.fixture
def rng():
    return random.Random(20260811)


@pytest.fixture(params=PRIMES)
def p(request):
    return request.param
