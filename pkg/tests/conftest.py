import random

import pytest
from hypothesis import HealthCheck, settings

from cliffqt import COMPLEX, EXACT, REAL, Multivector

settings.register_profile(
    "ci",
    deadline=None,
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


def random_mv(sig, rng, field=REAL, backend=EXACT, max_terms=None):
    """Small random multivector with integer coefficients (exact) or floats."""
    size = 1 << sig.n
    count = rng.randrange(0, max_terms or size) + 1
    terms = {}
    for _ in range(count):
        mask = rng.randrange(size)
        if backend == EXACT:
            re = rng.randint(-9, 9)
            im = rng.randint(-9, 9) if field == COMPLEX else 0
        else:
            re = rng.uniform(-1, 1)
            im = rng.uniform(-1, 1) if field == COMPLEX else 0.0
        terms[mask] = (re, im)
    return Multivector(sig, terms, field, backend)


@pytest.fixture
def rng():
    return random.Random(20260810)
