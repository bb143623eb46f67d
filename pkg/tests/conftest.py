import random

import pytest

from qpring.intpoly import IntPolynomial
from qpring.quasipoly import QuasiPolynomial


def rand_poly(rng, max_deg, lo=-9, hi=9, nonzero=False):
    while True:
        p = IntPolynomial([rng.randint(lo, hi) for _ in range(rng.randint(0, max_deg) + 1)])
        if p or not nonzero:
            return p


def rand_quasi(rng, periods=(1, 2, 3, 4, 6), max_deg=2, lo=-5, hi=5):
    T = rng.choice(periods)
    return QuasiPolynomial(T, [rand_poly(rng, max_deg, lo, hi) for _ in range(T)]).canonical()


@pytest.fixture
def rng():
    return random.Random(20240611)
