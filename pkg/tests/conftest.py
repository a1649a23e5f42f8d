import math
import random

import pytest

from chronobound import default_constants


def rel_err(actual: float, expected: float) -> float:
    if expected == 0.0:
        return abs(actual)
    return abs(actual - expected) / abs(expected)


def log_uniform(rng: random.Random, lo: float, hi: float) -> float:
    return math.exp(rng.uniform(math.log(lo), math.log(hi)))


@pytest.fixture
def constants():
    return default_constants()


@pytest.fixture
def rng():
    return random.Random(20240901)
