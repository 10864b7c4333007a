import random

import pytest

from reachlab import BinaryDfa, build_A_n, build_B_8


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20231015, help="seed for randomized tests")


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed):
    return random.Random(seed)


@pytest.fixture(scope="session")
def b8():
    return build_B_8()


@pytest.fixture(scope="session")
def a10():
    return build_A_n(10)


@pytest.fixture(scope="session")
def d4():
    return BinaryDfa(4, (1, 2, 3, 1))


@pytest.fixture(scope="session")
def d4bad():
    return BinaryDfa(4, (2, 1, 2, 3))
