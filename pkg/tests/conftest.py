from __future__ import annotations

import random

import pytest

from biprod.instances import finrel, mat_semiring, z_chain


@pytest.fixture(scope="session")
def rel2():
    return finrel(2)


@pytest.fixture(scope="session")
def rel3():
    return finrel(3)


@pytest.fixture(scope="session")
def nat():
    return mat_semiring("mat-nat", 3)


@pytest.fixture(scope="session")
def boolmat():
    return mat_semiring("mat-bool", 3)


@pytest.fixture(scope="session")
def rat():
    return mat_semiring("mat-rat", 3)


@pytest.fixture(scope="session")
def chain():
    return z_chain(-5, 5)


@pytest.fixture
def rng():
    return random.Random(0)
