import math
from fractions import Fraction

import pytest

import causal_transfer as ct

HALF = Fraction(1, 2)


@pytest.fixture
def binary_layout():
    return ct.elementary_binary_layout()


@pytest.fixture
def gates(binary_layout):
    return ct.binary_gates(binary_layout)


@pytest.fixture
def coin_table(binary_layout):
    return ct.TransitionTable(binary_layout, ((HALF, HALF), (HALF, HALF)))


@pytest.fixture
def violation_angles():
    return (0.0, math.pi / 3, 2 * math.pi / 3)


@pytest.fixture(scope="session")
def violating_table():
    return ct.singlet_table((0.0, math.pi / 3, 2 * math.pi / 3))
