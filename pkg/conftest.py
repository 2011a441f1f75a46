"""Shared fixtures: model algebras and seeded generators"""
import random

import pytest

from src.core.superalgebra import GradedDim, SuperAlgebra
from src.models.library import abelian, heisenberg


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture
def h10():
    return heisenberg(1, 0)


@pytest.fixture
def h11():
    return heisenberg(1, 1)


@pytest.fixture
def h21():
    return heisenberg(2, 1)


@pytest.fixture
def a32():
    return abelian(3, 2)


@pytest.fixture
def affine_line():
    """Non-nilpotent 2-dimensional Lie algebra [x, y] = y"""
    return SuperAlgebra(GradedDim(2, 0), {(0, 1): (0, 1)}, ("x", "y"))


@pytest.fixture
def broken_cover():
    """H(0,1) extended by [y, zeta] = eta: graded Jacobi fails at (y, y, y)"""
    # zeta | y, eta; [zeta, y] = -[y, zeta]
    return SuperAlgebra(GradedDim(1, 2), {(1, 1): (1, 0, 0), (0, 1): (0, 0, -1)}, ("zeta", "y", "eta"))
