from fractions import Fraction

import pytest

from src.core import homology
from src.core.errors import InvalidAlgebraError, StructureError
from src.core.homology import ChainBasis2, ChainBasis3, d2_matrix, d3_matrix, multiplier_dim
from src.core.superalgebra import GradedDim
from src.models.library import abelian, direct_sum, heisenberg
from src.models.stem_cover import stem_cover_heisenberg
from src.services.corpus import random_instances


def test_chain_basis_sizes():
    c2 = ChainBasis2.for_dim(GradedDim(3, 2))
    # even: C(3,2) + 3 symmetric odd pairs; odd: 3 * 2 mixed pairs
    assert (len(c2.even_gens), len(c2.odd_gens)) == (6, 6)
    assert c2.total == 12
    c3 = ChainBasis3.for_dim(GradedDim(3, 2))
    # even: C(3,3) + 3 * 3; odd: C(3,2) * 2 + 4 symmetric odd triples
    assert (len(c3.even_gens), len(c3.odd_gens)) == (10, 10)


def test_chain_basis_index_is_consistent():
    c2 = ChainBasis2.for_dim(GradedDim(2, 2))
    assert c2.index[(0, 1)] == (0, 0)
    assert c2.index[(2, 2)][0] == 0
    assert c2.index[(0, 3)][0] == 1


@pytest.mark.parametrize("m,n,expected", [
    (0, 0, 0), (1, 0, 0), (2, 0, 1), (0, 1, 1), (0, 2, 3), (1, 1, 2), (2, 1, 4), (3, 2, 12),
])
def test_abelian_multiplier(m, n, expected):
    assert multiplier_dim(abelian(m, n)).total == expected


@pytest.mark.parametrize("m,n,total,even,odd", [
    (1, 0, 2, 2, 0),
    (2, 0, 5, 5, 0),
    (0, 1, 0, 0, 0),
    (0, 2, 2, 2, 0),
    (1, 1, 3, 1, 2),
])
def test_heisenberg_multiplier(m, n, total, even, odd):
    M = multiplier_dim(heisenberg(m, n))
    assert (M.total, M.even, M.odd) == (total, even, odd)
    assert M.graded == GradedDim(even, odd)


def test_multiplier_bookkeeping(h11):
    M = multiplier_dim(h11)
    assert M.total == M.dim_ker_d2 - M.rank_d3


def test_non_nilpotent_multiplier(affine_line):
    assert multiplier_dim(affine_line).total == 0


def test_direct_sum_of_two_odd_heisenbergs():
    assert multiplier_dim(direct_sum(heisenberg(1, 1), heisenberg(1, 1))).total == 15


def d2_after_d3_vanishes(L) -> bool:
    d2, d3 = d2_matrix(L), d3_matrix(L)
    return d3.even.matmul(d2.even).is_zero and d3.odd.matmul(d2.odd).is_zero


@pytest.mark.parametrize("L", [heisenberg(2, 1), heisenberg(0, 3), abelian(2, 2),
                               stem_cover_heisenberg(1, 0).algebra, stem_cover_heisenberg(1, 1).algebra],
                         ids=str)
def test_boundary_of_boundary_on_models(L):
    assert d2_after_d3_vanishes(L)


def test_boundary_of_boundary_on_random_corpus():
    for instance in random_instances(seed=5, count=50):
        assert d2_after_d3_vanishes(instance.build()), instance


def test_multiplier_requires_valid_algebra(broken_cover):
    with pytest.raises(InvalidAlgebraError):
        multiplier_dim(broken_cover)


def test_boundary_leaving_its_parity_block_is_rejected(h11, monkeypatch):
    # (0, 3) is a mixed pair, so it sits in the odd block while (0, 1, 2) is an even triple
    monkeypatch.setattr(homology, "_boundary3", lambda L, a, b, c: {(0, 3): Fraction(1)})
    with pytest.raises(StructureError, match="parity block"):
        d3_matrix(h11)
