"""Second homology of the super Chevalley-Eilenberg complex with trivial coefficients

The multiplier is computed per parity block as dim ker d2 - rank d3, where
C2 is the super exterior square (antisymmetric on even pairs, symmetric on
odd pairs) and C3 the super exterior cube on canonical index tuples.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from src.core import linalg
from src.core.errors import StructureError
from src.core.linalg import ZERO, Matrix
from src.core.superalgebra import GradedDim, SuperAlgebra, bracket, require_valid

logger = logging.getLogger(__name__)


def _even_pairs(dim: GradedDim):
    return list(itertools.combinations(range(dim.even), 2))


def _odd_pairs(dim: GradedDim):
    return list(itertools.combinations_with_replacement(range(dim.even, dim.total), 2))


def _mixed_pairs(dim: GradedDim):
    return list(itertools.product(range(dim.even), range(dim.even, dim.total)))


@dataclass(frozen=True)
class ChainBasis2:
    even_gens: tuple[tuple[int, int], ...]
    odd_gens: tuple[tuple[int, int], ...]

    @classmethod
    def for_dim(cls, dim: GradedDim) -> ChainBasis2:
        return cls(tuple(_even_pairs(dim) + _odd_pairs(dim)), tuple(_mixed_pairs(dim)))

    @cached_property
    def index(self) -> dict[tuple[int, int], tuple[int, int]]:
        """pair -> (parity block, row)"""
        out = {g: (0, r) for r, g in enumerate(self.even_gens)}
        out.update({g: (1, r) for r, g in enumerate(self.odd_gens)})
        return out

    @property
    def total(self) -> int:
        return len(self.even_gens) + len(self.odd_gens)


@dataclass(frozen=True)
class ChainBasis3:
    even_gens: tuple[tuple[int, int, int], ...]
    odd_gens: tuple[tuple[int, int, int], ...]

    @classmethod
    def for_dim(cls, dim: GradedDim) -> ChainBasis3:
        evens, odds = range(dim.even), range(dim.even, dim.total)
        even_gens = list(itertools.combinations(evens, 3))
        even_gens += [(i,) + jk for i in evens for jk in itertools.combinations_with_replacement(odds, 2)]
        odd_gens = [ij + (k,) for ij in itertools.combinations(evens, 2) for k in odds]
        odd_gens += list(itertools.combinations_with_replacement(odds, 3))
        return cls(tuple(even_gens), tuple(odd_gens))


def wedge(L: SuperAlgebra, u: Sequence[Fraction], c: int) -> dict[tuple[int, int], Fraction]:
    """u ∧ e_c over canonical C2 generators, using u∧v = -(-1)^{|u||v|} v∧u"""
    out: dict[tuple[int, int], Fraction] = {}
    pc = L.parity(c)
    for t, coeff in enumerate(u):
        if not coeff:
            continue
        if t == c:
            if not pc:
                continue
            key, sign = (t, t), 1
        elif t < c:
            key, sign = (t, c), 1
        else:
            key, sign = (c, t), (1 if L.parity(t) and pc else -1)
        out[key] = out.get(key, ZERO) + sign * coeff
    return out


@dataclass(frozen=True)
class BoundaryBlocks:
    """A boundary map split into its even and odd parity blocks"""
    even: Matrix
    odd: Matrix


def d2_matrix(L: SuperAlgebra) -> BoundaryBlocks:
    """Rows are C2 generators (i, j), columns algebra coordinates of [e_i, e_j] in the same parity"""
    require_valid(L)
    m = L.dim.even
    basis = ChainBasis2.for_dim(L.dim)

    def block(gens, lo, hi):
        rows = []
        for i, j in gens:
            image = bracket(L, L.basis_vector(i), L.basis_vector(j))
            rows.append(image[lo:hi])
        return Matrix.from_rows(rows, hi - lo) if rows else Matrix.zeros(0, hi - lo)

    return BoundaryBlocks(block(basis.even_gens, 0, m), block(basis.odd_gens, m, L.dim.total))


def _boundary3(L: SuperAlgebra, a: int, b: int, c: int) -> dict[tuple[int, int], Fraction]:
    # [a,b]∧c - (-1)^{|b||c|}[a,c]∧b + (-1)^{|a|(|b|+|c|)}[b,c]∧a
    pa, pb, pc = L.parity(a), L.parity(b), L.parity(c)
    ea, eb, ec = L.basis_vector(a), L.basis_vector(b), L.basis_vector(c)
    terms = (
        (1, bracket(L, ea, eb), c),
        (-((-1) ** (pb * pc)), bracket(L, ea, ec), b),
        ((-1) ** (pa * (pb + pc)), bracket(L, eb, ec), a),
    )
    out: dict[tuple[int, int], Fraction] = {}
    for sign, u, last in terms:
        for key, coeff in wedge(L, u, last).items():
            out[key] = out.get(key, ZERO) + sign * coeff
    return out


def d3_matrix(L: SuperAlgebra) -> BoundaryBlocks:
    """Rows are canonical C3 generators, columns C2 generators of the same parity"""
    require_valid(L)
    c2 = ChainBasis2.for_dim(L.dim)
    c3 = ChainBasis3.for_dim(L.dim)

    def block(gens, parity, width):
        rows = []
        for triple in gens:
            row = [ZERO] * width
            for key, coeff in _boundary3(L, *triple).items():
                if not coeff:
                    continue
                block_parity, r = c2.index[key]
                if block_parity != parity:
                    raise StructureError(f"boundary of {triple} left its parity block")
                row[r] += coeff
            rows.append(row)
        return Matrix.from_rows(rows, width) if rows else Matrix.zeros(0, width)

    return BoundaryBlocks(block(c3.even_gens, 0, len(c2.even_gens)),
                          block(c3.odd_gens, 1, len(c2.odd_gens)))


@dataclass(frozen=True)
class MultiplierResult:
    total: int
    even: int
    odd: int
    dim_ker_d2: int
    rank_d3: int

    @property
    def graded(self) -> GradedDim:
        return GradedDim(self.even, self.odd)


@lru_cache(maxsize=512)
def multiplier_dim(L: SuperAlgebra) -> MultiplierResult:
    """dim M(L) = dim H_2(L), block by block"""
    d2 = d2_matrix(L)
    d3 = d3_matrix(L)
    blocks = []
    for D2, D3 in ((d2.even, d3.even), (d2.odd, d3.odd)):
        ker = D2.rows - linalg.rank(D2)
        im = linalg.rank(D3)
        blocks.append((ker, im))
    (ker_e, im_e), (ker_o, im_o) = blocks
    result = MultiplierResult(
        total=(ker_e - im_e) + (ker_o - im_o),
        even=ker_e - im_e,
        odd=ker_o - im_o,
        dim_ker_d2=ker_e + ker_o,
        rank_d3=im_e + im_o,
    )
    logger.debug(f"multiplier of {L.dim}: {result}")
    return result
