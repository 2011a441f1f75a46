"""Seeded corpus generation: random 2-step nilpotent algebras and the default suite description"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import asdict, dataclass
from typing import Sequence

from config.settings import (
    COEFFICIENT_POOL,
    DEFAULT_RANDOM_COUNT,
    DEFAULT_SEED,
    RANDOM_MAX_TOTAL_DIM,
    SUITE_ABELIAN_MAX,
    SUITE_COVER_CHECKS_MAX,
    SUITE_COVER_MAX,
    SUITE_DIRECT_SUM_ABELIAN_MAX,
    SUITE_DIRECT_SUM_HEISENBERG,
    SUITE_EQUALITY_H01,
    SUITE_EQUALITY_H10,
    SUITE_HEISENBERG_MAX,
)
from src.core.superalgebra import GradedDim, SuperAlgebra, require_valid

logger = logging.getLogger(__name__)


def random_nilpotent(seed: int, v_dim: GradedDim, w_dim: GradedDim,
                     pool: Sequence[int] = COEFFICIENT_POOL) -> SuperAlgebra:
    """2-step nilpotent algebra on V ⊕ W with W central and [V, V] ⊆ W

    Even basis is V_0 then W_0, odd basis V_1 then W_1. Brackets of even pairs
    and odd pairs land in W_0, mixed pairs in W_1; coefficients are drawn from
    `pool` in canonical pair order, so the algebra is a function of the seed.
    """
    rng = random.Random(seed)
    dim = v_dim + w_dim
    m = dim.even
    v_indices = list(range(v_dim.even)) + list(range(m, m + v_dim.odd))
    w_even = range(v_dim.even, m)
    w_odd = range(m + v_dim.odd, dim.total)

    table = {}
    for i, j in itertools.combinations_with_replacement(v_indices, 2):
        if i == j and dim.parity(i) == 0:
            continue
        targets = w_odd if dim.parity(i) != dim.parity(j) else w_even
        if not targets:
            continue
        vec = [0] * dim.total
        for t in targets:
            vec[t] = rng.choice(pool)
        table[(i, j)] = vec
    labels = (tuple(f"v{i + 1}" for i in range(v_dim.even)) + tuple(f"w{i + 1}" for i in range(w_dim.even))
              + tuple(f"u{i + 1}" for i in range(v_dim.odd)) + tuple(f"g{i + 1}" for i in range(w_dim.odd)))
    L = SuperAlgebra(dim, table, labels)
    require_valid(L)
    return L


@dataclass(frozen=True)
class RandomInstance:
    name: str
    seed: int
    v_dim: GradedDim
    w_dim: GradedDim

    def build(self, pool: Sequence[int] = COEFFICIENT_POOL) -> SuperAlgebra:
        return random_nilpotent(self.seed, self.v_dim, self.w_dim, pool)


def random_instances(seed: int, count: int, max_total: int = RANDOM_MAX_TOTAL_DIM) -> list[RandomInstance]:
    """Draw graded dimensions and per-instance seeds from one master generator"""
    if max_total < 2:
        raise ValueError(f"random algebras need max_total >= 2 (one V and one W vector), got {max_total}")
    rng = random.Random(seed)
    out = []
    for k in range(count):
        v_total = rng.randint(1, max_total - 1)
        w_total = rng.randint(1, max_total - v_total)
        v_even = rng.randint(0, v_total)
        w_even = rng.randint(0, w_total)
        instance_seed = rng.randrange(2 ** 32)
        out.append(RandomInstance(f"R{k}", instance_seed,
                                  GradedDim(v_even, v_total - v_even), GradedDim(w_even, w_total - w_even)))
    return out


@dataclass(frozen=True)
class CorpusSpec:
    seed: int = DEFAULT_SEED
    count: int = DEFAULT_RANDOM_COUNT
    random_max_total: int = RANDOM_MAX_TOTAL_DIM
    pool: tuple[int, ...] = COEFFICIENT_POOL
    heisenberg_max: int = SUITE_HEISENBERG_MAX
    abelian_max: int = SUITE_ABELIAN_MAX
    cover_max: int = SUITE_COVER_MAX
    cover_checks_max: int = SUITE_COVER_CHECKS_MAX
    direct_sum_abelian_max: int = SUITE_DIRECT_SUM_ABELIAN_MAX
    direct_sum_heisenberg: tuple[tuple[int, int], ...] = SUITE_DIRECT_SUM_HEISENBERG
    equality_h10: tuple[tuple[int, int], ...] = SUITE_EQUALITY_H10
    equality_h01: tuple[tuple[int, int], ...] = SUITE_EQUALITY_H01

    @classmethod
    def empty(cls) -> CorpusSpec:
        return cls(count=0, heisenberg_max=0, abelian_max=-1, cover_max=0, cover_checks_max=0,
                   direct_sum_abelian_max=-1, direct_sum_heisenberg=(), equality_h10=(), equality_h01=())

    @classmethod
    def from_dict(cls, data: dict) -> CorpusSpec:
        tuples = {"pool", "direct_sum_heisenberg", "equality_h10", "equality_h01"}
        fixed = {k: (tuple(tuple(x) if isinstance(x, list) else x for x in v) if k in tuples else v)
                 for k, v in data.items()}
        return cls(**fixed)

    def to_dict(self) -> dict:
        return asdict(self)
