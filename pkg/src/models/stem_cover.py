"""Explicit stem covers K(m,n) of the special Heisenberg superalgebras

Key features:
- Even basis x_1..x_2m, zeta, then the even part of W; odd basis y_1..y_n, then gamma_{k,j}
- W is central and spanned by brackets, so K/W recovers H(m,n) exactly
- (1,0) uses the classical 5-dimensional cover; (0,1) is refused
"""
from __future__ import annotations

import itertools
import logging
from typing import NamedTuple

from src.core.errors import UnsupportedModelError
from src.core.linalg import ONE, ZERO
from src.core.superalgebra import GradedDim, GradedSubspace, SuperAlgebra

logger = logging.getLogger(__name__)

REFUSED_COVER_MESSAGE = (
    "no stem cover is constructed for H(0,1): a bracket [y, zeta] = eta != 0 violates graded Jacobi at (y, y, y) "
    "(the expansion gives -3*eta), and the computed multiplier of H(0,1) is 0, not the stated value 2"
)


class StemCover(NamedTuple):
    algebra: SuperAlgebra
    kernel: GradedSubspace


def cover_is_available(m: int, n: int) -> bool:
    return m >= 0 and n >= 0 and (m + n >= 2 or (m, n) == (1, 0))


def _classical_cover() -> StemCover:
    # x1, x2, zeta, eta1, eta2
    dim = GradedDim(5, 0)

    def unit(k):
        return tuple(ONE if t == k else ZERO for t in range(5))

    table = {(0, 1): unit(2), (0, 2): unit(3), (1, 2): unit(4)}
    K = SuperAlgebra(dim, table, ("x1", "x2", "zeta", "eta1", "eta2"))
    return StemCover(K, GradedSubspace.spanned_by_indices(dim, [3, 4]))


def stem_cover_heisenberg(m: int, n: int) -> StemCover:
    """Cover K of H(m,n) together with the kernel W of K -> H(m,n)"""
    if (m, n) == (0, 1):
        raise UnsupportedModelError(REFUSED_COVER_MESSAGE)
    if not cover_is_available(m, n):
        raise UnsupportedModelError(f"stem cover needs m + n >= 2 or (m, n) = (1, 0), got ({m}, {n})")
    if (m, n) == (1, 0):
        return _classical_cover()

    even_labels = [f"x{i + 1}" for i in range(2 * m)] + ["zeta"]
    odd_labels = [f"y{j + 1}" for j in range(n)]
    # defining index -> label of each generator of W
    w_hat = {i: f"w_{i + 1}" for i in range(1, m)}
    # with m = 0 zeta is [y_1, y_1], so v_hat_1 is absorbed
    v_hat = {j: f"v_{j + 1}" for j in range(n) if m or j}
    diagonal = {(i, m + i) for i in range(m)}
    w_pairs = {(k, l): f"w_{k + 1}_{l + 1}" for k, l in itertools.combinations(range(2 * m), 2) if (k, l) not in diagonal}
    v_pairs = {(k, l): f"v_{k + 1}_{l + 1}" for k, l in itertools.combinations(range(n), 2)}
    gammas = {(k, j): f"gamma_{k + 1}_{j + 1}" for k in range(2 * m) for j in range(n)}

    w_even = list(w_hat.values()) + list(v_hat.values()) + list(w_pairs.values()) + list(v_pairs.values())
    w_odd = list(gammas.values())
    m_k = len(even_labels) + len(w_even)
    dim = GradedDim(m_k, len(odd_labels) + len(w_odd))
    labels = tuple(even_labels + w_even + odd_labels + w_odd)
    position = {name: i for i, name in enumerate(labels)}

    def vec(*names):
        out = [ZERO] * dim.total
        for name in names:
            out[position[name]] += ONE
        return tuple(out)

    def x(k):
        return position[f"x{k + 1}"]

    def y(j):
        return position[f"y{j + 1}"]

    table = {}
    for i in range(m):
        table[(x(i), x(m + i))] = vec("zeta", w_hat[i]) if i in w_hat else vec("zeta")
    for j in range(n):
        table[(y(j), y(j))] = vec("zeta", v_hat[j]) if j in v_hat else vec("zeta")
    for (k, l), name in w_pairs.items():
        table[(x(k), x(l))] = vec(name)
    for (k, l), name in v_pairs.items():
        table[(y(k), y(l))] = vec(name)
    for (k, j), name in gammas.items():
        table[(x(k), y(j))] = vec(name)

    K = SuperAlgebra(dim, table, labels)
    W = GradedSubspace.spanned_by_indices(dim, [position[name] for name in w_even + w_odd])
    logger.debug(f"stem cover of H({m},{n}): K has dimension {dim}, W has dimension {W.dim}")
    return StemCover(K, W)
