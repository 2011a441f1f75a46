"""Structural invariants: derived subalgebra, center, lower central series, nilpotency"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from src.core import linalg
from src.core.errors import SuperalgebraError
from src.core.linalg import Matrix
from src.core.superalgebra import (
    GradedDim,
    GradedSubspace,
    SuperAlgebra,
    bracket_span,
    require_valid,
)

logger = logging.getLogger(__name__)


def derived(L: SuperAlgebra) -> GradedSubspace:
    """L' = [L, L]"""
    require_valid(L)
    full = GradedSubspace.full(L.dim)
    return bracket_span(L, full, full)


def _adjoint_kernel(L: SuperAlgebra, indices: range) -> Matrix:
    # Columns are the coordinates of v on `indices`; one row per (e_k, output coordinate)
    rows = []
    for k in range(L.dim.total):
        images = {i: dict(L.basis_bracket_terms(i, k)) for i in indices}
        for t in range(L.dim.total):
            row = [images[i].get(t, linalg.ZERO) for i in indices]
            if any(row):
                rows.append(row)
    if not rows:
        return Matrix.identity(len(indices))
    return linalg.kernel_basis(Matrix.from_rows(rows, len(indices)))


def center(L: SuperAlgebra) -> GradedSubspace:
    """Z(L), the kernel of v -> ([v, e_k])_k split by parity"""
    require_valid(L)
    m = L.dim.even
    return GradedSubspace(L.dim,
                          _adjoint_kernel(L, range(m)),
                          _adjoint_kernel(L, range(m, L.dim.total)))


def _even_part(L: SuperAlgebra) -> GradedSubspace:
    return GradedSubspace(L.dim, Matrix.identity(L.dim.even), Matrix.zeros(0, L.dim.odd))


def _odd_part(L: SuperAlgebra) -> GradedSubspace:
    return GradedSubspace(L.dim, Matrix.zeros(0, L.dim.even), Matrix.identity(L.dim.odd))


def _descend(L: SuperAlgebra, acting: GradedSubspace, start: GradedSubspace) -> list[GradedSubspace]:
    """start, [acting, start], [acting, [acting, start]], ... up to stabilization"""
    series = [start]
    while not series[-1].is_zero:
        nxt = bracket_span(L, acting, series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
    return series


@dataclass(frozen=True)
class LowerCentralSeries:
    whole: tuple[GradedSubspace, ...]
    even: tuple[GradedSubspace, ...]
    odd: tuple[GradedSubspace, ...]

    @property
    def reaches_zero(self) -> bool:
        return self.whole[-1].is_zero

    @property
    def split_reaches_zero(self) -> bool:
        return self.even[-1].is_zero and self.odd[-1].is_zero


def lower_central_series(L: SuperAlgebra) -> LowerCentralSeries:
    """C^k(L) = [L, C^{k-1}(L)] and the split sequences driven by L_0"""
    require_valid(L)
    even_part = _even_part(L)
    series = LowerCentralSeries(
        whole=tuple(_descend(L, GradedSubspace.full(L.dim), GradedSubspace.full(L.dim))),
        even=tuple(_descend(L, even_part, even_part)),
        odd=tuple(_descend(L, even_part, _odd_part(L))),
    )
    logger.debug(f"lower central series of {L.dim}: {[str(C.dim) for C in series.whole]}")
    return series


def _first_zero(series: tuple[GradedSubspace, ...]) -> int:
    # least k >= 1 with C^k = 0
    return max(1, len(series) - 1)


@dataclass(frozen=True)
class Nilpotency:
    nilpotent: bool
    p: int | None = None
    q: int | None = None
    nilpotency_class: int | None = None


def is_nilpotent(L: SuperAlgebra) -> Nilpotency:
    series = lower_central_series(L)
    if series.reaches_zero != series.split_reaches_zero:
        logger.error(f"whole and split series disagree on nilpotency of {L}")
        raise SuperalgebraError(f"nilpotency criterion violated for {L}")
    if not series.reaches_zero:
        return Nilpotency(False)
    return Nilpotency(True, _first_zero(series.even), _first_zero(series.odd), len(series.whole) - 1)


@dataclass(frozen=True)
class StructureProfile:
    dim: GradedDim
    derived_dim: GradedDim
    center_dim: GradedDim
    nilpotent: bool
    nilpotency_class: int | None
    split_indices: tuple[int, int] | None


def profile(L: SuperAlgebra) -> StructureProfile:
    nil = is_nilpotent(L)
    return StructureProfile(
        dim=L.dim,
        derived_dim=derived(L).dim,
        center_dim=center(L).dim,
        nilpotent=nil.nilpotent,
        nilpotency_class=nil.nilpotency_class,
        split_indices=(nil.p, nil.q) if nil.nilpotent else None,
    )
