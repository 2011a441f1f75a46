"""Lie superalgebras given by structure constants on a homogeneous basis

Basis convention: indices 0..m-1 are even, m..m+n-1 are odd. Only canonical
pairs are stored: (i, j) with i < j, plus (i, i) for odd i. Brackets of the
remaining pairs follow from graded skew-symmetry.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Mapping, NamedTuple, Sequence

from src.core import linalg
from src.core.errors import (
    DimensionMismatchError,
    InvalidAlgebraError,
    NotAnIdealError,
    NotGradedError,
    StructureError,
)
from src.core.linalg import ONE, ZERO, Matrix

logger = logging.getLogger(__name__)

Vector = tuple[Fraction, ...]
Pair = tuple[int, int]


@dataclass(frozen=True)
class GradedDim:
    even: int
    odd: int

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError(f"graded dimension must be non-negative, got ({self.even}|{self.odd})")

    @property
    def total(self) -> int:
        return self.even + self.odd

    def parity(self, i: int) -> int:
        return 0 if i < self.even else 1

    def __add__(self, other: GradedDim) -> GradedDim:
        return GradedDim(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: GradedDim) -> GradedDim:
        return GradedDim(self.even - other.even, self.odd - other.odd)

    def __le__(self, other: GradedDim) -> bool:
        return self.even <= other.even and self.odd <= other.odd

    def __str__(self):
        return f"({self.even}|{self.odd})"


def _normalize_table(dim: GradedDim, table) -> tuple[tuple[Pair, Vector], ...]:
    n = dim.total
    items = table.items() if isinstance(table, Mapping) else table
    out = {}
    for key, coeffs in items:
        i, j = (int(k) for k in key)
        if not (0 <= i < n and 0 <= j < n):
            raise StructureError(f"pair {(i, j)} out of range for dimension {dim}")
        if i > j or (i == j and dim.parity(i) == 0):
            raise StructureError(f"pair {(i, j)} is not canonical (need i < j, or i == j odd)")
        vec = tuple(linalg.to_rational(c) for c in coeffs)
        if len(vec) != n:
            raise StructureError(f"coefficient vector of pair {(i, j)} has length {len(vec)}, expected {n}")
        if (i, j) in out:
            raise StructureError(f"pair {(i, j)} given twice")
        if any(vec):
            out[(i, j)] = vec
    return tuple(sorted(out.items()))


@dataclass(frozen=True)
class SuperAlgebra:
    dim: GradedDim
    sc: tuple[tuple[Pair, Vector], ...] = ()
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "sc", _normalize_table(self.dim, self.sc))
        labels = tuple(self.labels)
        if labels and len(labels) != self.dim.total:
            raise StructureError(f"{len(labels)} labels for {self.dim.total} basis vectors")
        if len(set(labels)) != len(labels):
            raise StructureError(f"labels must be distinct, got {labels}")
        object.__setattr__(self, "labels", labels)

    @cached_property
    def table(self) -> dict[Pair, Vector]:
        return dict(self.sc)

    @cached_property
    def _sparse(self) -> dict[Pair, tuple[tuple[int, Fraction], ...]]:
        return {key: tuple((t, c) for t, c in enumerate(vec) if c) for key, vec in self.sc}

    def parity(self, i: int) -> int:
        return self.dim.parity(i)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i}"

    def basis_vector(self, i: int) -> Vector:
        return tuple(ONE if k == i else ZERO for k in range(self.dim.total))

    def canonical(self, i: int, j: int) -> tuple[int, Pair | None]:
        """Sign and canonical pair with [e_i, e_j] = sign * [e_a, e_b]"""
        if i < j:
            return 1, (i, j)
        if i > j:
            return (1 if self.parity(i) and self.parity(j) else -1), (j, i)
        if self.parity(i):
            return 1, (i, i)
        return 0, None

    def basis_bracket_terms(self, i: int, j: int):
        sign, key = self.canonical(i, j)
        if not sign:
            return ()
        terms = self._sparse.get(key, ())
        return terms if sign == 1 else tuple((t, -c) for t, c in terms)

    def __str__(self):
        return f"SuperAlgebra{self.dim} with {len(self.sc)} nonzero brackets"


def _check_length(L: SuperAlgebra, *vectors: Sequence[Fraction]):
    for v in vectors:
        if len(v) != L.dim.total:
            raise DimensionMismatchError(f"vector of length {len(v)} in an algebra of dimension {L.dim}")


def bracket(L: SuperAlgebra, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    """Bilinear extension of the structure constants"""
    _check_length(L, u, v)
    out = [ZERO] * L.dim.total
    v_terms = [(j, vj) for j, vj in enumerate(v) if vj]
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, vj in v_terms:
            for t, c in L.basis_bracket_terms(i, j):
                out[t] += ui * vj * c
    return tuple(out)


def _ad(L: SuperAlgebra, i: int, terms) -> dict[int, Fraction]:
    """[e_i, v] for v given as sparse (index, coefficient) terms"""
    out: dict[int, Fraction] = {}
    for t, c in terms:
        for s, d in L.basis_bracket_terms(i, t):
            out[s] = out.get(s, ZERO) + c * d
    return out


def _is_homogeneous(L: SuperAlgebra, v: Sequence[Fraction]) -> int | None:
    """Parity of a nonzero homogeneous vector; None if zero or mixed"""
    has_even = any(v[:L.dim.even])
    has_odd = any(v[L.dim.even:])
    if has_even and not has_odd:
        return 0
    if has_odd and not has_even:
        return 1
    return None


# ---------------------------------------------------------------- subspaces


@dataclass(frozen=True)
class GradedSubspace:
    ambient: GradedDim
    even_basis: Matrix
    odd_basis: Matrix

    def __post_init__(self):
        if self.even_basis.cols != self.ambient.even or self.odd_basis.cols != self.ambient.odd:
            raise DimensionMismatchError(
                f"basis columns ({self.even_basis.cols}|{self.odd_basis.cols}) do not match ambient {self.ambient}"
            )
        object.__setattr__(self, "even_basis", linalg.row_basis(self.even_basis))
        object.__setattr__(self, "odd_basis", linalg.row_basis(self.odd_basis))

    @classmethod
    def zero(cls, ambient: GradedDim) -> GradedSubspace:
        return cls(ambient, Matrix.zeros(0, ambient.even), Matrix.zeros(0, ambient.odd))

    @classmethod
    def full(cls, ambient: GradedDim) -> GradedSubspace:
        return cls(ambient, Matrix.identity(ambient.even), Matrix.identity(ambient.odd))

    @classmethod
    def spanned_by_indices(cls, ambient: GradedDim, indices: Sequence[int]) -> GradedSubspace:
        vectors = [tuple(ONE if k == i else ZERO for k in range(ambient.total)) for i in indices]
        return cls.from_vectors(ambient, vectors)

    @classmethod
    def from_vectors(cls, ambient: GradedDim, vectors: Sequence[Sequence[Fraction]]) -> GradedSubspace:
        """Span of homogeneous vectors given in ambient coordinates"""
        m = ambient.even
        even_rows, odd_rows = [], []
        for v in vectors:
            if len(v) != ambient.total:
                raise DimensionMismatchError(f"vector of length {len(v)} in ambient {ambient}")
            has_even, has_odd = any(v[:m]), any(v[m:])
            if has_even and has_odd:
                raise NotGradedError(f"vector {tuple(str(x) for x in v)} is not homogeneous")
            if has_even:
                even_rows.append(tuple(v[:m]))
            elif has_odd:
                odd_rows.append(tuple(v[m:]))
        return cls(ambient,
                   Matrix.from_rows(even_rows, m) if even_rows else Matrix.zeros(0, m),
                   Matrix.from_rows(odd_rows, ambient.odd) if odd_rows else Matrix.zeros(0, ambient.odd))

    @property
    def dim(self) -> GradedDim:
        return GradedDim(self.even_basis.rows, self.odd_basis.rows)

    @property
    def is_zero(self) -> bool:
        return self.dim.total == 0

    def vectors(self) -> list[Vector]:
        """Basis vectors in ambient coordinates, even ones first"""
        pad_odd = (ZERO,) * self.ambient.odd
        pad_even = (ZERO,) * self.ambient.even
        return ([r + pad_odd for r in self.even_basis.to_rows()]
                + [pad_even + r for r in self.odd_basis.to_rows()])

    def _check(self, other: GradedSubspace):
        if self.ambient != other.ambient:
            raise DimensionMismatchError(f"subspaces of {self.ambient} and {other.ambient}")

    def contains(self, other: GradedSubspace) -> bool:
        self._check(other)
        return (linalg.contains(self.even_basis, other.even_basis)
                and linalg.contains(self.odd_basis, other.odd_basis))

    def intersect(self, other: GradedSubspace) -> GradedSubspace:
        self._check(other)
        return GradedSubspace(self.ambient,
                              linalg.intersect(self.even_basis, other.even_basis),
                              linalg.intersect(self.odd_basis, other.odd_basis))

    def __add__(self, other: GradedSubspace) -> GradedSubspace:
        self._check(other)
        return GradedSubspace(self.ambient,
                              linalg.subspace_sum(self.even_basis, other.even_basis),
                              linalg.subspace_sum(self.odd_basis, other.odd_basis))


def bracket_span(L: SuperAlgebra, I: GradedSubspace, J: GradedSubspace) -> GradedSubspace:
    """Span of all [u, v] with u, v running over the homogeneous bases of I and J"""
    if I.ambient != L.dim or J.ambient != L.dim:
        raise DimensionMismatchError(f"subspaces of {I.ambient}, {J.ambient} in an algebra of dimension {L.dim}")
    # keyed by the vector scaled to a leading 1, so repeated directions are reduced once
    products = {}
    for u in I.vectors():
        for v in J.vectors():
            w = bracket(L, u, v)
            lead = next((c for c in w if c), None)
            if lead is not None:
                products.setdefault(tuple(c / lead for c in w), w)
    return GradedSubspace.from_vectors(L.dim, list(products.values()))


# --------------------------------------------------------------- validation


@dataclass(frozen=True)
class StructuralViolation:
    pair: Pair
    index: int
    value: Fraction

    def describe(self, L: SuperAlgebra) -> str:
        i, j = self.pair
        return (f"[{L.label(i)},{L.label(j)}] has coefficient {self.value} on {L.label(self.index)}, "
                f"which has the wrong parity")


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple[int, int, int]
    value: Vector

    def describe(self, L: SuperAlgebra) -> str:
        names = ",".join(L.label(i) for i in self.triple)
        terms = " + ".join(f"{c}*{L.label(t)}" for t, c in enumerate(self.value) if c)
        return f"Jacobi({names}) = {terms}"


@dataclass(frozen=True)
class ValidationReport:
    structural: tuple[StructuralViolation, ...] = ()
    jacobi: tuple[JacobiViolation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.structural and not self.jacobi


def jacobi_expression(L: SuperAlgebra, i: int, j: int, k: int) -> Vector:
    """(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] on basis vectors"""
    px, py, pz = L.parity(i), L.parity(j), L.parity(k)
    total = [ZERO] * L.dim.total
    for sign, a, b, c in (((-1) ** (px * pz), i, j, k),
                          ((-1) ** (py * px), j, k, i),
                          ((-1) ** (pz * py), k, i, j)):
        for t, value in _ad(L, a, L.basis_bracket_terms(b, c)).items():
            total[t] += sign * value
    return tuple(total)


@lru_cache(maxsize=256)
def validate(L: SuperAlgebra) -> ValidationReport:
    """Grading check of every stored bracket, then exhaustive graded Jacobi over i <= j <= k"""
    structural = []
    for (i, j), vec in L.sc:
        target = (L.parity(i) + L.parity(j)) % 2
        for t, c in enumerate(vec):
            if c and L.parity(t) != target:
                structural.append(StructuralViolation((i, j), t, c))
    if structural:
        logger.debug(f"{len(structural)} grading violations, skipping Jacobi")
        return ValidationReport(structural=tuple(structural))

    violations = []
    for i, j, k in itertools.combinations_with_replacement(range(L.dim.total), 3):
        value = jacobi_expression(L, i, j, k)
        if any(value):
            violations.append(JacobiViolation((i, j, k), value))
    logger.debug(f"Jacobi check of {L}: {len(violations)} violations")
    return ValidationReport(jacobi=tuple(violations))


def require_valid(L: SuperAlgebra):
    report = validate(L)
    if not report.ok:
        first = (report.structural or report.jacobi)[0]
        raise InvalidAlgebraError(f"not a Lie superalgebra: {first.describe(L)}", report)


# ---------------------------------------------------------------- quotients


@dataclass(frozen=True)
class Projection:
    """Coordinate map L -> L/I onto the standard complement of I"""
    subspace: GradedSubspace
    even_pivots: tuple[int, ...]
    odd_pivots: tuple[int, ...]
    kept: tuple[int, ...]

    def apply(self, vector: Sequence[Fraction]) -> Vector:
        m = self.subspace.ambient.even
        even = linalg.reduce_modulo(self.subspace.even_basis, self.even_pivots, vector[:m])
        odd = linalg.reduce_modulo(self.subspace.odd_basis, self.odd_pivots, vector[m:])
        full = even + odd
        return tuple(full[i] for i in self.kept)


class Quotient(NamedTuple):
    algebra: SuperAlgebra
    projection: Projection


def is_ideal(L: SuperAlgebra, I: GradedSubspace) -> bool:
    return I.contains(bracket_span(L, GradedSubspace.full(L.dim), I))


def quotient(L: SuperAlgebra, I: GradedSubspace) -> Quotient:
    """L/I on the complement spanned by the non-pivot standard basis vectors of I, per parity"""
    if I.ambient != L.dim:
        raise DimensionMismatchError(f"subspace of {I.ambient} in an algebra of dimension {L.dim}")
    if not is_ideal(L, I):
        raise NotAnIdealError(f"subspace of dimension {I.dim} is not an ideal")
    m = L.dim.even
    _, _, even_pivots = linalg.rref(I.even_basis)
    _, _, odd_pivots = linalg.rref(I.odd_basis)
    kept_even = tuple(c for c in range(m) if c not in even_pivots)
    kept_odd = tuple(m + c for c in range(L.dim.odd) if c not in odd_pivots)
    projection = Projection(I, even_pivots, odd_pivots, kept_even + kept_odd)

    kept = projection.kept
    table = {}
    for a, b in itertools.combinations_with_replacement(range(len(kept)), 2):
        i, j = kept[a], kept[b]
        if a == b and L.parity(i) == 0:
            continue
        image = projection.apply(bracket(L, L.basis_vector(i), L.basis_vector(j)))
        if any(image):
            table[(a, b)] = image
    labels = tuple(L.labels[i] for i in kept) if L.labels else ()
    Q = SuperAlgebra(GradedDim(len(kept_even), len(kept_odd)), table, labels)
    logger.debug(f"quotient of {L.dim} by {I.dim} has dimension {Q.dim}")
    return Quotient(Q, projection)


def change_basis(L: SuperAlgebra, P: Matrix) -> SuperAlgebra:
    """Structure constants in the homogeneous basis given by the rows of P"""
    n, m = L.dim.total, L.dim.even
    if P.rows != n or P.cols != n:
        raise DimensionMismatchError(f"change of basis must be {n}x{n}, got {P.rows}x{P.cols}")
    for i in range(n):
        if _is_homogeneous(L, P.row(i)) != L.parity(i):
            raise NotGradedError(f"row {i} of the change of basis does not preserve parity")
    P_inv = linalg.inverse(P)
    table = {}
    for a, b in itertools.combinations_with_replacement(range(n), 2):
        if a == b and a < m:
            continue
        image = P_inv.vecmul(bracket(L, P.row(a), P.row(b)))
        if any(image):
            table[(a, b)] = image
    return SuperAlgebra(L.dim, table)
