"""Exact rational dense linear algebra

Key features:
- Rational entries are `fractions.Fraction`, always stored reduced
- Row reduction is delegated to sympy's `DomainMatrix` over `QQ`
- Subspaces are represented by RREF row bases, so equal subspaces compare equal
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from src.core.errors import DimensionMismatchError, SingularMatrixError

logger = logging.getLogger(__name__)

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value) -> Fraction:
    """Coerce int, Fraction or a "p/q" string to an exact rational"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating-point values are not exact; pass an int, Fraction or 'p/q'")
    return Fraction(value)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"negative shape {self.rows}x{self.cols}")
        entries = tuple(to_rational(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries for a {self.rows}x{self.cols} matrix, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> Matrix:
        rows = [tuple(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer the column count of an empty row list")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatchError(f"row of length {len(r)} in a matrix with {cols} columns")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[tuple[Fraction, ...]]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def is_zero(self) -> bool:
        return not any(self.entries)

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows,
                      tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def vstack(self, other: Matrix) -> Matrix:
        if self.cols != other.cols:
            raise DimensionMismatchError(f"cannot stack {self.cols} columns on {other.cols} columns")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def hstack(self, other: Matrix) -> Matrix:
        if self.rows != other.rows:
            raise DimensionMismatchError(f"cannot join {self.rows} rows with {other.rows} rows")
        return Matrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)], self.cols + other.cols)

    def matmul(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        if self.rows == 0 or self.cols == 0 or other.cols == 0:
            return Matrix.zeros(self.rows, other.cols)
        return _from_domain(_to_domain(self).matmul(_to_domain(other)), self.rows, other.cols)

    def vecmul(self, vector: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Row vector times matrix"""
        if len(vector) != self.rows:
            raise DimensionMismatchError(f"vector of length {len(vector)} against {self.rows} rows")
        return Matrix(1, self.rows, tuple(vector)).matmul(self).entries


def _to_domain(M: Matrix) -> DomainMatrix:
    rows = [[QQ(x.numerator, x.denominator) for x in r] for r in M.to_rows()]
    return DomainMatrix(rows, (M.rows, M.cols), QQ)


def _from_domain(D: DomainMatrix, rows: int, cols: int) -> Matrix:
    entries = tuple(Fraction(int(x.numerator), int(x.denominator)) for r in D.to_list() for x in r)
    return Matrix(rows, cols, entries)


def rref(M: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form, rank and pivot columns of M"""
    if M.rows == 0 or M.cols == 0 or M.is_zero:
        return Matrix.zeros(M.rows, M.cols), 0, ()
    R, pivots = _to_domain(M).rref()
    pivots = tuple(int(p) for p in pivots)
    return _from_domain(R, M.rows, M.cols), len(pivots), pivots


def rank(M: Matrix) -> int:
    return rref(M)[1]


def row_basis(M: Matrix) -> Matrix:
    """RREF basis of the row space of M (zero rows dropped)"""
    R, r, _ = rref(M)
    return Matrix(r, M.cols, R.entries[:r * M.cols])


def kernel_basis(M: Matrix) -> Matrix:
    """RREF basis of {v : M v = 0}, one kernel vector per row"""
    if M.rows == 0 or M.is_zero:
        return Matrix.identity(M.cols)
    N = _to_domain(M).nullspace()
    count, cols = N.shape
    if count == 0:
        return Matrix.zeros(0, M.cols)
    return row_basis(_from_domain(N, count, cols))


def _check_ambient(A: Matrix, B: Matrix):
    if A.cols != B.cols:
        raise DimensionMismatchError(f"subspaces of {A.cols}- and {B.cols}-dimensional spaces")


def subspace_sum(A: Matrix, B: Matrix) -> Matrix:
    _check_ambient(A, B)
    return row_basis(A.vstack(B))


def intersect(A: Matrix, B: Matrix) -> Matrix:
    """RREF basis of rowspace(A) ∩ rowspace(B)

    Solves xA = yB through the kernel of the stacked system [A; -B]^T.
    """
    _check_ambient(A, B)
    A, B = row_basis(A), row_basis(B)
    if A.rows == 0 or B.rows == 0:
        return Matrix.zeros(0, A.cols)
    negB = Matrix(B.rows, B.cols, tuple(-x for x in B.entries))
    relations = kernel_basis(A.vstack(negB).transpose())
    vectors = [A.vecmul(rel[:A.rows]) for rel in relations.to_rows()]
    if not vectors:
        return Matrix.zeros(0, A.cols)
    return row_basis(Matrix.from_rows(vectors, A.cols))


def contains(A: Matrix, B: Matrix) -> bool:
    """Whether rowspace(B) ⊆ rowspace(A)"""
    _check_ambient(A, B)
    if B.rows == 0 or B.is_zero:
        return True
    return rank(A.vstack(B)) == rank(A)


def inverse(M: Matrix) -> Matrix:
    if M.rows != M.cols:
        raise DimensionMismatchError(f"cannot invert a {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return M
    try:
        D = _to_domain(M).inv()
    except DMNonInvertibleMatrixError as e:
        logger.debug(f"inverse: rank {rank(M)} < {n}")
        raise SingularMatrixError(f"matrix of size {n} is singular") from e
    return _from_domain(D, n, n)


def reduce_modulo(basis: Matrix, pivots: Sequence[int], vector: Sequence[Fraction]) -> list[Fraction]:
    """Subtract RREF basis rows so that vector vanishes on every pivot column"""
    out = list(vector)
    for i, p in enumerate(pivots):
        c = out[p]
        if c:
            for j, b in enumerate(basis.row(i)):
                if b:
                    out[j] -= c * b
    return out
