"""Model algebras: abelian A(m|n), special Heisenberg H(m,n) and direct sums"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from src.core.errors import UnsupportedModelError
from src.core.linalg import ONE, ZERO
from src.core.superalgebra import GradedDim, SuperAlgebra, require_valid

logger = logging.getLogger(__name__)

MODEL_KINDS = ("abelian", "heisenberg", "direct_sum", "stem_cover")


@dataclass(frozen=True)
class ModelSpec:
    kind: str
    m: int = 0
    n: int = 0
    components: tuple[ModelSpec, ...] = ()

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise UnsupportedModelError(f"unknown model kind {self.kind!r}; expected one of {MODEL_KINDS}")
        if self.m < 0 or self.n < 0:
            raise UnsupportedModelError(f"model parameters must be non-negative, got ({self.m}, {self.n})")
        if self.kind == "heisenberg" and self.m + self.n < 1:
            raise UnsupportedModelError("heisenberg(m, n) needs m + n >= 1")
        if self.kind == "direct_sum" and len(self.components) != 2:
            raise UnsupportedModelError("direct_sum takes exactly two components")

    def __str__(self):
        if self.kind == "direct_sum":
            return f"{self.components[0]} + {self.components[1]}"
        short = {"abelian": "A", "heisenberg": "H", "stem_cover": "K"}[self.kind]
        sep = "|" if self.kind == "abelian" else ","
        return f"{short}({self.m}{sep}{self.n})"


def _unit(total: int, k: int) -> tuple:
    return tuple(ONE if t == k else ZERO for t in range(total))


def abelian(m: int, n: int) -> SuperAlgebra:
    labels = tuple(f"a{i + 1}" for i in range(m)) + tuple(f"b{j + 1}" for j in range(n))
    return SuperAlgebra(GradedDim(m, n), {}, labels)


def heisenberg(m: int, n: int) -> SuperAlgebra:
    """H(m,n) of dimension (2m+1|n): [x_i, x_{m+i}] = z and [y_j, y_j] = z"""
    if m < 0 or n < 0 or m + n < 1:
        raise UnsupportedModelError(f"heisenberg({m}, {n}) needs m, n >= 0 and m + n >= 1")
    dim = GradedDim(2 * m + 1, n)
    z = 2 * m
    zvec = _unit(dim.total, z)
    table = {(i, m + i): zvec for i in range(m)}
    table.update({(z + 1 + j, z + 1 + j): zvec for j in range(n)})
    labels = tuple(f"x{i + 1}" for i in range(2 * m)) + ("z",) + tuple(f"y{j + 1}" for j in range(n))
    return SuperAlgebra(dim, table, labels)


def direct_sum(A: SuperAlgebra, B: SuperAlgebra) -> SuperAlgebra:
    """A ⊕ B on the basis (A even, B even, A odd, B odd) with zero cross brackets"""
    require_valid(A)
    require_valid(B)
    dim = A.dim + B.dim
    ma, mb = A.dim.even, B.dim.even

    def embed_a(i):
        return i if i < ma else mb + i

    def embed_b(i):
        return ma + i if i < mb else ma + A.dim.odd + i

    table = {}
    for source, embed in ((A, embed_a), (B, embed_b)):
        for (i, j), vec in source.sc:
            image = [ZERO] * dim.total
            for t, c in enumerate(vec):
                image[embed(t)] = c
            table[(embed(i), embed(j))] = tuple(image)

    labels = ()
    if A.labels or B.labels:
        lb = [B.label(i) for i in range(B.dim.total)]
        taken = set(lb)
        la = []
        # prime A's labels until unique
        for i in range(A.dim.total):
            label = A.label(i)
            while label in taken:
                label += "'"
            taken.add(label)
            la.append(label)
        labels = tuple(la[:ma] + lb[:mb] + la[ma:] + lb[mb:])
    return SuperAlgebra(dim, table, labels)


def build_model(spec: ModelSpec) -> SuperAlgebra:
    if spec.kind == "abelian":
        return abelian(spec.m, spec.n)
    if spec.kind == "heisenberg":
        return heisenberg(spec.m, spec.n)
    if spec.kind == "direct_sum":
        return direct_sum(build_model(spec.components[0]), build_model(spec.components[1]))
    from src.models.stem_cover import stem_cover_heisenberg
    return stem_cover_heisenberg(spec.m, spec.n).algebra
