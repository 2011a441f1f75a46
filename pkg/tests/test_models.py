import pytest

from src.core.errors import UnsupportedModelError
from src.core.homology import multiplier_dim
from src.core.invariants import center, derived
from src.core.superalgebra import GradedDim, quotient, validate
from src.models.library import ModelSpec, abelian, build_model, direct_sum, heisenberg
from src.models.stem_cover import REFUSED_COVER_MESSAGE, cover_is_available, stem_cover_heisenberg


@pytest.mark.parametrize("m,n", [(1, 0), (0, 1), (2, 1), (0, 3), (3, 2)])
def test_heisenberg_shape(m, n):
    L = heisenberg(m, n)
    assert L.dim == GradedDim(2 * m + 1, n)
    assert validate(L).ok
    assert derived(L) == center(L)
    assert derived(L).dim == GradedDim(1, 0)


def test_heisenberg_needs_a_generator():
    with pytest.raises(UnsupportedModelError):
        heisenberg(0, 0)
    with pytest.raises(UnsupportedModelError):
        ModelSpec("heisenberg", 0, 0)


def test_heisenberg_labels():
    assert heisenberg(1, 2).labels == ("x1", "x2", "z", "y1", "y2")


def test_abelian_has_no_brackets():
    L = abelian(2, 3)
    assert L.sc == ()
    assert L.labels == ("a1", "a2", "b1", "b2", "b3")


def test_direct_sum_layout():
    S = direct_sum(heisenberg(1, 1), heisenberg(0, 1))
    assert S.dim == GradedDim(4, 2)
    assert S.labels == ("x1", "x2", "z'", "z", "y1'", "y1")
    assert validate(S).ok
    assert derived(S).dim == GradedDim(2, 0)


def test_nested_direct_sums_keep_labels_distinct():
    H = heisenberg(1, 0)
    S = direct_sum(direct_sum(H, H), H)
    assert S.labels == ("x1'", "x2'", "z'", "x1''", "x2''", "z''", "x1", "x2", "z")
    T = direct_sum(heisenberg(0, 1), direct_sum(heisenberg(0, 1), heisenberg(0, 1)))
    assert len(set(T.labels)) == T.dim.total


def test_direct_sum_with_heisenberg_and_line():
    S = direct_sum(heisenberg(1, 0), abelian(1, 0))
    assert multiplier_dim(S).total == 4


def test_direct_sum_is_associative_on_invariants():
    A, B, C = heisenberg(1, 1), abelian(1, 1), heisenberg(0, 2)
    left = direct_sum(direct_sum(A, B), C)
    right = direct_sum(A, direct_sum(B, C))
    assert left.dim == right.dim
    assert derived(left).dim == derived(right).dim
    assert center(left).dim == center(right).dim
    assert multiplier_dim(left) == multiplier_dim(right)


def test_model_spec_builds_and_prints():
    spec = ModelSpec("direct_sum", components=(ModelSpec("heisenberg", 1, 0), ModelSpec("abelian", 2, 1)))
    assert str(spec) == "H(1,0) + A(2|1)"
    assert build_model(spec).dim == GradedDim(5, 1)
    assert build_model(ModelSpec("stem_cover", 1, 0)).dim == GradedDim(5, 0)
    with pytest.raises(UnsupportedModelError):
        ModelSpec("octonion")
    with pytest.raises(UnsupportedModelError):
        ModelSpec("direct_sum", components=(ModelSpec("abelian", 1, 0),))


def test_classical_cover():
    K, W = stem_cover_heisenberg(1, 0)
    assert K.dim == GradedDim(5, 0)
    assert W.dim == GradedDim(2, 0)
    assert validate(K).ok
    assert center(K).intersect(derived(K)).contains(W)
    assert multiplier_dim(quotient(K, W).algebra).total == 2


@pytest.mark.parametrize("m,n,kernel", [
    (1, 1, GradedDim(1, 2)),
    (0, 2, GradedDim(2, 0)),
    (2, 0, GradedDim(5, 0)),
    (2, 1, GradedDim(6, 4)),
])
def test_cover_kernel_matches_multiplier(m, n, kernel):
    K, W = stem_cover_heisenberg(m, n)
    assert W.dim == kernel
    assert validate(K).ok
    assert center(K).intersect(derived(K)).contains(W)
    assert quotient(K, W).algebra == heisenberg(m, n)
    assert W.dim == multiplier_dim(heisenberg(m, n)).graded


def test_cover_labels_follow_the_construction():
    K, _ = stem_cover_heisenberg(1, 1)
    assert K.labels == ("x1", "x2", "zeta", "v_1", "y1", "gamma_1_1", "gamma_2_1")


def test_refused_covers():
    with pytest.raises(UnsupportedModelError) as info:
        stem_cover_heisenberg(0, 1)
    assert str(info.value) == REFUSED_COVER_MESSAGE
    with pytest.raises(UnsupportedModelError):
        stem_cover_heisenberg(0, 0)
    assert not cover_is_available(0, 1)
    assert cover_is_available(1, 0) and cover_is_available(0, 2)
