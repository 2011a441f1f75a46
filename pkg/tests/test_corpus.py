import pytest

from src.core.invariants import center, derived
from src.core.superalgebra import GradedDim, validate
from src.models.library import abelian, heisenberg
from src.services.corpus import CorpusSpec, random_instances, random_nilpotent
from src.services.suite import algebra_checks, assemble, plan_suite, run_jobs, run_suite, summarize
from src.services.verifier import CLAIM_IDS, Verdict

SMALL = CorpusSpec(
    count=4,
    heisenberg_max=2,
    abelian_max=2,
    cover_max=2,
    direct_sum_abelian_max=1,
    direct_sum_heisenberg=((1, 0),),
    equality_h10=((3, 0),),
    equality_h01=((1, 1),),
)


def test_random_nilpotent_is_deterministic():
    a = random_nilpotent(11, GradedDim(2, 2), GradedDim(1, 1))
    b = random_nilpotent(11, GradedDim(2, 2), GradedDim(1, 1))
    assert a == b
    assert a.labels == b.labels == ("v1", "v2", "w1", "u1", "u2", "g1")


def test_random_nilpotent_without_center_is_abelian():
    L = random_nilpotent(3, GradedDim(2, 1), GradedDim(0, 0))
    assert L == abelian(2, 1)


def test_random_nilpotent_single_pair_is_heisenberg():
    assert random_nilpotent(0, GradedDim(2, 0), GradedDim(1, 0), pool=(1,)) == heisenberg(1, 0)


def test_random_nilpotent_is_two_step(rng):
    for _ in range(25):
        v = GradedDim(rng.randint(0, 3), rng.randint(0, 2))
        w = GradedDim(rng.randint(0, 2), rng.randint(0, 2))
        L = random_nilpotent(rng.randrange(10 ** 6), v, w)
        assert validate(L).ok
        assert center(L).contains(derived(L))


def test_random_instances_respect_the_size_limit():
    instances = random_instances(seed=42, count=100, max_total=7)
    assert [i.name for i in instances[:3]] == ["R0", "R1", "R2"]
    for instance in instances:
        total = instance.v_dim.total + instance.w_dim.total
        assert 2 <= total <= 7
    assert instances == random_instances(seed=42, count=100, max_total=7)
    assert instances != random_instances(seed=43, count=100, max_total=7)


def test_corpus_spec_round_trip():
    spec = CorpusSpec(seed=7, count=100)
    assert CorpusSpec.from_dict(spec.to_dict()) == spec
    assert CorpusSpec.from_dict(SMALL.to_dict()) == SMALL


def test_empty_corpus_gives_no_verdicts():
    assert plan_suite(CorpusSpec.empty()) == []
    assert run_suite(CorpusSpec.empty()) == []


def test_algebra_checks_cover_every_single_algebra_claim(h11):
    claims = {v.claim_id for v in algebra_checks(h11, "H(1,1)")}
    assert claims == {
        "derived-bound", "multiplier-bound", "abelian-equality", "sum-bound", "main-bound",
        "nilpotency-criterion", "quotient-inequality", "central-ideal-tensor", "central-ideal-bound",
    }


def test_small_suite_verdicts():
    verdicts = run_suite(SMALL)
    summary = summarize(verdicts)
    assert summary["FAIL"] == 0
    discrepancies = [(v.claim_id, v.inputs) for v in verdicts if v.verdict is Verdict.DISCREPANCY]
    assert discrepancies == [("heisenberg-formula", "H(0,1)"), ("main-equality", "H(0,1) + A(0|0)")]
    ranks = [CLAIM_IDS.index(v.claim_id) for v in verdicts]
    assert ranks == sorted(ranks)


def test_suite_is_deterministic():
    first = [v.to_dict() for v in run_suite(SMALL)]
    second = [v.to_dict() for v in run_suite(SMALL)]
    assert first == second


def test_batched_runs_reassemble_to_the_local_order():
    jobs = plan_suite(SMALL)
    indices = list(range(len(jobs)))
    batches = [indices[k:k + 5] for k in range(0, len(indices), 5)]
    results = [item for batch in reversed(batches) for item in run_jobs(SMALL, batch)]
    assert [v.to_dict() for v in assemble(results)] == [v.to_dict() for v in run_suite(SMALL)]


@pytest.mark.parametrize("kind", ["heisenberg-formula", "algebra", "direct-sum", "main-equality", "stem-cover", "random"])
def test_plan_contains_every_job_kind(kind):
    assert any(job.kind == kind for job in plan_suite(SMALL))


def test_random_instances_need_room_for_center():
    with pytest.raises(ValueError, match="max_total"):
        random_instances(seed=1, count=3, max_total=1)


def test_suite_checks_direct_sums_and_covers_as_algebras():
    verdicts = run_suite(SMALL)
    main = {v.inputs: v.verdict for v in verdicts if v.claim_id == "main-bound"}
    assert main["H(1,0) + H(1,0)"] is Verdict.PASS
    assert main["A(1|0) + A(0|1)"] is Verdict.NOT_APPLICABLE
    assert main["K(1,0)"] is Verdict.PASS
    assert {f"K({m},{n})" for m, n in [(1, 0), (2, 0), (1, 1), (0, 2)]} <= set(main)
    sums = {v.inputs for v in verdicts if v.claim_id == "sum-bound"}
    assert "H(1,0) + H(1,0)" in sums and "K(2,0)" in sums


def test_cover_checks_limit_keeps_large_covers_light():
    spec = CorpusSpec.from_dict({**SMALL.to_dict(), "cover_checks_max": 1})
    claims = {}
    for index, job in enumerate(plan_suite(spec)):
        if job.kind == "stem-cover":
            [(_, verdicts)] = run_jobs(spec, [index])
            claims[job.name] = {v.claim_id for v in verdicts}
    assert "main-bound" in claims["K(1,0)"]
    assert claims["K(2,0)"] == {"stem-cover", "stem-extension-bound", "derived-bound"}
