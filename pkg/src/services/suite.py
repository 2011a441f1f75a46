"""Verification suite: plans independent jobs over the model and random corpus, runs them, assembles verdicts

Key features:
- plan_suite is a pure function of the CorpusSpec, so local and remote runs see the same job list
- run_jobs executes any subset of job indices, which is what a remote batch receives
- assemble restores the canonical order: claim id first, then job order
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from src.core.errors import SuperalgebraError
from src.core.invariants import center, derived
from src.core.superalgebra import GradedSubspace, SuperAlgebra, require_valid
from src.models.library import ModelSpec, build_model, direct_sum
from src.models.stem_cover import cover_is_available, stem_cover_heisenberg
from src.services import verifier
from src.services.corpus import CorpusSpec, RandomInstance, random_instances
from src.services.verifier import CLAIM_IDS, ClaimVerdict, Verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Job:
    kind: str
    name: str
    args: tuple = ()


def algebra_checks(L: SuperAlgebra, name: str) -> list[ClaimVerdict]:
    """Every single-algebra claim, with the ideals L', Z(L) and one central basis vector"""
    require_valid(L)
    out = [
        verifier.check_derived_bound(L, name),
        verifier.check_multiplier_bound(L, name),
        verifier.check_abelian_equality(L, name),
        verifier.check_sum_bound(L, name),
        verifier.check_main_bound(L, name),
        verifier.check_nilpotency_criterion(L, name),
        verifier.check_quotient_inequality(L, derived(L), name, "L'"),
    ]
    Z = center(L)
    out.append(verifier.check_quotient_inequality(L, Z, name, "Z"))
    if not Z.is_zero:
        line = GradedSubspace.from_vectors(L.dim, Z.vectors()[:1])
        out.extend(verifier.check_central_ideal(L, line, name, "span"))
        out.extend(verifier.check_central_ideal(L, Z, name, "Z"))
    return out


def _abelian_specs(max_total: int) -> list[ModelSpec]:
    return [ModelSpec("abelian", a, t - a) for t in range(1, max_total + 1) for a in range(t, -1, -1)]


def _heisenberg_specs(max_total: int) -> list[ModelSpec]:
    return [ModelSpec("heisenberg", m, t - m) for t in range(1, max_total + 1) for m in range(t, -1, -1)]


def plan_suite(spec: CorpusSpec) -> list[Job]:
    jobs = [Job("heisenberg-formula", f"H({s.m},{s.n})", (s.m, s.n)) for s in _heisenberg_specs(spec.heisenberg_max)]

    for s in _abelian_specs(spec.abelian_max) + _heisenberg_specs(spec.heisenberg_max):
        jobs.append(Job("algebra", str(s), (s,)))

    summands = (_abelian_specs(spec.direct_sum_abelian_max)
                + [ModelSpec("heisenberg", m, n) for m, n in spec.direct_sum_heisenberg])
    for a in range(len(summands)):
        for b in range(a, len(summands)):
            jobs.append(Job("direct-sum", f"{summands[a]} + {summands[b]}", (summands[a], summands[b])))

    jobs.extend(Job("main-equality", f"H10 {m} {n}", ("H10", m, n)) for m, n in spec.equality_h10)
    jobs.extend(Job("main-equality", f"H01 {m} {n}", ("H01", m, n)) for m, n in spec.equality_h01)

    for total in range(1, spec.cover_max + 1):
        for m in range(total, -1, -1):
            if cover_is_available(m, total - m):
                jobs.append(Job("stem-cover", f"K({m},{total - m})", (m, total - m)))

    for instance in random_instances(spec.seed, spec.count, spec.random_max_total):
        jobs.append(Job("random", instance.name, (instance,)))
    logger.debug(f"planned {len(jobs)} suite jobs")
    return jobs


def run_job(job: Job, spec: CorpusSpec) -> list[ClaimVerdict]:
    if job.kind == "heisenberg-formula":
        return [verifier.check_heisenberg_formula(*job.args)]
    if job.kind == "algebra":
        return algebra_checks(build_model(job.args[0]), job.name)
    if job.kind == "direct-sum":
        a, b = job.args
        A, B = build_model(a), build_model(b)
        return [verifier.check_direct_sum(A, B, str(a), str(b))] + algebra_checks(direct_sum(A, B), job.name)
    if job.kind == "main-equality":
        which, m, n = job.args
        return [verifier.check_equality_case(m, n, which)]
    if job.kind == "stem-cover":
        m, n = job.args
        K, W = stem_cover_heisenberg(m, n)
        out = [verifier.check_stem_cover(m, n), verifier.check_stem_extension_bound(K, W, job.name)]
        if m + n <= spec.cover_checks_max:
            out.extend(algebra_checks(K, job.name))
        else:
            out.append(verifier.check_derived_bound(K, job.name))
        return out
    if job.kind == "random":
        instance: RandomInstance = job.args[0]
        return algebra_checks(instance.build(spec.pool), job.name)
    raise ValueError(f"unknown suite job kind {job.kind!r}")


def run_jobs(spec: CorpusSpec, indices: Sequence[int]) -> list[tuple[int, list[ClaimVerdict]]]:
    jobs = plan_suite(spec)
    results = []
    for index in indices:
        job = jobs[index]
        try:
            results.append((index, run_job(job, spec)))
        except SuperalgebraError as e:
            logger.error(f"suite job {job.name} ({job.kind}) raised: {e}", exc_info=True)
            raise
    return results


def assemble(results: Iterable[tuple[int, list[ClaimVerdict]]]) -> list[ClaimVerdict]:
    ordered = [v for _, verdicts in sorted(results, key=lambda r: r[0]) for v in verdicts]
    rank = {claim_id: k for k, claim_id in enumerate(CLAIM_IDS)}
    return sorted(ordered, key=lambda v: rank[v.claim_id])


def run_suite(spec: CorpusSpec) -> list[ClaimVerdict]:
    start_time = time.time()
    jobs = plan_suite(spec)
    verdicts = assemble(run_jobs(spec, range(len(jobs))))
    counts = summarize(verdicts)
    logger.info(f"suite of {len(jobs)} jobs completed in {time.time() - start_time:.2f}s: {counts}")
    return verdicts


def summarize(verdicts: Iterable[ClaimVerdict]) -> dict[str, int]:
    counts = {v.value: 0 for v in Verdict}
    for verdict in verdicts:
        counts[verdict.verdict.value] += 1
    return counts
