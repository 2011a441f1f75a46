"""Main Modal application entry point

Fans the verification suite out over containers:
- modal_app.py defines the modal.App as 'app' and the batch worker
- run_remote_suite plans the jobs locally, maps batches remotely and reassembles
  the verdicts in the same canonical order as a local run
"""
import modal
import time
import logging

from config.modal_config import image
from config.settings import MODAL_APP_NAME, REMOTE_BATCH_SIZE, REMOTE_TIMEOUT

logger = logging.getLogger(__name__)

app = modal.App(MODAL_APP_NAME)


@app.function(image=image, timeout=REMOTE_TIMEOUT)
def verify_batch(spec_dict: dict, indices: list):
    """Run a slice of the suite; verdicts travel back as plain dicts"""
    from src.services.corpus import CorpusSpec
    from src.services.suite import run_jobs

    spec = CorpusSpec.from_dict(spec_dict)
    start_time = time.time()
    results = [[index, [v.to_dict() for v in verdicts]] for index, verdicts in run_jobs(spec, indices)]
    logger.info(f"batch of {len(indices)} jobs completed in {time.time() - start_time:.2f}s")
    return results


def _map_batches(spec, batch_size: int):
    """Plan locally, run batches remotely; workers replan the same job list from the corpus description"""
    from src.services.suite import assemble, plan_suite
    from src.services.verifier import ClaimVerdict

    step_start = time.time()
    jobs = plan_suite(spec)
    batches = [list(range(k, min(k + batch_size, len(jobs)))) for k in range(0, len(jobs), batch_size)]
    logger.info(f"Planned {len(jobs)} jobs in {len(batches)} batches in {time.time() - step_start:.2f}s")

    step_start = time.time()
    spec_dict = spec.to_dict()
    raw = [item for batch in verify_batch.starmap([(spec_dict, b) for b in batches]) for item in batch]
    logger.info(f"Remote verification completed in {time.time() - step_start:.2f}s")

    results = [(index, [ClaimVerdict.from_dict(d) for d in verdicts]) for index, verdicts in raw]
    return len(jobs), assemble(results)


def run_remote_suite(spec, batch_size: int = REMOTE_BATCH_SIZE):
    """
    Orchestrates a distributed suite run

    Args:
        spec: CorpusSpec describing the suite
        batch_size: number of jobs per container call

    Returns:
        Dictionary with the assembled verdicts, or the error if the run failed
    """
    try:
        start_time = time.time()
        with app.run():
            n_jobs, verdicts = _map_batches(spec, batch_size)
        logger.info(f"Total processing time: {time.time() - start_time:.2f}s")
        return {"success": True, "jobs": n_jobs, "verdicts": verdicts}

    except Exception as e:
        logger.error(f"Error running remote suite: {str(e)}", exc_info=True)
        return {"success": False, "error": str(e)}


@app.local_entrypoint()
def main(seed: int = 42, count: int = 200):
    """`modal run modal_app.py --seed 7 --count 100` prints the suite report"""
    from src.services.corpus import CorpusSpec
    from src.services.report import build_report, digest_json, render, verdict_payload
    from src.services.suite import summarize

    spec = CorpusSpec(seed=seed, count=count)
    _, verdicts = _map_batches(spec, REMOTE_BATCH_SIZE)
    corpus = spec.to_dict()
    report = build_report("verify", digest_json(corpus), verdict_payload(verdicts, summarize(verdicts), corpus))
    print(render(report), end="")
