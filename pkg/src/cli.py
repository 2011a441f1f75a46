"""Command-line entry point: python -m src.cli <command> ...

Commands:
- validate / invariants / multiplier <path>: structured report for one algebra file
- model <kind> <m> <n> / cover <m> <n> / random ...: write an algebra file
- verify [--suite default] [--seed N] [--count N] [--remote] [paths...]: claim verdicts

Reports go to stdout (or -o), logs to stderr, so reports stay byte-deterministic.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from config.settings import (
    DEFAULT_RANDOM_COUNT,
    DEFAULT_SEED,
    EXIT_DISCREPANCY,
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    LOG_FORMAT,
    LOG_LEVEL,
    TOOL_NAME,
    TOOL_VERSION,
)
from src.core.errors import InvalidAlgebraError, SuperalgebraError, UnsupportedModelError
from src.core.homology import multiplier_dim
from src.core.invariants import profile
from src.core.superalgebra import GradedDim, validate
from src.models.library import ModelSpec, build_model
from src.models.stem_cover import stem_cover_heisenberg
from src.services import report as reports
from src.services.algebra_io import AlgebraFileError, decode, dump_algebra, parse_algebra
from src.services.corpus import CorpusSpec, random_nilpotent
from src.services.suite import algebra_checks, assemble, run_suite, summarize
from src.services.verifier import Verdict

logger = logging.getLogger(__name__)


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e


def _load(path: str):
    data = _read(path)
    return parse_algebra(decode(data, path)), data


def cmd_validate(args) -> int:
    L, data = _load(args.path)
    result = validate(L)
    payload = reports.validation_payload(L, result)
    _emit(reports.render(reports.build_report("validate", reports.digest_bytes(data), payload)), args.output)
    return EXIT_OK if result.ok else EXIT_FAILURE


def cmd_invariants(args) -> int:
    L, data = _load(args.path)
    payload = reports.profile_payload(L, profile(L))
    _emit(reports.render(reports.build_report("invariants", reports.digest_bytes(data), payload)), args.output)
    return EXIT_OK


def cmd_multiplier(args) -> int:
    L, data = _load(args.path)
    payload = reports.multiplier_payload(L, multiplier_dim(L))
    _emit(reports.render(reports.build_report("multiplier", reports.digest_bytes(data), payload)), args.output)
    return EXIT_OK


def cmd_model(args) -> int:
    L = build_model(ModelSpec(args.kind, args.m, args.n))
    _emit(dump_algebra(L), args.output)
    return EXIT_OK


def cmd_cover(args) -> int:
    K, W = stem_cover_heisenberg(args.m, args.n)
    logger.info(f"cover K({args.m},{args.n}) has dimension {K.dim}, kernel {W.dim}")
    _emit(dump_algebra(K), args.output)
    return EXIT_OK


def cmd_random(args) -> int:
    m, n = args.dim
    a, b = args.center
    if min(m, n, a, b) < 0 or a > m or b > n:
        raise UsageError(f"--center ({a}|{b}) must fit inside --dim ({m}|{n})")
    L = random_nilpotent(args.seed, GradedDim(m - a, n - b), GradedDim(a, b))
    _emit(dump_algebra(L), args.output)
    return EXIT_OK


def _verdict_exit(summary: dict[str, int]) -> int:
    if summary[Verdict.FAIL.value]:
        return EXIT_FAILURE
    if summary[Verdict.DISCREPANCY.value]:
        return EXIT_DISCREPANCY
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.paths and args.suite:
        raise UsageError("give either --suite or algebra files, not both")

    if args.paths:
        loaded = [_load(p) for p in args.paths]
        verdicts = assemble((k, algebra_checks(L, path)) for k, (path, (L, _)) in enumerate(zip(args.paths, loaded)))
        summary = summarize(verdicts)
        digest = reports.digest_many([data for _, data in loaded])
        payload = reports.verdict_payload(verdicts, summary)
    else:
        spec = CorpusSpec(seed=args.seed, count=args.count)
        if args.remote:
            from modal_app import run_remote_suite

            result = run_remote_suite(spec)
            if not result["success"]:
                logger.error(f"remote suite failed: {result['error']}")
                return EXIT_FAILURE
            verdicts = result["verdicts"]
        else:
            verdicts = run_suite(spec)
        summary = summarize(verdicts)
        corpus = spec.to_dict()
        digest = reports.digest_json(corpus)
        payload = reports.verdict_payload(verdicts, summary, corpus)

    _emit(reports.render(reports.build_report("verify", digest, payload)), args.output)
    return _verdict_exit(summary)


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=TOOL_NAME, description="Lie superalgebras, Schur multipliers and claim verification")
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")
    parser.add_argument("--log-level", default=LOG_LEVEL, choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, handler, help_text in (
        ("validate", cmd_validate, "grading and graded Jacobi check"),
        ("invariants", cmd_invariants, "structure profile"),
        ("multiplier", cmd_multiplier, "Schur multiplier dimension"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("path")
        p.add_argument("-o", "--output")
        p.set_defaults(handler=handler)

    p = sub.add_parser("model", help="write a model algebra")
    p.add_argument("kind", choices=["abelian", "heisenberg"])
    p.add_argument("m", type=_non_negative)
    p.add_argument("n", type=_non_negative)
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_model)

    p = sub.add_parser("cover", help="write the stem cover of H(m,n)")
    p.add_argument("m", type=_non_negative)
    p.add_argument("n", type=_non_negative)
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_cover)

    p = sub.add_parser("verify", help="run claim checks on files or the default suite")
    p.add_argument("--suite", choices=["default"])
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--count", type=_non_negative, default=DEFAULT_RANDOM_COUNT)
    p.add_argument("--remote", action="store_true", help="run the suite on Modal")
    p.add_argument("-o", "--output")
    p.add_argument("paths", nargs="*")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("random", help="write a seeded random 2-step nilpotent algebra")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--dim", type=_non_negative, nargs=2, metavar=("M", "N"), required=True)
    p.add_argument("--center", type=_non_negative, nargs=2, metavar=("A", "B"), required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_random)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    logging.basicConfig(level=args.log_level, format=LOG_FORMAT, stream=sys.stderr)
    try:
        return args.handler(args)
    except (AlgebraFileError, UnsupportedModelError, UsageError) as e:
        print(f"{TOOL_NAME}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidAlgebraError as e:
        print(f"{TOOL_NAME}: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except SuperalgebraError as e:
        logger.error(f"{args.command} failed: {e}", exc_info=True)
        return EXIT_FAILURE


if __name__ == "__main__":
    raise SystemExit(main())
