"""Report documents: schema-versioned JSON with a fixed key order and no timestamps"""
from __future__ import annotations

import hashlib
import json
from typing import Iterable, Sequence

from config.settings import REPORT_SCHEMA_VERSION, TOOL_NAME, TOOL_VERSION
from src.core.homology import MultiplierResult
from src.core.invariants import StructureProfile, lower_central_series
from src.core.superalgebra import SuperAlgebra, ValidationReport
from src.services.verifier import ClaimVerdict


def digest_bytes(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def digest_many(blobs: Sequence[bytes]) -> str:
    if len(blobs) == 1:
        return digest_bytes(blobs[0])
    return digest_bytes("\n".join(digest_bytes(b) for b in blobs).encode("ascii"))


def digest_json(obj) -> str:
    return digest_bytes(json.dumps(obj, sort_keys=True, separators=(",", ":")).encode("utf-8"))


def build_report(command: str, input_digest: str, payload: dict) -> dict:
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "tool": TOOL_NAME,
        "tool_version": TOOL_VERSION,
        "command": command,
        "input_digest": input_digest,
        "payload": payload,
    }


def render(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def validation_payload(L: SuperAlgebra, result: ValidationReport) -> dict:
    return {
        "dim": str(L.dim),
        "valid": result.ok,
        "structural": [v.describe(L) for v in result.structural],
        "jacobi": [
            {"triple": [L.label(i) for i in v.triple], "value": v.describe(L)}
            for v in result.jacobi
        ],
    }


def profile_payload(L: SuperAlgebra, p: StructureProfile) -> dict:
    series = lower_central_series(L)
    return {
        "dim": str(p.dim),
        "derived_dim": str(p.derived_dim),
        "center_dim": str(p.center_dim),
        "nilpotent": p.nilpotent,
        "nilpotency_class": p.nilpotency_class,
        "split_indices": list(p.split_indices) if p.split_indices else None,
        "lower_central_series": [str(term.dim) for term in series.whole],
    }


def multiplier_payload(L: SuperAlgebra, result: MultiplierResult) -> dict:
    return {
        "dim": str(L.dim),
        "total": result.total,
        "even": result.even,
        "odd": result.odd,
        "dim_ker_d2": result.dim_ker_d2,
        "rank_d3": result.rank_d3,
    }


def verdict_payload(verdicts: Iterable[ClaimVerdict], summary: dict[str, int], corpus: dict | None = None) -> dict:
    payload = {"summary": summary}
    if corpus is not None:
        payload["corpus"] = corpus
    payload["verdicts"] = [v.to_dict() for v in verdicts]
    return payload
