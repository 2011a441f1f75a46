"""Algebra files: JSON structure constants with exact rational strings

Key features:
- {"even", "odd", "labels"?, "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}
- Coefficients are "p" or "p/q" strings (plain JSON integers are accepted); floats are rejected
- Canonical pairs, index ranges and the grading rule are enforced on load, with a location in every error
- The writer is deterministic: canonical pair order, numeric key order, 2-space indent, trailing newline
"""
from __future__ import annotations

import json
import logging
from fractions import Fraction
from pathlib import Path

import regex

from src.core.errors import SuperalgebraError
from src.core.superalgebra import GradedDim, SuperAlgebra

logger = logging.getLogger(__name__)

RATIONAL_PATTERN = regex.compile(r"(?P<num>[+-]?\d+)(?:/(?P<den>\d+))?")
INDEX_PATTERN = regex.compile(r"\d+")


class AlgebraFileError(SuperalgebraError, ValueError):
    """Malformed algebra file; `location` points into the document"""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


def parse_rational(value, location: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise AlgebraFileError(f"expected a rational string, got {value!r}", location)
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise AlgebraFileError(f"expected a rational string, got {type(value).__name__}", location)
    match = RATIONAL_PATTERN.fullmatch(value.strip())
    if not match:
        raise AlgebraFileError(f"{value!r} is not of the form 'p' or 'p/q'", location)
    den = int(match["den"]) if match["den"] is not None else 1
    if den == 0:
        raise AlgebraFileError(f"zero denominator in {value!r}", location)
    return Fraction(int(match["num"]), den)


def _count(document: dict, key: str) -> int:
    value = document.get(key)
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise AlgebraFileError(f"expected a non-negative integer, got {value!r}", key)
    return value


def _index(value, dim: GradedDim, location: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise AlgebraFileError(f"expected an integer index, got {value!r}", location)
    if not 0 <= value < dim.total:
        raise AlgebraFileError(f"index {value} out of range for dimension {dim}", location)
    return value


def parse_algebra(text: str) -> SuperAlgebra:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise AlgebraFileError(f"invalid JSON: {e.msg}", f"line {e.lineno} column {e.colno}") from e
    if not isinstance(document, dict):
        raise AlgebraFileError("top level must be an object")

    dim = GradedDim(_count(document, "even"), _count(document, "odd"))

    labels = document.get("labels", [])
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise AlgebraFileError("expected a list of strings", "labels")
    if labels and len(labels) != dim.total:
        raise AlgebraFileError(f"{len(labels)} labels for {dim.total} basis vectors", "labels")
    if len(set(labels)) != len(labels):
        raise AlgebraFileError("labels must be distinct", "labels")

    brackets = document.get("brackets", [])
    if not isinstance(brackets, list):
        raise AlgebraFileError("expected a list", "brackets")

    table = {}
    for k, record in enumerate(brackets):
        where = f"brackets[{k}]"
        if not isinstance(record, dict):
            raise AlgebraFileError("expected an object", where)
        i = _index(record.get("i"), dim, f"{where}.i")
        j = _index(record.get("j"), dim, f"{where}.j")
        if i > j or (i == j and dim.parity(i) == 0):
            raise AlgebraFileError(f"pair ({i}, {j}) is not canonical (need i < j, or i == j with both odd)", where)
        if (i, j) in table:
            raise AlgebraFileError(f"pair ({i}, {j}) given twice", where)
        coeffs = record.get("coeffs", {})
        if not isinstance(coeffs, dict):
            raise AlgebraFileError("expected an object", f"{where}.coeffs")

        target = (dim.parity(i) + dim.parity(j)) % 2
        vec = [Fraction(0)] * dim.total
        seen = set()
        for key, raw in coeffs.items():
            at = f"{where}.coeffs[{key!r}]"
            if not INDEX_PATTERN.fullmatch(key):
                raise AlgebraFileError(f"coefficient key {key!r} is not an index", at)
            t = _index(int(key), dim, at)
            if t in seen:
                raise AlgebraFileError(f"coefficient index {t} given twice", at)
            seen.add(t)
            c = parse_rational(raw, at)
            if c and dim.parity(t) != target:
                raise AlgebraFileError(
                    f"[e{i}, e{j}] has parity {target} but a nonzero coefficient on e{t} of parity {dim.parity(t)}", at)
            vec[t] = c
        table[(i, j)] = tuple(vec)

    L = SuperAlgebra(dim, table, tuple(labels))
    logger.debug(f"parsed algebra of dimension {dim} with {len(L.sc)} nonzero brackets")
    return L


def load_algebra(path: str | Path) -> SuperAlgebra:
    data = Path(path).read_bytes()
    return parse_algebra(decode(data, str(path)))


def decode(data: bytes, location: str = "") -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise AlgebraFileError(f"not UTF-8 ({e.reason})", location) from e


def dump_algebra(L: SuperAlgebra) -> str:
    document = {"even": L.dim.even, "odd": L.dim.odd}
    if L.labels:
        document["labels"] = list(L.labels)
    document["brackets"] = [
        {"i": i, "j": j, "coeffs": {str(t): str(c) for t, c in enumerate(vec) if c}}
        for (i, j), vec in L.sc
    ]
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def write_algebra(L: SuperAlgebra, path: str | Path):
    Path(path).write_text(dump_algebra(L), encoding="utf-8")
    logger.info(f"wrote algebra of dimension {L.dim} to {path}")
