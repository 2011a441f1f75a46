"""End-to-end expectations on the model families and the default suite"""
import json
from fractions import Fraction

import pytest

from src.cli import main
from src.core.homology import multiplier_dim
from src.models.library import abelian, heisenberg
from src.models.stem_cover import cover_is_available
from src.services import verifier
from src.services.verifier import Verdict

DIRECT_SUM_SUMMANDS = ([abelian(a, t - a) for t in range(4) for a in range(t + 1)]
                       + [heisenberg(1, 0), heisenberg(0, 2), heisenberg(1, 1), heisenberg(2, 0)])


@pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(4) if m + n >= 2])
def test_heisenberg_table(m, n):
    assert multiplier_dim(heisenberg(m, n)).total == 2 * m * m - m - 1 + 2 * m * n + n * (n + 1) // 2


def test_heisenberg_one_generator_cases():
    assert multiplier_dim(heisenberg(1, 0)).total == 2
    v = verifier.check_heisenberg_formula(0, 1)
    assert v.verdict is Verdict.DISCREPANCY
    assert (v.values["computed"], v.values["expected"]) == (0, 2)


@pytest.mark.parametrize("m,n", [(m, t - m) for t in range(7) for m in range(t + 1)])
def test_abelian_equality(m, n):
    assert multiplier_dim(abelian(m, n)).total == ((m + n) ** 2 + (n - m)) // 2


def test_direct_sum_formula_on_all_pairs():
    for a in range(len(DIRECT_SUM_SUMMANDS)):
        for b in range(a, len(DIRECT_SUM_SUMMANDS)):
            A, B = DIRECT_SUM_SUMMANDS[a], DIRECT_SUM_SUMMANDS[b]
            v = verifier.check_direct_sum(A, B)
            assert v.verdict is Verdict.PASS, (str(A), str(B), v.values)


@pytest.mark.slow
@pytest.mark.parametrize("m,n", [(m, t - m) for t in range(1, 6) for m in range(t + 1) if cover_is_available(m, t - m)])
def test_stem_covers(m, n):
    assert verifier.check_stem_cover(m, n).verdict is Verdict.PASS


@pytest.mark.parametrize("m,n", [(3, 0), (4, 0), (4, 1), (5, 2)])
def test_main_bound_equality(m, n):
    assert verifier.check_equality_case(m, n, "H10").verdict is Verdict.PASS


def test_classical_reduction():
    assert [multiplier_dim(heisenberg(m, 0)).total for m in (1, 2, 3)] == [2, 5, 14]


@pytest.fixture(scope="module")
def default_report(tmp_path_factory):
    path = tmp_path_factory.mktemp("suite") / "report.json"
    code = main(["verify", "--suite", "default", "--seed", "42", "-o", str(path)])
    return code, path


@pytest.mark.slow
def test_default_suite_has_only_documented_discrepancies(default_report):
    code, path = default_report
    verdicts = json.loads(path.read_text(encoding="utf-8"))["payload"]["verdicts"]
    assert code == 3
    assert [v for v in verdicts if v["verdict"] == "FAIL"] == []
    discrepancies = [(v["claim_id"], v["inputs"]) for v in verdicts if v["verdict"] == "DISCREPANCY"]
    assert discrepancies == [
        ("heisenberg-formula", "H(0,1)"),
        ("main-equality", "H(0,1) + A(0|0)"),
        ("main-equality", "H(0,1) + A(1|0)"),
        ("main-equality", "H(0,1) + A(1|1)"),
    ]


@pytest.mark.slow
def test_default_suite_covers_the_random_corpus(default_report):
    _, path = default_report
    verdicts = json.loads(path.read_text(encoding="utf-8"))["payload"]["verdicts"]
    random_main = {v["inputs"] for v in verdicts if v["claim_id"] == "main-bound" and v["inputs"].startswith("R")}
    assert len(random_main) >= 200
    central = [v["inputs"] for v in verdicts if v["claim_id"] == "central-ideal-bound" and v["inputs"].startswith("R")]
    assert any(", span(" in i for i in central) and any(", Z(" in i for i in central)
    for v in verdicts:
        if v["slack"] is not None:
            assert (Fraction(v["slack"]) >= 0) == (v["verdict"] == "PASS"), v


@pytest.mark.slow
def test_default_suite_is_byte_identical(default_report, tmp_path):
    _, first = default_report
    second = tmp_path / "again.json"
    main(["verify", "--suite", "default", "--seed", "42", "-o", str(second)])
    assert first.read_bytes() == second.read_bytes()
