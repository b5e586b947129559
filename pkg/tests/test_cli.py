# tests/test_cli.py

import json
import sys
from pathlib import Path

import pytest

# Ensure project root is on sys.path
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from compalg_kit.cli.app import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main

WITNESS = ROOT / "compalg_kit" / "data" / "x0_witness.json"


@pytest.fixture(autouse=True)
def isolated_log(tmp_path, monkeypatch):
    log = tmp_path / "verify_events.jsonl"
    monkeypatch.setenv("COMPALG_KIT_LOG_FILE", str(log))
    return log


def test_help_and_usage_errors():
    assert main(["--help"]) == EXIT_OK
    assert main([]) == EXIT_USAGE
    assert main(["verify", "topology"]) == EXIT_USAGE


def test_verify_rejects_non_prime(capsys):
    assert main(["verify", "all", "--p", "0"]) == EXIT_USAGE
    assert "prime" in capsys.readouterr().err


def test_classify_x0_witness(tmp_path):
    out = tmp_path / "verdict.json"
    assert main(["classify", str(WITNESS), "--out", str(out)]) == EXIT_OK
    verdict = json.loads(out.read_text(encoding="utf-8"))
    assert verdict["rank_one"] is True
    assert verdict["class"] == "X0"
    assert "first_nonzero_residual" not in verdict
    assert verdict["config"]["p"] == 3


def test_classify_not_rank_one(tmp_path, capsys):
    path = tmp_path / "identity.json"
    path.write_text(
        json.dumps({"field": "fp", "p": 5, "n": 3, "alg": "o", "diag": [1, 1, 1], "upper": []}),
        encoding="utf-8",
    )
    assert main(["classify", str(path)]) == EXIT_OK
    verdict = json.loads(capsys.readouterr().out)
    assert verdict["rank_one"] is False
    assert verdict["first_nonzero_residual"] == 0
    assert "class" not in verdict


@pytest.mark.parametrize(
    "payload",
    [
        "not json",
        json.dumps({"field": "fp", "p": 4, "n": 3, "alg": "o", "diag": [0, 0, 0]}),
        json.dumps({"field": "fp", "p": 5, "n": 3, "alg": "o", "diag": [0, 0]}),
        json.dumps({"field": "fp", "p": 5, "n": 2, "alg": "h", "diag": [1, 0]}),
    ],
)
def test_classify_bad_input(tmp_path, payload):
    path = tmp_path / "bad.json"
    path.write_text(payload, encoding="utf-8")
    assert main(["classify", str(path)]) == EXIT_USAGE


def test_classify_missing_file(tmp_path):
    assert main(["classify", str(tmp_path / "absent.json")]) == EXIT_USAGE


def test_export_incidence(capsys):
    assert main(["export-incidence"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert len(data["points"]) == 27
    assert len(data["planes"]) == 45
    assert data["config"]["command"] == "export-incidence"


def test_enumerate_submodules(capsys):
    assert main(["enumerate-submodules", "--alg", "c", "--n", "2", "--dim", "2", "--p", "2"]) == EXIT_OK
    census = json.loads(capsys.readouterr().out)
    assert census["total"] == 11
    assert census["free_count"] == 9


def test_enumerate_submodules_scale_guard():
    assert main(["enumerate-submodules", "--alg", "h", "--n", "2", "--dim", "4", "--p", "5"]) == EXIT_USAGE


def test_automorphisms_budget_exhausted(capsys):
    assert main(["automorphisms", "--budget", "0"]) == EXIT_OK
    captured = capsys.readouterr()
    result = json.loads(captured.out)
    assert result["complete"] is False
    assert result["expected"] == 51840
    assert "budget" in captured.err


def test_summary_only_reads_the_log(isolated_log, capsys):
    isolated_log.write_text(
        json.dumps({"suite": "jordan", "check": "x0_witness", "success": False, "ts": "t"}) + "\n",
        encoding="utf-8",
    )
    assert main(["verify", "all", "--summary-only"]) == EXIT_OK
    summary = json.loads(capsys.readouterr().out)
    assert summary["currently_failing"] == ["jordan.x0_witness"]


@pytest.mark.parametrize("suite", ["compalg", "jordan", "classical", "calgmod"])
def test_verify_suite_end_to_end(suite, isolated_log, capsys):
    code = main(["verify", suite, "--trials", "3"])
    report = json.loads(capsys.readouterr().out)
    assert code == EXIT_OK
    assert report["success"]
    assert report["summary"]["failed"] == 0
    assert report["summary"]["passed"] > 0
    assert isolated_log.exists()


@pytest.mark.slow
def test_verify_cubic27_end_to_end(isolated_log, capsys):
    code = main(["verify", "cubic27", "--trials", "20", "--p", "7"])
    report = json.loads(capsys.readouterr().out)
    assert code == (EXIT_OK if report["success"] else EXIT_FAILED)
    assert code == EXIT_OK
    assert report["summary"]["skipped"] == 1
    assert isolated_log.exists()
