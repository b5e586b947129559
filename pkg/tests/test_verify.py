# tests/test_verify.py

import json
import sys
import types
from pathlib import Path

import pytest

# Ensure project root is on sys.path
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from compalg_kit.errors import ConfigError
from compalg_kit.verify.config import SUITES, CheckSpec, Registry, SuiteConfig, load_registry
from compalg_kit.verify.report import load_jsonl, summarize_events
from compalg_kit.verify.runner import SuiteRunner

SUITE_MODULE = "compalg_kit.verify.suites.compalg_suite"


def _broken_check(params, context):
    raise ValueError("boom")


@pytest.fixture
def fake_checks(monkeypatch):
    module = types.ModuleType("fake_checks")
    module.broken = _broken_check
    module.plain = lambda params, context: {"note": params.get("note", "ok")}
    monkeypatch.setitem(sys.modules, "fake_checks", module)
    return module


def make_registry(tmp_path, checks):
    return Registry(checks=checks, defaults={}, log_file=tmp_path / "events.jsonl")


# ---------- Config ----------


def test_default_registry_covers_every_suite():
    registry = load_registry()
    assert {c.suite for c in registry.checks} == set(SUITES)
    names = {c.qualified_name for c in registry.checks}
    assert "compalg.triality" in names
    assert "cubic27.det_theta" in names
    assert registry.defaults["p"] == 5
    assert next(c for c in registry.checks if c.name == "automorphisms").long


def test_jordan_sampled_checks_cover_rationals():
    checks = {c.qualified_name: c for c in load_registry().checks}
    associative = checks["jordan.fundamental_identity"]
    assert associative.applies_to("q") and associative.applies_to("fp")
    assert associative.trials == 500
    assert associative.params["algebras"] == ["C", "H"]
    octonionic = checks["jordan.fundamental_identity_o"]
    assert not octonionic.applies_to("q")
    assert octonionic.params["algebras"] == ["O"]
    assert checks["jordan.rank_one_random"].applies_to("q")
    assert checks["jordan.rank_one_random_f3"].params["p"] == 3


def test_checks_inherit_default_trials(tmp_path):
    path = tmp_path / "suites.yaml"
    path.write_text(
        "defaults:\n  trials: 42\n"
        "suites:\n  compalg:\n"
        f"    sampled:\n      module: {SUITE_MODULE}\n      function: field_axioms\n"
        f"    one_shot:\n      module: {SUITE_MODULE}\n      function: x0_images\n      trials: 0\n",
        encoding="utf-8",
    )
    registry = load_registry(path)
    trials = {c.name: c.trials for c in registry.checks}
    assert trials == {"sampled": 42, "one_shot": 0}


def test_unknown_suite_in_yaml(tmp_path):
    path = tmp_path / "suites.yaml"
    path.write_text("suites:\n  topology:\n    x:\n      module: m\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_registry(path)


def test_entry_without_module(tmp_path):
    path = tmp_path / "suites.yaml"
    path.write_text("suites:\n  compalg:\n    x:\n      trials: 3\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_registry(path)


def test_missing_registry_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_registry(tmp_path / "absent.yaml")


def test_log_file_from_environment(tmp_path, monkeypatch):
    target = tmp_path / "custom.jsonl"
    monkeypatch.setenv("COMPALG_KIT_LOG_FILE", str(target))
    assert load_registry().log_file == target


@pytest.mark.parametrize(
    "kwargs",
    [
        {"suite": "all", "p": 0},
        {"suite": "all", "p": 4},
        {"suite": "all", "p": None},
        {"suite": "all", "trials": 0},
        {"suite": "all", "workers": 0},
        {"suite": "all", "seed": -1},
        {"suite": "all", "field": "r"},
        {"suite": "topology"},
    ],
)
def test_invalid_suite_config(kwargs):
    with pytest.raises(ConfigError):
        SuiteConfig(**kwargs)


def test_rational_config_drops_p():
    config = SuiteConfig(suite="compalg", field="q", p=None)
    assert config.context().label == "Q"
    assert "p" not in config.as_header()


# ---------- Runner ----------


def test_sampled_check_uses_trial_override(tmp_path):
    spec = CheckSpec("compalg", "field_axioms", SUITE_MODULE, "field_axioms", trials=1000)
    runner = SuiteRunner(SuiteConfig(suite="compalg", trials=25), make_registry(tmp_path, [spec]))
    result = runner.run_check(spec)
    assert result["success"] is True
    assert result["trials"] == 25
    assert result["result"]["checked"] == 25


def test_one_shot_check_ignores_trials(tmp_path):
    spec = CheckSpec("compalg", "x0_images", SUITE_MODULE, "x0_images", trials=0)
    runner = SuiteRunner(SuiteConfig(suite="compalg", trials=25), make_registry(tmp_path, [spec]))
    assert runner.trials_for(spec) == 0
    assert runner.run_check(spec)["success"] is True


def test_raising_check_is_a_failed_check(tmp_path, fake_checks):
    spec = CheckSpec("compalg", "broken", "fake_checks", "broken")
    runner = SuiteRunner(SuiteConfig(suite="compalg"), make_registry(tmp_path, [spec]))
    result = runner.run_check(spec)
    assert result["success"] is False
    assert result["error"] == "ValueError: boom"
    assert result["result"] == {}


def test_handler_without_success_key_passes(tmp_path, fake_checks):
    spec = CheckSpec("compalg", "plain", "fake_checks", "plain", params={"note": "hi"})
    runner = SuiteRunner(SuiteConfig(suite="compalg"), make_registry(tmp_path, [spec]))
    result = runner.run_check(spec)
    assert result["success"] is True
    assert result["result"] == {"note": "hi"}


def test_unresolvable_handler(tmp_path):
    spec = CheckSpec("compalg", "ghost", "compalg_kit.verify.suites.compalg_suite", "does_not_exist")
    runner = SuiteRunner(SuiteConfig(suite="compalg"), make_registry(tmp_path, [spec]))
    with pytest.raises(ConfigError):
        runner.run_check(spec)


def test_skips_long_and_field_restricted_checks(tmp_path, fake_checks):
    checks = [
        CheckSpec("compalg", "plain", "fake_checks", "plain"),
        CheckSpec("compalg", "long_one", "fake_checks", "plain", long=True),
        CheckSpec("compalg", "rational_only", "fake_checks", "plain", fields=("q",)),
        CheckSpec("jordan", "other_suite", "fake_checks", "plain"),
    ]
    runner = SuiteRunner(SuiteConfig(suite="compalg"), make_registry(tmp_path, checks))
    seen = []
    report = runner.run(seen.append)
    assert report["summary"] == {"passed": 1, "failed": 0, "skipped": 2}
    assert [s["check"] for s in report["skipped"]] == ["long_one", "rational_only"]
    assert len(seen) == 3
    assert report["success"] is True


def test_report_is_deterministic_and_logged(tmp_path, fake_checks):
    checks = [
        CheckSpec("compalg", "field_axioms", SUITE_MODULE, "field_axioms", trials=20),
        CheckSpec("compalg", "broken", "fake_checks", "broken"),
    ]
    registry = make_registry(tmp_path, checks)
    config = SuiteConfig(suite="compalg", seed=7)
    first = SuiteRunner(config, registry).run()
    second = SuiteRunner(config, registry).run()
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)
    assert first["success"] is False
    assert first["config"]["seed"] == 7

    events = load_jsonl(registry.log_file)
    assert len(events) == 4
    assert all("ts" in e for e in events)
    summary = summarize_events(registry.log_file)
    assert summary["suites"] == {"compalg": {"passed": 2, "failed": 2}}
    assert summary["currently_failing"] == ["compalg.broken"]


# ---------- Evidence log ----------


def test_load_jsonl_skips_bad_lines(tmp_path, capsys):
    path = tmp_path / "events.jsonl"
    path.write_text('{"suite": "jordan", "check": "a", "success": true}\nnot json\n\n', encoding="utf-8")
    events = load_jsonl(path)
    assert len(events) == 1
    assert "Skipping invalid JSON" in capsys.readouterr().err


def test_missing_log_is_empty(tmp_path, capsys):
    assert summarize_events(tmp_path / "none.jsonl")["events"] == 0
    assert "not found" in capsys.readouterr().err


def test_later_success_clears_failure(tmp_path):
    path = tmp_path / "events.jsonl"
    lines = [
        {"suite": "cubic27", "check": "det_theta", "success": False, "ts": "t1"},
        {"suite": "cubic27", "check": "det_theta", "success": True, "ts": "t2"},
    ]
    path.write_text("".join(json.dumps(x) + "\n" for x in lines), encoding="utf-8")
    assert summarize_events(path)["currently_failing"] == []
