"""Check suites registered in config/suites.yaml, run with a JSONL evidence log."""

from compalg_kit.verify.config import CheckSpec, Registry, SuiteConfig, load_registry
from compalg_kit.verify.report import summarize_events
from compalg_kit.verify.runner import SuiteRunner

__all__ = ["CheckSpec", "Registry", "SuiteConfig", "SuiteRunner", "load_registry", "summarize_events"]
