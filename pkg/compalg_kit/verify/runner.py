# compalg_kit/verify/runner.py

from __future__ import annotations

import importlib
import json
import logging
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from compalg_kit.errors import ConfigError
from compalg_kit.foundation.tally import to_jsonable
from compalg_kit.verify.config import CheckSpec, Registry, SuiteConfig, load_registry

logger = logging.getLogger(__name__)

Handler = Callable[[Dict[str, Any], Dict[str, Any]], Dict[str, Any]]

# result keys copied into the evidence log next to success/error
SUMMARY_KEYS = ("checked", "failed", "grid_count", "count", "complete", "total")


@dataclass
class Check:
    spec: CheckSpec
    handler: Handler


class SuiteRunner:
    """
    Runs the registered checks of one or all suites.

    Every handler is called as handler(params, context) and wrapped so that
    an exception is a failed check, never a crashed run.
    """

    def __init__(
        self,
        config: SuiteConfig,
        registry: Optional[Registry] = None,
        log_file: Optional[Path] = None,
    ) -> None:
        self.config = config
        self.registry = registry or load_registry()
        self.log_path = Path(log_file) if log_file else self.registry.log_file
        self.context_field = config.context()
        self._checks: Dict[str, Check] = {}

    # ---------- Registry ----------

    def _resolve(self, spec: CheckSpec) -> Check:
        if spec.qualified_name not in self._checks:
            try:
                module = importlib.import_module(spec.module)
                handler = getattr(module, spec.function)
            except (ImportError, AttributeError) as exc:
                raise ConfigError(f"cannot resolve {spec.qualified_name}: {exc}") from exc
            self._checks[spec.qualified_name] = Check(spec=spec, handler=handler)
        return self._checks[spec.qualified_name]

    def planned(self) -> List[CheckSpec]:
        return [spec for suite in self.config.suites for spec in self.registry.for_suite(suite)]

    def skip_reason(self, spec: CheckSpec) -> Optional[str]:
        if spec.long and not self.config.long_running:
            return "long-running; pass --long"
        if not spec.applies_to(self.config.field):
            return f"runs on field {'/'.join(spec.fields)}"
        return None

    def trials_for(self, spec: CheckSpec) -> int:
        """0 marks exhaustive or one-shot checks, which ignore --trials."""
        if spec.trials == 0:
            return 0
        return self.config.trials if self.config.trials is not None else spec.trials

    # ---------- Execution ----------

    def run_check(self, spec: CheckSpec) -> Dict[str, Any]:
        check = self._resolve(spec)
        trials = self.trials_for(spec)
        context = {
            "config": self.config,
            "field": self.context_field,
            "trials": trials,
            "seed": self.config.seed,
            "workers": self.config.workers,
            "label": spec.qualified_name,
        }
        logger.debug("running %s (trials=%d)", spec.qualified_name, trials)
        try:
            output = check.handler(dict(spec.params), context)
            if "success" not in output:
                output = {"success": True, **output}
            result = {
                "suite": spec.suite,
                "check": spec.name,
                "success": bool(output["success"]),
                "error": None,
                "trials": trials,
                "result": to_jsonable({k: v for k, v in output.items() if k != "success"}),
            }
        except Exception as exc:  # a raising check is a failed check
            logger.debug("%s raised", spec.qualified_name, exc_info=True)
            result = {
                "suite": spec.suite,
                "check": spec.name,
                "success": False,
                "error": f"{type(exc).__name__}: {exc}",
                "trials": trials,
                "result": {},
            }
        self._log(result)
        return result

    def run(self, progress: Optional[Callable[[Dict[str, Any]], None]] = None) -> Dict[str, Any]:
        """The report: byte-identical for the same config and seed."""
        checks: List[Dict[str, Any]] = []
        skipped: List[Dict[str, Any]] = []
        for spec in self.planned():
            reason = self.skip_reason(spec)
            if reason:
                entry = {"suite": spec.suite, "check": spec.name, "reason": reason}
                skipped.append(entry)
                if progress:
                    progress({**entry, "skipped": True})
                continue
            result = self.run_check(spec)
            checks.append(result)
            if progress:
                progress(result)
        passed = sum(1 for c in checks if c["success"])
        return {
            "config": self.config.as_header(),
            "success": passed == len(checks),
            "checks": checks,
            "skipped": skipped,
            "summary": {
                "passed": passed,
                "failed": len(checks) - passed,
                "skipped": len(skipped),
            },
        }

    def _log(self, result: Dict[str, Any]) -> None:
        summary = {k: result["result"][k] for k in SUMMARY_KEYS if k in result["result"]}
        record = {
            "ts": datetime.now(timezone.utc).isoformat().replace("+00:00", "Z"),
            "suite": result["suite"],
            "check": result["check"],
            "config": self.config.as_header(),
            "success": result["success"],
            "summary": summary,
            "error": result["error"],
        }
        try:
            self.log_path.parent.mkdir(parents=True, exist_ok=True)
            with self.log_path.open("a", encoding="utf-8") as f:
                f.write(json.dumps(record, sort_keys=True) + "\n")
        except OSError as exc:
            logger.warning("evidence log not written (%s): %s", self.log_path, exc)
