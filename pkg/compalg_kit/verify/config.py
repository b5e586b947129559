# compalg_kit/verify/config.py

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml
from dotenv import load_dotenv

from compalg_kit.errors import CompalgKitError, ConfigError
from compalg_kit.foundation.fields import MAX_PRIME, FieldContext, is_prime

BASE_DIR = Path(__file__).resolve().parent
CONFIG_PATH = BASE_DIR / "config" / "suites.yaml"

SUITES = ("compalg", "jordan", "classical", "calgmod", "cubic27")
FIELD_KINDS = ("q", "fp")

LOG_FILE_ENV = "COMPALG_KIT_LOG_FILE"
WORKERS_ENV = "COMPALG_KIT_WORKERS"


@dataclass(frozen=True)
class CheckSpec:
    """One registered check: where its handler lives and when it applies."""

    suite: str
    name: str
    module: str
    function: str
    trials: int = 0
    long: bool = False
    fields: Tuple[str, ...] = ("any",)
    params: Dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def qualified_name(self) -> str:
        return f"{self.suite}.{self.name}"

    def applies_to(self, field_kind: str) -> bool:
        return "any" in self.fields or field_kind in self.fields


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    field: str = "fp"
    p: Optional[int] = 5
    trials: Optional[int] = None
    seed: int = 0
    long_running: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        if self.suite not in SUITES + ("all",):
            raise ConfigError(f"unknown suite {self.suite!r}; expected one of {SUITES + ('all',)}")
        if self.field not in FIELD_KINDS:
            raise ConfigError(f"unknown field {self.field!r}; expected q or fp")
        if self.field == "fp":
            if self.p is None:
                raise ConfigError("--p is required with --field fp")
            if not is_prime(self.p) or self.p >= MAX_PRIME:
                raise ConfigError(f"--p must be a prime below {MAX_PRIME}, got {self.p}")
        if self.trials is not None and self.trials < 1:
            raise ConfigError(f"--trials must be at least 1, got {self.trials}")
        if self.workers < 1:
            raise ConfigError(f"--workers must be at least 1, got {self.workers}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("--seed must fit in 64 unsigned bits")

    @property
    def suites(self) -> Tuple[str, ...]:
        return SUITES if self.suite == "all" else (self.suite,)

    def context(self) -> FieldContext:
        try:
            return FieldContext.parse(self.field, self.p if self.field == "fp" else None)
        except CompalgKitError as exc:
            raise ConfigError(str(exc)) from exc

    def as_header(self) -> Dict[str, Any]:
        """The config block embedded in reports; no timestamps."""
        header: Dict[str, Any] = {"suite": self.suite, "field": self.field}
        if self.field == "fp":
            header["p"] = self.p
        header.update(
            {
                "trials": self.trials,
                "seed": self.seed,
                "long": self.long_running,
            }
        )
        return header


@dataclass
class Registry:
    checks: List[CheckSpec]
    defaults: Dict[str, Any]
    log_file: Path

    def for_suite(self, suite: str) -> List[CheckSpec]:
        return [c for c in self.checks if c.suite == suite]


def _as_fields(raw: Any) -> Tuple[str, ...]:
    if raw is None:
        return ("any",)
    if isinstance(raw, str):
        return (raw,)
    return tuple(str(x) for x in raw)


def load_registry(path: Path = CONFIG_PATH) -> Registry:
    """
    Read suites.yaml into CheckSpecs.

    COMPALG_KIT_LOG_FILE (from the environment or a .env file) overrides
    `logging.file`.
    """
    load_dotenv(override=False)
    if not path.exists():
        raise FileNotFoundError(f"Suite config not found at {path}")
    with path.open("r", encoding="utf-8") as f:
        raw = yaml.safe_load(f) or {}

    defaults = dict(raw.get("defaults") or {})
    checks: List[CheckSpec] = []
    for suite, entries in (raw.get("suites") or {}).items():
        if suite not in SUITES:
            raise ConfigError(f"suites.yaml names an unknown suite {suite!r}")
        for name, cfg in (entries or {}).items():
            try:
                checks.append(
                    CheckSpec(
                        suite=suite,
                        name=name,
                        module=cfg["module"],
                        function=cfg.get("function", "run"),
                        trials=int(cfg.get("trials", defaults.get("trials", 0))),
                        long=bool(cfg.get("long", False)),
                        fields=_as_fields(cfg.get("fields")),
                        params=dict(cfg.get("params") or {}),
                    )
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise ConfigError(f"bad entry {suite}.{name}: {exc}") from exc

    log_file = os.getenv(LOG_FILE_ENV) or (raw.get("logging") or {}).get(
        "file", "logs/verify_events.jsonl"
    )
    return Registry(checks=checks, defaults=defaults, log_file=Path(log_file))


def default_workers(defaults: Dict[str, Any]) -> int:
    value = os.getenv(WORKERS_ENV)
    if value:
        try:
            return int(value)
        except ValueError as exc:
            raise ConfigError(f"{WORKERS_ENV} must be an integer, got {value!r}") from exc
    return int(defaults.get("workers", 1))
