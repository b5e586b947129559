# compalg_kit/foundation/tally.py

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Iterable, List


def to_jsonable(value: Any) -> Any:
    """Fractions become "a/b" strings, tuples become lists; recursion into containers."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return value
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    return str(value)


def bullet_report(bullets: Dict[str, bool], **extra: Any) -> Dict[str, Any]:
    """Pass/fail per named bullet; success iff every bullet holds."""
    return {"success": all(bullets.values()), "bullets": dict(bullets), **extra}


class Tally:
    """
    Collects trial outcomes into the check envelope.

    Only the first `keep` counterexamples are stored, in trial order.
    """

    def __init__(self, keep: int = 3) -> None:
        self.keep = keep
        self.checked = 0
        self.failed = 0
        self.counterexamples: List[Any] = []
        self.notes: Dict[str, Any] = {}

    def record(self, ok: bool, example: Any = None) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.counterexamples) < self.keep:
                self.counterexamples.append(to_jsonable(example))

    def extend(self, outcomes: Iterable[Any]) -> "Tally":
        """Accepts bools or (ok, example) pairs."""
        for outcome in outcomes:
            if isinstance(outcome, tuple):
                self.record(*outcome)
            else:
                self.record(bool(outcome))
        return self

    def note(self, key: str, value: Any) -> None:
        self.notes[key] = to_jsonable(value)

    @property
    def success(self) -> bool:
        return self.failed == 0

    def as_result(self, **extra: Any) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "success": self.success,
            "checked": self.checked,
            "failed": self.failed,
        }
        if self.counterexamples:
            out["counterexamples"] = self.counterexamples
        if self.notes:
            out["notes"] = self.notes
        out.update({k: to_jsonable(v) for k, v in extra.items()})
        return out
