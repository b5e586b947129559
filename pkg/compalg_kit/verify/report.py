# compalg_kit/verify/report.py

"""Roll-up of the JSONL evidence log written by SuiteRunner."""

from __future__ import annotations

import json
import sys
from collections import Counter, defaultdict
from pathlib import Path
from typing import Any, Dict, List, Union


def load_jsonl(path: Path) -> List[Dict[str, Any]]:
    """Best-effort load of a JSONL file; bad lines are reported and skipped."""
    if not path.exists():
        print(f"[verify] ⚠️ Evidence log not found, skipping: {path}", file=sys.stderr)
        return []

    events = []
    with path.open("r", encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                events.append(json.loads(line))
            except json.JSONDecodeError:
                print(
                    f"[verify] ⚠️ Skipping invalid JSON on {path.name}:{line_no}",
                    file=sys.stderr,
                )
    return events


def summarize_events(path: Union[str, Path]) -> Dict[str, Any]:
    """Per-suite pass/fail counters and the most recently failing checks."""
    events = load_jsonl(Path(path))
    per_suite: Dict[str, Counter] = defaultdict(Counter)
    last_failure: Dict[str, str] = {}
    for event in events:
        suite = event.get("suite", "unknown")
        name = f"{suite}.{event.get('check', '?')}"
        if event.get("success"):
            per_suite[suite]["passed"] += 1
            last_failure.pop(name, None)
        else:
            per_suite[suite]["failed"] += 1
            last_failure[name] = event.get("ts", "")
    return {
        "events": len(events),
        "suites": {
            suite: {"passed": c["passed"], "failed": c["failed"]}
            for suite, c in sorted(per_suite.items())
        },
        "currently_failing": sorted(last_failure),
    }
