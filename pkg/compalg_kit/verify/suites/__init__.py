"""
Check handlers registered in verify/config/suites.yaml.

A handler is run(params, context) -> dict with a "success" key. Sampled
checks hand a module-level trial function to `sampled`, which binds the
seed and label and fans the trials out over the worker pool.
"""

from __future__ import annotations

from functools import partial
from typing import Any, Callable, Dict

from compalg_kit.foundation.sampling import run_trials
from compalg_kit.foundation.tally import Tally


def sampled(fn: Callable[..., Any], context: Dict[str, Any], **kwargs: Any) -> Tally:
    """fn(index, seed=, label=, **kwargs) returns ok or (ok, example)."""
    job = partial(fn, seed=context["seed"], label=context["label"], **kwargs)
    return Tally().extend(run_trials(job, context["trials"], context["workers"]))
