# compalg_kit/cli/app.py

"""
compalg-kit command line.

    compalg-kit verify <suite> [--summary-only]
    compalg-kit classify <path>
    compalg-kit enumerate-submodules --alg c|h --n N --dim D
    compalg-kit export-incidence
    compalg-kit automorphisms --budget SECONDS

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from compalg_kit.calgmod.census import enumerate_submodules
from compalg_kit.cubic27.automorphisms import incidence_automorphism_count
from compalg_kit.cubic27.incidence import AUTOMORPHISM_COUNT, incidence_payload
from compalg_kit.errors import CodecError, CompalgKitError, ConfigError
from compalg_kit.foundation.codec import HermitianPayload, dump_payload, field_header, load_payload
from compalg_kit.jordan.hermitian import hermitian_from_payload
from compalg_kit.jordan.octonion_plane import classify_payload
from compalg_kit.verify.config import SUITES, Registry, SuiteConfig, default_workers, load_registry
from compalg_kit.verify.report import summarize_events
from compalg_kit.verify.runner import SuiteRunner

logger = logging.getLogger("compalg_kit")

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


# ---------- Parser ----------


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", choices=["q", "fp"], default=None, help="base field (default from suites.yaml)")
    common.add_argument("--p", type=int, default=None, help="characteristic when --field fp")
    common.add_argument("--trials", type=int, default=None, help="override sampled trial counts")
    common.add_argument("--seed", type=int, default=None, help="64-bit seed for the trial streams")
    common.add_argument("--long", action="store_true", help="include long-running checks")
    common.add_argument("--out", type=Path, default=None, help="write the JSON output here instead of stdout")
    common.add_argument("--workers", type=int, default=None, help="process pool size for trials and enumeration")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="compalg-kit",
        description="Exact checks for projective geometry over split composition algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="run a registered check suite")
    verify.add_argument("suite", choices=SUITES + ("all",))
    verify.add_argument(
        "--summary-only",
        action="store_true",
        help="summarize the evidence log instead of running checks",
    )

    classify = sub.add_parser("classify", parents=[common], help="rank-one verdict for an H_3(O) matrix file")
    classify.add_argument("path", type=Path)

    census = sub.add_parser("enumerate-submodules", parents=[common], help="census of right submodules")
    census.add_argument("--alg", choices=["c", "h"], required=True)
    census.add_argument("--n", type=int, required=True)
    census.add_argument("--dim", type=int, required=True)

    sub.add_parser("export-incidence", parents=[common], help="the 27 points and 45 signed planes")

    autos = sub.add_parser("automorphisms", parents=[common], help="count incidence automorphisms")
    autos.add_argument("--budget", type=float, default=300.0, help="seconds before a partial count is returned")
    return parser


# ---------- Helpers ----------


def _progress(message: str) -> None:
    print(message, file=sys.stderr)


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    _progress(f"[compalg-kit] 📄 wrote {out}")


def _dump(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def suite_config(args: argparse.Namespace, registry: Registry, suite: str) -> SuiteConfig:
    """Command-line flags over the suites.yaml defaults block."""
    defaults = registry.defaults
    field = args.field or defaults.get("field", "fp")
    p = args.p if args.p is not None else defaults.get("p")
    return SuiteConfig(
        suite=suite,
        field=field,
        p=p if field == "fp" else None,
        trials=args.trials,
        seed=args.seed if args.seed is not None else int(defaults.get("seed", 0)),
        long_running=args.long,
        workers=args.workers if args.workers is not None else default_workers(defaults),
    )


def _command_header(args: argparse.Namespace, config: SuiteConfig, **arguments: Any) -> Dict[str, Any]:
    header = field_header(config.context())
    header.update({"seed": config.seed, "command": args.command})
    if arguments:
        header["arguments"] = arguments
    return header


# ---------- Commands ----------


def run_verify(args: argparse.Namespace, registry: Registry) -> int:
    if args.summary_only:
        summary = summarize_events(registry.log_file)
        _emit(_dump({"log": str(registry.log_file), **summary}), args.out)
        return EXIT_OK

    config = suite_config(args, registry, args.suite)
    runner = SuiteRunner(config, registry)

    def progress(entry: Dict[str, Any]) -> None:
        name = f"{entry['suite']}.{entry['check']}"
        if entry.get("skipped"):
            _progress(f"[verify] ⏭️  {name}: {entry['reason']}")
        elif entry["success"]:
            _progress(f"[verify] ✅ {name}")
        else:
            result = entry["result"]
            reason = entry["error"] or f"failed {result.get('failed', '?')} of {result.get('checked', '?')}"
            _progress(f"[verify] ❌ {name}: {reason}")

    _progress(f"[verify] running {', '.join(config.suites)} over {config.context().label} (seed {config.seed})")
    report = runner.run(progress)
    summary = report["summary"]
    _progress(
        f"[verify] {summary['passed']} passed, {summary['failed']} failed, {summary['skipped']} skipped"
    )
    _emit(_dump(report), args.out)
    return EXIT_OK if report["success"] else EXIT_FAILED


def run_classify(args: argparse.Namespace, registry: Registry) -> int:
    """Input problems (parse, wrong algebra or size) surface as exit 2 through main."""
    a = hermitian_from_payload(load_payload(HermitianPayload, args.path))
    payload = classify_payload(a, {**field_header(a.context), "command": "classify", "path": str(args.path)})
    if payload.rank_one:
        _progress(f"[classify] rank one, {payload.class_}")
    else:
        _progress(f"[classify] not rank one (first nonzero residual {payload.first_nonzero_residual})")
    _emit(dump_payload(payload), args.out)
    return EXIT_OK


def run_census(args: argparse.Namespace, registry: Registry) -> int:
    config = suite_config(args, registry, "calgmod")
    census = enumerate_submodules(
        args.alg,
        args.n,
        args.dim,
        config.context(),
        config.workers,
        extra_config={"seed": config.seed, "command": args.command},
    )
    _progress(f"[census] {census.total} submodules in {len(census.groups)} groups")
    _emit(dump_payload(census), args.out)
    return EXIT_OK


def run_export(args: argparse.Namespace, registry: Registry) -> int:
    config = suite_config(args, registry, "cubic27")
    payload = incidence_payload(_command_header(args, config))
    _emit(dump_payload(payload), args.out)
    return EXIT_OK


def run_automorphisms(args: argparse.Namespace, registry: Registry) -> int:
    config = suite_config(args, registry, "cubic27")
    result = incidence_automorphism_count(args.budget)
    if not result.complete:
        _progress(f"[automorphisms] ⚠️ budget of {args.budget}s exhausted; partial count {result.count}")
    _emit(
        _dump(
            {
                "config": _command_header(args, config, budget=args.budget),
                "count": result.count,
                "complete": result.complete,
                "nodes": result.nodes,
                "expected": AUTOMORPHISM_COUNT,
            }
        ),
        args.out,
    )
    if result.complete and result.count != AUTOMORPHISM_COUNT:
        return EXIT_FAILED
    return EXIT_OK


COMMANDS = {
    "verify": run_verify,
    "classify": run_classify,
    "enumerate-submodules": run_census,
    "export-incidence": run_export,
    "automorphisms": run_automorphisms,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    logger.debug("command %s: %s", args.command, vars(args))

    try:
        registry = load_registry()
        return COMMANDS[args.command](args, registry)
    except (ConfigError, CodecError, FileNotFoundError) as exc:
        _progress(f"[compalg-kit] ❌ {exc}")
        return EXIT_USAGE
    except CompalgKitError as exc:
        # scale guards and other precondition failures outside a check
        _progress(f"[compalg-kit] ❌ {type(exc).__name__}: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
