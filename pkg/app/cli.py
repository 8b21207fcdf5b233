"""Batch interface: ``python -m app <command> ...``.

Reports go to stdout (or ``-o``), logs to stderr. Exit codes follow the
error hierarchy in ``app.errors``; ``verify`` exits 1 when any record fails.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .algebra import LeibnizAlgebra
from .classify import FamilySpec, build, parse_field
from .config import settings
from .errors import BadParamsError, LeibnizLabError
from .lattice import LatticeBudget
from .services.algebra_io import emit_algebra, load_algebra, reduce_mod
from .services.reports import ENGINES, build_lattice_report, build_structure_report, validation_out
from .services.verification import (
    count_statuses,
    known_theorems,
    resolve_targets,
    run_verification,
)
from .utils.logging import get_logger, setup_logging

logger = get_logger(__name__)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m app",
        description="Exact invariants and theorem checks for finite-dimensional Leibniz algebras.",
    )
    parser.add_argument("--json-logs", action="store_true", help="one JSON object per log line")
    parser.add_argument("--log-level", default=None, help="loguru level (default from settings)")
    sub = parser.add_subparsers(dest="command", required=True)

    def algebra_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("file", type=Path)
        p.add_argument("--right-leibniz", action="store_true", help="table uses the right convention")
        p.add_argument("--mod", type=int, default=None, help="reduce a rational table mod p")

    def output(p: argparse.ArgumentParser) -> None:
        p.add_argument("-o", "--output", type=Path, default=None)

    def budget(p: argparse.ArgumentParser) -> None:
        p.add_argument("--budget", type=int, default=None, help="largest subspace count to enumerate")

    p_validate = sub.add_parser("validate", help="check the Leibniz identity on every basis triple")
    algebra_input(p_validate)

    p_report = sub.add_parser("report", help="structure report with engine tags")
    algebra_input(p_report)
    output(p_report)
    budget(p_report)
    p_report.add_argument("--engine", choices=ENGINES, default=None)
    p_report.add_argument("--no-timing", action="store_true", help="omit timings for byte-stable output")

    p_catalog = sub.add_parser("catalog", help="emit a catalog family as an algebra file")
    p_catalog.add_argument("name")
    p_catalog.add_argument("params", nargs="*", metavar="k=v")
    p_catalog.add_argument("--field", default="Q", help="Q or GF(p)")
    p_catalog.add_argument("--mod", type=int, default=None, help="build over Q, then reduce mod p")
    output(p_catalog)

    p_verify = sub.add_parser("verify", help="run a theorem verifier, JSON lines out")
    p_verify.add_argument("theorem", choices=known_theorems())
    p_verify.add_argument("targets", nargs="*", help="files, catalog:<Family>..., corpus:GF(p):d")
    p_verify.add_argument("--field", default="Q", help="field of the default catalog grid")
    p_verify.add_argument("--right-leibniz", action="store_true")
    p_verify.add_argument("--concurrency", type=int, default=None)
    output(p_verify)
    budget(p_verify)

    p_lattice = sub.add_parser("lattice", help="raw lattice report over GF(p)")
    algebra_input(p_lattice)
    output(p_lattice)
    budget(p_lattice)
    return parser


def _load(args: argparse.Namespace, checked: bool = True) -> LeibnizAlgebra:
    alg = load_algebra(args.file, right_leibniz=args.right_leibniz, checked=checked)
    if args.mod is not None:
        alg = reduce_mod(alg, args.mod, checked=checked)
    return alg


def _budget(args: argparse.Namespace) -> Optional[LatticeBudget]:
    if getattr(args, "budget", None) is None:
        return None
    return LatticeBudget(max_subspaces=args.budget)


def _write(text: str, path: Optional[Path]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    path.write_text(text, encoding="utf-8")
    logger.info(f"wrote {path}")


def _parse_params(items: Sequence[str]) -> dict[str, str]:
    params = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise BadParamsError(f"parameter {item!r} is not key=value")
        params[key.strip()] = value.strip()
    return params


def cmd_validate(args: argparse.Namespace) -> int:
    out = validation_out(_load(args, checked=False))
    sys.stdout.write(out.model_dump_json(indent=2) + "\n")
    return 0 if out.ok else 1


def cmd_report(args: argparse.Namespace) -> int:
    report = build_structure_report(
        _load(args), engine=args.engine, budget=_budget(args), timing=not args.no_timing
    )
    exclude = {"timing_ms"} if args.no_timing else None
    _write(report.model_dump_json(indent=2, exclude=exclude) + "\n", args.output)
    return 0


def cmd_catalog(args: argparse.Namespace) -> int:
    spec = FamilySpec.of(args.name, **_parse_params(args.params))
    if args.mod is not None:
        alg = reduce_mod(build(spec), args.mod)
    else:
        alg = build(spec, parse_field(args.field))
    _write(emit_algebra(alg), args.output)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    targets = resolve_targets(args.targets, args.field, args.right_leibniz)
    records = asyncio.run(
        run_verification(args.theorem, targets, _budget(args), args.concurrency)
    )
    lines = [
        json.dumps(r.to_out().model_dump(mode="json"), ensure_ascii=False) for r in records
    ]
    _write("".join(line + "\n" for line in lines), args.output)
    counts = count_statuses(records)
    logger.info(f"{args.theorem}: {counts}")
    return 1 if counts["fail"] else 0


def cmd_lattice(args: argparse.Namespace) -> int:
    report = build_lattice_report(_load(args), _budget(args))
    _write(report.model_dump_json(indent=2) + "\n", args.output)
    return 0


COMMANDS = {
    "validate": cmd_validate,
    "report": cmd_report,
    "catalog": cmd_catalog,
    "verify": cmd_verify,
    "lattice": cmd_lattice,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    json_logs = args.json_logs or settings.environment in ("staging", "prod")
    setup_logging(args.log_level or settings.log_level, json_format=json_logs, sink=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except LeibnizLabError as exc:
        logger.bind(error_type=exc.error_type, exit_code=exc.exit_code).error(str(exc))
        sys.stderr.write(json.dumps(exc.to_dict(), ensure_ascii=False) + "\n")
        return exc.exit_code
