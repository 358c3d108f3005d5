"""Command-line entry point.

Usage:
    python -m tripurify basis verify --qubits 4
    python -m tripurify purify --c1 0.5
    python -m tripurify iterate --c1 0.45 --rounds 25
    python -m tripurify sweep --from 0.125 --to 1 --steps 200 --out curves.csv
    python -m tripurify witness --c1 0.7 --preset ghz
    python -m tripurify byproduct --mix gb1gb4 --c1 0.6 --outcome 100
    python -m tripurify eigencheck
    python -m tripurify check --samples 200 --seed 7

Exit status: 0 success, 1 validation failure or failed check, 2 usage error.
Tables go to stdout, logs and errors to stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from pydantic import ValidationError

from tripurify import report
from tripurify.analysis import fixed_points_concise, recurrence, run_checks
from tripurify.basis import (
    eigencheck_basic_states,
    eigencheck_genuine_basis,
    genuine_basis,
    verify_basis,
)
from tripurify.byproduct import mixture_byproduct
from tripurify.coeff_parser import load_coefficients
from tripurify.config import PurifySettings, get_settings
from tripurify.curves import export_curves
from tripurify.engine import iterate_rounds, purification_round
from tripurify.models import CoefficientVector, MixturePreset, WitnessPreset
from tripurify.witness import witness_on_state, witness_report
from tripurify.wstates import concise_state

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

DEFAULT_SWEEP_NAME = "concise_map.csv"


def _build_parser(settings: PurifySettings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tripurify",
        description="Tripartite genuine-basis purification simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    basis = sub.add_parser("basis", help="Genuine basis tools")
    basis_sub = basis.add_subparsers(dest="basis_command", required=True)
    verify = basis_sub.add_parser("verify", help="Check orthonormality and completeness")
    verify.add_argument("--qubits", type=int, choices=(3, 4), default=3)
    verify.add_argument("--tol", type=float, default=settings.algebra_tol)

    purify = sub.add_parser("purify", help="One round, all branches")
    source = purify.add_mutually_exclusive_group(required=True)
    source.add_argument("--c1", type=float, help="Concise state with this GB1 population")
    source.add_argument("--coeffs", type=Path, help="File with 8 or 16 coefficients")
    purify.add_argument("--json", action="store_true", help="Print the round as JSON")

    iterate = sub.add_parser("iterate", help="Recurrence of the concise map")
    iterate.add_argument("--c1", type=float, required=True)
    iterate.add_argument("--rounds", type=int, required=True)
    iterate.add_argument(
        "--brute-force",
        action="store_true",
        help="Run every round on the full state instead of the closed-form map",
    )
    iterate.add_argument(
        "--no-twirl",
        action="store_true",
        help="With --brute-force, skip the twirl between rounds",
    )

    sweep = sub.add_parser("sweep", help="Write the concise-map curve table")
    sweep.add_argument("--from", dest="f_min", type=float, default=0.0)
    sweep.add_argument("--to", dest="f_max", type=float, default=1.0)
    sweep.add_argument("--steps", type=int, default=201)
    sweep.add_argument("--out", type=Path, default=settings.output_dir / DEFAULT_SWEEP_NAME)
    sweep.add_argument("--workers", type=int, default=settings.sweep_workers)

    witness = sub.add_parser("witness", help="Witness expectations on a concise state")
    witness.add_argument("--c1", type=float, required=True)
    witness.add_argument(
        "--preset",
        type=WitnessPreset,
        choices=list(WitnessPreset),
        metavar="{" + ",".join(p.value for p in WitnessPreset) + "}",
        default=None,
    )

    byproduct = sub.add_parser("byproduct", help="Bell pair left by a failure outcome")
    byproduct.add_argument(
        "--mix",
        type=MixturePreset,
        choices=list(MixturePreset),
        metavar="{" + ",".join(m.value for m in MixturePreset) + "}",
        required=True,
    )
    byproduct.add_argument("--c1", type=float, default=0.5)
    byproduct.add_argument("--outcome", type=str, required=True)

    sub.add_parser("eigencheck", help="Total-spin eigencheck of the basic and GB states")

    check = sub.add_parser("check", help="Seeded engine-vs-closed-form sampling")
    check.add_argument("--samples", type=int, default=settings.sample_count)
    check.add_argument("--seed", type=int, default=settings.default_seed)
    check.add_argument("--tol", type=float, default=settings.algebra_tol)

    return parser


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _cmd_basis(args: argparse.Namespace, settings: PurifySettings) -> int:
    result = verify_basis(genuine_basis(args.qubits), args.tol)
    print(report.format_basis_report(result))
    return EXIT_OK if result.passed else EXIT_FAILED


def _cmd_purify(args: argparse.Namespace, settings: PurifySettings) -> int:
    if args.coeffs is not None:
        c = load_coefficients(args.coeffs)
    else:
        c = CoefficientVector.concise(args.c1)
    result = purification_round(c)
    if args.json:
        print(result.to_report().model_dump_json(indent=2))
    else:
        print(report.format_round(result))
    return EXIT_OK


def _cmd_iterate(args: argparse.Namespace, settings: PurifySettings) -> int:
    if args.brute_force:
        trace = iterate_rounds(
            CoefficientVector.concise(args.c1), args.rounds, twirl=not args.no_twirl
        )
    else:
        trace = recurrence(args.c1, args.rounds)
    print(report.format_trace(trace))
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace, settings: PurifySettings) -> int:
    meta = export_curves(args.f_min, args.f_max, args.steps, args.out, workers=args.workers)
    crossing = report.num(meta.identity_crossing)
    print(f"wrote {meta.steps} rows to {args.out}")
    print(f"identity_crossing  {crossing}")
    print(f"yield_max          {report.num(meta.yield_max)} at f = {report.num(meta.yield_argmax_f)}")
    return EXIT_OK


def _cmd_witness(args: argparse.Namespace, settings: PurifySettings) -> int:
    if args.preset is None:
        summary = witness_report(args.c1, settings.root_scan_points, settings.root_tol)
        print(report.format_witness_summary(summary))
    else:
        reading = witness_on_state(
            concise_state(args.c1), args.preset, settings.root_scan_points, settings.root_tol
        )
        print(report.format_witness(reading))
    return EXIT_OK


def _cmd_byproduct(args: argparse.Namespace, settings: PurifySettings) -> int:
    result = mixture_byproduct(args.mix, args.outcome, args.c1, settings.pure_tol)
    print(report.format_byproduct(result))
    return EXIT_OK


def _cmd_eigencheck(args: argparse.Namespace, settings: PurifySettings) -> int:
    tol = settings.algebra_tol
    basic = eigencheck_basic_states()
    print("basic states")
    print(report.format_eigencheck(basic, tol))
    print()
    print("genuine basis")
    print(report.format_eigencheck(eigencheck_genuine_basis(), tol))
    passed = all(
        e.is_simultaneous_eigenvector(tol)
        and abs(e.j123 - 15 / 4) < tol
        and abs(e.j12 - 2.0) < tol
        for e in basic
    )
    return EXIT_OK if passed else EXIT_FAILED


def _cmd_check(args: argparse.Namespace, settings: PurifySettings) -> int:
    summary = run_checks(args.samples, args.seed, args.tol)
    print(report.format_check(summary))
    fixed = fixed_points_concise(settings.root_scan_points, settings.root_tol)
    print("fixed_points       " + " ".join(report.num(f) for f in fixed))
    return EXIT_OK if summary.passed else EXIT_FAILED


_COMMANDS: dict[str, Callable[[argparse.Namespace, PurifySettings], int]] = {
    "basis": _cmd_basis,
    "purify": _cmd_purify,
    "iterate": _cmd_iterate,
    "sweep": _cmd_sweep,
    "witness": _cmd_witness,
    "byproduct": _cmd_byproduct,
    "eigencheck": _cmd_eigencheck,
    "check": _cmd_check,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    settings = get_settings()
    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s [%(name)s] %(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    parser = _build_parser(settings)
    try:
        args = parser.parse_args(argv)
        if args.command == "iterate" and args.no_twirl and not args.brute_force:
            parser.error("--no-twirl needs --brute-force")
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    try:
        return _COMMANDS[args.command](args, settings)
    except (ValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except Exception:
        logger.exception("Unexpected failure in %s", args.command)
        return EXIT_FAILED
