"""Command-line front-end.

    doublewedge <kind> --in FILE [--h STEP] [--dt STEP] [--seed U64] [--out FILE]

Exit codes: 0 success, 2 parse error, 3 dimension error, 4 numerical
failure, 5 I/O error.  Errors are written to stderr as a single JSON line.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from ..errors import DimensionError
from .report import dumps
from .runner import run
from .scenario import KINDS, ScenarioError, parse_scenario

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_NUMERICAL = 4
EXIT_IO = 5


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0 or v == float("inf"):
        raise argparse.ArgumentTypeError(f"expected a positive step, got {text}")
    return v


def _u64(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doublewedge", description="N-D cross product scenarios and identity checks."
    )
    sub = parser.add_subparsers(dest="kind", required=True, metavar="KIND")
    for kind in KINDS:
        sp = sub.add_parser(kind, help=f"{kind} scenario" if kind != "verify" else "randomized identity checks")
        sp.add_argument("--in", dest="infile", required=kind != "verify", help="scenario file")
        sp.add_argument("--out", dest="outfile", help="report file (default: stdout)")
        sp.add_argument("--h", type=_positive, help="spatial finite-difference step")
        sp.add_argument("--dt", type=_positive, help="time finite-difference step")
        sp.add_argument("--seed", type=_u64, help="seed for verify")
        sp.add_argument("--no-timing", action="store_true", help="omit the timing block")
    return parser


def _fail(code: int, kind: str, message: str, line=None, column=None) -> int:
    err = {"code": code, "kind": kind, "message": message}
    if line is not None:
        err["line"] = line
        err["column"] = column
    print(json.dumps({"error": err}), file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        if args.infile is None:
            text = b""
        elif args.infile == "-":
            text = sys.stdin.buffer.read()
        else:
            with open(args.infile, "rb") as fh:
                text = fh.read()
    except OSError as exc:
        return _fail(EXIT_IO, "io", str(exc))

    try:
        scenario = parse_scenario(text, args.kind)
        report, ok = run(scenario, h=args.h, dt=args.dt, seed=args.seed)
    except ScenarioError as exc:
        return _fail(exc.exit_code, exc.kind, exc.message, exc.line, exc.column)
    except DimensionError as exc:
        return _fail(EXIT_DIMENSION, "dimension", str(exc))
    except (ValueError, ArithmeticError, IndexError) as exc:
        return _fail(EXIT_NUMERICAL, "numerical", str(exc))

    if not args.no_timing:
        report["timing"] = {"elapsed_seconds": time.perf_counter() - started}
    try:
        payload = dumps(report)
    except (ValueError, TypeError) as exc:
        return _fail(EXIT_NUMERICAL, "numerical", str(exc))

    try:
        if args.outfile:
            with open(args.outfile, "w", encoding="utf-8") as fh:
                fh.write(payload)
        else:
            sys.stdout.write(payload)
    except OSError as exc:
        return _fail(EXIT_IO, "io", str(exc))

    if not ok:
        return _fail(EXIT_NUMERICAL, "numerical", "identity check exceeded tolerance")
    return EXIT_OK
