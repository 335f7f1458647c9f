"""Command-line front end with JSON I/O.

Commands
--------
closed          evaluate the closed-form resultant report for a cubic
compare         run closed form, reduction chain, and (optionally) the
                Macaulay oracle, and report agreement
witness         produce a verified common-root witness or null
sweep           evaluate the closed form over an (A1, A2) grid, one JSON
                line per point, deterministic row-major order
configuratrix   evaluate the configuratrix resultant at a momentum

Exit codes: 0 success; 2 malformed input; 3 vanishing resultant (closed
only); 4 resource guard tripped. All numbers in JSON payloads are decimal
strings so exactness survives any JSON parser.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from .closedform import closed_form_resultant, resultant_via_reduction
from .finsler import MetricFunction, Momentum, configuratrix_resultant
from .oracle import (
    MacaulaySystem,
    MatrixSizeError,
    RootWitness,
    macaulay_resultant,
    root_witness,
)
from .polycore import QuadExt, format_scalar, parse_scalar
from .symcubic import SymmetricCubic, TransformationUndefinedError

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VANISHES = 3
EXIT_GUARD = 4

MAX_SWEEP_POINTS = 10 ** 6


def _read_json(path: Optional[str]):
    if path is None or path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _coordinate_string(value) -> str:
    if isinstance(value, QuadExt):
        return str(value)
    return format_scalar(value)


def witness_json(witness: Optional[RootWitness]) -> dict:
    if witness is None:
        return {"witness": None}
    radicand = witness.radicand()
    field = "rational" if radicand is None else f"quadratic(delta={format_scalar(radicand)})"
    pattern = None
    if witness.pattern is not None:
        k, t, u = witness.pattern
        pattern = {"k": k, "t": _coordinate_string(t), "u": _coordinate_string(u)}
    return {
        "pattern": pattern,
        "point": [_coordinate_string(x) for x in witness.point],
        "field": field,
    }


def cmd_closed(args) -> int:
    cubic = SymmetricCubic.from_json_dict(_read_json(args.input))
    report = closed_form_resultant(cubic)
    payload = report.to_json_dict()
    payload["value"] = payload["paper"] if args.paper_normalization else payload["canonical"]
    _emit(json.dumps(payload) + "\n", args.out)
    return EXIT_VANISHES if report.vanishes else EXIT_OK


def cmd_compare(args) -> int:
    cubic = SymmetricCubic.from_json_dict(_read_json(args.input))
    report = closed_form_resultant(cubic)
    values = [report.canonical_value]
    try:
        chain_value = resultant_via_reduction(cubic)
        chain_json = format_scalar(chain_value)
        values.append(chain_value)
    except TransformationUndefinedError:
        chain_json = "unavailable"
    oracle_json = None
    if args.oracle:
        oracle_value = macaulay_resultant(
            MacaulaySystem.from_forms(cubic.gradient_system()), seed=args.seed)
        oracle_json = format_scalar(oracle_value)
        values.append(oracle_value)
    agree = all(v == values[0] for v in values)
    payload = {
        "boxed": format_scalar(report.canonical_value),
        "chain": chain_json,
        "oracle": oracle_json,
        "agree": agree,
    }
    _emit(json.dumps(payload) + "\n", args.out)
    return EXIT_OK if agree else 1


def cmd_witness(args) -> int:
    cubic = SymmetricCubic.from_json_dict(_read_json(args.input))
    _emit(json.dumps(witness_json(root_witness(cubic))) + "\n", args.out)
    return EXIT_OK


def _parse_range(spec: dict) -> tuple[Fraction, Fraction, Fraction]:
    start = parse_scalar(str(spec["start"]))
    stop = parse_scalar(str(spec["stop"]))
    step = parse_scalar(str(spec["step"]))
    if step <= 0:
        raise ValueError("grid step must be positive")
    return start, stop, step


def _grid(start: Fraction, stop: Fraction, step: Fraction) -> list[Fraction]:
    count = int((stop - start) / step) + 1
    if count < 1:
        raise ValueError("empty grid range")
    return [start + i * step for i in range(count)]


def cmd_sweep(args) -> int:
    spec = _read_json(args.input)
    n = int(spec["n"])
    a1_grid = _grid(*_parse_range(spec["A1"]))
    a2_grid = _grid(*_parse_range(spec["A2"]))
    a3 = parse_scalar(str(spec["A3"]))
    if len(a1_grid) * len(a2_grid) > MAX_SWEEP_POINTS:
        raise MatrixSizeError(
            f"sweep grid has {len(a1_grid) * len(a2_grid)} points "
            f"(limit {MAX_SWEEP_POINTS})")
    lines = []
    for a1 in a1_grid:
        for a2 in a2_grid:
            if a1 == 0 and a2 == 0 and a3 == 0:
                continue  # the zero polynomial has no resultant report
            report = closed_form_resultant(SymmetricCubic(n, a1, a2, a3))
            lines.append(json.dumps({
                "A1": format_scalar(a1),
                "A2": format_scalar(a2),
                "canonical": format_scalar(report.canonical_value),
                "vanishes": report.vanishes,
            }))
    _emit("".join(line + "\n" for line in lines), args.out)
    return EXIT_OK


def cmd_configuratrix(args) -> int:
    metric = MetricFunction(SymmetricCubic.from_json_dict(_read_json(args.metric)))
    momentum = Momentum.from_json_dict(_read_json(args.momentum))
    result = configuratrix_resultant(metric, momentum, seed=args.seed)
    payload = {
        "resultant": format_scalar(result.value),
        "vanishes": result.vanishes,
        "diagnostic": result.diagnostic,
    }
    _emit(json.dumps(payload) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symres",
        description="Exact resultants of symmetric-cubic gradient systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_closed = sub.add_parser("closed", help="closed-form resultant report")
    p_closed.add_argument("input", nargs="?", default=None,
                          help="cubic JSON file ('-' or omitted: stdin)")
    p_closed.add_argument("--paper-normalization", action="store_true",
                          help="report the raw formula value as primary")
    p_closed.add_argument("--out", default=None, help="write output to file")
    p_closed.set_defaults(func=cmd_closed)

    p_cmp = sub.add_parser("compare", help="cross-check all computation routes")
    p_cmp.add_argument("input", nargs="?", default=None)
    p_cmp.add_argument("--oracle", action="store_true",
                       help="include the Macaulay-matrix oracle")
    p_cmp.add_argument("--seed", type=int, default=0,
                       help="seed offset for oracle fallback substitutions")
    p_cmp.add_argument("--out", default=None)
    p_cmp.set_defaults(func=cmd_compare)

    p_wit = sub.add_parser("witness", help="common-root witness or null")
    p_wit.add_argument("input", nargs="?", default=None)
    p_wit.add_argument("--out", default=None)
    p_wit.set_defaults(func=cmd_witness)

    p_sweep = sub.add_parser("sweep", help="closed form over an (A1, A2) grid")
    p_sweep.add_argument("input", nargs="?", default=None,
                         help="sweep spec JSON file ('-' or omitted: stdin)")
    p_sweep.add_argument("--out", default=None)
    p_sweep.set_defaults(func=cmd_sweep)

    p_conf = sub.add_parser("configuratrix",
                            help="configuratrix resultant at a momentum")
    p_conf.add_argument("metric", help="cubic JSON file ('-' for stdin)")
    p_conf.add_argument("momentum", help="momentum JSON file ('-' for stdin)")
    p_conf.add_argument("--seed", type=int, default=0)
    p_conf.add_argument("--out", default=None)
    p_conf.set_defaults(func=cmd_configuratrix)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MatrixSizeError as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return EXIT_GUARD
    except (ValueError, KeyError, TypeError, json.JSONDecodeError, OSError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
