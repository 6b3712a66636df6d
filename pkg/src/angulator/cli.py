"""Command-line interface.

Subcommands wrap the library one-to-one: enumerate angulations of a polygon,
derive the bound quiver of an angulation, check a bound quiver against the
recognition conditions, realize an accepted quiver as an angulation,
classify a diagonal, and render an angulation to SVG.

Exit codes: 0 success, 1 bad input, 2 enumeration cap hit, 3 rejected or
not-accepted input, 4 unsupported realization shape.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .angulation import (
    AngulationError,
    LimitExceeded,
    angulation_from_json,
    angulation_to_json,
    delta_P,
    enumerate_angulations,
)
from .classify import PreconditionViolation, check_component_shift, classify
from .geometry import GeometryError, LiteralError, parse_config, parse_diagonal
from .oracle import crossing_oracle
from .quiver import (
    bound_quiver,
    bound_quiver_from_json,
    bound_quiver_to_dot,
    bound_quiver_to_json,
)
from .realizer import NotAccepted, UnsupportedShape, realize
from .recognizer import ACCEPTED, ACCEPTED_TYPE_A_ONLY, DisconnectedQuiver, recognize
from .render import render_svg

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_CAP = 2
EXIT_REJECTED = 3
EXIT_UNSUPPORTED = 4


def _write(out: str | None, text: str) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        Path(out).write_text(text, encoding="utf-8")


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_BAD_INPUT


def cmd_enumerate(args: argparse.Namespace) -> int:
    try:
        config = parse_config(args.config)
    except LiteralError as exc:
        return _fail(str(exc))
    count = 0
    lines: list[str] = []
    try:
        for ang in enumerate_angulations(config, args.winding_bound, args.cap):
            count += 1
            if not args.count_only:
                lines.append(
                    json.dumps(json.loads(angulation_to_json(ang)), sort_keys=True)
                )
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    body = "\n".join(lines + [f"count: {count}"]) if args.count_only else "\n".join(lines)
    _write(args.out, body if body else f"count: {count}")
    return EXIT_OK


def cmd_delta_p(args: argparse.Namespace) -> int:
    try:
        config = parse_config(args.config)
    except LiteralError as exc:
        return _fail(str(exc))
    _write(args.out, angulation_to_json(delta_P(config)))
    return EXIT_OK


def _load_angulation(path: str):
    return angulation_from_json(Path(path).read_text(encoding="utf-8"))


def cmd_quiver(args: argparse.Namespace) -> int:
    try:
        ang = _load_angulation(args.angulation)
    except (OSError, ValueError, GeometryError, AngulationError) as exc:
        return _fail(str(exc))
    bq = bound_quiver(ang)
    if args.format == "dot":
        _write(args.out, bound_quiver_to_dot(bq))
    else:
        _write(args.out, bound_quiver_to_json(bq))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    try:
        bq = bound_quiver_from_json(Path(args.quiver).read_text(encoding="utf-8"))
        report = recognize(bq, args.m)
    except (OSError, ValueError, DisconnectedQuiver) as exc:
        return _fail(str(exc))
    _write(args.out, report.to_json())
    if report.verdict in (ACCEPTED, ACCEPTED_TYPE_A_ONLY):
        return EXIT_OK
    return EXIT_REJECTED


def cmd_realize(args: argparse.Namespace) -> int:
    try:
        bq = bound_quiver_from_json(Path(args.quiver).read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        return _fail(str(exc))
    try:
        config, ang = realize(bq, args.m)
    except NotAccepted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except UnsupportedShape as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except DisconnectedQuiver as exc:
        return _fail(str(exc))
    _write(args.out, angulation_to_json(ang))
    if args.svg:
        Path(args.svg).write_text(render_svg(ang), encoding="utf-8")
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    try:
        config = parse_config(args.config)
        diag = parse_diagonal(config, args.diagonal)
    except LiteralError as exc:
        return _fail(str(exc))
    _write(args.out, classify(config, diag).literal())
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    try:
        ang = _load_angulation(args.angulation)
    except (OSError, ValueError, GeometryError, AngulationError) as exc:
        return _fail(str(exc))
    _write(args.out, render_svg(ang))
    return EXIT_OK


def cmd_oracle_crossing(args: argparse.Namespace) -> int:
    # Debug access to the brute-force crossing reference.
    try:
        config = parse_config(args.config)
        d1 = parse_diagonal(config, args.d1)
        d2 = parse_diagonal(config, args.d2)
    except LiteralError as exc:
        return _fail(str(exc))
    _write(args.out, str(crossing_oracle(config, d1, d2)).lower())
    return EXIT_OK


def cmd_shift_check(args: argparse.Namespace) -> int:
    # Debug access to the chained-arc degree-shift verifier.
    try:
        config = parse_config(args.config)
        d1 = parse_diagonal(config, args.d1)
        d2 = parse_diagonal(config, args.d2)
        result = check_component_shift(config, d1, d2)
    except (LiteralError, PreconditionViolation) as exc:
        return _fail(str(exc))
    _write(args.out, str(result).lower())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="angulator",
        description="Angulations of the annulus and their gentle bound quivers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="enumerate all angulations of a polygon")
    p_enum.add_argument("--config", required=True, help="polygon literal P(p,q,m)")
    p_enum.add_argument("--cap", type=int, default=None, help="maximum number to emit")
    p_enum.add_argument("--winding-bound", type=int, default=1)
    p_enum.add_argument("--count-only", action="store_true", help="print only the count")
    p_enum.add_argument("--out", default=None)
    p_enum.set_defaults(func=cmd_enumerate)

    p_dp = sub.add_parser("delta-p", help="emit the canonical fan angulation")
    p_dp.add_argument("--config", required=True)
    p_dp.add_argument("--out", default=None)
    p_dp.set_defaults(func=cmd_delta_p)

    p_quiver = sub.add_parser("quiver", help="bound quiver of an angulation file")
    p_quiver.add_argument("angulation", help="angulation JSON file")
    p_quiver.add_argument("--format", choices=("json", "dot"), default="json")
    p_quiver.add_argument("--out", default=None)
    p_quiver.set_defaults(func=cmd_quiver)

    p_check = sub.add_parser("check", help="run the recognition conditions")
    p_check.add_argument("quiver", help="bound quiver JSON file")
    p_check.add_argument("-m", type=int, required=True)
    p_check.add_argument("--out", default=None)
    p_check.set_defaults(func=cmd_check)

    p_realize = sub.add_parser("realize", help="realize an accepted quiver")
    p_realize.add_argument("quiver", help="bound quiver JSON file")
    p_realize.add_argument("-m", type=int, required=True)
    p_realize.add_argument("--out", default=None)
    p_realize.add_argument("--svg", default=None, help="also render the result")
    p_realize.set_defaults(func=cmd_realize)

    p_classify = sub.add_parser("classify", help="component tag of one diagonal")
    p_classify.add_argument("diagonal", help="diagonal literal, e.g. T2(1,1)")
    p_classify.add_argument("--config", required=True)
    p_classify.add_argument("--out", default=None)
    p_classify.set_defaults(func=cmd_classify)

    p_render = sub.add_parser("render", help="render an angulation file to SVG")
    p_render.add_argument("angulation", help="angulation JSON file")
    p_render.add_argument("--out", default=None)
    p_render.set_defaults(func=cmd_render)

    p_oracle = sub.add_parser("oracle-crossing")  # debug; hidden from help text
    p_oracle.add_argument("d1")
    p_oracle.add_argument("d2")
    p_oracle.add_argument("--config", required=True)
    p_oracle.add_argument("--out", default=None)
    p_oracle.set_defaults(func=cmd_oracle_crossing)

    p_shift = sub.add_parser("shift-check")  # debug
    p_shift.add_argument("d1")
    p_shift.add_argument("d2")
    p_shift.add_argument("--config", required=True)
    p_shift.add_argument("--out", default=None)
    p_shift.set_defaults(func=cmd_shift_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
