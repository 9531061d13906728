"""Command-line front end.

Exit codes: 0 success, 1 ``check`` found a violation, 2 bad input or I/O
error, 3 no admissible tour, 4 instance too large for the oracle,
5 reduction requested on a non-rectangular warehouse.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import tempfile
from pathlib import Path

from . import formats
from .dp import solve
from .errors import (ContractError, FormatError, InfeasibleError, InstanceTooLargeError,
                     UnsupportedInstanceError)
from .generate import DEPOT_MODES, random_instance
from .model import WarehouseInstance, full_double_aisles, is_rectangular, tour_length, validate_tour
from .oracle import brute_force_optimum
from .reducer import iter_reductions
from .render import RenderSpec, render_svg

EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_TOO_LARGE = 4
EXIT_NOT_RECTANGULAR = 5


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Exit(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from exc


def _load_instance(path: str) -> WarehouseInstance:
    try:
        return formats.loads_instance(_read(path))
    except FormatError as exc:
        raise _Exit(EXIT_INPUT, f"{path}: {exc}") from exc


def _load_tour(inst: WarehouseInstance, path: str):
    try:
        return formats.loads_tour(inst, _read(path))
    except FormatError as exc:
        raise _Exit(EXIT_INPUT, f"{path}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    """Write ``text`` to ``out`` atomically, or to stdout."""
    if out is None:
        sys.stdout.write(text)
        return
    target = Path(out)
    try:
        fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."), prefix=f".{target.name}.")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except OSError as exc:
        raise _Exit(EXIT_INPUT, f"cannot write {out}: {exc.strerror}") from exc


def _summary(inst: WarehouseInstance, tour) -> str:
    return f"length={tour_length(inst, tour)} full_doubles={len(full_double_aisles(inst, tour))}"


def cmd_solve(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    try:
        sol = solve(inst, allow_full_double=not args.no_full_double)
    except InfeasibleError as exc:
        raise _Exit(EXIT_INFEASIBLE, str(exc)) from exc
    if args.out:
        _emit(formats.dumps_tour(inst, sol.tour), args.out)
    print(_summary(inst, sol.tour))
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    try:
        result = brute_force_optimum(inst, enumerate_all=args.all)
    except InstanceTooLargeError as exc:
        raise _Exit(EXIT_TOO_LARGE, str(exc)) from exc
    except InfeasibleError as exc:
        raise _Exit(EXIT_INFEASIBLE, str(exc)) from exc
    data = {"length": result.length, "witness": formats.tour_to_dict(inst, result.witness)}
    if result.optima is not None:
        data["optima"] = [formats.tour_to_dict(inst, t) for t in result.optima]
    _emit(formats.dumps(data), args.out)
    return 0


def cmd_reduce(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    if not is_rectangular(inst):
        raise _Exit(EXIT_NOT_RECTANGULAR, "reduction is only defined for rectangular warehouses")
    tour = _load_tour(inst, args.tour)
    violation = validate_tour(inst, tour)
    if violation is not None:
        raise _Exit(EXIT_INPUT, f"{args.tour}: not a tour subgraph ({violation})")
    lines = []
    final = tour
    try:
        for step in iter_reductions(inst, tour):
            lines.append(step.log_line())
            final = step.tour
    except (ContractError, UnsupportedInstanceError) as exc:
        raise _Exit(EXIT_INPUT, str(exc)) from exc
    if args.out:
        _emit(formats.dumps_tour(inst, final), args.out)
    for line in lines:
        print(line)
    print(_summary(inst, final))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    tour = _load_tour(inst, args.tour)
    violation = validate_tour(inst, tour)
    if violation is None:
        print(f"ok {_summary(inst, tour)}")
        return 0
    where = formats.vertex_id(inst, violation.vertex) if violation.vertex is not None else violation.edge
    print(f"violation clause={violation.clause} at={where}")
    return EXIT_VIOLATION


def cmd_gen(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    try:
        inst = random_instance(rng, args.aisles, args.picks, rectangular=args.rectangular,
                               max_len=args.max_len, depot=args.depot)
    except ValueError as exc:
        raise _Exit(EXIT_INPUT, str(exc)) from exc
    _emit(formats.dumps_instance(inst), args.out)
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    tour = _load_tour(inst, args.tour) if args.tour else None
    try:
        spec = RenderSpec(Path(args.out), args.scale, not args.no_labels, not args.single_stroke)
    except ValueError as exc:
        raise _Exit(EXIT_INPUT, str(exc)) from exc
    _emit(render_svg(inst, tour, spec), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aisle-router", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="minimum-length tour by dynamic programming")
    p.add_argument("instance")
    p.add_argument("--no-full-double", action="store_true", help="forbid doubling an aisle end to end")
    p.add_argument("--out", help="write the tour JSON here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive optimum for small instances")
    p.add_argument("instance")
    p.add_argument("--all", action="store_true", help="list every optimal tour")
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("reduce", help="remove fully doubled aisles from a tour")
    p.add_argument("instance")
    p.add_argument("tour")
    p.add_argument("--out", help="write the reduced tour JSON here")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("check", help="validate a tour against an instance")
    p.add_argument("instance")
    p.add_argument("tour")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--aisles", type=int, default=5)
    p.add_argument("--picks", type=int, default=8)
    shape = p.add_mutually_exclusive_group()
    shape.add_argument("--rectangular", dest="rectangular", action="store_true", default=True)
    shape.add_argument("--free", dest="rectangular", action="store_false")
    p.add_argument("--max-len", type=int, default=12)
    p.add_argument("--depot", choices=DEPOT_MODES, default="random")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="draw an instance and optional tour as SVG")
    p.add_argument("instance")
    p.add_argument("--tour")
    p.add_argument("--out", required=True)
    p.add_argument("--scale", type=float, default=20.0)
    p.add_argument("--no-labels", action="store_true")
    p.add_argument("--single-stroke", action="store_true", help="draw doubled edges as one thick stroke")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"aisle-router: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
