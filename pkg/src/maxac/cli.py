"""Command-line front end.

Verbs: size, count, enumerate, verify, normalize, peel, extend, project,
game.  Machine output is compact JSON (default when piped); a human-readable
rendering is used on a terminal or with --plain.  Domain errors exit 1 with a
single JSON object ``{"error": code, "detail": ...}`` on stderr; usage errors
exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import Grid, Shape, max_size
from .counting import count_2d, count_all_le2, extend_by_two, project_last
from .enumeration import DEFAULT_CELL_LIMIT, count_maximal, enumerate_maximal
from .errors import BoxError, NotMaximalError, PreconditionViolatedError
from .game import play
from .normalize import normalize, peel
from .rowform import IntervalMap, check_characterization, to_intervals
from .verification import verify_shape


def _shape_arg(text: str) -> Shape:
    try:
        dims = tuple(int(part) for part in text.split(","))
        return Shape(dims)
    except (ValueError, OverflowError) as exc:
        raise argparse.ArgumentTypeError(f"bad shape {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxac",
        description="Exact combinatorics of maximal grids over integer boxes.",
    )
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="force JSON output")
    fmt.add_argument("--plain", action="store_true", help="force plain output")

    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("size", parents=[common], help="maximal-grid weight for a shape")
    p.add_argument("--w", type=_shape_arg, required=True, metavar="W1,W2,...")

    p = sub.add_parser("count", parents=[common], help="number of maximal grids")
    p.add_argument("--w", type=_shape_arg, required=True, metavar="W1,W2,...")
    p.add_argument("--method", choices=("enumerate", "formula"), default="enumerate")

    p = sub.add_parser("enumerate", parents=[common], help="list all maximal grids")
    p.add_argument("--w", type=_shape_arg, required=True, metavar="W1,W2,...")
    p.add_argument("--cap", type=int, default=1000, help="max grids to keep (default 1000)")
    p.add_argument("--max-cells", type=int, default=DEFAULT_CELL_LIMIT,
                   help=f"cell budget (default {DEFAULT_CELL_LIMIT})")

    p = sub.add_parser("verify", parents=[common],
                       help="run the per-shape verification suite")
    p.add_argument("--w", type=_shape_arg, required=True, metavar="W1,W2,...")
    p.add_argument("--samples", type=int, default=1000,
                   help="non-maximal grids to sample (default 1000)")
    p.add_argument("--trials", type=int, default=100,
                   help="seeded games per player count (default 100)")
    p.add_argument("--seed", type=int, default=0)

    for verb, blurb in (
        ("normalize", "drain a maximal grid's obstruction set"),
        ("peel", "remove the top cross-section of a normalized grid"),
        ("extend", "append a size-2 axis to a maximal grid"),
        ("project", "drop a size-2 last axis from a maximal grid"),
    ):
        p = sub.add_parser(verb, parents=[common], help=blurb)
        p.add_argument("--input", metavar="PATH",
                       help="JSON input file (default: standard input)")

    p = sub.add_parser("game", parents=[common], help="play one exclusion game")
    p.add_argument("--w", type=_shape_arg, required=True, metavar="W1,W2,...")
    p.add_argument("--players", type=int, default=2)
    p.add_argument("--strategy", default="lex",
                   help="comma-separated per-player strategies from {lex,random}; "
                        "a single name applies to everyone")
    p.add_argument("--seed", type=int, default=0)

    return parser


def _read_json(args) -> dict:
    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    obj = json.loads(text)
    if not isinstance(obj, dict):
        raise ValueError("input JSON must be an object")
    return obj


def _read_interval_map(args) -> IntervalMap:
    """Accept either a grid or an interval map, and require it maximal."""
    obj = _read_json(args)
    if "rows" in obj:
        m = IntervalMap.from_json_obj(obj)
    else:
        m = to_intervals(Grid.from_json_obj(obj))
    if m.shape.d >= 2:
        report = check_characterization(m)
        if not report:
            raise NotMaximalError(str(report))
    return m


def _grid_plain(g: Grid) -> str:
    ones = " ".join("(" + ",".join(map(str, c)) + ")" for c in g.ones)
    return f"w={','.join(map(str, g.shape.dims))} ones: {ones}"


def _rows_plain(m: IntervalMap) -> list[str]:
    return [
        f"  row {row}: [{l}, {h}]" for row, (l, h) in sorted(m.intervals.items())
    ]


def _run(args) -> tuple[object, str, int]:
    """Dispatch one parsed command; returns (json payload, plain text, exit)."""
    if args.verb == "size":
        value = max_size(args.w)
        return {"w": list(args.w.dims), "size": value}, str(value), 0

    if args.verb == "count":
        if args.method == "enumerate":
            value = count_maximal(args.w)
        elif args.w.d == 2:
            value = count_2d(*args.w.dims)
        elif max(args.w.dims) <= 2:
            value = count_all_le2(args.w)
        else:
            raise PreconditionViolatedError(
                f"no closed form applies to shape {args.w.dims}; use --method enumerate"
            )
        payload = {"w": list(args.w.dims), "method": args.method, "count": value}
        return payload, str(value), 0

    if args.verb == "enumerate":
        report = enumerate_maximal(args.w, cap=args.cap, max_cells=args.max_cells)
        lines = [f"{report.count} maximal grids over {args.w.dims}"
                 + (" (truncated)" if report.truncated else "")]
        lines += ["  " + _grid_plain(g) for g in report.grids]
        return report.to_json_obj(), "\n".join(lines), 0

    if args.verb == "verify":
        results = verify_shape(args.w, samples=args.samples,
                               trials=args.trials, seed=args.seed)
        passed = all(r.passed for r in results)
        payload = {
            "w": list(args.w.dims),
            "passed": passed,
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
        }
        lines = [
            f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}" for r in results
        ]
        lines.append(("all checks passed" if passed else "some checks FAILED")
                     + f" for shape {args.w.dims}")
        return payload, "\n".join(lines), 0 if passed else 1

    if args.verb == "normalize":
        report = normalize(_read_interval_map(args))
        lines = [f"steps: {report.steps}"]
        lines += [f"  lowered {x}, raised {xp}" for x, xp in report.pairs]
        lines += ["result:"] + _rows_plain(report.result)
        return report.to_json_obj(), "\n".join(lines), 0

    if args.verb == "peel":
        peeled = peel(_read_interval_map(args))
        lines = [f"peeled to shape {peeled.shape.dims}"] + _rows_plain(peeled)
        return peeled.to_json_obj(), "\n".join(lines), 0

    if args.verb == "extend":
        result = extend_by_two(Grid.from_json_obj(_read_json(args)))
        return result.to_json_obj(), _grid_plain(result), 0

    if args.verb == "project":
        result = project_last(Grid.from_json_obj(_read_json(args)))
        return result.to_json_obj(), _grid_plain(result), 0

    if args.verb == "game":
        names = args.strategy.split(",")
        if len(names) == 1:
            names = names * args.players
        transcript = play(args.w, args.players, names, seed=args.seed)
        lines = [
            f"move {i}: player {p} -> {c}"
            for i, (p, c) in enumerate(transcript.final_state.moves)
        ]
        lines.append(f"loser: player {transcript.loser}"
                     + ("" if transcript.forced else " (flipped an unsafe cell early)"))
        return transcript.to_json_obj(), "\n".join(lines), 0

    raise AssertionError(f"unhandled verb {args.verb}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, plain, status = _run(args)
    except BoxError as exc:
        print(json.dumps({"error": exc.code, "detail": str(exc)}), file=sys.stderr)
        return 1
    except (ValueError, OverflowError, json.JSONDecodeError, OSError) as exc:
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}),
              file=sys.stderr)
        return 1
    use_plain = args.plain or (not args.json and sys.stdout.isatty())
    if use_plain:
        print(plain)
    else:
        print(json.dumps(payload, separators=(",", ":")))
    return status


if __name__ == "__main__":
    sys.exit(main())
