"""Command-line entry point.

All lengths are in laptop-width units; the laptop width is never a flag.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import sys
from typing import Optional, Sequence

from . import analysis
from .analysis import RegimeError
from .optimizer import SearchConfig, solve, with_overrides
from .placement import LaptopSpec, Pose, StabilityError, TableSpec
from .report import DEFAULT_SCALE, Scene, emit_csv, emit_json, render_svg

SUBCOMMANDS = ("solve", "verify", "classify", "sweep", "render")
VERIFY_KINDS = ("constancy", "corner-sweep", "bounds", "scenario2")


class _ArgError(Exception):
    pass


def _formatter(prog):
    # fixed width keeps the usage text independent of the terminal
    return argparse.HelpFormatter(prog, width=88)


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("formatter_class", _formatter)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise _ArgError(f"{self.prog}: error: {message}")


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return v


def _laptop_length(text: str) -> float:
    v = float(text)
    if not v >= 1:
        raise argparse.ArgumentTypeError(f"laptop length must be >= 1, got {text}")
    return v


def _sizes(text: str) -> list[tuple[float, float]]:
    """'0.3,0.4x0.5,2' -> square 0.3, square 0.4x0.5 ... ; 'WxH' or a single side."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "x" in item:
            w, h = item.split("x", 1)
            out.append((_positive(w), _positive(h)))
        else:
            s = _positive(item)
            out.append((s, s))
    if not out:
        raise argparse.ArgumentTypeError("no table sizes given")
    return out


def _common(p: argparse.ArgumentParser, table: bool = True) -> None:
    p.add_argument("--laptop-length", type=_laptop_length, required=True, help="long side of the laptop")
    if table:
        p.add_argument("--table-w", type=_positive, required=True, help="table width")
        p.add_argument("--table-h", type=_positive, required=True, help="table height")
    p.add_argument("--seed", type=int, default=0, help="random seed (default: 0)")


def _search(p: argparse.ArgumentParser) -> None:
    d = SearchConfig()
    g = p.add_argument_group("search")
    g.add_argument("--grid-xy", type=int, default=d.grid_xy, help=f"grid points per axis (default: {d.grid_xy})")
    g.add_argument("--grid-theta", type=int, default=d.grid_theta, help=f"angle grid points (default: {d.grid_theta})")
    g.add_argument("--top-k", type=int, default=d.top_k_seeds, help=f"seeds to refine (default: {d.top_k_seeds})")
    g.add_argument("--refine-max-iters", type=int, default=d.refine_max_iters, help=f"(default: {d.refine_max_iters})")
    g.add_argument("--refine-min-step", type=float, default=d.refine_min_step, help=f"(default: {d.refine_min_step:g})")
    g.add_argument("--tie-tolerance", type=float, default=d.tie_tolerance, help=f"(default: {d.tie_tolerance:g})")
    g.add_argument("--no-symmetry", action="store_true", help="search the whole table instead of one quadrant")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="laptop-balance", description="Minimal-footprint laptop placement.", add_help=False)
    parser.add_argument("-h", "--help", action="store_true", help="show this help and exit")
    sub = parser.add_subparsers(dest="subcommand", parser_class=_Parser, metavar="{" + ",".join(SUBCOMMANDS) + "}")

    p = sub.add_parser("solve", help="minimise the footprint over stable placements")
    _common(p)
    _search(p)
    p.add_argument("--json", help="write the result as JSON")
    p.add_argument("--svg", help="write a figure of the best placement")

    p = sub.add_parser("verify", help="run one of the verification checks")
    _common(p)
    _search(p)
    p.add_argument("--kind", choices=VERIFY_KINDS, required=True, help="which check to run")
    p.add_argument("--samples", type=int, default=None,
                   help="angle samples (constancy 360, corner-sweep 720) or poses (bounds 100000)")
    p.add_argument("--json", help="write the report as JSON")

    p = sub.add_parser("classify", help="print the table-size regime")
    _common(p)
    p.add_argument("--probe-samples", type=int, default=analysis.PROBE_SAMPLES,
                   help=f"random poses for the small-table probe (default: {analysis.PROBE_SAMPLES})")

    p = sub.add_parser("sweep", help="solve over a list of table sizes")
    _common(p, table=False)
    _search(p)
    p.add_argument("--sizes", type=_sizes, required=True, help="comma list of sides or WxH pairs, e.g. 0.3,0.8,1x1.5")
    p.add_argument("--json", help="write rows as JSON")
    p.add_argument("--csv", help="write rows as CSV")

    p = sub.add_parser("render", help="draw a placement as SVG (default: the optimum)")
    _common(p)
    _search(p)
    p.add_argument("--cx", type=float, help="midpoint x")
    p.add_argument("--cy", type=float, help="midpoint y")
    p.add_argument("--theta", type=float, default=0.0, help="long-axis angle in radians (default: 0)")
    p.add_argument("--scale", type=_positive, default=DEFAULT_SCALE, help=f"pixels per unit (default: {DEFAULT_SCALE:g})")
    p.add_argument("--svg", required=True, help="output path")
    return parser


def print_usage() -> str:
    parser = build_parser()
    parts = [parser.format_help()]
    sub = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    for name in SUBCOMMANDS:
        parts.append(sub.choices[name].format_help())
    return "\n".join(parts)


def _config(args) -> SearchConfig:
    return with_overrides(
        SearchConfig(seed=args.seed),
        grid_xy=args.grid_xy,
        grid_theta=args.grid_theta,
        top_k_seeds=args.top_k,
        refine_max_iters=args.refine_max_iters,
        refine_min_step=args.refine_min_step,
        tie_tolerance=args.tie_tolerance,
        use_symmetry_reduction=not args.no_symmetry,
    )


def _write(path: Optional[str], text: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _fmt(v: float) -> str:
    return format(v, ".12g")


def _dispatch(args) -> int:
    laptop = LaptopSpec(args.laptop_length)
    cmd = args.subcommand

    if cmd == "classify":
        table = TableSpec(args.table_w, args.table_h)
        print(analysis.classify_regime(laptop, table, args.probe_samples, args.seed).value)
        return 0

    config = _config(args)

    if cmd == "solve":
        table = TableSpec(args.table_w, args.table_h)
        res = solve(laptop, table, config)
        best = res.best_pose
        _write(args.json, emit_json(res))
        if args.svg:
            _write(args.svg, render_svg(Scene.build(laptop, table, best)))
        print(f"min_area={_fmt(res.min_area)} pose=({_fmt(best.cx)},{_fmt(best.cy)},{_fmt(best.theta)})")
        return 0

    if cmd == "verify":
        table = TableSpec(args.table_w, args.table_h)
        if args.kind == "constancy":
            rep = analysis.verify_corner_constancy(laptop, table, args.samples or 360)
        elif args.kind == "corner-sweep":
            rep = analysis.verify_corner_sweep(laptop, table, args.samples or 720)
        elif args.kind == "bounds":
            rep = analysis.verify_bounds(laptop, table, args.samples or 100_000, args.seed)
        else:
            rep = analysis.verify_scenario2(laptop, table, config)
        _write(args.json, emit_json(rep))
        status = "PASS" if rep.passed else "FAIL"
        print(f"{rep.name}: {status} max_deviation={_fmt(rep.max_deviation)} samples={rep.samples}")
        return 0 if rep.passed else 1

    if cmd == "sweep":
        rows = analysis.sweep_tables(laptop, args.sizes, config)
        _write(args.json, emit_json(rows))
        _write(args.csv, emit_csv(rows))
        worst = max(abs(r.min_area - 0.25) for r in rows)
        print(f"rows={len(rows)} max_abs_deviation_from_quarter={_fmt(worst)}")
        return 0

    # render
    table = TableSpec(args.table_w, args.table_h)
    if args.cx is None or args.cy is None:
        pose = solve(laptop, table, config).best_pose
    else:
        pose = Pose(args.cx, args.cy, args.theta)
    scene = Scene.build(laptop, table, pose)
    _write(args.svg, render_svg(scene, args.scale))
    print(f"area={_fmt(scene.footprint.area)} pose=({_fmt(pose.cx)},{_fmt(pose.cy)},{_fmt(pose.theta)})")
    return 0


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv:
        sys.stderr.write(print_usage())
        return 2
    if argv[0] in ("-h", "--help"):
        sys.stdout.write(print_usage())
        return 0
    parser = build_parser()
    try:
        # argparse prints sub-command help itself and raises SystemExit(0)
        with contextlib.redirect_stdout(io.StringIO()) as buf:
            try:
                args = parser.parse_args(argv)
            except SystemExit as exc:
                sys.stdout.write(buf.getvalue())
                return int(exc.code or 0)
    except _ArgError as exc:
        sys.stderr.write(print_usage())
        sys.stderr.write(f"{exc}\n")
        return 2
    if args.help or args.subcommand is None:
        sys.stderr.write(print_usage())
        return 0 if args.help else 2
    try:
        return _dispatch(args)
    except (ValueError, StabilityError, RegimeError) as exc:
        sys.stderr.write(f"laptop-balance: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
