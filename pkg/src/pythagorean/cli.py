"""Command-line interface: one subcommand per module.

Reports go to stdout as text (2 decimals), JSON (full precision) or CSV.
Exit status is 0 on success, 1 on usage errors and 2 on data or domain
errors.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from . import io
from .ellipse import fit_ellipse
from .errors import InvalidArgument, PythagoreanError
from .geometry import (
    HyperRect,
    am_from_perimeter,
    arithmetic_geometric_mean,
    circle_construction,
    facet_volume_mean,
    gm_from_volume,
    hm_from_ratio,
    hyperperimeter,
    hypervolume,
)
from .index import aggregate_index, index_report
from .means import MeanKind, Transform, WeightedSample, mean
from .predictor import GainSpec, best_predictor, return_function
from .selection import (
    attraction_profile,
    mean_velocity,
    regular_grid,
    weighted_attraction_cauchy,
    weighted_attraction_gaussian,
)
from . import svg

SUBCOMMANDS = ("means", "hyperrect", "attraction", "velocity", "predict", "index", "ellipse")
FORMATS = ("text", "json", "csv")
KERNELS = ("cauchy", "weighted-cauchy", "weighted-gaussian")

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2

DEFAULT_GRID = (0.1, 10.0, 1000)


class UsageError(InvalidArgument):
    pass


@dataclass
class RunConfig:
    subcommand: str
    input_path: Path | None = None
    means: tuple[MeanKind, ...] = tuple(MeanKind)
    output_format: str = "text"
    plot_path: Path | None = None
    # attraction
    grid: tuple[float, float, int] | None = None
    kernel: str = "cauchy"
    # velocity
    x: float = 0.1
    points: int = 100
    # predict
    transforms: tuple[Transform, ...] = tuple(Transform)
    base: float = 1000.0
    penalty: float = 30.0
    # ellipse
    scale: float = 2.0
    boundary_points: int = 128

    def validate(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        if self.output_format not in FORMATS:
            raise UsageError(f"unknown format {self.output_format!r}")
        needs_input = self.subcommand not in ("velocity", "attraction")
        if needs_input and self.input_path is None:
            raise UsageError(f"{self.subcommand} requires --input")
        if self.input_path is not None and not Path(self.input_path).is_file():
            raise UsageError(f"input file {str(self.input_path)!r} does not exist")
        if not self.means:
            raise UsageError("select at least one mean")
        if self.kernel not in KERNELS:
            raise UsageError(f"unknown kernel {self.kernel!r}")
        if self.grid is not None:
            start, stop, n = self.grid
            if not (0 < start < stop) or n < 2:
                raise UsageError("grid needs 0 < start < stop and at least 2 points")
        if self.input_path is not None and self.grid is not None:
            raise UsageError("--input and --grid are mutually exclusive")
        if self.subcommand == "attraction" and self.kernel != "cauchy" and self.input_path is None:
            raise UsageError(f"kernel {self.kernel} needs a weighted --input sample")
        if not 0 < self.x < 1:
            raise UsageError("--x must lie in (0, 1)")
        if self.points < 2:
            raise UsageError("--points must be at least 2")
        if not self.penalty > 0:
            raise UsageError("--penalty must be positive")
        if not self.scale > 0:
            raise UsageError("--scale must be positive")
        if self.boundary_points < 64:
            raise UsageError("--boundary-points must be at least 64")


@dataclass
class RunResult:
    status: int
    report: dict | None = None
    output: str = ""
    error: str = ""
    plot: str | None = field(default=None, repr=False)


def schema_path(subcommand: str) -> Path:
    """Checked-in JSON schema for ``subcommand``'s JSON report."""
    return Path(__file__).with_name("schemas") / f"{subcommand}.schema.json"


def _table(columns, rows) -> dict:
    return {"columns": list(columns), "rows": [list(r) for r in rows]}


def _means_report(cfg: RunConfig):
    s = io.parse_weighted_csv(cfg.input_path)
    summary = {"n": len(s)}
    for k in cfg.means:
        summary[k.value] = mean(s, k)
    return {"command": "means", "summary": summary}, None


def _hyperrect_report(cfg: RunConfig):
    s = io.parse_weighted_csv(cfg.input_path)
    if len(set(s.weights)) > 1:
        raise InvalidArgument("the hyperrectangle reading applies to equally weighted values only")
    r = HyperRect(s.values)
    a_n = facet_volume_mean(r)
    summary = {
        "n": r.n,
        "hyperperimeter": hyperperimeter(r),
        "hypervolume": hypervolume(r),
        "facet_volume_mean": a_n,
    }
    routes = {
        MeanKind.ARITHMETIC: am_from_perimeter,
        MeanKind.GEOMETRIC: gm_from_volume,
        MeanKind.HARMONIC: hm_from_ratio,
    }
    for k in cfg.means:
        summary[k.value] = routes[k](r)
    plot = None
    if r.n == 2:
        cc = circle_construction(*r.edges)
        summary.update(
            radius_OH=cc.radius_OH,
            chord_HG=cc.chord_HG,
            segment_HD=cc.segment_HD,
            agm=arithmetic_geometric_mean(*r.edges),
        )
        if cfg.plot_path:
            plot = svg.circle_svg(cc)
    elif cfg.plot_path:
        raise UsageError("--plot for hyperrect draws the two-value circle construction; give exactly 2 values")
    return {"command": "hyperrect", "summary": summary}, plot


def _attraction_report(cfg: RunConfig):
    if cfg.input_path is not None:
        s = io.parse_weighted_csv(cfg.input_path)
    else:
        start, stop, n = cfg.grid or DEFAULT_GRID
        s = WeightedSample(regular_grid(start, stop, n))
    summary = {"n": len(s), "kernel": cfg.kernel, "range": max(s.values) - min(s.values)}
    cols: list[str] = ["x"]
    data: list[list[float]] = [list(s.values)]
    if cfg.kernel != "cauchy":
        cols.append("weight")
        data.append(list(s.weights))
    fn = weighted_attraction_cauchy if cfg.kernel == "weighted-cauchy" else weighted_attraction_gaussian
    series = {}
    for k in cfg.means:
        if cfg.kernel == "cauchy":
            prof = attraction_profile(s, k)
            vals = [a for _, a in prof.points]
            summary[f"mu_{k.value}"] = prof.mu
        else:
            vals = [fn(s, k, i) for i in range(len(s))]
            summary[f"mu_{k.value}"] = mean(s, k)
        cols.append(k.value)
        data.append(vals)
        order = np.argsort(s.values, kind="stable")
        series[k] = ([s.values[i] for i in order], [vals[i] for i in order])
    report = {"command": "attraction", "summary": summary, "table": _table(cols, zip(*data))}
    plot = svg.curves_svg(series, f"{cfg.kernel} attraction", "x", "attraction") if cfg.plot_path else None
    return report, plot


def _velocity_report(cfg: RunConfig):
    ws = np.linspace(1.0 / cfg.points, 1.0, cfg.points)
    cols = ["w"] + [k.value for k in cfg.means]
    curves = {k: [mean_velocity(k, cfg.x, float(w)) for w in ws] for k in cfg.means}
    rows = [[float(w)] + [curves[k][i] for k in cfg.means] for i, w in enumerate(ws)]
    gap = max(
        (max(v) - min(v) for v in (row[1:] for row in rows)),
        default=0.0,
    )
    summary = {"x": cfg.x, "points": cfg.points, "max_gap": gap}
    plot = None
    if cfg.plot_path:
        plot = svg.curves_svg({k: (list(ws), curves[k]) for k in cfg.means},
                              f"velocity of the means of 1 and {cfg.x:g}", "w", "velocity")
    return {"command": "velocity", "summary": summary, "table": _table(cols, rows)}, plot


def _predict_report(cfg: RunConfig):
    d = io.parse_distribution_csv(cfg.input_path)
    rows, series = [], {}
    for t in cfg.transforms:
        spec = GainSpec(cfg.base, cfg.penalty, t)
        x_star, r_star = best_predictor(spec, d)
        rows.append([t.value, t.mean_kind.value, x_star, r_star])
        if cfg.plot_path:
            xs = np.linspace(d.values.min(), d.values.max(), 200)
            series[t.mean_kind] = (list(xs), [return_function(spec, d, float(x)) for x in xs])
    summary = {"outcomes": len(d.outcomes), "base": cfg.base, "penalty": cfg.penalty}
    if len(rows) == 1:
        summary["x_star"], summary["return_star"] = rows[0][2], rows[0][3]
    plot = svg.curves_svg(series, "return function", "prediction x", "R(x)") if cfg.plot_path else None
    report = {
        "command": "predict",
        "summary": summary,
        "table": _table(["transform", "mean", "x_star", "return_star"], rows),
    }
    return report, plot


def _index_report(cfg: RunConfig):
    b = io.parse_basket_csv(cfg.input_path)
    rep = index_report(b)
    summary = {"categories": len(b.entries), "spread_pct": rep.spread_pct}
    summary.update(rep.differences)
    rows = [[k.value, aggregate_index(b, k)] for k in cfg.means]
    if cfg.plot_path:
        raise UsageError("index has no plot")
    return {"command": "index", "summary": summary, "table": _table(["mean", "index"], rows)}, None


def _ellipse_report(cfg: RunConfig):
    cloud = io.parse_points_csv(cfg.input_path)
    fits = [fit_ellipse(cloud, k, cfg.scale, cfg.boundary_points) for k in cfg.means]
    rows = [
        [f.mean_kind.value, *f.center_original, *f.directions[0], *f.directions[1], *f.spreads]
        for f in fits
    ]
    cols = ["mean", "center_x", "center_y", "major_x", "major_y", "minor_x", "minor_y",
            "spread_major", "spread_minor"]
    report = {
        "command": "ellipse",
        "summary": {"points": len(cloud.points), "scale": cfg.scale},
        "table": _table(cols, rows),
        "details": {"fits": [f.as_dict() for f in fits]},
    }
    plot = svg.ellipses_svg(cloud.points, fits, "fitted ellipses") if cfg.plot_path else None
    return report, plot


_HANDLERS = {
    "means": _means_report,
    "hyperrect": _hyperrect_report,
    "attraction": _attraction_report,
    "velocity": _velocity_report,
    "predict": _predict_report,
    "index": _index_report,
    "ellipse": _ellipse_report,
}


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.2f}"
    return str(v)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    table = report.get("table")
    if fmt == "csv":
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if table:
            w.writerow(table["columns"])
            w.writerows([repr(c) if isinstance(c, float) else c for c in row] for row in table["rows"])
        else:
            w.writerow(["key", "value"])
            w.writerows([k, repr(v) if isinstance(v, float) else v] for k, v in report["summary"].items())
        return buf.getvalue()
    lines = [f"{report['command']}"]
    width = max(len(k) for k in report["summary"])
    lines += [f"  {k:<{width}}  {_fmt(v)}" for k, v in report["summary"].items()]
    if table:
        cells = [table["columns"]] + [[_fmt(c) for c in row] for row in table["rows"]]
        widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
        lines.append("")
        for r in cells:
            lines.append("  " + "  ".join(c.rjust(widths[i]) for i, c in enumerate(r)))
    return "\n".join(lines) + "\n"


def run(config: RunConfig) -> RunResult:
    """Validate ``config``, build the report and render it. Never raises."""
    try:
        config.validate()
    except UsageError as exc:
        return RunResult(EXIT_USAGE, error=str(exc))
    try:
        report, plot = _HANDLERS[config.subcommand](config)
    except UsageError as exc:
        return RunResult(EXIT_USAGE, error=str(exc))
    except PythagoreanError as exc:
        return RunResult(EXIT_DATA, error=str(exc))
    return RunResult(EXIT_OK, report, render(report, config.output_format), plot=plot)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _mean_list(text: str) -> tuple[MeanKind, ...]:
    try:
        return tuple(MeanKind.parse(t) for t in text.split(",") if t.strip())
    except InvalidArgument as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _transform_list(text: str) -> tuple[Transform, ...]:
    if text.strip().lower() == "all":
        return tuple(Transform)
    try:
        return tuple(Transform.parse(t) for t in text.split(",") if t.strip())
    except InvalidArgument as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pythagorean", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--input", type=Path, dest="input_path")
    common.add_argument("--means", type=_mean_list, default=tuple(MeanKind),
                        help="comma-separated subset of arithmetic,geometric,harmonic (or am,gm,hm)")
    common.add_argument("--format", choices=FORMATS, default="text", dest="output_format")
    common.add_argument("--plot", type=Path, dest="plot_path", help="write an SVG plot here")

    sub.add_parser("means", parents=[common], help="weighted AM, GM and HM of a sample")
    sub.add_parser("hyperrect", parents=[common],
                   help="hyperrectangle primitives; circle construction and AGM for 2 values")

    p = sub.add_parser("attraction", parents=[common], help="attraction functions over a sample")
    p.add_argument("--grid", nargs=3, metavar=("START", "STOP", "POINTS"),
                   type=str, help=f"regular sample instead of --input (default {DEFAULT_GRID})")
    p.add_argument("--kernel", choices=KERNELS, default="cauchy")

    p = sub.add_parser("velocity", parents=[common], help="velocity curves for the sample {1, x}")
    p.add_argument("--x", type=float, default=0.1)
    p.add_argument("--points", type=int, default=100)

    p = sub.add_parser("predict", parents=[common], help="best predictor under transformed quadratic gain")
    p.add_argument("--transform", type=_transform_list, default=tuple(Transform), dest="transforms",
                   help="identity, log, reciprocal, a comma list, or all")
    p.add_argument("--base", type=float, default=1000.0)
    p.add_argument("--penalty", type=float, default=30.0)

    sub.add_parser("index", parents=[common], help="all-items index from a weighted basket")

    p = sub.add_parser("ellipse", parents=[common], help="ellipse fits to 2D points")
    p.add_argument("--scale", type=float, default=2.0)
    p.add_argument("--boundary-points", type=int, default=128)
    return parser


def config_from_args(argv: Sequence[str] | None = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    kwargs = {k: v for k, v in vars(ns).items() if v is not None}
    if "grid" in kwargs:
        try:
            start, stop, n = kwargs["grid"]
            kwargs["grid"] = (float(start), float(stop), int(n))
        except ValueError:
            raise UsageError("--grid takes START STOP POINTS") from None
    return RunConfig(**kwargs)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = config_from_args(argv)
    except UsageError as exc:
        print(f"pythagorean: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # argparse bails out on --help and malformed arguments
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    result = run(cfg)
    if result.status != EXIT_OK:
        print(f"pythagorean: error: {result.error}", file=sys.stderr)
        return result.status
    try:
        sys.stdout.write(result.output)
        sys.stdout.flush()
    except BrokenPipeError:
        sys.stderr.close()
    if result.plot is not None:
        Path(cfg.plot_path).write_text(result.plot, encoding="utf-8")
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
