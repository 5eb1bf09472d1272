"""Command-line interface.

Subcommands: ``metrics``, ``classify``, ``label``, ``plot``, ``validate``,
``report``. Exit codes: 0 success, 1 usage error, 2 data or validation
error. Output is deterministic: identical invocations print identical
bytes.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .circle import wrap
from .classify import (
    ACHROMATIC,
    AchromaticGate,
    classify_color,
    dominant_labels,
    image_descriptor,
    rgb_to_hsv,
)
from .formats import (
    ConfigError,
    ImageFormatError,
    export_metrics_csv,
    format_number,
    load_partition,
    read_image,
)
from .metrics import asymmetry_report, metrics_table, wideness
from .partition import HuePartition, PartitionError, builtin_colibri
from .render import PlotConfig, render_memberships, render_spectrum

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this CLI reserves 2 for data
    # errors, so remap to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _rgb_triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected R,G,B, got {text!r}")
    try:
        r, g, b = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"RGB channels must be integers, got {text!r}")
    if not all(0 <= v <= 255 for v in (r, g, b)):
        raise argparse.ArgumentTypeError(f"RGB channels must be in [0, 255], got {text!r}")
    return r, g, b


def _add_model_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--model", metavar="FILE", help="partition config JSON (default: builtin)")


def _load_model(args: argparse.Namespace) -> HuePartition:
    if args.model is None:
        return builtin_colibri()
    return load_partition(Path(args.model).read_text(encoding="utf-8"))


def build_parser() -> _Parser:
    parser = _Parser(prog="fuzzyhue", description="Fuzzy linguistic hue categories")
    sub = parser.add_subparsers(dest="command", required=True)

    p_metrics = sub.add_parser("metrics", help="print the wideness / boundary-width table")
    _add_model_flag(p_metrics)
    p_metrics.add_argument("--alpha", type=float, default=0.5, help="cut level (default 0.5)")
    p_metrics.add_argument("--format", choices=("table", "csv"), default="table")
    p_metrics.set_defaults(func=_cmd_metrics)

    p_classify = sub.add_parser("classify", help="fuzzy memberships of a single color")
    color = p_classify.add_mutually_exclusive_group(required=True)
    color.add_argument("--hue", type=float, help="hue in degrees")
    color.add_argument("--rgb", type=_rgb_triple, metavar="R,G,B", help="8-bit RGB color")
    _add_model_flag(p_classify)
    p_classify.set_defaults(func=_cmd_classify)

    p_label = sub.add_parser("label", help="dominant fuzzy color labels of an image")
    p_label.add_argument("image", metavar="IMAGE", help="PPM image path")
    p_label.add_argument("--top-k", type=int, default=3, help="number of labels (default 3)")
    _add_model_flag(p_label)
    p_label.add_argument("--s-min", type=float, default=0.15, help="chromatic saturation floor")
    p_label.add_argument("--v-min", type=float, default=0.10, help="chromatic value floor")
    p_label.set_defaults(func=_cmd_label)

    p_plot = sub.add_parser("plot", help="write an SVG figure")
    p_plot.add_argument("kind", choices=("memberships", "spectrum"))
    p_plot.add_argument("--out", required=True, metavar="FILE.svg")
    _add_model_flag(p_plot)
    p_plot.add_argument("--alpha", type=float, default=0.5, help="alpha-cut line level")
    p_plot.set_defaults(func=_cmd_plot)

    p_validate = sub.add_parser("validate", help="check all partition invariants")
    p_validate.add_argument("--model", metavar="FILE", required=True)
    p_validate.set_defaults(func=_cmd_validate)

    p_report = sub.add_parser("report", help="category asymmetry report")
    _add_model_flag(p_report)
    p_report.set_defaults(func=_cmd_report)

    return parser


def _cmd_metrics(args: argparse.Namespace) -> int:
    partition = _load_model(args)
    rows = metrics_table(partition, alpha=args.alpha)
    if args.format == "csv":
        sys.stdout.write(export_metrics_csv(rows))
        return 0
    name_width = max(len("category"), max(len(r.name) for r in rows))
    print(
        f"{'category':<{name_width}}  {'range':>16}  {'wideness':>9}  "
        f"{'left_width':>10}  {'right_width':>11}"
    )
    for r in rows:
        range_text = f"{format_number(r.wideness_range.start)}-{format_number(r.wideness_range.end)}"
        print(
            f"{r.name:<{name_width}}  {range_text:>16}  {format_number(r.wideness):>9}  "
            f"{format_number(r.left_boundary_width):>10}  {format_number(r.right_boundary_width):>11}"
        )
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    partition = _load_model(args)
    if args.hue is not None:
        hue = wrap(args.hue)
        vector = partition.memberships(hue)
        crisp = partition.category_of(hue)
        for name, value in vector.items():
            if value > 0.0:
                print(f"{name} {value:.3f}")
    else:
        descriptor = classify_color(partition, args.rgb)
        for name, value in descriptor.labeled_masses():
            if value > 0.0:
                print(f"{name} {value:.3f}")
        if descriptor.achromatic_mass > 0.0:
            crisp = ACHROMATIC
        else:
            crisp = partition.category_of(rgb_to_hsv(args.rgb).hue)
    print(f"crisp label: {crisp}")
    return 0


def _cmd_label(args: argparse.Namespace) -> int:
    grid = read_image(args.image)
    partition = _load_model(args)
    gate = AchromaticGate(s_min=args.s_min, v_min=args.v_min)
    descriptor = image_descriptor(partition, grid, gate)
    for label, mass in dominant_labels(descriptor, args.top_k):
        print(f"{label} {mass:.6f}")
    return 0


def _cmd_plot(args: argparse.Namespace) -> int:
    partition = _load_model(args)
    cfg = PlotConfig(alpha_line=args.alpha)
    renderer = render_memberships if args.kind == "memberships" else render_spectrum
    Path(args.out).write_text(renderer(partition, cfg), encoding="utf-8")
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    partition = _load_model(args)
    failures = 0
    grid_step = 0.01
    samples = int(round(360.0 / grid_step))

    max_deviation = 0.0
    max_nonzero = 0
    for i in range(samples):
        hue = i * grid_step
        values = [t.membership(hue) for t in partition.sets]
        max_deviation = max(max_deviation, abs(sum(values) - 1.0))
        max_nonzero = max(max_nonzero, sum(1 for v in values if v > 0.0))
    failures += _check(
        "memberships-sum-to-one", max_deviation < 1e-9, f"max deviation {max_deviation:.3g}"
    )
    failures += _check(
        "at-most-two-nonzero", max_nonzero <= 2, f"max simultaneous memberships {max_nonzero}"
    )

    total = sum(wideness(partition, name) for name in partition.names)
    failures += _check(
        "half-cuts-tile-circle", abs(total - 360.0) < 1e-9, f"sum {total!r}"
    )

    rows = metrics_table(partition)
    roundtrip_error = 0.0
    for k, row in enumerate(rows):
        boundary = partition.boundaries[k]
        left = partition.boundaries[k - 1]
        roundtrip_error = max(
            roundtrip_error,
            _circular_distance(row.wideness_range.start, left.position),
            _circular_distance(row.wideness_range.end, boundary.position),
            abs(row.right_boundary_width - boundary.width),
        )
    failures += _check(
        "boundaries-round-trip", roundtrip_error < 1e-9, f"max error {roundtrip_error:.3g}"
    )
    return 0 if failures == 0 else DATA_ERROR


def _circular_distance(a: float, b: float) -> float:
    d = abs(a - b) % 360.0
    return min(d, 360.0 - d)


def _check(name: str, ok: bool, detail: str) -> int:
    print(f"{'PASS' if ok else 'FAIL'} {name} ({detail})")
    return 0 if ok else 1


def _cmd_report(args: argparse.Namespace) -> int:
    partition = _load_model(args)
    report = asymmetry_report(partition)
    print(f"widest: {report.widest} (wideness {format_number(wideness(partition, report.widest))})")
    print(
        f"narrowest: {report.narrowest} "
        f"(wideness {format_number(wideness(partition, report.narrowest))})"
    )
    print(f"{report.widest}/{report.narrowest} ratio: {report.ratio:.4g}")
    print("per-category wideness:")
    for row in report.per_category:
        print(f"  {row.name} {format_number(row.wideness)}")
    return 0


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ConfigError, PartitionError, ImageFormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


def main() -> None:
    raise SystemExit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
