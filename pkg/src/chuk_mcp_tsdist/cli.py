#!/usr/bin/env python3
"""
tsdist - command-line front end.

Commands:
- distance       one distance between two series files
- matrix         pairwise distance matrix over a directory of series
- evaluate       silhouette index of a stored matrix under labels
- segment        segmentation of one series
- build-dataset  write a dataset directory from a recipe
- benchmark      silhouette table over sub-dataset directories

Machine-readable results go to stdout (JSON unless a report format is
chosen); diagnostics go to stderr. Exit codes: 0 success, 1 runtime or data
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from chuk_mcp_tsdist import __version__
from chuk_mcp_tsdist.constants import (
    ALGORITHM_NAMES,
    LABELS_FILENAME,
    SI_DECIMALS,
    BenchmarkReport,
    ExitCode,
    MidpointRule,
    OutputFormat,
    Recipe,
    SuccessMessages,
)
from chuk_mcp_tsdist.core.dataset import LabeledDataset
from chuk_mcp_tsdist.core.errors import ConfigurationError, TsDistError
from chuk_mcp_tsdist.datagen import (
    concat_recipe,
    preprocess,
    subsample_windows,
    synthetic_cluster_dataset,
)
from chuk_mcp_tsdist.elastic import dtw_path
from chuk_mcp_tsdist.evaluation import (
    DatasetValidator,
    ValidationResult,
    pairwise_matrix,
    run_benchmark,
    silhouette,
    sweep_q,
)
from chuk_mcp_tsdist.io import (
    load_labels,
    load_matrix,
    load_series,
    load_series_dir,
    save_dataset_dir,
    save_matrix,
)
from chuk_mcp_tsdist.models.config import AlgoConfig
from chuk_mcp_tsdist.presets import PresetLoader
from chuk_mcp_tsdist.spd import make_spd_variant, segment_series

logger = logging.getLogger(__name__)


def _emit(payload: dict[str, Any]) -> None:
    print(json.dumps(payload, indent=2, allow_nan=False))


def _report_issues(validation: ValidationResult) -> bool:
    """Print warnings and errors to stderr; True when evaluation may proceed."""
    for issue in validation.warnings:
        print(str(issue), file=sys.stderr)
    for issue in validation.errors:
        print(str(issue), file=sys.stderr)
    return validation.is_valid


def _dataset_name(path: Path) -> str:
    return path.name or str(path)


def _config_from_args(args: argparse.Namespace, name: str) -> AlgoConfig:
    return AlgoConfig.from_name(
        name,
        q=args.q,
        g=args.g,
        w_max=args.wmax,
        threshold=args.threshold,
        midpoint_rule=args.midpoint,
        n_c=args.nc,
        znormalize=args.znorm or None,
    )


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_distance(args: argparse.Namespace) -> int:
    """Distance between two series files."""
    a = load_series(args.a)
    b = load_series(args.b)
    config: AlgoConfig = args.config
    measure = make_spd_variant(config)

    payload: dict[str, Any] = {"algorithm": config.name, "fingerprint": config.fingerprint()}
    if config.spd_enabled:
        breakdown = measure.breakdown(a, b)
        payload["raw"] = breakdown.raw
        payload["normalized"] = breakdown.normalized
        payload["segments_a"] = breakdown.segmentation_a.to_dict()
        payload["segments_b"] = breakdown.segmentation_b.to_dict()
        payload["breakdown"] = breakdown.to_dict()
    else:
        payload["raw"] = measure(a, b)
        if args.path:
            _, path = dtw_path(a, b)
            payload["path"] = [list(p) for p in path]

    _emit(payload)
    return ExitCode.OK


def cmd_matrix(args: argparse.Namespace) -> int:
    """Pairwise matrix over every series file in a directory."""
    series = load_series_dir(args.directory)
    matrix = pairwise_matrix(series, make_spd_variant(args.config), n_jobs=args.jobs)
    out = save_matrix(matrix, args.out)

    pairs = matrix.n * (matrix.n - 1) // 2
    logger.info(SuccessMessages.MATRIX_WRITTEN.format(n=matrix.n, pairs=pairs, path=out))
    _emit(
        {
            "algorithm": matrix.algo,
            "path": str(out),
            "n": matrix.n,
            "pairs": pairs,
            "ids": list(matrix.ids),
        }
    )
    return ExitCode.OK


def cmd_evaluate(args: argparse.Namespace) -> int:
    """Silhouette index of a stored matrix."""
    matrix = load_matrix(args.matrix)
    labels = load_labels(args.labels)

    if not _report_issues(DatasetValidator().validate_matrix(matrix, labels)):
        return ExitCode.RUNTIME_ERROR

    report = silhouette(matrix, labels)
    if args.format == OutputFormat.CSV:
        sys.stdout.write(report.to_csv())
    else:
        print(report.to_text())
    return ExitCode.OK


def cmd_segment(args: argparse.Namespace) -> int:
    """Segmentation of one series."""
    series = load_series(args.a)
    result = segment_series(series, args.q, args.threshold)
    _emit(result.to_dict())
    return ExitCode.OK


def _build_concat(args: argparse.Namespace) -> LabeledDataset:
    parts = [
        preprocess(load_series(p), args.truncate, dedup=args.dedup) for p in args.part
    ]
    if args.window is None:
        built = [concat_recipe(parts, args.offsets, series_id=args.name)]
    else:
        # Part k contributes its window i to output series i
        windows = [
            subsample_windows(part, args.window, args.count, seed=args.seed + k)
            for k, part in enumerate(parts)
        ]
        built = [
            concat_recipe([w[i] for w in windows], args.offsets, series_id=f"{args.name}_{i}")
            for i in range(args.count)
        ]
    return LabeledDataset(series=tuple(built), labels=tuple(args.label for _ in built))


def cmd_build_dataset(args: argparse.Namespace) -> int:
    """Write series files plus labels.csv from a recipe."""
    if args.recipe == Recipe.CONCAT:
        ds = _build_concat(args)
        merge = True
    else:
        ds = synthetic_cluster_dataset(
            k_clusters=args.k,
            per_cluster=args.per_cluster,
            segment_count=args.segments,
            gap_scale=args.gap_scale,
            noise_scale=args.noise_scale,
            seed=args.seed,
            segment_length=args.segment_length,
            dim=args.dim,
        )
        merge = False

    out = save_dataset_dir(ds, args.out, merge_labels=merge)
    logger.info(SuccessMessages.DATASET_WRITTEN.format(count=len(ds), path=out))
    _emit(
        {
            "recipe": args.recipe.value,
            "path": str(out),
            "series": ds.ids,
            "clusters": ds.cluster_sizes,
            "lengths": [len(s) for s in ds.series],
        }
    )
    return ExitCode.OK


def cmd_benchmark(args: argparse.Namespace) -> int:
    """Silhouette table over one or more sub-dataset directories."""
    configs: list[AlgoConfig] = args.configs
    shared_labels = load_labels(args.labels) if args.labels else None
    validator = DatasetValidator()
    datasets = {}
    for path in args.directories:
        series = load_series_dir(path)
        if shared_labels is None:
            labels = load_labels(path / LABELS_FILENAME)
        else:
            # one file labels every directory; each sees only its own ids
            ids = {s.id for s in series}
            labels = {k: v for k, v in shared_labels.items() if k in ids}
        if not _report_issues(validator.validate(series, labels)):
            print(f"tsdist: error: invalid dataset {path}", file=sys.stderr)
            return ExitCode.RUNTIME_ERROR
        datasets[_dataset_name(path)] = LabeledDataset.from_mapping(series, labels)

    table = run_benchmark(datasets, configs, n_jobs=args.jobs, families=args.families)
    csv = args.format == OutputFormat.CSV

    if args.report == BenchmarkReport.IMPROVEMENT:
        improvements = table.improvements()
        if not improvements.rows:
            print("tsdist: no segmented/plain algorithm pairs to compare", file=sys.stderr)
        sys.stdout.write(improvements.to_csv() if csv else improvements.to_text() + "\n")
    elif args.report == BenchmarkReport.Q_SENSITIVITY:
        spreads = table.q_sensitivity()
        if not spreads:
            print("tsdist: no algorithm was evaluated at several q", file=sys.stderr)
        if csv:
            lines = ["dataset,algorithm,q,SI"]
            for s in spreads:
                lines.extend(
                    f"{s.dataset},{s.algorithm},{q:g},{si:.{SI_DECIMALS}f}"
                    for q, si in zip(s.q_values, s.si_values, strict=True)
                )
            sys.stdout.write("\n".join(lines) + "\n")
        else:
            for s in spreads:
                cells = ", ".join(
                    f"q={q:g} {si:.{SI_DECIMALS}f}"
                    for q, si in zip(s.q_values, s.si_values, strict=True)
                )
                print(f"{s.dataset} {s.algorithm}: {cells}; spread {s.spread:.{SI_DECIMALS}f}")
    elif csv:
        sys.stdout.write(table.to_csv())
    else:
        print(table.to_text())
    return ExitCode.OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_algo_options(parser: argparse.ArgumentParser, *, multiple: bool = False) -> None:
    names = sorted(ALGORITHM_NAMES)
    if multiple:
        parser.add_argument(
            "--algo",
            action="append",
            choices=names,
            help="Algorithm (repeatable); alternative to --preset",
        )
    else:
        parser.add_argument("--algo", required=True, choices=names, help="Algorithm")
    parser.add_argument("--q", type=float, help="Segmentation quantile (default: 0.99)")
    parser.add_argument("--g", type=float, help="WDTW phase penalty (default: 0.01)")
    parser.add_argument("--wmax", type=float, help="WDTW weight ceiling (default: 1)")
    parser.add_argument(
        "--threshold", type=float, help="Absolute segmentation threshold overriding --q"
    )
    parser.add_argument(
        "--midpoint",
        type=MidpointRule,
        choices=list(MidpointRule),
        help="WDTW midpoint rule (default: half_longer)",
    )
    parser.add_argument("--nc", type=float, help="WDTW midpoint for --midpoint fixed")
    parser.add_argument("--znorm", action="store_true", help="Z-normalize series first")


def _float_list(value: str) -> list[float]:
    try:
        return [float(v) for v in value.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number list '{value}'") from None


def _family(value: str) -> tuple[str, list[str]]:
    """NAME=DS1,DS2 -> (NAME, [DS1, DS2])."""
    name, sep, members = value.partition("=")
    if not sep or not name or not members:
        raise argparse.ArgumentTypeError(f"expected NAME=DATASET,... got '{value}'")
    return name, [m for m in members.split(",") if m]


def _offsets(value: str) -> list[float]:
    try:
        return [float(v) for v in value.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid offsets '{value}'") from None


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for every command."""
    parser = argparse.ArgumentParser(
        prog="tsdist", description="Elastic and segmented time series distances"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance", help="Distance between two series")
    _add_algo_options(p)
    p.add_argument("--path", action="store_true", help="Include the DTW warping path")
    p.add_argument("a", type=Path, help="First series CSV")
    p.add_argument("b", type=Path, help="Second series CSV")
    p.set_defaults(handler=cmd_distance)

    p = sub.add_parser("matrix", help="Pairwise distance matrix over a directory")
    _add_algo_options(p)
    p.add_argument("--out", type=Path, required=True, help="Matrix CSV to write")
    p.add_argument("--jobs", type=int, help="Worker count (default: TSDIST_THREADS)")
    p.add_argument("directory", type=Path, help="Directory of series CSVs")
    p.set_defaults(handler=cmd_matrix)

    p = sub.add_parser("evaluate", help="Silhouette index of a matrix")
    p.add_argument("--matrix", type=Path, required=True, help="Matrix CSV")
    p.add_argument("--labels", type=Path, required=True, help="Labels CSV")
    p.add_argument(
        "--format", type=OutputFormat, choices=list(OutputFormat), default=OutputFormat.TEXT
    )
    p.set_defaults(handler=cmd_evaluate)

    p = sub.add_parser("segment", help="Segment one series")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--q", type=float, default=0.99, help="Quantile (default: 0.99)")
    group.add_argument("--threshold", type=float, help="Absolute threshold")
    p.add_argument("a", type=Path, help="Series CSV")
    p.set_defaults(handler=cmd_segment)

    p = sub.add_parser("build-dataset", help="Write a dataset directory from a recipe")
    p.add_argument("--recipe", type=Recipe, choices=list(Recipe), required=True)
    p.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
    p.add_argument("--out", type=Path, required=True, help="Output directory")
    concat = p.add_argument_group("concat recipe")
    concat.add_argument("--part", type=Path, action="append", help="Part CSV (repeatable)")
    concat.add_argument("--offsets", type=_offsets, help="Comma-separated offset per part")
    concat.add_argument("--window", type=int, help="Subsample each part to this length")
    concat.add_argument("--count", type=int, default=1, help="Windows (output series) to draw")
    concat.add_argument("--truncate", type=float, default=1.0, help="Keep this fraction of parts")
    concat.add_argument("--dedup", action="store_true", help="Collapse repeated points")
    concat.add_argument("--label", help="Label of the built series")
    concat.add_argument("--name", default="concat", help="Output series id (prefix)")
    synthetic = p.add_argument_group("synthetic recipe")
    synthetic.add_argument("--k", type=int, default=2, help="Clusters")
    synthetic.add_argument("--per-cluster", type=int, default=5, help="Members per cluster")
    synthetic.add_argument("--segments", type=int, default=3, help="Segments per series")
    synthetic.add_argument("--segment-length", type=int, default=120, help="Points per segment")
    synthetic.add_argument("--gap-scale", type=float, default=10.0, help="Level spacing")
    synthetic.add_argument("--noise-scale", type=float, default=0.1, help="Noise std")
    synthetic.add_argument("--dim", type=int, default=1, help="Dimensions")
    p.set_defaults(handler=cmd_build_dataset)

    p = sub.add_parser("benchmark", help="Silhouette table over sub-dataset directories")
    p.add_argument("--preset", help="Preset name (e.g. table1)")
    p.add_argument("--presets-dir", type=Path, help="Project preset directory")
    _add_algo_options(p, multiple=True)
    p.add_argument("--labels", type=Path, help="Labels CSV (default: <DIR>/labels.csv)")
    p.add_argument(
        "--format", type=OutputFormat, choices=list(OutputFormat), default=OutputFormat.TEXT
    )
    p.add_argument(
        "--q-sweep",
        type=_float_list,
        help="Comma-separated quantiles; segmented algorithms run once per value",
    )
    p.add_argument(
        "--family",
        type=_family,
        action="append",
        help="NAME=DIR1,DIR2 averages those sub-datasets into one row (repeatable)",
    )
    p.add_argument(
        "--report",
        type=BenchmarkReport,
        choices=list(BenchmarkReport),
        default=BenchmarkReport.TABLE,
        help="table (default), improvement of segmented over plain, or q-sensitivity",
    )
    p.add_argument("--jobs", type=int, help="Worker count (default: TSDIST_THREADS)")
    p.add_argument("directories", type=Path, nargs="+", help="Sub-dataset directories")
    p.set_defaults(handler=cmd_benchmark)

    return parser


def _check_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    """Cross-flag checks argparse cannot express; failures exit 2."""
    try:
        if args.command in ("distance", "matrix"):
            args.config = _config_from_args(args, args.algo)
            if args.command == "distance" and args.path and args.algo != "dtw":
                parser.error("--path is only available with --algo dtw")
        elif args.command == "benchmark":
            if bool(args.preset) == bool(args.algo):
                parser.error("benchmark needs exactly one of --preset or --algo")
            if args.preset:
                preset = PresetLoader(project_path=args.presets_dir).require_preset(args.preset)
                args.configs = preset.algorithms
            else:
                args.configs = [_config_from_args(args, name) for name in args.algo]
            if args.q_sweep:
                args.configs = sweep_q(args.configs, args.q_sweep)
            args.families = _check_families(parser, args)
        elif args.command == "build-dataset":
            _check_recipe(parser, args)
    except ConfigurationError as e:
        parser.error(str(e))


def _check_families(
    parser: argparse.ArgumentParser, args: argparse.Namespace
) -> dict[str, list[str]] | None:
    if not args.family:
        return None
    names = {_dataset_name(p) for p in args.directories}
    families: dict[str, list[str]] = {}
    for family, members in args.family:
        if family in families:
            parser.error(f"--family {family} given twice")
        if family in names:
            parser.error(f"--family {family} shadows a sub-dataset name")
        unknown = [m for m in members if m not in names]
        if unknown:
            parser.error(f"--family {family}: unknown sub-datasets {unknown}")
        families[family] = members
    return families


def _check_recipe(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.recipe == Recipe.CONCAT:
        if not args.part:
            parser.error("--recipe concat needs at least one --part")
        if not args.label:
            parser.error("--recipe concat needs --label")
        if args.offsets is not None and len(args.offsets) != len(args.part):
            parser.error(f"{len(args.part)} parts but {len(args.offsets)} offsets")
        if args.window is not None and args.window < 1:
            parser.error("--window must be positive")
        if args.count < 1:
            parser.error("--count must be positive")
        if not 0.0 < args.truncate <= 1.0:
            parser.error("--truncate must be in (0, 1]")
    else:
        if args.part:
            parser.error("--part is only valid with --recipe concat")
        counts = {
            "--k": args.k,
            "--per-cluster": args.per_cluster,
            "--segments": args.segments,
            "--segment-length": args.segment_length,
            "--dim": args.dim,
        }
        bad = [flag for flag, value in counts.items() if value < 1]
        if bad:
            parser.error(f"must be positive: {', '.join(bad)}")
        if args.gap_scale <= 0 or args.noise_scale < 0:
            parser.error("--gap-scale must be > 0 and --noise-scale >= 0")


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_args(parser, args)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.debug else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        return int(args.handler(args))
    except (TsDistError, OSError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"tsdist: error: {e}", file=sys.stderr)
        return ExitCode.RUNTIME_ERROR


if __name__ == "__main__":
    sys.exit(main())
