"""
Benchmark harness - silhouette index per (sub-dataset, algorithm).

A benchmark evaluates every config on every sub-dataset. Sub-datasets can be
grouped into families (one averaged row per family); without families and
with more than one sub-dataset, a single 'Overall' row per algorithm holds
the mean of every sub-dataset score.

Two summaries derive from a table:
- improvements(): each segmented config against its plain base
- q_sensitivity(): SI spread of one algorithm across a swept range of q
"""

from __future__ import annotations

import logging
import time
from collections import Counter
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from chuk_mcp_tsdist.constants import SI_DECIMALS
from chuk_mcp_tsdist.core.dataset import LabeledDataset
from chuk_mcp_tsdist.core.errors import ConfigurationError
from chuk_mcp_tsdist.evaluation.matrix import pairwise_matrix
from chuk_mcp_tsdist.evaluation.silhouette import silhouette
from chuk_mcp_tsdist.models.config import AlgoConfig, BenchmarkPreset
from chuk_mcp_tsdist.spd.variants import make_spd_variant

logger = logging.getLogger(__name__)

OVERALL = "Overall"


@dataclass(frozen=True)
class BenchmarkRow:
    """One cell of the results table."""

    dataset: str
    algorithm: str
    si: float
    q: float | None = None
    g: float | None = None
    seconds: float = 0.0
    config: AlgoConfig | None = None

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "dataset": self.dataset,
            "algorithm": self.algorithm,
            "q": self.q,
            "g": self.g,
            "si": self.si,
        }


@dataclass(frozen=True)
class Improvement:
    """A segmented config next to its plain base on one dataset."""

    dataset: str
    base: str
    segmented: str
    base_si: float
    segmented_si: float

    @property
    def delta(self) -> float:
        """Absolute SI gain of the segmented variant."""
        return self.segmented_si - self.base_si

    @property
    def percent(self) -> float | None:
        """Gain relative to |base SI|, in percent; None when the base scores 0."""
        if self.base_si == 0:
            return None
        return 100.0 * self.delta / abs(self.base_si)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "dataset": self.dataset,
            "base": self.base,
            "segmented": self.segmented,
            "base_si": self.base_si,
            "segmented_si": self.segmented_si,
            "delta": self.delta,
            "percent": self.percent,
        }


@dataclass
class ImprovementTable:
    """Every (base, segmented) pairing of a benchmark table."""

    rows: list[Improvement] = field(default_factory=list)

    def mean_delta(self, dataset: str) -> float:
        """Average SI gain over every pairing on one dataset."""
        deltas = [r.delta for r in self.rows if r.dataset == dataset]
        if not deltas:
            raise KeyError(dataset)
        return float(np.mean(deltas))

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {"rows": [r.to_dict() for r in self.rows]}

    def to_csv(self) -> str:
        """dataset,base,segmented,base_SI,segmented_SI,delta,percent."""
        lines = ["dataset,base,segmented,base_SI,segmented_SI,delta,percent"]
        for r in self.rows:
            percent = "" if r.percent is None else f"{r.percent:.1f}"
            lines.append(
                f"{r.dataset},{r.base},{r.segmented},{r.base_si:.{SI_DECIMALS}f},"
                f"{r.segmented_si:.{SI_DECIMALS}f},{r.delta:+.{SI_DECIMALS}f},{percent}"
            )
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        lines = []
        for dataset in dict.fromkeys(r.dataset for r in self.rows):
            lines.append(f"{dataset}: mean gain {self.mean_delta(dataset):+.{SI_DECIMALS}f}")
            for r in self.rows:
                if r.dataset != dataset:
                    continue
                percent = "n/a" if r.percent is None else f"{r.percent:+.1f}%"
                lines.append(
                    f"  {r.segmented} vs {r.base}: {r.base_si:.{SI_DECIMALS}f} -> "
                    f"{r.segmented_si:.{SI_DECIMALS}f} ({r.delta:+.{SI_DECIMALS}f}, {percent})"
                )
        return "\n".join(lines)


@dataclass(frozen=True)
class QSensitivity:
    """SI of one algorithm on one dataset across several quantiles."""

    dataset: str
    algorithm: str
    q_values: tuple[float, ...]
    si_values: tuple[float, ...]

    @property
    def spread(self) -> float:
        """max SI - min SI over the swept quantiles."""
        return max(self.si_values) - min(self.si_values)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "dataset": self.dataset,
            "algorithm": self.algorithm,
            "q": list(self.q_values),
            "si": list(self.si_values),
            "spread": self.spread,
        }


@dataclass
class BenchmarkTable:
    """Results of run_benchmark, in evaluation order."""

    rows: list[BenchmarkRow] = field(default_factory=list)

    @property
    def datasets(self) -> list[str]:
        """Dataset names in first-seen order (averaged rows last)."""
        return list(dict.fromkeys(r.dataset for r in self.rows))

    @property
    def algorithms(self) -> list[str]:
        """Algorithm names in first-seen order."""
        return list(dict.fromkeys(r.algorithm for r in self.rows))

    def get(self, dataset: str, algorithm: str) -> float:
        """SI of one cell."""
        for r in self.rows:
            if r.dataset == dataset and r.algorithm == algorithm:
                return r.si
        raise KeyError((dataset, algorithm))

    def best(self, dataset: str) -> str:
        """Algorithm with the highest SI on a dataset (first wins ties)."""
        cells = [r for r in self.rows if r.dataset == dataset]
        if not cells:
            raise KeyError(dataset)
        top = max(round(r.si, SI_DECIMALS) for r in cells)
        return next(r.algorithm for r in cells if round(r.si, SI_DECIMALS) == top)

    def improvements(self) -> ImprovementTable:
        """
        Pair every segmented row with the plain row sharing its base parameters.

        Rows without a config (hand-built tables) are ignored.
        """
        result = ImprovementTable()
        for row in self.rows:
            if row.config is None or not row.config.spd_enabled:
                continue
            plain = row.config.model_copy(update={"spd_enabled": False}).fingerprint()
            base = next(
                (
                    r
                    for r in self.rows
                    if r.dataset == row.dataset
                    and r.config is not None
                    and not r.config.spd_enabled
                    and r.config.fingerprint() == plain
                ),
                None,
            )
            if base is not None:
                result.rows.append(
                    Improvement(row.dataset, base.algorithm, row.algorithm, base.si, row.si)
                )
        return result

    def q_sensitivity(self) -> list[QSensitivity]:
        """Segmented algorithms evaluated at more than one q, grouped per dataset."""
        groups: dict[tuple[str, str], list[BenchmarkRow]] = {}
        for row in self.rows:
            if row.config is None or row.q is None:
                continue
            key = ";".join(
                p for p in row.config.fingerprint().split(";") if not p.startswith("q=")
            )
            groups.setdefault((row.dataset, key), []).append(row)

        return [
            QSensitivity(
                dataset=dataset,
                algorithm=key,
                q_values=tuple(r.q for r in rows if r.q is not None),
                si_values=tuple(r.si for r in rows),
            )
            for (dataset, key), rows in groups.items()
            if len({r.q for r in rows}) > 1
        ]

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {"rows": [r.to_dict() for r in self.rows]}

    def to_csv(self) -> str:
        """Long-form CSV: dataset,algorithm,q,g,SI."""
        lines = ["dataset,algorithm,q,g,SI"]
        for r in self.rows:
            q = "" if r.q is None else f"{r.q:g}"
            g = "" if r.g is None else f"{r.g:g}"
            lines.append(f"{r.dataset},{r.algorithm},{q},{g},{r.si:.{SI_DECIMALS}f}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        """Pivoted table, one row per dataset, best score per row marked '*'."""
        algorithms = self.algorithms
        datasets = self.datasets
        first = max([len("dataset"), *(len(d) for d in datasets)])
        widths = [max(len(a), SI_DECIMALS + 4) for a in algorithms]

        columns = [f"{a:>{w}} " for a, w in zip(algorithms, widths, strict=True)]
        header = "  ".join([f"{'dataset':<{first}}", *columns])
        lines = [header, "-" * len(header)]
        for ds in datasets:
            best = self.best(ds)
            cells = []
            for a, w in zip(algorithms, widths, strict=True):
                try:
                    value = f"{self.get(ds, a):.{SI_DECIMALS}f}"
                except KeyError:
                    value = "-"
                mark = "*" if a == best else " "
                cells.append(f"{value:>{w}}{mark}")
            lines.append("  ".join([f"{ds:<{first}}", *cells]))
        return "\n".join(lines)


def sweep_q(configs: Sequence[AlgoConfig], q_values: Sequence[float]) -> list[AlgoConfig]:
    """
    Expand every quantile-driven segmented config into one config per q.

    Plain configs and configs with an absolute threshold pass through once.

    Raises:
        ConfigurationError: a q outside [0, 1]
    """
    expanded: list[AlgoConfig] = []
    for config in configs:
        if not config.spd_enabled or config.threshold is not None:
            expanded.append(config)
            continue
        params = config.model_dump(exclude={"base", "spd_enabled", "q"})
        expanded.extend(AlgoConfig.from_name(config.name, **params, q=q) for q in q_values)
    return expanded


def _column_names(configs: Sequence[AlgoConfig]) -> list[str]:
    names = [c.name for c in configs]
    repeated = {n for n, count in Counter(names).items() if count > 1}
    return [c.fingerprint() if c.name in repeated else c.name for c in configs]


def _averaged_groups(
    datasets: Mapping[str, LabeledDataset], families: Mapping[str, Sequence[str]] | None
) -> dict[str, list[str]]:
    if families is None:
        return {OVERALL: list(datasets)} if len(datasets) > 1 else {}
    for family, members in families.items():
        if not members:
            raise ConfigurationError(f"Family '{family}' has no sub-datasets")
        if family in datasets:
            raise ConfigurationError(f"Family '{family}' shadows a sub-dataset name")
        unknown = [m for m in members if m not in datasets]
        if unknown:
            raise ConfigurationError(f"Family '{family}' names unknown sub-datasets {unknown}")
    return {family: list(members) for family, members in families.items()}


def run_benchmark(
    datasets: Mapping[str, LabeledDataset] | LabeledDataset,
    configs: Sequence[AlgoConfig] | BenchmarkPreset,
    n_jobs: int | None = None,
    *,
    q_values: Sequence[float] | None = None,
    families: Mapping[str, Sequence[str]] | None = None,
) -> BenchmarkTable:
    """
    Evaluate every config on every sub-dataset by silhouette index.

    Args:
        datasets: Named sub-datasets, or a single dataset (named 'dataset')
        configs: Algorithm configs, or a preset holding them
        n_jobs: Worker count for each distance matrix (None reads TSDIST_THREADS)
        q_values: Evaluate every quantile-driven segmented config at each of these q
        families: Family name -> member sub-datasets; each family gets one
            averaged row. None averages everything into 'Overall' when there
            is more than one sub-dataset; an empty mapping adds no averaged row.

    Returns:
        BenchmarkTable with one row per (dataset, algorithm), plus the
        averaged rows

    Raises:
        ConfigurationError: a family naming unknown sub-datasets, or a bad q
        TsDistError: propagated from matrix computation or silhouette
    """
    if isinstance(configs, BenchmarkPreset):
        configs = configs.algorithms
    if isinstance(datasets, LabeledDataset):
        datasets = {"dataset": datasets}
    if not configs:
        raise ValueError("At least one algorithm config is required")
    if q_values:
        configs = sweep_q(configs, q_values)
    groups = _averaged_groups(datasets, families)

    names = _column_names(configs)
    table = BenchmarkTable()
    scores: dict[tuple[str, str], float] = {}

    for ds_name, ds in datasets.items():
        for config, name in zip(configs, names, strict=True):
            started = time.perf_counter()
            matrix = pairwise_matrix(ds, make_spd_variant(config), n_jobs=n_jobs)
            report = silhouette(matrix, ds.labels)
            elapsed = time.perf_counter() - started
            logger.debug(f"{ds_name} / {name}: SI={report.overall:.4f} in {elapsed:.2f}s")

            table.rows.append(_row(ds_name, name, report.overall, config, elapsed))
            scores[(ds_name, name)] = report.overall

    for group, members in groups.items():
        for config, name in zip(configs, names, strict=True):
            mean = float(np.mean([scores[(m, name)] for m in members]))
            table.rows.append(_row(group, name, mean, config))

    return table


def _row(
    dataset: str, name: str, si: float, config: AlgoConfig, seconds: float = 0.0
) -> BenchmarkRow:
    return BenchmarkRow(
        dataset=dataset,
        algorithm=name,
        si=si,
        q=config.q if config.spd_enabled and config.threshold is None else None,
        g=config.g if config.is_weighted else None,
        seconds=seconds,
        config=config,
    )
