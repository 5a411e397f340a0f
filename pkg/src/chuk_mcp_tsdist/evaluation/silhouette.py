"""
Silhouette index over a precomputed distance matrix.

For each series t with cluster C:
    a(t) = mean distance to the other members of C (divisor |C| - 1)
    b(t) = minimum over the other clusters of the mean distance to that cluster
    SI(t) = (b - a) / max(a, b), or 0 when |C| = 1
The dataset score is the mean of SI(t).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from chuk_mcp_tsdist.constants import SI_DECIMALS, ErrorMessages
from chuk_mcp_tsdist.core.errors import SilhouetteError
from chuk_mcp_tsdist.core.matrix import DistanceMatrix


@dataclass(frozen=True)
class SilhouetteReport:
    """Per-series and overall silhouette values."""

    per_series: list[tuple[str, float]]
    overall: float
    cluster_sizes: dict[str, int] = field(default_factory=dict)

    @property
    def rounded(self) -> float:
        """Overall SI at table precision."""
        return round(self.overall, SI_DECIMALS)

    def value_of(self, series_id: str) -> float:
        """SI of one series."""
        for sid, value in self.per_series:
            if sid == series_id:
                return value
        raise KeyError(series_id)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "overall": self.overall,
            "overall_rounded": self.rounded,
            "cluster_sizes": dict(self.cluster_sizes),
            "per_series": [{"id": sid, "si": value} for sid, value in self.per_series],
        }

    def to_text(self) -> str:
        """Aligned listing with the overall score last."""
        width = max((len(sid) for sid, _ in self.per_series), default=0)
        lines = [f"{sid:<{width}}  {value:+.{SI_DECIMALS}f}" for sid, value in self.per_series]
        lines.append(f"overall: {self.overall:.{SI_DECIMALS}f}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        """CSV with columns id,si and a final 'overall' row."""
        rows = ["id,si"]
        rows.extend(f"{sid},{value:.{SI_DECIMALS}f}" for sid, value in self.per_series)
        rows.append(f"overall,{self.overall:.{SI_DECIMALS}f}")
        return "\n".join(rows) + "\n"


def _aligned_labels(
    matrix: DistanceMatrix, labels: Mapping[str, str] | Sequence[str]
) -> list[str]:
    if isinstance(labels, Mapping):
        ids = set(matrix.ids)
        missing = sorted(i for i in matrix.ids if i not in labels)
        extra = sorted(k for k in labels if k not in ids)
        if missing or extra:
            raise SilhouetteError(
                f"Labels do not match matrix ids: unlabeled {missing}, unknown {extra}"
            )
        return [str(labels[i]) for i in matrix.ids]
    seq = [str(label) for label in labels]
    if len(seq) != matrix.n:
        raise SilhouetteError(f"{len(seq)} labels for a matrix of {matrix.n} series")
    return seq


def silhouette(
    matrix: DistanceMatrix, labels: Mapping[str, str] | Sequence[str]
) -> SilhouetteReport:
    """
    Silhouette index of a clustering under a distance matrix.

    Args:
        matrix: Validated distance matrix
        labels: Series id -> label, or labels in matrix order

    Returns:
        SilhouetteReport in matrix order

    Raises:
        SilhouetteError: fewer than two clusters, or labels inconsistent with the matrix

    Example:
        Two clusters of two, distance 1 within and 10 across: every SI = 0.9
    """
    aligned = _aligned_labels(matrix, labels)
    clusters, members = np.unique(np.asarray(aligned), return_inverse=True)
    if len(clusters) < 2:
        raise SilhouetteError(ErrorMessages.SINGLE_CLUSTER.format(count=len(clusters)))

    n = matrix.n
    onehot = np.zeros((n, len(clusters)), dtype=np.float64)
    onehot[np.arange(n), members] = 1.0
    counts = onehot.sum(axis=0)
    sums = matrix.values @ onehot

    own = counts[members]
    a = np.zeros(n)
    multi = own > 1
    a[multi] = sums[np.arange(n), members][multi] / (own[multi] - 1)

    means = sums / counts
    means[np.arange(n), members] = np.inf
    b = means.min(axis=1)

    scale = np.maximum(a, b)
    si = np.divide(b - a, scale, out=np.zeros(n), where=scale > 0)
    si[~multi] = 0.0
    si = np.clip(si, -1.0, 1.0)

    return SilhouetteReport(
        per_series=[(sid, float(v)) for sid, v in zip(matrix.ids, si, strict=True)],
        overall=float(si.mean()),
        cluster_sizes=dict(Counter(aligned)),
    )
