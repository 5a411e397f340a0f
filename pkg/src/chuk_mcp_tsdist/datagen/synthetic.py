"""
Synthetic clustered datasets with large discontinuities.

Each cluster owns a bag of segment templates: a smooth sinusoidal shape
sitting on its own level. Levels of different clusters interleave and any
two levels are at least gap_scale apart, so every seam inside a series is a
large discontinuity. A member is a random permutation of the cluster's
templates, each copy with Gaussian noise: members of one cluster share
segments but not segment order.
"""

from __future__ import annotations

import logging

import numpy as np

from chuk_mcp_tsdist.core.dataset import LabeledDataset
from chuk_mcp_tsdist.core.errors import TsDistError
from chuk_mcp_tsdist.core.series import TimeSeries

logger = logging.getLogger(__name__)

# Shape amplitude relative to gap_scale
SHAPE_AMPLITUDE = 0.1


def _templates(
    rng: np.random.Generator,
    cluster: int,
    k_clusters: int,
    segment_count: int,
    segment_length: int,
    dim: int,
    gap_scale: float,
) -> list[np.ndarray]:
    x = np.arange(segment_length, dtype=np.float64) / segment_length
    levels = gap_scale * (k_clusters * np.arange(segment_count) + cluster)
    templates = []
    for level in levels:
        freq = rng.integers(1, 4, size=dim)
        phase = rng.uniform(0.0, 2.0 * np.pi, size=dim)
        shape = SHAPE_AMPLITUDE * gap_scale * np.sin(2.0 * np.pi * np.outer(x, freq) + phase)
        templates.append(shape + level)
    return templates


def synthetic_cluster_dataset(
    k_clusters: int,
    per_cluster: int,
    segment_count: int,
    gap_scale: float = 10.0,
    noise_scale: float = 0.1,
    seed: int = 0,
    segment_length: int = 120,
    dim: int = 1,
) -> LabeledDataset:
    """
    Labeled dataset of permuted segment bags.

    Args:
        k_clusters: Number of clusters
        per_cluster: Members per cluster
        segment_count: Templates per cluster (segments per member)
        gap_scale: Minimum spacing of template levels across all clusters
        noise_scale: Standard deviation of per-point Gaussian noise
        seed: Random seed
        segment_length: Points per segment
        dim: Components per point

    Returns:
        LabeledDataset with ids 'c<cluster>_m<member>' and labels 'cluster<cluster>'
    """
    counts = {
        "k_clusters": k_clusters,
        "per_cluster": per_cluster,
        "segment_count": segment_count,
        "segment_length": segment_length,
        "dim": dim,
    }
    bad = [name for name, value in counts.items() if value < 1]
    if bad:
        raise TsDistError(f"Counts must be positive: {bad}")
    if gap_scale <= 0 or noise_scale < 0:
        raise TsDistError(
            f"Need gap_scale > 0 and noise_scale >= 0, got {gap_scale}, {noise_scale}"
        )

    rng = np.random.default_rng(seed)
    series: list[TimeSeries] = []
    labels: list[str] = []

    for c in range(k_clusters):
        templates = _templates(
            rng, c, k_clusters, segment_count, segment_length, dim, gap_scale
        )
        for m in range(per_cluster):
            order = rng.permutation(segment_count)
            points = np.concatenate([templates[s] for s in order])
            if noise_scale > 0:
                points = points + rng.normal(0.0, noise_scale, size=points.shape)
            series.append(TimeSeries(points=points, id=f"c{c}_m{m}"))
            labels.append(f"cluster{c}")

    logger.debug(
        f"Generated {len(series)} series: {k_clusters} clusters x {per_cluster}, "
        f"{segment_count} segments of {segment_length}"
    )
    return LabeledDataset(series=tuple(series), labels=tuple(labels))
