"""
Property-based tests.

Distances: non-negativity, identity and symmetry for every benchmark
algorithm. Segmentation: cuts partition the series and respect the
threshold. Silhouette: bounded and invariant to scaling. Files: save/load round-trips.
"""

import math
import tempfile
from pathlib import Path

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from chuk_mcp_tsdist.core import DistanceMatrix, TimeSeries, consecutive_distances
from chuk_mcp_tsdist.elastic import dtw
from chuk_mcp_tsdist.evaluation import silhouette
from chuk_mcp_tsdist.io import (
    load_labels,
    load_matrix,
    load_series,
    save_labels,
    save_matrix,
    save_series,
)
from chuk_mcp_tsdist.models import AlgoConfig
from chuk_mcp_tsdist.spd import make_spd_variant, segment_series, spd_distance

BENCHMARK_ALGORITHMS = [
    "dtw", "sdtw", "cidtw", "scidtw", "ddtw", "sddtw", "wdtw", "swdtw", "wddtw", "swddtw",
]

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)


def series_strategy(min_size: int = 1, max_size: int = 40) -> st.SearchStrategy[list[float]]:
    """Univariate series as plain lists."""
    return st.lists(finite, min_size=min_size, max_size=max_size)


@st.composite
def clusterings(draw: st.DrawFn) -> tuple[DistanceMatrix, list[int]]:
    """Integer-valued symmetric matrices with at least two clusters."""
    n = draw(st.integers(min_value=3, max_value=12))
    upper = draw(st.lists(st.integers(0, 100), min_size=n * n, max_size=n * n))
    raw = np.array(upper, dtype=np.float64).reshape(n, n)
    values = np.triu(raw, 1) + np.triu(raw, 1).T
    labels = draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
    assume(len(set(labels)) >= 2)
    return DistanceMatrix.from_values([f"s{i}" for i in range(n)], values), labels


def with_jumps(rng: np.random.Generator, n: int) -> np.ndarray:
    """Random walk with occasional level shifts."""
    steps = rng.normal(scale=0.5, size=n)
    steps[rng.random(n) < 0.05] += 30.0
    return np.cumsum(steps)


def random_series(rng: np.random.Generator, n: int, dim: int) -> TimeSeries:
    """Series of length n whose dimensions all share that length."""
    return TimeSeries.from_values(np.column_stack([with_jumps(rng, n) for _ in range(dim)]))


class TestMetricProperties:
    """Distances over random pairs."""

    @pytest.mark.parametrize("name", BENCHMARK_ALGORITHMS)
    def test_nonnegative_identity_symmetry(self, name: str, rng: np.random.Generator) -> None:
        """d >= 0, d(a, a) = 0 and d(a, b) = d(b, a)."""
        measure = make_spd_variant(AlgoConfig.from_name(name))
        for _ in range(50):
            dim = int(rng.integers(1, 3))
            a = random_series(rng, int(rng.integers(3, 41)), dim)
            b = random_series(rng, int(rng.integers(3, 41)), dim)
            ab = measure(a, b)
            ba = measure(b, a)
            assert ab >= 0
            assert ab == pytest.approx(ba, rel=1e-12, abs=1e-12)
            assert measure(a, a) == 0.0


class TestDtwProperties:
    """Properties of plain DTW."""

    @settings(max_examples=100, deadline=None)
    @given(a=series_strategy(), b=series_strategy())
    def test_symmetric_and_nonnegative(self, a: list[float], b: list[float]) -> None:
        """Swapping arguments does not change DTW."""
        assert dtw(a, b) == dtw(b, a)
        assert dtw(a, b) >= 0
        assert dtw(a, a) == 0.0

    @settings(max_examples=100, deadline=None)
    @given(data=st.data(), n=st.integers(min_value=1, max_value=30))
    def test_bounded_by_lockstep_path(self, data: st.DataObject, n: int) -> None:
        """The diagonal is one admissible warping path."""
        a = data.draw(series_strategy(n, n))
        b = data.draw(series_strategy(n, n))
        diagonal = float(np.sum(np.abs(np.subtract(a, b))))
        assert dtw(a, b) <= diagonal * (1 + 1e-12) + 1e-9


class TestSegmentationProperties:
    """Cuts partition the series."""

    @settings(max_examples=150, deadline=None)
    @given(values=series_strategy(min_size=2), q=st.floats(min_value=0.0, max_value=1.0))
    def test_cuts_respect_threshold(self, values: list[float], q: float) -> None:
        """Every cut gap exceeds the threshold; every other gap does not."""
        series = TimeSeries.from_values(values)
        result = segment_series(series, q)
        gaps = consecutive_distances(series)
        assert result.threshold is not None
        cuts = set(result.cut_points)
        for k, gap in enumerate(gaps, start=1):
            assert (k in cuts) == (gap > result.threshold)

        ranges = result.segments
        assert ranges[0][0] == 1
        assert ranges[-1][1] == len(values)
        assert len(ranges) == len(cuts) + 1
        for (_, end), (start, _) in zip(ranges, ranges[1:], strict=False):
            assert start == end + 1

    @settings(max_examples=100, deadline=None)
    @given(values=series_strategy(min_size=2))
    def test_maximum_quantile_never_cuts(self, values: list[float]) -> None:
        """q = 1 selects the largest gap."""
        assert segment_series(TimeSeries.from_values(values), 1.0).cut_points == ()

    @settings(max_examples=100, deadline=None)
    @given(a=series_strategy(max_size=25), b=series_strategy(max_size=25))
    def test_no_cuts_is_dtw(self, a: list[float], b: list[float]) -> None:
        """An infinite threshold reduces SPD to DTW."""
        bd = spd_distance(TimeSeries.from_values(a), TimeSeries.from_values(b), threshold=math.inf)
        assert bd.raw == dtw(a, b)


class TestSilhouetteProperties:
    """Silhouette over random clusterings."""

    @settings(max_examples=150, deadline=None)
    @given(clustering=clusterings())
    def test_bounded(self, clustering: tuple[DistanceMatrix, list[int]]) -> None:
        """Every SI lies in [-1, 1]; the overall score is their mean."""
        matrix, labels = clustering
        report = silhouette(matrix, [str(label) for label in labels])
        values = [v for _, v in report.per_series]
        assert all(-1.0 <= v <= 1.0 for v in values)
        assert report.overall == pytest.approx(float(np.mean(values)), abs=1e-12)

    @settings(max_examples=100, deadline=None)
    @given(clustering=clusterings(), factor=st.floats(min_value=0.01, max_value=100.0))
    def test_scale_invariant(
        self, clustering: tuple[DistanceMatrix, list[int]], factor: float
    ) -> None:
        """Scaling every distance leaves SI unchanged."""
        matrix, labels = clustering
        names = [str(label) for label in labels]
        base = silhouette(matrix, names).overall
        assert silhouette(matrix.scaled(factor), names).overall == pytest.approx(base, abs=1e-9)


class TestRoundTripProperties:
    """Files written by io load back unchanged to 12 significant digits."""

    @settings(max_examples=50, deadline=None)
    @given(
        rows=st.integers(min_value=1, max_value=30),
        dim=st.integers(min_value=1, max_value=3),
        data=st.data(),
    )
    def test_series(self, rows: int, dim: int, data: st.DataObject) -> None:
        """Series values survive save/load."""
        values = data.draw(st.lists(finite, min_size=rows * dim, max_size=rows * dim))
        series = TimeSeries.from_values(np.reshape(values, (rows, dim)), "prop")
        with tempfile.TemporaryDirectory() as tmpdir:
            loaded = load_series(save_series(series, Path(tmpdir) / "prop.csv"))
        assert loaded.points.shape == series.points.shape
        assert np.allclose(loaded.points, series.points, rtol=1e-11, atol=1e-300)

    @settings(max_examples=50, deadline=None)
    @given(
        labels=st.dictionaries(
            st.from_regex(r"[A-Za-z0-9_-]{1,8}", fullmatch=True),
            st.from_regex(r"[a-z]{1,6}", fullmatch=True),
            min_size=1,
            max_size=20,
        )
    )
    def test_labels(self, labels: dict[str, str]) -> None:
        """Label maps survive save/load in order."""
        assume(not any(k.lower() == "id" for k in labels))
        with tempfile.TemporaryDirectory() as tmpdir:
            loaded = load_labels(save_labels(labels, Path(tmpdir) / "labels.csv"))
        assert list(loaded.items()) == list(labels.items())

    @settings(max_examples=50, deadline=None)
    @given(clustering=clusterings())
    def test_matrix(self, clustering: tuple[DistanceMatrix, list[int]]) -> None:
        """Integer matrices round-trip exactly."""
        matrix, _ = clustering
        with tempfile.TemporaryDirectory() as tmpdir:
            loaded = load_matrix(save_matrix(matrix, Path(tmpdir) / "m.csv"))
        assert loaded.ids == matrix.ids
        assert np.array_equal(loaded.values, matrix.values)
