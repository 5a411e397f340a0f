"""
Tests for dataset construction recipes and the synthetic generator.
"""

from itertools import combinations

import numpy as np
import pytest

from chuk_mcp_tsdist.core import (
    DimensionMismatchError,
    InvalidSeriesError,
    TimeSeries,
    TsDistError,
    consecutive_distances,
)
from chuk_mcp_tsdist.datagen import (
    concat_recipe,
    preprocess,
    subsample_windows,
    synthetic_cluster_dataset,
)
from chuk_mcp_tsdist.elastic import dtw
from chuk_mcp_tsdist.evaluation import run_benchmark
from chuk_mcp_tsdist.models import AlgoConfig
from chuk_mcp_tsdist.spd import make_spd_variant


def segment_order(series: TimeSeries, segment_length: int, gap_scale: float) -> tuple[int, ...]:
    """Level index of each template, read off the segment means."""
    values = series.points[:, 0]
    return tuple(
        round(values[s : s + segment_length].mean() / gap_scale)
        for s in range(0, len(values), segment_length)
    )


class TestPreprocess:
    """Tests for preprocess."""

    def test_dedup(self) -> None:
        """Repeated consecutive points collapse."""
        s = preprocess(TimeSeries.from_values([1, 1, 2, 2, 3], "d"), dedup=True)
        assert s.to_list() == [[1.0], [2.0], [3.0]]
        assert s.id == "d"

    def test_dedup_needs_every_component_equal(self) -> None:
        """Multivariate points repeat only if all components repeat."""
        s = TimeSeries.from_values([[1, 1], [1, 2], [1, 2], [1, 1]])
        assert len(preprocess(s, dedup=True)) == 3

    def test_truncate(self) -> None:
        """Keep ceil(fraction * n) points."""
        s = TimeSeries.from_values(np.arange(10))
        assert len(preprocess(s, truncate_fraction=0.2)) == 2
        assert len(preprocess(s, truncate_fraction=0.25)) == 3
        assert len(preprocess(s, truncate_fraction=0.7)) == 7
        assert len(preprocess(s)) == 10

    def test_dedup_before_truncate(self) -> None:
        """Truncation counts deduplicated points."""
        s = TimeSeries.from_values([1, 1, 1, 1, 2, 3])
        assert preprocess(s, truncate_fraction=0.5, dedup=True).to_list() == [[1.0], [2.0]]

    def test_invalid_fraction(self) -> None:
        """Fractions live in (0, 1]."""
        s = TimeSeries.from_values([1, 2, 3])
        for fraction in (0.0, -0.5, 1.5):
            with pytest.raises(TsDistError):
                preprocess(s, truncate_fraction=fraction)

    def test_znormalize(self) -> None:
        """Zero mean, unit deviation."""
        s = preprocess(TimeSeries.from_values([2.0, 4.0, 6.0, 8.0]), znormalize=True)
        assert s.points.mean() == pytest.approx(0.0, abs=1e-12)
        assert s.points.std() == pytest.approx(1.0)

    def test_empty_result_impossible_from_valid_input(self) -> None:
        """ceil keeps at least one point."""
        s = TimeSeries.from_values(np.arange(1000))
        assert len(preprocess(s, truncate_fraction=1e-6)) == 1
        assert issubclass(InvalidSeriesError, TsDistError)


class TestConcatRecipe:
    """Tests for concat_recipe."""

    def test_offsets(self) -> None:
        """Each part is shifted by its own offset."""
        a = TimeSeries.from_values([1, 2])
        result = concat_recipe([a, a], offsets=[0, 100], series_id="joined")
        assert result.to_list() == [[1.0], [2.0], [101.0], [102.0]]
        assert result.id == "joined"

    def test_length_adds_up(self, rng: np.random.Generator) -> None:
        """Four parts of 500 give 2000 points."""
        parts = [TimeSeries.from_values(rng.normal(size=500)) for _ in range(4)]
        assert len(concat_recipe(parts)) == 2000

    def test_only_seams_add_gaps(self, rng: np.random.Generator) -> None:
        """Consecutive distances are the parts' own plus one per seam."""
        a = TimeSeries.from_values(rng.normal(size=20))
        b = TimeSeries.from_values(rng.normal(size=30))
        joined = consecutive_distances(concat_recipe([a, b], offsets=[0.0, 50.0]))
        assert np.array_equal(joined[:19], consecutive_distances(a))
        assert np.allclose(joined[20:], consecutive_distances(b), atol=1e-12)
        assert joined[19] > 40

    def test_multivariate_offsets(self) -> None:
        """Offsets shift every component."""
        a = TimeSeries.from_values([[0, 1]])
        assert concat_recipe([a, a], offsets=[0, 5]).to_list() == [[0.0, 1.0], [5.0, 6.0]]

    def test_errors(self) -> None:
        """Empty parts, offset count and dimensions are checked."""
        a = TimeSeries.from_values([1, 2])
        with pytest.raises(TsDistError):
            concat_recipe([])
        with pytest.raises(TsDistError):
            concat_recipe([a, a], offsets=[1.0])
        with pytest.raises(DimensionMismatchError):
            concat_recipe([a, TimeSeries.from_values([[1, 2]])])


class TestSubsampleWindows:
    """Tests for subsample_windows."""

    def test_windows_are_contiguous(self, rng: np.random.Generator) -> None:
        """Each window is a slice of the source."""
        source = TimeSeries.from_values(rng.normal(size=100), "src")
        windows = subsample_windows(source, window=10, count=5, seed=3)
        assert [w.id for w in windows] == [f"src_w{k}" for k in range(5)]
        values = source.points[:, 0]
        for w in windows:
            assert len(w) == 10
            start = int(np.flatnonzero(values == w.points[0, 0])[0])
            assert np.array_equal(values[start : start + 10], w.points[:, 0])

    def test_deterministic(self, rng: np.random.Generator) -> None:
        """Same seed, same windows."""
        source = TimeSeries.from_values(rng.normal(size=50))
        first = subsample_windows(source, 7, 4, seed=11)
        second = subsample_windows(source, 7, 4, seed=11)
        assert all(a == b for a, b in zip(first, second, strict=True))

    def test_full_window(self) -> None:
        """A window as long as the series returns the series."""
        source = TimeSeries.from_values([1, 2, 3])
        assert subsample_windows(source, 3, 2)[0].to_list() == [[1.0], [2.0], [3.0]]

    def test_errors(self) -> None:
        """Window and count are validated."""
        source = TimeSeries.from_values([1, 2, 3])
        with pytest.raises(TsDistError):
            subsample_windows(source, 4, 1)
        with pytest.raises(TsDistError):
            subsample_windows(source, 0, 1)
        with pytest.raises(TsDistError):
            subsample_windows(source, 2, 0)


class TestSyntheticClusterDataset:
    """Tests for synthetic_cluster_dataset."""

    def test_shape(self) -> None:
        """Ids, labels, lengths and dimension."""
        ds = synthetic_cluster_dataset(3, 4, 2, segment_length=50, dim=2)
        assert len(ds) == 12
        assert ds.ids[0] == "c0_m0"
        assert ds.cluster_sizes == {"cluster0": 4, "cluster1": 4, "cluster2": 4}
        assert all(len(s) == 100 and s.dim == 2 for s in ds.series)

    def test_deterministic(self) -> None:
        """Same seed, same data."""
        a = synthetic_cluster_dataset(2, 3, 3, seed=5)
        b = synthetic_cluster_dataset(2, 3, 3, seed=5)
        assert all(x == y for x, y in zip(a.series, b.series, strict=True))

    def test_invalid_arguments(self) -> None:
        """Counts must be positive, scales sensible."""
        with pytest.raises(TsDistError):
            synthetic_cluster_dataset(0, 3, 3)
        with pytest.raises(TsDistError):
            synthetic_cluster_dataset(2, 3, 3, gap_scale=0.0)
        with pytest.raises(TsDistError):
            synthetic_cluster_dataset(2, 3, 3, noise_scale=-1.0)

    def test_noiseless_members_are_segment_permutations(self) -> None:
        """Without noise, SDTW sees cluster members as identical."""
        ds = synthetic_cluster_dataset(2, 4, 3, noise_scale=0.0, seed=1)
        measure = make_spd_variant(AlgoConfig.from_name("sdtw"))
        members = [s for s, label in zip(ds.series, ds.labels, strict=True) if label == "cluster0"]
        for a, b in combinations(members, 2):
            assert measure.raw(a, b) == 0.0

    def test_reordering_costs_dtw_but_not_sdtw(self) -> None:
        """Pairs with different segment orders are closer under SDTW."""
        ds = synthetic_cluster_dataset(2, 8, 3, seed=2)
        measure = make_spd_variant(AlgoConfig.from_name("sdtw"))
        wins = total = 0
        for label in ("cluster0", "cluster1"):
            members = [s for s, lab in zip(ds.series, ds.labels, strict=True) if lab == label]
            for a, b in combinations(members, 2):
                if segment_order(a, 120, 10.0) == segment_order(b, 120, 10.0):
                    continue
                total += 1
                wins += measure.raw(a, b) < dtw(a, b)
        assert total > 0
        assert wins >= 0.95 * total

    def test_segmented_silhouette_is_higher(self) -> None:
        """Clusters separate better under SDTW than DTW."""
        ds = synthetic_cluster_dataset(3, 4, 3, seed=3)
        configs = [AlgoConfig.from_name("dtw"), AlgoConfig.from_name("sdtw")]
        table = run_benchmark(ds, configs, n_jobs=1)
        assert table.get("dataset", "sdtw") > table.get("dataset", "dtw")
