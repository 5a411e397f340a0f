"""
LabeledDataset - series with cluster labels, the unit of SI evaluation.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from chuk_mcp_tsdist.core.errors import DimensionMismatchError, TsDistError
from chuk_mcp_tsdist.core.series import TimeSeries


@dataclass(frozen=True)
class LabeledDataset:
    """
    An ordered collection of series with one opaque label each.

    Invariants:
    - one label per series
    - unique series ids
    - uniform dimension across series
    """

    series: tuple[TimeSeries, ...]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        series = tuple(self.series)
        labels = tuple(str(label) for label in self.labels)
        if len(series) != len(labels):
            raise TsDistError(f"{len(series)} series but {len(labels)} labels")

        ids = [s.id for s in series]
        duplicates = sorted(i for i, c in Counter(ids).items() if c > 1)
        if duplicates:
            raise TsDistError(f"Duplicate series ids: {duplicates}")

        dims = {s.dim for s in series}
        if len(dims) > 1:
            raise DimensionMismatchError(f"Mixed dimensions in dataset: {sorted(dims)}")

        object.__setattr__(self, "series", series)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_mapping(
        cls, series: Sequence[TimeSeries], labels: Mapping[str, str]
    ) -> LabeledDataset:
        """
        Pair series with labels looked up by series id.

        Raises:
            TsDistError: if any series has no label
        """
        missing = [s.id for s in series if s.id not in labels]
        if missing:
            raise TsDistError(f"Series without labels: {missing}")
        return cls(series=tuple(series), labels=tuple(labels[s.id] for s in series))

    @property
    def ids(self) -> list[str]:
        """Series ids, in order."""
        return [s.id for s in self.series]

    @property
    def dim(self) -> int | None:
        """Shared dimension, or None for an empty dataset."""
        return self.series[0].dim if self.series else None

    @property
    def cluster_sizes(self) -> dict[str, int]:
        """Label -> member count."""
        return dict(Counter(self.labels))

    def __len__(self) -> int:
        return len(self.series)

    def label_of(self, series_id: str) -> str:
        """Label of a series by id."""
        return self.labels[self.ids.index(series_id)]

    def label_map(self) -> dict[str, str]:
        """Series id -> label."""
        return dict(zip(self.ids, self.labels, strict=True))
