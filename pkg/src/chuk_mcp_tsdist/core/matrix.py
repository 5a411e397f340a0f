"""
DistanceMatrix - dense symmetric pairwise distances over a dataset.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from chuk_mcp_tsdist.constants import SYMMETRY_TOLERANCE
from chuk_mcp_tsdist.core.errors import AsymmetricDistanceError, InvalidMatrixError


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """
    A validated n x n distance matrix.

    Invariants:
    - square, one id per row, ids unique
    - all entries finite and >= 0
    - diagonal exactly 0
    - symmetric within SYMMETRY_TOLERANCE
    """

    ids: tuple[str, ...]
    values: NDArray[np.float64]
    algo: str = ""

    def __post_init__(self) -> None:
        ids = tuple(self.ids)
        arr = np.array(self.values, dtype=np.float64)

        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise InvalidMatrixError(f"Distance matrix must be square, got shape {arr.shape}")
        if len(ids) != arr.shape[0]:
            raise InvalidMatrixError(f"{len(ids)} ids for a {arr.shape[0]}x{arr.shape[0]} matrix")
        if len(set(ids)) != len(ids):
            raise InvalidMatrixError("Distance matrix ids must be unique")
        if not np.isfinite(arr).all():
            raise InvalidMatrixError("Distance matrix contains non-finite values")
        if (arr < 0).any():
            raise InvalidMatrixError("Distance matrix contains negative values")
        if np.any(np.diag(arr) != 0.0):
            raise InvalidMatrixError("Distance matrix diagonal must be exactly 0")

        asymmetry = np.abs(arr - arr.T)
        if asymmetry.size and asymmetry.max() > SYMMETRY_TOLERANCE:
            i, j = np.unravel_index(int(np.argmax(asymmetry)), asymmetry.shape)
            raise AsymmetricDistanceError(
                f"Distance matrix asymmetric at ({ids[i]}, {ids[j]}): "
                f"{arr[i, j]!r} vs {arr[j, i]!r}"
            )

        arr.flags.writeable = False
        object.__setattr__(self, "ids", ids)
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_values(
        cls, ids: Sequence[str], values: ArrayLike, algo: str = ""
    ) -> DistanceMatrix:
        """Build a matrix from any array-like."""
        return cls(ids=tuple(ids), values=np.asarray(values, dtype=np.float64), algo=algo)

    @property
    def n(self) -> int:
        """Dataset size."""
        return len(self.ids)

    def index_of(self, series_id: str) -> int:
        """Row index of a series id."""
        try:
            return self.ids.index(series_id)
        except ValueError:
            raise KeyError(series_id) from None

    def get(self, id_a: str, id_b: str) -> float:
        """Distance between two series by id."""
        return float(self.values[self.index_of(id_a), self.index_of(id_b)])

    def subset(self, ids: Sequence[str]) -> DistanceMatrix:
        """Restrict to the given ids, in the given order."""
        idx = [self.index_of(i) for i in ids]
        return DistanceMatrix(ids=tuple(ids), values=self.values[np.ix_(idx, idx)], algo=self.algo)

    def scaled(self, factor: float) -> DistanceMatrix:
        """Every entry multiplied by a positive factor."""
        if factor <= 0:
            raise InvalidMatrixError(f"Scale factor must be positive, got {factor}")
        return DistanceMatrix(ids=self.ids, values=self.values * factor, algo=self.algo)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {"algo": self.algo, "ids": list(self.ids), "values": self.values.tolist()}
