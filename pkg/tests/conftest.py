"""
Pytest configuration and shared fixtures.
"""

import tempfile
from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

from chuk_mcp_tsdist.core import DistanceMatrix, TimeSeries

# The two series of the three-segment swap example: identical segments,
# different order (DTW 22, segmented distance 2 with threshold 2)
FIG2_A = [4, 5, 6, 1, 2, 3, 7, 8, 9]
FIG2_B = [1, 2, 3, 7, 8, 9, 4, 6, 5]


@pytest.fixture
def temp_dir() -> Path:
    """Create a temporary directory for test outputs."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def fig2_a() -> TimeSeries:
    """Series A of the swap example."""
    return TimeSeries.from_values(FIG2_A, "figA")


@pytest.fixture
def fig2_b() -> TimeSeries:
    """Series B of the swap example."""
    return TimeSeries.from_values(FIG2_B, "figB")


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded random generator."""
    return np.random.default_rng(20240611)


@pytest.fixture
def write_csv(temp_dir: Path) -> Callable[[str, str], Path]:
    """Write raw text to a file under temp_dir and return its path."""

    def _write(name: str, text: str) -> Path:
        path = temp_dir / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        return path

    return _write


@pytest.fixture
def two_cluster_matrix() -> DistanceMatrix:
    """Four series, within-cluster distance 1, cross-cluster distance 10."""
    values = [
        [0, 1, 10, 10],
        [1, 0, 10, 10],
        [10, 10, 0, 1],
        [10, 10, 1, 0],
    ]
    return DistanceMatrix.from_values(["s1", "s2", "s3", "s4"], values)
