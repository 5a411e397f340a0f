"""
Tests for CSV series, labels, dataset and matrix formats.
"""

from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

from chuk_mcp_tsdist.core import (
    AsymmetricDistanceError,
    DistanceMatrix,
    InvalidMatrixError,
    LabeledDataset,
    ParseError,
    TimeSeries,
    TsDistError,
)
from chuk_mcp_tsdist.io import (
    check_id,
    format_number,
    load_dataset_dir,
    load_labels,
    load_matrix,
    load_series,
    load_series_dir,
    save_dataset_dir,
    save_labels,
    save_matrix,
    save_series,
)

WriteCsv = Callable[[str, str], Path]


class TestLoadSeries:
    """Tests for load_series."""

    def test_univariate(self, write_csv: WriteCsv) -> None:
        """One value per row, id from the file stem."""
        s = load_series(write_csv("walk.csv", "1\n2.5\n-3\n"))
        assert s.id == "walk"
        assert s.to_list() == [[1.0], [2.5], [-3.0]]

    def test_multivariate_with_header(self, write_csv: WriteCsv) -> None:
        """A non-numeric first row is a header."""
        s = load_series(write_csv("xy.csv", "x,y\n0,1\n2,3\n"))
        assert s.dim == 2
        assert s.to_list() == [[0.0, 1.0], [2.0, 3.0]]

    def test_crlf_and_blank_lines(self, write_csv: WriteCsv) -> None:
        """Windows line endings and blank lines are tolerated."""
        s = load_series(write_csv("crlf.csv", "1,2\r\n\r\n3,4\r\n"))
        assert s.to_list() == [[1.0, 2.0], [3.0, 4.0]]

    def test_scientific_notation(self, write_csv: WriteCsv) -> None:
        """Floats in exponent form."""
        assert load_series(write_csv("e.csv", "1e3\n-2.5E-2\n")).to_list() == [[1000.0], [-0.025]]

    def test_ragged_row(self, write_csv: WriteCsv) -> None:
        """Column count must stay constant; the error names the line."""
        path = write_csv("ragged.csv", "1,2\n3\n")
        with pytest.raises(ParseError) as exc_info:
            load_series(path)
        assert exc_info.value.line == 2
        assert "ragged.csv:2" in str(exc_info.value)

    def test_non_numeric_cell(self, write_csv: WriteCsv) -> None:
        """Text after the first row is an error."""
        with pytest.raises(ParseError) as exc_info:
            load_series(write_csv("bad.csv", "1\n2\nthree\n"))
        assert exc_info.value.line == 3

    def test_blank_cell_in_first_row(self, write_csv: WriteCsv) -> None:
        """A first row with a missing value is bad data, not a header."""
        with pytest.raises(ParseError) as exc_info:
            load_series(write_csv("gap.csv", "1,,3\n4,5,6\n"))
        assert exc_info.value.line == 1

    def test_partly_numeric_first_row(self, write_csv: WriteCsv) -> None:
        """A header may not mix names and numbers."""
        with pytest.raises(ParseError) as exc_info:
            load_series(write_csv("mixed.csv", "x,2\n3,4\n"))
        assert exc_info.value.line == 1

    def test_non_finite_cell(self, write_csv: WriteCsv) -> None:
        """nan and inf are rejected."""
        with pytest.raises(ParseError, match="non-finite"):
            load_series(write_csv("nan.csv", "1\nnan\n"))

    def test_empty(self, write_csv: WriteCsv) -> None:
        """Empty files and header-only files have no data."""
        with pytest.raises(ParseError, match="no data rows"):
            load_series(write_csv("empty.csv", ""))
        with pytest.raises(ParseError, match="no data rows"):
            load_series(write_csv("header.csv", "value\n"))

    def test_missing_file(self, temp_dir: Path) -> None:
        """Unreadable files raise OSError."""
        with pytest.raises(OSError):
            load_series(temp_dir / "absent.csv")

    def test_save_and_load(self, temp_dir: Path) -> None:
        """Written files load back with 12 significant digits."""
        s = TimeSeries.from_values([[0.1, 2.0], [1 / 3, -4.5]], "pair")
        path = save_series(s, temp_dir / "nested" / "pair.csv", header=["a", "b"])
        assert path.read_text().splitlines()[0] == "a,b"
        loaded = load_series(path)
        assert loaded.id == "pair"
        assert np.allclose(loaded.points, s.points, rtol=1e-11)

    def test_header_width(self, temp_dir: Path) -> None:
        """One header name per dimension."""
        with pytest.raises(TsDistError):
            save_series(TimeSeries.from_values([1, 2]), temp_dir / "x.csv", header=["a", "b"])


class TestLabels:
    """Tests for load_labels and save_labels."""

    def test_with_and_without_header(self, write_csv: WriteCsv) -> None:
        """The 'id,label' header is optional."""
        plain = load_labels(write_csv("a.csv", "s1,walk\ns2,run\n"))
        headed = load_labels(write_csv("b.csv", "id,label\ns1,walk\ns2,run\n"))
        assert plain == headed == {"s1": "walk", "s2": "run"}

    def test_duplicate_id(self, write_csv: WriteCsv) -> None:
        """Each id is labeled once."""
        with pytest.raises(ParseError) as exc_info:
            load_labels(write_csv("dup.csv", "s1,a\ns2,b\ns1,c\n"))
        assert exc_info.value.line == 3

    def test_wrong_column_count(self, write_csv: WriteCsv) -> None:
        """Rows have exactly two non-empty columns."""
        with pytest.raises(ParseError):
            load_labels(write_csv("three.csv", "s1,a,b\n"))
        with pytest.raises(ParseError):
            load_labels(write_csv("blank.csv", "s1,\n"))

    def test_empty(self, write_csv: WriteCsv) -> None:
        """No rows, no labels."""
        with pytest.raises(ParseError):
            load_labels(write_csv("none.csv", "id,label\n"))

    def test_save_keeps_order(self, temp_dir: Path) -> None:
        """Labels are written in mapping order."""
        path = save_labels({"b": "x", "a": "y"}, temp_dir / "labels.csv")
        assert path.read_text() == "id,label\nb,x\na,y\n"
        assert list(load_labels(path)) == ["b", "a"]


class TestDatasetDir:
    """Tests for dataset directories."""

    def test_round_trip(self, temp_dir: Path) -> None:
        """Series and labels survive a save/load cycle."""
        ds = LabeledDataset(
            series=(
                TimeSeries.from_values([1, 2, 3], "b_series"),
                TimeSeries.from_values([4, 5], "a_series"),
            ),
            labels=("one", "two"),
        )
        save_dataset_dir(ds, temp_dir / "ds")
        loaded = load_dataset_dir(temp_dir / "ds")
        assert loaded.ids == ["a_series", "b_series"]
        assert loaded.label_map() == {"a_series": "two", "b_series": "one"}
        assert loaded.series[1] == ds.series[0]

    def test_merge_labels(self, temp_dir: Path) -> None:
        """merge_labels keeps labels of series written earlier."""
        first = LabeledDataset(series=(TimeSeries.from_values([1], "s1"),), labels=("a",))
        second = LabeledDataset(series=(TimeSeries.from_values([2], "s2"),), labels=("b",))
        save_dataset_dir(first, temp_dir)
        save_dataset_dir(second, temp_dir, merge_labels=True)
        assert load_labels(temp_dir / "labels.csv") == {"s1": "a", "s2": "b"}
        save_dataset_dir(second, temp_dir)
        assert load_labels(temp_dir / "labels.csv") == {"s2": "b"}

    def test_unlabeled_series(self, write_csv: WriteCsv, temp_dir: Path) -> None:
        """Every series needs a label."""
        write_csv("s1.csv", "1\n2\n")
        write_csv("s2.csv", "3\n4\n")
        write_csv("labels.csv", "s1,a\n")
        with pytest.raises(TsDistError, match="s2"):
            load_dataset_dir(temp_dir)

    def test_series_dir_skips_labels(self, write_csv: WriteCsv, temp_dir: Path) -> None:
        """labels.csv is not a series."""
        write_csv("z.csv", "1\n")
        write_csv("labels.csv", "z,a\n")
        assert [s.id for s in load_series_dir(temp_dir)] == ["z"]

    def test_not_a_directory(self, temp_dir: Path) -> None:
        """Missing directories raise FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            load_series_dir(temp_dir / "missing")

    def test_invalid_id(self, temp_dir: Path) -> None:
        """Ids that would need quoting are refused."""
        ds = LabeledDataset(series=(TimeSeries.from_values([1], "has space"),), labels=("a",))
        with pytest.raises(TsDistError, match="Invalid series id"):
            save_dataset_dir(ds, temp_dir)


class TestMatrixFiles:
    """Tests for save_matrix and load_matrix."""

    def test_round_trip(self, temp_dir: Path, rng: np.random.Generator) -> None:
        """Values survive to 12 significant digits."""
        raw = rng.uniform(0.0, 1.0, size=(5, 5))
        values = np.triu(raw, 1) + np.triu(raw, 1).T
        matrix = DistanceMatrix.from_values([f"m{i}" for i in range(5)], values)
        loaded = load_matrix(save_matrix(matrix, temp_dir / "m.csv"))
        assert loaded.ids == matrix.ids
        assert np.allclose(loaded.values, matrix.values, rtol=1e-11, atol=0)

    def test_layout(self, temp_dir: Path, two_cluster_matrix: DistanceMatrix) -> None:
        """Header row of ids, then one labeled row per series."""
        lines = save_matrix(two_cluster_matrix, temp_dir / "m.csv").read_text().splitlines()
        assert lines[0] == "id,s1,s2,s3,s4"
        assert lines[1] == "s1,0,1,10,10"

    def test_asymmetric_file(self, write_csv: WriteCsv) -> None:
        """Stored matrices are re-validated."""
        with pytest.raises(AsymmetricDistanceError):
            load_matrix(write_csv("asym.csv", "id,a,b\na,0,1\nb,2,0\n"))

    def test_nonzero_diagonal(self, write_csv: WriteCsv) -> None:
        """The diagonal must be zero."""
        with pytest.raises(InvalidMatrixError):
            load_matrix(write_csv("diag.csv", "id,a,b\na,1,1\nb,1,0\n"))

    def test_row_id_mismatch(self, write_csv: WriteCsv) -> None:
        """Row ids follow the header order."""
        with pytest.raises(ParseError) as exc_info:
            load_matrix(write_csv("order.csv", "id,a,b\nb,0,1\na,1,0\n"))
        assert exc_info.value.line == 2

    def test_row_count(self, write_csv: WriteCsv) -> None:
        """One row per header id."""
        with pytest.raises(ParseError):
            load_matrix(write_csv("short.csv", "id,a,b\na,0,1\n"))

    def test_empty(self, write_csv: WriteCsv) -> None:
        """Empty files are rejected."""
        with pytest.raises(ParseError):
            load_matrix(write_csv("empty.csv", ""))


class TestHelpers:
    """Tests for format_number and check_id."""

    def test_format_number(self) -> None:
        """12 significant digits, integers without a point."""
        assert format_number(10.0) == "10"
        assert format_number(1 / 3) == "0.333333333333"

    def test_check_id(self) -> None:
        """Letters, digits, underscore and hyphen."""
        assert check_id("run_01-a") == "run_01-a"
        for bad in ("", "a,b", "a b", "é"):
            with pytest.raises(TsDistError):
                check_id(bad)
