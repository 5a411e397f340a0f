"""
CSV formats for series, labels and distance matrices.

Dialect: comma separator, LF or CRLF line endings, UTF-8, no quoting.
Series ids are restricted to [A-Za-z0-9_-] so they can appear unquoted in
headers and as file stems. Numbers are written with 12 significant digits.
"""

from __future__ import annotations

import csv
import logging
import math
import re
from collections.abc import Iterator, Mapping
from pathlib import Path

import numpy as np

from chuk_mcp_tsdist.constants import (
    ID_PATTERN,
    LABELS_FILENAME,
    SERIES_SUFFIX,
    SIGNIFICANT_DIGITS,
    ErrorMessages,
)
from chuk_mcp_tsdist.core.dataset import LabeledDataset
from chuk_mcp_tsdist.core.errors import ParseError, TsDistError
from chuk_mcp_tsdist.core.matrix import DistanceMatrix
from chuk_mcp_tsdist.core.series import TimeSeries

logger = logging.getLogger(__name__)

_ID_RE = re.compile(ID_PATTERN)


def format_number(value: float) -> str:
    """Fixed-precision text form used by every writer."""
    return f"{value:.{SIGNIFICANT_DIGITS}g}"


def check_id(series_id: str) -> str:
    """Return the id unchanged, or raise TsDistError if it needs quoting."""
    if not _ID_RE.match(series_id):
        raise TsDistError(ErrorMessages.INVALID_ID.format(series_id=series_id))
    return series_id


def _rows(path: Path) -> Iterator[tuple[int, list[str]]]:
    """Non-blank rows with their 1-based line numbers."""
    try:
        with open(path, newline="", encoding="utf-8") as f:
            reader = csv.reader(f)
            for row in reader:
                cells = [c.strip() for c in row]
                if any(cells):
                    yield reader.line_num, cells
    except UnicodeDecodeError as e:
        raise ParseError(path, None, f"not UTF-8 text: {e}") from e


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def _is_header(cells: list[str]) -> bool:
    """Column names only: no cell is blank and none parses as a number."""
    return all(c and not _is_number(c) for c in cells)


def _parse_float(path: Path, line: int, cell: str) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise ParseError(path, line, f"non-numeric cell '{cell}'") from None
    if not math.isfinite(value):
        raise ParseError(path, line, f"non-finite cell '{cell}'")
    return value


# ---------------------------------------------------------------------------
# Series
# ---------------------------------------------------------------------------


def load_series(path: Path | str) -> TimeSeries:
    """
    Load a series: one row per time step, one column per dimension.

    A first row made only of non-blank, non-numeric cells is a header; any
    other first row is data and must parse like every later row.
    The series id is the file stem.

    Raises:
        ParseError: empty file, ragged row or non-numeric cell (with line number)
        OSError: unreadable file
    """
    path = Path(path)
    width: int | None = None
    values: list[list[float]] = []

    for index, (line, cells) in enumerate(_rows(path)):
        if index == 0 and _is_header(cells):
            width = len(cells)
            continue
        if width is None:
            width = len(cells)
        elif len(cells) != width:
            raise ParseError(path, line, f"expected {width} columns, got {len(cells)}")
        values.append([_parse_float(path, line, c) for c in cells])

    if not values:
        raise ParseError(path, None, "no data rows")
    return TimeSeries(points=np.array(values, dtype=np.float64), id=path.stem)


def save_series(series: TimeSeries, path: Path | str, header: list[str] | None = None) -> Path:
    """
    Write a series as CSV.

    Args:
        series: Series to write
        path: Destination file (parent directories are created)
        header: Optional column names, one per dimension
    """
    path = Path(path)
    if header is not None and len(header) != series.dim:
        raise TsDistError(f"{len(header)} header names for a {series.dim}-D series")
    path.parent.mkdir(parents=True, exist_ok=True)

    lines = [",".join(header)] if header else []
    lines.extend(",".join(format_number(v) for v in row) for row in series.points.tolist())
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def load_series_dir(directory: Path | str) -> list[TimeSeries]:
    """Every series file in a directory except the labels file, sorted by id."""
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"Not a directory: {directory}")
    files = [
        p for p in directory.glob(f"*{SERIES_SUFFIX}") if p.name != LABELS_FILENAME and p.is_file()
    ]
    series = [load_series(p) for p in sorted(files, key=lambda p: p.stem)]
    logger.debug(f"Loaded {len(series)} series from {directory}")
    return series


# ---------------------------------------------------------------------------
# Labels
# ---------------------------------------------------------------------------


def load_labels(path: Path | str) -> dict[str, str]:
    """
    Load 'id,label' rows into a map. An 'id,label' header row is optional.

    Raises:
        ParseError: empty file, row without exactly two columns, or duplicate id
    """
    path = Path(path)
    labels: dict[str, str] = {}
    for index, (line, cells) in enumerate(_rows(path)):
        if len(cells) != 2 or not all(cells):
            raise ParseError(path, line, f"expected 'id,label', got {len(cells)} columns")
        if index == 0 and [c.lower() for c in cells] == ["id", "label"]:
            continue
        sid, label = cells
        if sid in labels:
            raise ParseError(path, line, f"duplicate id '{sid}'")
        labels[sid] = label
    if not labels:
        raise ParseError(path, None, "no label rows")
    return labels


def save_labels(labels: Mapping[str, str], path: Path | str) -> Path:
    """Write labels with an 'id,label' header, in the given order."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = ["id,label"]
    lines.extend(f"{check_id(sid)},{label}" for sid, label in labels.items())
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


# ---------------------------------------------------------------------------
# Datasets
# ---------------------------------------------------------------------------


def load_dataset_dir(
    directory: Path | str, labels_path: Path | str | None = None
) -> LabeledDataset:
    """
    Load a dataset directory: series files plus labels.csv.

    Args:
        directory: Directory of series files
        labels_path: Label file; defaults to <directory>/labels.csv

    Raises:
        TsDistError: a series without a label
    """
    directory = Path(directory)
    series = load_series_dir(directory)
    labels = load_labels(labels_path or directory / LABELS_FILENAME)
    return LabeledDataset.from_mapping(series, labels)


def save_dataset_dir(
    ds: LabeledDataset, directory: Path | str, *, merge_labels: bool = False
) -> Path:
    """
    Write every series as <id>.csv plus labels.csv.

    Args:
        ds: Dataset to write
        directory: Destination directory (created if missing)
        merge_labels: Keep existing labels.csv entries not in ds
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for s in ds.series:
        save_series(s, directory / f"{check_id(s.id)}{SERIES_SUFFIX}")

    labels_file = directory / LABELS_FILENAME
    labels: dict[str, str] = {}
    if merge_labels and labels_file.exists():
        labels.update(load_labels(labels_file))
    labels.update(ds.label_map())
    save_labels(labels, labels_file)
    return directory


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


def save_matrix(m: DistanceMatrix, path: Path | str) -> Path:
    """Square CSV with a header row and a first column of series ids."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [",".join(["id", *(check_id(i) for i in m.ids)])]
    for sid, row in zip(m.ids, m.values.tolist(), strict=True):
        lines.append(",".join([sid, *(format_number(v) for v in row)]))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def load_matrix(path: Path | str) -> DistanceMatrix:
    """
    Load a matrix written by save_matrix and re-validate it.

    Raises:
        ParseError: malformed layout (with line number)
        InvalidMatrixError: nonzero diagonal, negative or non-finite entries
        AsymmetricDistanceError: asymmetry beyond tolerance
    """
    path = Path(path)
    rows = list(_rows(path))
    if not rows:
        raise ParseError(path, None, "empty matrix file")

    _, header = rows[0]
    ids = header[1:]
    if not ids:
        raise ParseError(path, rows[0][0], "header row has no series ids")
    if len(rows) - 1 != len(ids):
        raise ParseError(path, None, f"{len(ids)} ids in header but {len(rows) - 1} rows")

    values = np.empty((len(ids), len(ids)), dtype=np.float64)
    for r, (line, cells) in enumerate(rows[1:]):
        if len(cells) != len(ids) + 1:
            raise ParseError(path, line, f"expected {len(ids) + 1} columns, got {len(cells)}")
        if cells[0] != ids[r]:
            raise ParseError(path, line, f"row id '{cells[0]}' does not match column '{ids[r]}'")
        values[r] = [_parse_float(path, line, c) for c in cells[1:]]

    return DistanceMatrix(ids=tuple(ids), values=values)
