"""
File formats - CSV series, labels, dataset directories and distance matrices.
"""

from chuk_mcp_tsdist.io.formats import (
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

__all__ = [
    "check_id",
    "format_number",
    "load_dataset_dir",
    "load_labels",
    "load_matrix",
    "load_series",
    "load_series_dir",
    "save_dataset_dir",
    "save_labels",
    "save_matrix",
    "save_series",
]
