"""
Dataset construction - preprocessing, concatenation recipes, synthetic clusters.
"""

from chuk_mcp_tsdist.datagen.recipes import concat_recipe, preprocess, subsample_windows
from chuk_mcp_tsdist.datagen.synthetic import synthetic_cluster_dataset

__all__ = [
    "concat_recipe",
    "preprocess",
    "subsample_windows",
    "synthetic_cluster_dataset",
]
