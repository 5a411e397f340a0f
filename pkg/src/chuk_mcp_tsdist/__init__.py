"""
CHUK TSDist - elastic distances for time series with large discontinuities.

The library wraps DTW and its derivatives (CIDTW, DDTW, WDTW, WDDTW) in the
segmented pairwise distance (SPD) combinator: series are cut at their large
jumps, every cross-series segment pair is compared, and the most similar
pairs are summed. A Silhouette-index harness scores how well a distance
separates labelled clusters.
"""

__version__ = "0.1.0"
