"""
Compiled dynamic-programming kernels.

All kernels take C-contiguous float64 arrays of shape (n, dim) and a weight
vector indexed by phase difference |i - j|; plain DTW passes all-ones
weights (multiplying by 1.0 is exact). The recursion is

    D(i, j) = w[|i - j|] * d(a_i, b_j) + min(D(i-1, j-1), D(i-1, j), D(i, j-1))
    D(1, 1) = w[0] * d(a_1, b_1)

with d the Euclidean norm across dimensions.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _local_distance(x, i, y, j):
    total = 0.0
    for k in range(x.shape[1]):
        diff = x[i, k] - y[j, k]
        total += diff * diff
    return np.sqrt(total)


@njit(cache=True, nogil=True)
def accumulated_cost(x, y, weights):
    """
    Final cumulative cost D(n1, n2) with rolling rows.

    The caller orients the inputs so that y is the shorter series; storage
    is two rows of len(y) + 1.
    """
    n = x.shape[0]
    m = y.shape[0]
    prev = np.full(m + 1, np.inf)
    cur = np.full(m + 1, np.inf)
    prev[0] = 0.0
    for i in range(n):
        cur[0] = np.inf
        for j in range(m):
            phase = i - j if i >= j else j - i
            best = prev[j]
            if prev[j + 1] < best:
                best = prev[j + 1]
            if cur[j] < best:
                best = cur[j]
            cur[j + 1] = weights[phase] * _local_distance(x, i, y, j) + best
        prev, cur = cur, prev
    return prev[m]


@njit(cache=True, nogil=True)
def accumulated_cost_matrix(x, y, weights):
    """Full (n1, n2) cumulative cost matrix; entry [0, 0] is D(1, 1)."""
    n = x.shape[0]
    m = y.shape[0]
    acc = np.full((n + 1, m + 1), np.inf)
    acc[0, 0] = 0.0
    for i in range(n):
        for j in range(m):
            phase = i - j if i >= j else j - i
            best = acc[i, j]
            if acc[i, j + 1] < best:
                best = acc[i, j + 1]
            if acc[i + 1, j] < best:
                best = acc[i + 1, j]
            acc[i + 1, j + 1] = weights[phase] * _local_distance(x, i, y, j) + best
    return acc[1:, 1:]
