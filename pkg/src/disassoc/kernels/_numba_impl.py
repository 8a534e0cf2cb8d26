"""Numba-compiled kernels; loop equivalents of the numpy backend.

Same contracts as kernels._numpy_impl; tight loops win on the many small
per-cluster matrices this package spends its time on.
"""

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def column_supports(B):
    n, d = B.shape
    out = np.zeros(d, np.int64)
    for i in range(n):
        for j in range(d):
            if B[i, j]:
                out[j] += 1
    return out


@njit(cache=True)
def cooccurrence(B):
    n, d = B.shape
    out = np.zeros((d, d), np.int64)
    idx = np.empty(d, np.int64)
    for i in range(n):
        m = 0
        for j in range(d):
            if B[i, j]:
                idx[m] = j
                m += 1
        for a in range(m):
            ja = idx[a]
            out[ja, ja] += 1
            for b in range(a + 1, m):
                jb = idx[b]
                out[ja, jb] += 1
                out[jb, ja] += 1
    return out


@njit(cache=True)
def itemset_support(B, cols):
    n = B.shape[0]
    c = cols.shape[0]
    count = 0
    for i in range(n):
        ok = True
        for t in range(c):
            if not B[i, cols[t]]:
                ok = False
                break
        if ok:
            count += 1
    return count


@njit(cache=True)
def conditional_pair_counts(B, x, cols):
    n = B.shape[0]
    c = cols.shape[0]
    out = np.zeros((c, c), np.int64)
    sel = np.empty(c, np.int64)
    for i in range(n):
        if not B[i, x]:
            continue
        m = 0
        for t in range(c):
            if B[i, cols[t]]:
                sel[m] = t
                m += 1
        for a in range(m):
            sa = sel[a]
            out[sa, sa] += 1
            for b in range(a + 1, m):
                sb = sel[b]
                out[sa, sb] += 1
                out[sb, sa] += 1
    return out
