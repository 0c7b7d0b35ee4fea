"""Jitted CSR intersection kernels shared by the counting algorithms.

All kernels compute masked intersection sums with a version-stamped marker
array (a direct-address membership table): the owning row's neighbor list is
stamped once, then the shorter list of each masked pair is probed against
it. Work per pair is the smaller endpoint degree, which keeps skewed degree
distributions cheap; a plain two-pointer merge was measured an order of
magnitude slower on RMAT-style graphs.

Each pair is owned by exactly one side (the higher-degree endpoint, ties to
the lower index), so every masked position is evaluated exactly once per
pass. Kernels are nogil so chunked calls can run concurrently from a thread
pool; partial aggregates are 64-bit integers combined by addition, making
results identical for any worker count or chunking.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def adj2_partial(indptr, indices, deg, row_start, row_end):
    """Masked-square sum over unordered adjacent pairs owned by the row range.

    Owned pair (i, j) contributes |N(i) ∩ N(j)|; the full aggregate over
    stored entries (both orientations) is twice the summed result.
    """
    n = indptr.size - 1
    marker = np.zeros(n, dtype=np.int32)
    total = 0
    for i in range(row_start, row_end):
        lo = indptr[i]
        hi = indptr[i + 1]
        if lo == hi:
            continue
        stamp = np.int32(i + 1)
        for e in range(lo, hi):
            marker[indices[e]] = stamp
        di = deg[i]
        for e in range(lo, hi):
            j = indices[e]
            dj = deg[j]
            if dj < di or (dj == di and j > i):
                found = 0
                for f in range(indptr[j], indptr[j + 1]):
                    if marker[indices[f]] == stamp:
                        found += 1
                total += found
    return total


@njit(cache=True, nogil=True)
def lu_partial(a_indptr, a_indices, l_indptr, l_indices, ldeg, row_start, row_end):
    """Masked L·U sum over unordered adjacent pairs owned by the row range.

    Uses L = U^T: (L·U)(i, j) equals the overlap of L rows i and j. The
    owning side stamps its L row and probes the other; the aggregate over
    all stored adjacency entries is twice the summed result.
    """
    n = a_indptr.size - 1
    marker = np.zeros(n, dtype=np.int32)
    total = 0
    for i in range(row_start, row_end):
        if a_indptr[i] == a_indptr[i + 1]:
            continue
        stamp = np.int32(i + 1)
        for e in range(l_indptr[i], l_indptr[i + 1]):
            marker[l_indices[e]] = stamp
        li = ldeg[i]
        for e in range(a_indptr[i], a_indptr[i + 1]):
            j = a_indices[e]
            lj = ldeg[j]
            if lj < li or (lj == li and j > i):
                found = 0
                for f in range(l_indptr[j], l_indptr[j + 1]):
                    if marker[l_indices[f]] == stamp:
                        found += 1
                total += found
    return total


@njit(cache=True, nogil=True)
def incidence_pass(indptr, indices, deg, col_first, col_second, strict, col_start, col_end):
    """One side of the per-column nonzero count of the overloaded A x E product.

    Columns arrive grouped by ``col_first``; each group stamps the first
    endpoint's neighbor list once and probes the second endpoint's list for
    columns this pass owns (second degree below the first; ties only when
    ``strict`` is false). Run once over columns ordered by u and once
    ordered by v to cover every column exactly once at min-degree cost.
    """
    n = indptr.size - 1
    marker = np.zeros(n, dtype=np.int32)
    total = 0
    c = col_start
    while c < col_end:
        x = col_first[c]
        stamp = np.int32(x + 1)
        for e in range(indptr[x], indptr[x + 1]):
            marker[indices[e]] = stamp
        dx = deg[x]
        while c < col_end and col_first[c] == x:
            y = col_second[c]
            dy = deg[y]
            if dy < dx or (dy == dx and not strict):
                found = 0
                for f in range(indptr[y], indptr[y + 1]):
                    if marker[indices[f]] == stamp:
                        found += 1
                total += found
            c += 1
    return total
