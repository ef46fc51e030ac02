"""Compiled kernels for batch shape and LIS computation.

These exist purely for speed in the Monte Carlo paths.  Each one mirrors a
pure-Python reference in rsk/greene and is tested against it; nothing here
is a source of truth.

The bounded-alphabet kernel exploits that an insertion-tableau row is a
weakly increasing multiset: it keeps per-row letter counts instead of the
row itself, so one bump is a counts update plus a scan for the next letter
present.  Row j only ever holds letters > j, hence at most d rows.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def word_shapes(letters, lengths, d, out):
    """RSK shapes of a batch of words over the alphabet 1..d.

    letters: (m, n_max) int32, row s holds lengths[s] letters then junk.
    out: (m, d) int32, zeroed by the caller; receives row lengths.
    """
    m = letters.shape[0]
    counts = np.zeros((d, d + 1), np.int32)
    for s in range(m):
        counts[:, :] = 0
        n = lengths[s]
        for t in range(n):
            x = letters[s, t]
            j = 0
            while True:
                v = 0
                for u in range(x + 1, d + 1):
                    if counts[j, u] > 0:
                        v = u
                        break
                counts[j, x] += 1
                if v == 0:
                    out[s, j] += 1
                    break
                counts[j, v] -= 1
                x = v
                j += 1


@njit(cache=True)
def word_lis(letters, lengths, out):
    """Longest weakly increasing subsequence lengths, patience-style."""
    m, n_max = letters.shape
    tops = np.empty(n_max, np.int32)
    for s in range(m):
        size = 0
        n = lengths[s]
        for t in range(n):
            x = letters[s, t]
            lo, hi = 0, size
            while lo < hi:
                mid = (lo + hi) >> 1
                if tops[mid] <= x:
                    lo = mid + 1
                else:
                    hi = mid
            if lo == size:
                tops[size] = x
                size += 1
            else:
                tops[lo] = x
        out[s] = size


@njit(cache=True)
def perm_shapes(perms, out):
    """RSK shapes of a batch of words with distinct letters (permutations).

    perms: (m, n) int32.  out: (m, n) int32, zeroed; receives row lengths.
    Rows are materialized because the alphabet is as large as the word.
    """
    m, n = perms.shape
    rows = np.empty((n, n), np.int32)
    row_len = np.empty(n, np.int32)
    for s in range(m):
        nrows = 0
        for t in range(n):
            x = perms[s, t]
            j = 0
            while True:
                if j == nrows:
                    rows[j, 0] = x
                    row_len[j] = 1
                    nrows += 1
                    break
                size = row_len[j]
                lo, hi = 0, size
                while lo < hi:
                    mid = (lo + hi) >> 1
                    if rows[j, mid] <= x:
                        lo = mid + 1
                    else:
                        hi = mid
                if lo == size:
                    rows[j, size] = x
                    row_len[j] = size + 1
                    break
                v = rows[j, lo]
                rows[j, lo] = x
                x = v
                j += 1
        for j in range(nrows):
            out[s, j] = row_len[j]
