"""Longest weakly increasing subsequences and Greene invariants.

``greene_invariant(w, k)`` is the largest total length of k disjoint weakly
increasing subsequences of w.  The shape computed by row insertion satisfies
``prefix_sum(sh_rsk(w), k) == greene_invariant(w, k)`` for every k; the check
functions in this module verify that equality and the related majorization
statements against the insertion code.

The invariant here is computed by exhaustive search (every assignment of
positions to one of the k subsequences or to none, with feasibility pruning
and a remaining-length bound).  It is deliberately simple and exponential:
its whole value is that it shares no code with the insertion path.
"""

from __future__ import annotations

from bisect import bisect_right

from .partitions import dominates, prefix_sum, weakly_dominates
from .rsk import (
    Word,
    bump_stream,
    restrict_geq,
    sh_rsk,
    standardize,
    subsequence_in_original_order,
)

#: refuse exhaustive search beyond this length
MAX_ORACLE_N = 14


def lis(w: Word) -> int:
    """Length of the longest weakly increasing subsequence (patience piles)."""
    tops: list[int] = []
    for x in w:
        i = bisect_right(tops, x)
        if i == len(tops):
            tops.append(x)
        else:
            tops[i] = x
    return len(tops)


def greene_invariant(w: Word, k: int, max_n: int = MAX_ORACLE_N) -> int:
    """Largest total length of k disjoint weakly increasing subsequences.

    Exhaustive branch and bound; refuses words longer than max_n.
    """
    n = len(w)
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if n > max_n:
        raise ValueError(f"word of length {n} exceeds oracle cap {max_n}")
    if k == 0 or n == 0:
        return 0

    word = tuple(w)
    best = 0

    def search(i: int, tops: tuple[int, ...], total: int):
        nonlocal best
        if total > best:
            best = total
        # remaining-length bound
        if total + (n - i) <= best or i == n:
            return
        x = word[i]
        seen = -1
        for j in range(k):
            t = tops[j]
            # piles with equal tops are interchangeable; try the first only
            if t == seen:
                continue
            seen = t
            if t <= x:
                extended = sorted(tops[:j] + tops[j + 1 :] + (x,))
                search(i + 1, tuple(extended), total + 1)
        search(i + 1, tops, total)

    # tops are kept sorted ascending so that equal-top piles are adjacent;
    # sentinel 0 marks an empty pile (letters are >= 1)
    search(0, (0,) * k, 0)
    return best


def check_greene(w: Word, k: int) -> bool:
    """prefix_sum(sh_rsk(w), k) equals the exhaustive invariant."""
    shape = sh_rsk(w)
    kk = min(k, len(shape))
    return prefix_sum(shape, kk) == greene_invariant(w, k)


def check_lower_row_majorization(w: Word, k: int) -> bool:
    """Shape of the row-k bump letters in word order dominates their shape in bump order.

    The word is standardized internally, so repeated letters are fine.
    """
    std = standardize(w)
    in_order = subsequence_in_original_order(std, k)
    return dominates(sh_rsk(in_order), sh_rsk(bump_stream(std, k)))


def check_restriction_weak_majorization(w: Word, k: int) -> bool:
    """Shape of the letters >= k weakly dominates rows k onward of the full shape."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    upper = sh_rsk(restrict_geq(w, k))
    lower = sh_rsk(w)[k - 1 :]
    return weakly_dominates(upper, lower)
