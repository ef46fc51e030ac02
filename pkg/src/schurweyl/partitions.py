"""Young diagrams, sorted probability vectors, and majorization orders.

A Young diagram is represented as a plain tuple of nonincreasing nonnegative
integers (row lengths); trailing zeros are permitted and two diagrams that
differ only in trailing zeros are considered equal.  Sorted probability
vectors use the same convention with floats.  All comparison helpers insist
on sorted input rather than silently sorting, because the majorization
statements they implement are only meaningful for sorted vectors.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence

Rows = Sequence[float]

#: absolute tolerance for real-valued prefix comparisons
REAL_TOL = 1e-12


def is_sorted_desc(x: Rows, tol: float = 0.0) -> bool:
    """True if x is nonincreasing (within tol for real input)."""
    return all(x[i] >= x[i + 1] - tol for i in range(len(x) - 1))


def check_diagram(rows: Rows) -> tuple[int, ...]:
    """Validate rows as a Young diagram and return it as an int tuple.

    Raises ValueError on negative entries, non-integers, or unsorted input.
    """
    out = []
    for r in rows:
        if r != int(r):
            raise ValueError(f"diagram rows must be integers, got {r!r}")
        if r < 0:
            raise ValueError(f"diagram rows must be nonnegative, got {r!r}")
        out.append(int(r))
    if not is_sorted_desc(out):
        raise ValueError(f"diagram rows must be nonincreasing: {rows!r}")
    return tuple(out)


def check_dist(probs: Rows, tol: float = REAL_TOL) -> tuple[float, ...]:
    """Validate a sorted probability vector (nonincreasing, sums to 1)."""
    a = tuple(float(p) for p in probs)
    if any(p < -tol for p in a):
        raise ValueError(f"probabilities must be nonnegative: {probs!r}")
    if not is_sorted_desc(a, tol):
        raise ValueError(f"probabilities must be sorted nonincreasing: {probs!r}")
    if abs(sum(a) - 1.0) > tol:
        raise ValueError(f"probabilities must sum to 1, got {sum(a)!r}")
    return a


def trim(rows: Rows) -> tuple[float, ...]:
    """Drop trailing zeros."""
    n = len(rows)
    while n > 0 and rows[n - 1] == 0:
        n -= 1
    return tuple(rows[:n])


def pad(rows: Rows, length: int) -> tuple[float, ...]:
    """Extend with zeros up to the given length."""
    if len(rows) > length:
        raise ValueError(f"cannot pad length {len(rows)} down to {length}")
    return tuple(rows) + (0,) * (length - len(rows))


def diagrams_equal(a: Rows, b: Rows) -> bool:
    return trim(a) == trim(b)


def prefix_sum(x: Rows, k: int):
    """Sum of the first k entries.  k=0 gives 0; k may equal len(x)."""
    if not 0 <= k <= len(x):
        raise ValueError(f"prefix index {k} out of range for length {len(x)}")
    return sum(x[:k])


def tail_sum(x: Rows, k: int):
    """Sum of the entries after the first k, i.e. x[k] + ... + x[-1]."""
    if not 0 <= k <= len(x):
        raise ValueError(f"tail index {k} out of range for length {len(x)}")
    return sum(x[k:])


def _compare_prefixes(a: Rows, b: Rows, tol: float | None) -> tuple[bool, float]:
    """Shared core: returns (all prefix sums of a >= those of b, total diff)."""
    if not is_sorted_desc(a, tol or 0.0) or not is_sorted_desc(b, tol or 0.0):
        raise ValueError("majorization comparisons require sorted input")
    d = max(len(a), len(b))
    aa, bb = pad(a, d), pad(b, d)
    if tol is None:
        # exact integer path
        eps = 0
    else:
        eps = tol
    sa = sb = 0
    ok = True
    for i in range(d):
        sa += aa[i]
        sb += bb[i]
        if sa < sb - eps:
            ok = False
            break
    return ok, sa - sb


def _pick_tol(a: Rows, b: Rows) -> float | None:
    exact = all(isinstance(v, int) for v in a) and all(isinstance(v, int) for v in b)
    return None if exact else REAL_TOL


def dominates(a: Rows, b: Rows, tol: float | None = None) -> bool:
    """Majorization order: every prefix sum of a is >= that of b, totals equal.

    Integer input is compared exactly; real input within an absolute
    tolerance (default 1e-12 per prefix).  Unsorted input raises.
    """
    if tol is None:
        tol = _pick_tol(a, b)
    ok, diff = _compare_prefixes(a, b, tol)
    if not ok:
        return False
    eps = 0 if tol is None else tol
    return abs(diff) <= eps


def weakly_dominates(a: Rows, b: Rows, tol: float | None = None) -> bool:
    """Weak majorization: prefix sums of a dominate those of b, no total constraint."""
    if tol is None:
        tol = _pick_tol(a, b)
    ok, _ = _compare_prefixes(a, b, tol)
    return ok


def normalize(rows: Rows, n: int) -> tuple[float, ...]:
    """Divide a diagram with n boxes by n, giving a sorted probability vector."""
    lam = check_diagram(rows)
    if sum(lam) != n:
        raise ValueError(f"diagram has {sum(lam)} boxes, expected {n}")
    if n == 0:
        raise ValueError("cannot normalize the empty diagram")
    return tuple(r / n for r in lam)


def partitions_of(n: int, max_rows: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield all partitions of n (nonincreasing tuples), optionally capped in length."""
    if max_rows is None:
        max_rows = n

    def rec(remaining: int, bound: int, rows_left: int, acc: list[int]):
        if remaining == 0:
            yield tuple(acc)
            return
        if rows_left == 0:
            return
        for first in range(min(remaining, bound), 0, -1):
            acc.append(first)
            yield from rec(remaining - first, first, rows_left - 1, acc)
            acc.pop()

    if n == 0:
        yield ()
        return
    yield from rec(n, n, max_rows, [])


def conjugate(rows: Rows) -> tuple[int, ...]:
    """Transpose of a Young diagram."""
    lam = trim(check_diagram(rows))
    if not lam:
        return ()
    return tuple(sum(1 for r in lam if r > j) for j in range(lam[0]))
