"""Row insertion, the RSK correspondence, and bump streams.

Convention used throughout: rows of the insertion tableau are weakly
increasing left to right, and inserting a letter into a row bumps the
leftmost entry *strictly greater* than it (appending when no such entry
exists).  With this convention the first row of the shape is the length of
the longest weakly increasing subsequence.

A word is any sequence of positive integer letters; functions return plain
tuples.  ``bump_stream(w, k)`` is the sequence of letters bumped from row k
into row k+1, in the order the bumps happen; its RSK shape is rows k+1
onward of the shape of w.
"""

from __future__ import annotations

from bisect import bisect_right
from collections.abc import Sequence
from dataclasses import dataclass

Word = Sequence[int]


@dataclass(frozen=True)
class TableauPair:
    """Insertion tableau P (semistandard) and recording tableau Q (standard)."""

    p: tuple[tuple[int, ...], ...]
    q: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.p)


def insert(row: Sequence[int], letter: int) -> tuple[list[int], int | None]:
    """Insert a letter into a weakly increasing row.

    Returns the new row and the bumped letter, or None if the letter was
    appended (every entry of the row is <= letter).
    """
    i = bisect_right(row, letter)
    new = list(row)
    if i == len(new):
        new.append(letter)
        return new, None
    bumped = new[i]
    new[i] = letter
    return new, bumped


def _cascade(rows: list[list[int]], letter: int, streams: list[list[int]] | None = None) -> int:
    """Run one insertion through the tableau, mutating rows.

    Returns the index of the row where the cascade terminated.  When
    ``streams`` is given, the letter bumped out of row j is appended to
    streams[j].
    """
    x = letter
    j = 0
    while True:
        if j == len(rows):
            rows.append([x])
            return j
        row = rows[j]
        i = bisect_right(row, x)
        if i == len(row):
            row.append(x)
            return j
        bumped = row[i]
        row[i] = x
        if streams is not None:
            streams[j].append(bumped)
        x = bumped
        j += 1


def rsk(w: Word) -> TableauPair:
    """Full RSK: insertion tableau plus the standard recording tableau."""
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, letter in enumerate(w, start=1):
        j = _cascade(p, letter)
        if j == len(q):
            q.append([])
        q[j].append(step)
    return TableauPair(tuple(tuple(r) for r in p), tuple(tuple(r) for r in q))


def sh_rsk(w: Word) -> tuple[int, ...]:
    """Shape of the RSK insertion tableau of w."""
    rows: list[list[int]] = []
    for letter in w:
        _cascade(rows, letter)
    return tuple(len(r) for r in rows)


def bump_streams(w: Word) -> list[tuple[int, ...]]:
    """All bump streams of w at once: entry k-1 is bump_stream(w, k)."""
    rows: list[list[int]] = []
    streams: list[list[int]] = []
    for letter in w:
        while len(streams) < len(rows) + 1:
            streams.append([])
        _cascade(rows, letter, streams)
    return [tuple(s) for s in streams[: max(len(rows) - 1, 0)]]


def bump_stream(w: Word, k: int) -> tuple[int, ...]:
    """Letters bumped from row k to row k+1, in bump order.  k=0 returns w itself."""
    if k < 0:
        raise ValueError(f"bump stream row must be >= 0, got {k}")
    if k == 0:
        return tuple(w)
    streams = bump_streams(w)
    if k - 1 < len(streams):
        return streams[k - 1]
    return ()


def standardize(w: Word) -> tuple[int, ...]:
    """Replace letters by 1..n, breaking ties left to right.

    Equal letters keep their relative order, so every bump event happens at
    the same position before and after; in particular shapes and bump
    streams are preserved.
    """
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    std = [0] * len(w)
    for rank, i in enumerate(order, start=1):
        std[i] = rank
    return tuple(std)


def subsequence_in_original_order(w: Word, k: int) -> tuple[int, ...]:
    """The letters of bump_stream(w, k), listed in their original word order.

    For words with repeated letters the stream entries are matched to word
    positions through standardization, which is well defined because ties
    bump in position order.  k=0 returns w.
    """
    if k == 0:
        return tuple(w)
    std = standardize(w)
    pos = {v: i for i, v in enumerate(std)}
    positions = sorted(pos[v] for v in bump_stream(std, k))
    return tuple(w[i] for i in positions)


def restrict_geq(w: Word, k: int) -> tuple[int, ...]:
    """Subword of letters >= k, in order."""
    return tuple(x for x in w if x >= k)


def restrict_leq(w: Word, k: int) -> tuple[int, ...]:
    """Subword of letters <= k, in order."""
    return tuple(x for x in w if x <= k)


def is_semistandard(rows: Sequence[Sequence[int]]) -> bool:
    """Rows weakly increase, columns strictly increase, row lengths nonincrease."""
    for j, row in enumerate(rows):
        if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
            return False
        if j > 0:
            if len(row) > len(rows[j - 1]):
                return False
            if any(row[i] <= rows[j - 1][i] for i in range(len(row))):
                return False
    return True


def is_standard(rows: Sequence[Sequence[int]]) -> bool:
    """Semistandard with strictly increasing rows and entries exactly 1..n."""
    entries = sorted(x for row in rows for x in row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    if any(row[i] >= row[i + 1] for row in rows for i in range(len(row) - 1)):
        return False
    return is_semistandard(rows)
