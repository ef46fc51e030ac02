"""Seeded sampling of words and RSK shapes, and exact small-case enumeration.

Randomness policy: everything is driven by numpy's PCG64, seeded through
``SeedSequence(seed, spawn_key=(stream,))``.  A (seed, stream) pair fully
determines every sample drawn, so callers that record both can reproduce
any run bit for bit.

The law of ``sh_rsk`` on words of n i.i.d. letters with distribution alpha
is the object the rest of the package estimates and bounds.  Where the
state space is small enough, exact expectations are computed by enumerating
all d^n words once per (d, n) and grouping them by (shape, letter
histogram), since a word's probability depends only on its histogram.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Callable, Iterator, Sequence
from functools import lru_cache

import numpy as np

from . import _kernels
from .partitions import check_dist
from .rsk import sh_rsk

WORD_CAP = 10**7
HIST_CAP = 10**6


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """PCG64 generator for the given (seed, stream) pair."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(stream,))))


class AliasSampler:
    """Vose alias tables for O(1)-per-letter categorical sampling.

    Letters are 1-based to match the word convention.
    """

    def __init__(self, probs: Sequence[float]):
        p = np.asarray(probs, dtype=float)
        if p.ndim != 1 or p.size == 0:
            raise ValueError("need a nonempty probability vector")
        if np.any(p < 0) or abs(p.sum() - 1.0) > 1e-9:
            raise ValueError(f"not a probability vector: {probs!r}")
        d = p.size
        scaled = p * d
        prob = np.ones(d)
        alias = np.arange(d, dtype=np.int32)
        small = [i for i in range(d) if scaled[i] < 1.0]
        large = [i for i in range(d) if scaled[i] >= 1.0]
        while small and large:
            s = small.pop()
            l = large.pop()
            prob[s] = scaled[s]
            alias[s] = l
            scaled[l] -= 1.0 - scaled[s]
            (small if scaled[l] < 1.0 else large).append(l)
        # leftovers are 1 up to rounding
        self.d = d
        self._prob = prob
        self._alias = alias

    def sample(self, rng: np.random.Generator, size) -> np.ndarray:
        """Array of letters in 1..d with the table's distribution."""
        idx = rng.integers(0, self.d, size=size, dtype=np.int32)
        u = rng.random(size=size)
        out = np.where(u < self._prob[idx], idx, self._alias[idx]).astype(np.int32)
        out += 1
        return out


def sample_word(alpha: Sequence[float], n: int, seed: int, stream: int = 0) -> tuple[int, ...]:
    """One word of n i.i.d. letters with distribution alpha."""
    a = check_dist(alpha)
    rng = make_rng(seed, stream)
    return tuple(int(x) for x in AliasSampler(a).sample(rng, n))


def sample_words(alpha: Sequence[float], n: int, size: int, seed: int, stream: int = 0) -> np.ndarray:
    """(size, n) int32 matrix of words, one per row."""
    a = check_dist(alpha)
    rng = make_rng(seed, stream)
    return AliasSampler(a).sample(rng, (size, n))


def sample_sw(alpha: Sequence[float], n: int, seed: int, stream: int = 0) -> tuple[int, ...]:
    """One draw of the RSK shape of an n-letter alpha word."""
    return sh_rsk(sample_word(alpha, n, seed, stream))


def sample_sw_shapes(
    alpha: Sequence[float], n: int, size: int, seed: int, stream: int = 0,
    rng: np.random.Generator | None = None,
) -> np.ndarray:
    """(size, d) int32 matrix of RSK shape draws, one shape per row.

    Passing an existing ``rng`` continues its stream (used by the budget
    doubling in the bound checkers); otherwise (seed, stream) starts one.
    """
    a = check_dist(alpha)
    d = len(a)
    if rng is None:
        rng = make_rng(seed, stream)
    sampler = AliasSampler(a)
    out = np.zeros((size, d), dtype=np.int32)
    chunk = max(1, 4_000_000 // max(n, 1))
    lengths = np.full(chunk, n, dtype=np.int32)
    for start in range(0, size, chunk):
        stop = min(start + chunk, size)
        letters = sampler.sample(rng, (stop - start, n))
        _kernels.word_shapes(letters, lengths[: stop - start], d, out[start:stop])
    return out


def sample_plancherel(n: int, seed: int, stream: int = 0) -> tuple[int, ...]:
    """RSK shape of one uniformly random permutation of 1..n."""
    rng = make_rng(seed, stream)
    perm = rng.permutation(n).astype(np.int32) + 1
    return sh_rsk(perm.tolist())


def sample_plancherel_shapes(n: int, size: int, seed: int, stream: int = 0) -> np.ndarray:
    """(size, n) int32 matrix of RSK shapes of random permutations (rows padded with 0)."""
    rng = make_rng(seed, stream)
    base = np.tile(np.arange(1, n + 1, dtype=np.int32), (size, 1))
    perms = rng.permuted(base, axis=1)
    out = np.zeros((size, n), dtype=np.int32)
    _kernels.perm_shapes(perms, out)
    return out


def sample_plancherel_lis(n: int, size: int, seed: int, stream: int = 0) -> np.ndarray:
    """Longest-increasing-subsequence lengths of random permutations (= first row)."""
    rng = make_rng(seed, stream)
    out = np.zeros(size, dtype=np.int32)
    chunk = max(1, 2_000_000 // max(n, 1))
    for start in range(0, size, chunk):
        stop = min(start + chunk, size)
        base = np.tile(np.arange(1, n + 1, dtype=np.int32), (stop - start, 1))
        perms = rng.permuted(base, axis=1)
        lengths = np.full(stop - start, n, dtype=np.int32)
        _kernels.word_lis(perms, lengths, out[start:stop])
    return out


def histogram_of(w: Sequence[int], d: int) -> tuple[int, ...]:
    """Letter counts (h_1, ..., h_d); rejects letters outside 1..d."""
    h = [0] * d
    for x in w:
        if not 1 <= x <= d:
            raise ValueError(f"letter {x} outside alphabet 1..{d}")
        h[x - 1] += 1
    return tuple(h)


def enumerate_words(d: int, n: int, cap: int = WORD_CAP) -> Iterator[tuple[int, ...]]:
    """All d^n words in lexicographic order; refuses if d^n exceeds cap."""
    if d < 1 or n < 0:
        raise ValueError(f"bad alphabet or length: d={d}, n={n}")
    if d**n > cap:
        raise ValueError(f"{d}^{n} words exceeds enumeration cap {cap}")
    return itertools.product(range(1, d + 1), repeat=n)


def enumerate_histograms(d: int, n: int, cap: int = HIST_CAP) -> Iterator[tuple[int, ...]]:
    """All histograms of n letters over 1..d; refuses if the count exceeds cap."""
    if d < 1 or n < 0:
        raise ValueError(f"bad alphabet or length: d={d}, n={n}")
    if math.comb(n + d - 1, d - 1) > cap:
        raise ValueError(f"histogram count exceeds enumeration cap {cap}")

    def rec(remaining: int, slots: int):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining, -1, -1):
            for rest in rec(remaining - first, slots - 1):
                yield (first,) + rest

    return rec(n, d)


def multinomial_pmf(hist: Sequence[int], alpha: Sequence[float]) -> float:
    """Probability that n i.i.d. alpha letters have the given histogram."""
    if len(hist) != len(alpha):
        raise ValueError("histogram and alpha lengths differ")
    if any(h < 0 or h != int(h) for h in hist):
        raise ValueError(f"bad histogram {hist!r}")
    n = sum(int(h) for h in hist)
    coef = math.factorial(n)
    for h in hist:
        coef //= math.factorial(int(h))
    p = float(coef)
    for h, a in zip(hist, alpha):
        p *= float(a) ** int(h)
    return p


def _check_distinct_alpha(alpha: Sequence[float]) -> tuple[float, ...]:
    a = check_dist(alpha)
    if any(x <= 0 for x in a):
        raise ValueError("modified multinomial needs strictly positive alpha")
    if any(a[i] == a[i + 1] for i in range(len(a) - 1)):
        raise ValueError("modified multinomial needs strictly distinct alpha")
    return a


def mod_density(hist: Sequence[int], alpha: Sequence[float]) -> float:
    """Signed density of the modified alpha-multinomial relative to the multinomial.

    Defined only for strictly distinct positive alpha.  Averages to 1 under
    the multinomial, and can be negative for histograms far below their mean.
    """
    a = _check_distinct_alpha(alpha)
    if len(hist) != len(a):
        raise ValueError("histogram and alpha lengths differ")
    n = sum(hist)
    if n == 0:
        raise ValueError("empty histogram")
    f = 1.0
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            f += a[j] / (a[i] - a[j]) * (hist[i] / (a[i] * n) - hist[j] / (a[j] * n))
    return f


def modmult_expectation(
    func: Callable[[tuple[int, ...]], float], alpha: Sequence[float], n: int,
    cap: int = HIST_CAP,
) -> float:
    """Signed expectation of a histogram functional under the modified multinomial."""
    a = _check_distinct_alpha(alpha)
    total = 0.0
    for h in enumerate_histograms(len(a), n, cap):
        total += multinomial_pmf(h, a) * mod_density(h, a) * func(h)
    return total


@lru_cache(maxsize=32)
def _word_classes(d: int, n: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    """Group all d^n words by (RSK shape, histogram) with multiplicities."""
    if n == 0:
        return (((), (0,) * d, 1),)
    total = d**n
    classes: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    chunk = min(total, 1 << 18)
    powers = d ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        words = ((idx[:, None] // powers) % d + 1).astype(np.int32)
        m = words.shape[0]
        shapes = np.zeros((m, d), np.int32)
        _kernels.word_shapes(words, np.full(m, n, np.int32), d, shapes)
        hists = np.stack([(words == v).sum(axis=1) for v in range(1, d + 1)], axis=1)
        key = np.concatenate([shapes, hists], axis=1)
        uniq, cnt = np.unique(key, axis=0, return_counts=True)
        for row, c in zip(uniq, cnt):
            sh = tuple(int(x) for x in row[:d] if x > 0)
            h = tuple(int(x) for x in row[d:])
            classes[sh, h] = classes.get((sh, h), 0) + int(c)
    return tuple(sorted((sh, h, c) for (sh, h), c in classes.items()))


def exact_sw_expectation(
    func: Callable[[tuple[int, ...]], float], alpha: Sequence[float], n: int,
    cap: int = WORD_CAP,
) -> float:
    """Exact expectation of a shape functional by enumerating all d^n words."""
    a = check_dist(alpha)
    d = len(a)
    if d**n > cap:
        raise ValueError(f"{d}^{n} words exceeds enumeration cap {cap}")
    total = 0.0
    for sh, h, c in _word_classes(d, n):
        p = float(c)
        for hv, av in zip(h, a):
            p *= av**hv
        total += p * func(sh)
    return total


def exact_sw_distribution(
    alpha: Sequence[float], n: int, cap: int = WORD_CAP
) -> dict[tuple[int, ...], float]:
    """Exact law of the RSK shape as a dict shape -> probability."""
    a = check_dist(alpha)
    d = len(a)
    if d**n > cap:
        raise ValueError(f"{d}^{n} words exceeds enumeration cap {cap}")
    law: dict[tuple[int, ...], float] = {}
    for sh, h, c in _word_classes(d, n):
        p = float(c)
        for hv, av in zip(h, a):
            p *= av**hv
        law[sh] = law.get(sh, 0.0) + p
    # shapes outside the support (possible only when some alpha_i = 0)
    return {sh: p for sh, p in law.items() if p > 0.0}
