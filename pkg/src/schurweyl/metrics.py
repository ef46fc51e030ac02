"""Distances and entropy for probability vectors, with truncated variants.

The truncated forms sum only the first k coordinates; they are what the
k-row convergence statements bound.  Conventions at zero denominators:
a chi-squared or KL term with b_i = 0 < a_i is +inf, and 0/0 terms are 0.
Total variation is half the L1 distance; ``l1`` itself is the plain
unhalved norm.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

Vec = Sequence[float]


def _common(a: Vec, b: Vec, k: int | None) -> int:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    if k is None:
        k = len(a)
    if not 0 <= k <= len(a):
        raise ValueError(f"truncation index {k} out of range")
    if any(x < 0 for x in a) or any(x < 0 for x in b):
        raise ValueError("negative entries")
    return k


def hellinger_sq(a: Vec, b: Vec, k: int | None = None) -> float:
    """Squared Hellinger distance sum_{i<=k} (sqrt(a_i) - sqrt(b_i))^2."""
    k = _common(a, b, k)
    return sum((math.sqrt(a[i]) - math.sqrt(b[i])) ** 2 for i in range(k))


def chi_sq(a: Vec, b: Vec, k: int | None = None) -> float:
    """Chi-squared divergence sum_{i<=k} (a_i - b_i)^2 / b_i of a from b."""
    k = _common(a, b, k)
    total = 0.0
    for i in range(k):
        if b[i] == 0:
            if a[i] > 0:
                return math.inf
            continue
        total += (a[i] - b[i]) ** 2 / b[i]
    return total


def kl(a: Vec, b: Vec) -> float:
    """Kullback-Leibler divergence of a from b, in nats."""
    _common(a, b, None)
    total = 0.0
    for x, y in zip(a, b):
        if x == 0:
            continue
        if y == 0:
            return math.inf
        total += x * math.log(x / y)
    return total


def l1(a: Vec, b: Vec) -> float:
    """Unhalved L1 distance."""
    _common(a, b, None)
    return sum(abs(x - y) for x, y in zip(a, b))


def l2_sq(a: Vec, b: Vec, k: int | None = None) -> float:
    """Squared L2 distance over the first k coordinates."""
    k = _common(a, b, k)
    return sum((a[i] - b[i]) ** 2 for i in range(k))


def tv(a: Vec, b: Vec) -> float:
    """Total variation distance, half the L1 norm."""
    return 0.5 * l1(a, b)


def tv_truncated(a: Vec, b: Vec, k: int) -> float:
    """Half the L1 distance over the first k coordinates."""
    k = _common(a, b, k)
    return 0.5 * sum(abs(a[i] - b[i]) for i in range(k))


def shannon_entropy(a: Vec) -> float:
    """Entropy in nats; zero entries contribute nothing."""
    total = 0.0
    for x in a:
        if x < 0:
            raise ValueError(f"negative probability {x!r}")
        if x > 0:
            total -= x * math.log(x)
    return total


def chi_sq_identity(a: Vec, b: Vec) -> float:
    """chi_sq(a, b) computed as sum a_i^2/b_i - 1; valid when both sum to 1."""
    _common(a, b, None)
    total = 0.0
    for x, y in zip(a, b):
        if y == 0:
            if x > 0:
                return math.inf
            continue
        total += x * x / y
    return total - 1.0
