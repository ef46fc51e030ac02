"""Closed-form bounds on RSK shape statistics and checkers against them.

Two kinds of things live here.  Closed forms: the pairwise-ratio excess
bound ``itw`` and its trivial gap bound, row-mean windows, the variance and
mean-squared constants, distance-rate bounds, and the deterministic
rearrangement/log inequalities for sorted vectors.  Checkers: functions
that estimate the left side (exactly when d^n is small, by seeded Monte
Carlo otherwise) and compare it to the right side with a three-valued
verdict, so sampling noise can never turn a true inequality into a hard
failure.

Verdict rule, for an upper bound b with estimate e and 95% CI radius r:
pass if e + r <= b, fail if e - r > b, inconclusive otherwise (budget is
doubled up to max_budget while inconclusive).  Lower bounds and two-sided
windows use the mirrored rule.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from .metrics import shannon_entropy
from .partitions import check_dist, dominates, prefix_sum, tail_sum
from .sampling import (
    exact_sw_distribution,
    exact_sw_expectation,
    make_rng,
    sample_plancherel_lis,
    sample_sw_shapes,
)

DEFAULT_BUDGET = 10**4
MAX_BUDGET = 10**6
EXACT_CAP = 10**6
LEMMA_TOL = 1e-12
Z95 = 1.959963984540054  # two-sided 95% normal quantile


# ---------------------------------------------------------------------------
# closed forms

def itw(alpha: Sequence[float], k: int) -> float:
    """Pairwise-ratio bound sum_{i<=k<j} alpha_j/(alpha_i - alpha_j) on the prefix excess.

    +inf iff alpha_k == alpha_{k+1} > 0; zero when k == d.  Infinity is an
    ordinary value here so perturbation workflows compose.
    """
    a = check_dist(alpha)
    d = len(a)
    if not 1 <= k <= d:
        raise ValueError(f"need 1 <= k <= {d}, got {k}")
    total = 0.0
    for i in range(k):
        for j in range(k, d):
            if a[j] == 0:
                continue
            if a[i] == a[j]:
                return math.inf
            total += a[j] / (a[i] - a[j])
    return total


def itw_trivial_bound(alpha: Sequence[float], k: int) -> float:
    """k * tail_sum(alpha, k) / (alpha_k - alpha_{k+1}); an upper bound for itw."""
    a = check_dist(alpha)
    d = len(a)
    if not 1 <= k <= d:
        raise ValueError(f"need 1 <= k <= {d}, got {k}")
    if k == d:
        return 0.0
    gap = a[k - 1] - a[k]
    if gap <= 0:
        raise ValueError(f"zero gap at position {k}: {a[k - 1]} vs {a[k]}")
    return k * tail_sum(a, k) / gap


def modmult_row_mean_shift(alpha: Sequence[float], k: int) -> float:
    """Exact signed expectation of h_k - alpha_k n under the modified multinomial.

    Equals sum_{j>k} alpha_j/(alpha_k - alpha_j) - sum_{i<k} alpha_k/(alpha_i - alpha_k);
    summing over rows 1..k telescopes to itw(alpha, k).
    """
    a = check_dist(alpha)
    d = len(a)
    if not 1 <= k <= d:
        raise ValueError(f"need 1 <= k <= {d}, got {k}")
    ak = a[k - 1]
    gain = sum(a[j] / (ak - a[j]) for j in range(k, d))
    loss = sum(ak / (a[i] - ak) for i in range(k - 1))
    return gain - loss


def row_mean_bounds(alpha: Sequence[float], k: int, n: int) -> tuple[float, float]:
    """Window alpha_k n +- 2 sqrt(nu_k n) with nu_k = min(1, alpha_k d)."""
    a = check_dist(alpha)
    if not 1 <= k <= len(a):
        raise ValueError(f"need 1 <= k <= {len(a)}, got {k}")
    nu = min(1.0, a[k - 1] * len(a))
    half = 2.0 * math.sqrt(nu * n)
    mid = a[k - 1] * n
    return mid - half, mid + half


def row_mean_bounds_sharp(alpha: Sequence[float], k: int, n: int) -> tuple[float, float]:
    """Sharper window: alpha_k n - 2 sqrt(alpha_k k n) below, + 2 sqrt(tail n) above.

    The tail in the upper half-width starts at row k, i.e. alpha_k + ... + alpha_d,
    so at k=1 the upper bound is alpha_1 n + 2 sqrt(n) and at k=d the lower
    bound is alpha_d n - 2 sqrt(alpha_d d n).
    """
    a = check_dist(alpha)
    if not 1 <= k <= len(a):
        raise ValueError(f"need 1 <= k <= {len(a)}, got {k}")
    mid = a[k - 1] * n
    lo = mid - 2.0 * math.sqrt(a[k - 1] * k * n)
    hi = mid + 2.0 * math.sqrt(tail_sum(a, k - 1) * n)
    return lo, hi


def variance_bound(n: int) -> float:
    """Bounded-difference (Azuma) bound on Var of any single row."""
    return 16.0 * n


def mean_squared_bound(alpha: Sequence[float], k: int, n: int) -> float:
    """42 alpha_k k n + 42 (alpha_k + ... + alpha_d) n."""
    a = check_dist(alpha)
    if not 1 <= k <= len(a):
        raise ValueError(f"need 1 <= k <= {len(a)}, got {k}")
    return 42.0 * a[k - 1] * k * n + 42.0 * tail_sum(a, k - 1) * n


def entropy_window(alpha: Sequence[float], n: int) -> tuple[float, float]:
    """[H(alpha) - 3d^2/(2n), H(alpha)] window for the mean empirical entropy."""
    a = check_dist(alpha)
    h = shannon_entropy(a)
    return h - 3.0 * len(a) ** 2 / (2.0 * n), h


def perturb_top(alpha: Sequence[float], gap: float) -> tuple[float, ...]:
    """Majorizing perturbation: add gap to the top entry, remove it from the bottom.

    The result beta satisfies dominates(beta, alpha); used to replace a tied
    or unfavourable alpha by a nearby one with a strict gap.
    """
    a = list(check_dist(alpha))
    if gap < 0:
        raise ValueError("gap must be nonnegative")
    if a[0] + gap > 1.0 + LEMMA_TOL:
        raise ValueError("gap pushes the top entry past 1")
    a[0] += gap
    need = gap
    for i in range(len(a) - 1, 0, -1):
        take = min(a[i], need)
        a[i] -= take
        need -= take
        if need <= 0:
            break
    if need > LEMMA_TOL:
        raise ValueError("gap exceeds removable mass")
    return tuple(a)


def perturb_bottom(alpha: Sequence[float], gap: float) -> tuple[float, ...]:
    """Majorizing perturbation moving gap from the bottom entry to the top."""
    a = list(check_dist(alpha))
    if gap < 0:
        raise ValueError("gap must be nonnegative")
    if a[-1] < gap:
        raise ValueError("bottom entry smaller than requested gap")
    a[-1] -= gap
    a[0] += gap
    return tuple(a)


# ---------------------------------------------------------------------------
# deterministic inequalities for sorted vectors

def _check_perm_pair(alpha: Sequence[float], beta: Sequence[float]) -> tuple[tuple[float, ...], tuple[float, ...]]:
    a = tuple(float(x) for x in alpha)
    b = tuple(float(x) for x in beta)
    if any(a[i] < a[i + 1] for i in range(len(a) - 1)):
        raise ValueError("alpha must be sorted nonincreasing")
    if any(x <= 0 for x in a):
        raise ValueError("alpha must be strictly positive")
    if sorted(b) != sorted(a):
        raise ValueError("beta must be a permutation of alpha")
    return a, b


def rearrangement_rhs(alpha: Sequence[float], beta: Sequence[float]) -> float:
    """2 sum_j ((alpha_j - alpha_{j+1})/alpha_j) * sum_{i<=j} (alpha_i - beta_i)."""
    a, b = _check_perm_pair(alpha, beta)
    total = 0.0
    prefix = 0.0
    for j in range(len(a) - 1):
        prefix += a[j] - b[j]
        total += (a[j] - a[j + 1]) / a[j] * prefix
    return 2.0 * total


def check_rearrangement(alpha: Sequence[float], beta: Sequence[float], tol: float = LEMMA_TOL) -> bool:
    """Squared Hellinger distance to any rearrangement is at most rearrangement_rhs."""
    a, b = _check_perm_pair(alpha, beta)
    lhs = sum((math.sqrt(x) - math.sqrt(y)) ** 2 for x, y in zip(a, b))
    return lhs <= rearrangement_rhs(a, b) + tol


def log_sum_bound(alpha: Sequence[float], tol: float = LEMMA_TOL) -> bool:
    """sum of (alpha_i - alpha_{i+1})/alpha_i is at most min(d, ln(alpha_1/alpha_d))."""
    a = tuple(float(x) for x in alpha)
    if any(x <= 0 for x in a):
        raise ValueError("entries must be strictly positive")
    if any(a[i] < a[i + 1] for i in range(len(a) - 1)):
        raise ValueError("entries must be sorted nonincreasing")
    lhs = sum((a[i] - a[i + 1]) / a[i] for i in range(len(a) - 1))
    bound = min(float(len(a)), math.log(a[0] / a[-1]))
    return lhs <= bound + tol


def corollary_rearrangement_check(
    alpha: Sequence[float], beta: Sequence[float], zeta: float, tol: float = LEMMA_TOL
) -> bool:
    """Clipped rearrangement bound with threshold zeta.

    With k the index where alpha_k > zeta >= alpha_{k+1}, the clipped vector
    alpha' keeps rows 1..k and replaces row k+1 by zeta; the Hellinger-squared
    distance to any rearrangement is bounded by
    4 sum_{j<=k} ((alpha'_j - alpha'_{j+1})/alpha'_j) sum_{i<=j}(alpha_i - beta_i)
    + d zeta + 8 k L zeta,  L = min(k, ln(alpha_1/zeta)).
    """
    a, b = _check_perm_pair(alpha, beta)
    d = len(a)
    if zeta < 0:
        raise ValueError("zeta must be nonnegative")
    k = sum(1 for x in a if x > zeta)
    if k == 0 or k >= d:
        raise ValueError(f"no crossing alpha_k > zeta >= alpha_(k+1) for zeta={zeta}")
    clipped = a[:k] + (zeta,)
    total = 0.0
    prefix = 0.0
    for j in range(k):
        prefix += a[j] - b[j]
        total += (clipped[j] - clipped[j + 1]) / clipped[j] * prefix
    ell = min(float(k), math.log(a[0] / zeta)) if zeta > 0 else float(k)
    rhs = 4.0 * total + d * zeta + 8.0 * k * ell * zeta
    lhs = sum((math.sqrt(x) - math.sqrt(y)) ** 2 for x, y in zip(a, b))
    return lhs <= rhs + tol


# ---------------------------------------------------------------------------
# checker machinery

@dataclass(frozen=True)
class BoundCheck:
    """Outcome of comparing an estimated quantity to a closed-form bound."""

    check_id: str
    estimate: float
    ci_radius: float
    bound: float
    samples: int
    mode: str  # 'exact' | 'mc'
    verdict: str  # 'pass' | 'fail' | 'inconclusive'
    direction: str = "le"  # 'le' | 'ge' | 'window'
    lower: float | None = None


def _verdict(est: float, r: float, bound: float, direction: str, lower: float | None) -> str:
    if direction == "le":
        if est + r <= bound:
            return "pass"
        if est - r > bound:
            return "fail"
    elif direction == "ge":
        if est - r >= bound:
            return "pass"
        if est + r < bound:
            return "fail"
    elif direction == "window":
        assert lower is not None
        if est + r <= bound and est - r >= lower:
            return "pass"
        if est - r > bound or est + r < lower:
            return "fail"
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return "inconclusive"


def _mean_ci(vals: np.ndarray) -> tuple[float, float]:
    m = vals.size
    est = float(vals.mean())
    if m < 2 or not np.isfinite(est):
        return est, math.inf if not np.isfinite(est) else 0.0
    sd = float(vals.std(ddof=1))
    return est, Z95 * sd / math.sqrt(m)


def _variance_ci(vals: np.ndarray) -> tuple[float, float]:
    # normal-approximation CI for a sample variance via the fourth moment
    m = vals.size
    if m < 2:
        return 0.0, 0.0
    est = float(vals.var(ddof=1))
    centered = vals - vals.mean()
    m4 = float(np.mean(centered**4))
    spread = max(m4 - est**2, 0.0)
    return est, Z95 * math.sqrt(spread / m)


def _mc_check(
    check_id: str,
    alpha: Sequence[float],
    n: int,
    stat: Callable[[np.ndarray], np.ndarray],
    exact_fn: Callable[[], tuple[float, int]] | None,
    bound: float,
    *,
    direction: str = "le",
    lower: float | None = None,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    stream: int = 0,
    max_budget: int = MAX_BUDGET,
    mode: str = "auto",
    exact_cap: int = EXACT_CAP,
    shapes: np.ndarray | None = None,
    estimator: str = "mean",
) -> BoundCheck:
    """Shared engine: exact expectation when cheap, else MC with budget doubling.

    ``stat`` maps a (m, d) int32 matrix of sampled shapes to per-sample
    values.  ``exact_fn`` returns (exact value, state count) and is used when
    mode is 'exact', or 'auto' with d^n under exact_cap.  Passing ``shapes``
    evaluates on exactly those samples (no resampling, no doubling).
    """
    a = check_dist(alpha)
    d = len(a)
    ci = _variance_ci if estimator == "variance" else _mean_ci

    if shapes is not None:
        vals = stat(shapes)
        est, r = ci(vals)
        return BoundCheck(check_id, est, r, bound, vals.size, "mc",
                          _verdict(est, r, bound, direction, lower), direction, lower)

    want_exact = mode == "exact" or (mode == "auto" and exact_fn is not None and d**n <= exact_cap)
    if want_exact:
        if exact_fn is None:
            raise ValueError(f"{check_id}: no exact path available")
        est, states = exact_fn()
        return BoundCheck(check_id, est, 0.0, bound, states, "exact",
                          _verdict(est, 0.0, bound, direction, lower), direction, lower)

    rng = make_rng(seed, stream)
    vals = stat(sample_sw_shapes(a, n, budget, seed, stream, rng=rng))
    total = budget
    est, r = ci(vals)
    verdict = _verdict(est, r, bound, direction, lower)
    while verdict == "inconclusive" and total < max_budget:
        extra = min(total, max_budget - total)
        more = stat(sample_sw_shapes(a, n, extra, seed, stream, rng=rng))
        vals = np.concatenate([vals, more])
        total += extra
        est, r = ci(vals)
        verdict = _verdict(est, r, bound, direction, lower)
    return BoundCheck(check_id, est, r, bound, total, "mc", verdict, direction, lower)


def _row_values(shapes: np.ndarray, k: int) -> np.ndarray:
    if k - 1 < shapes.shape[1]:
        return shapes[:, k - 1].astype(np.float64)
    return np.zeros(shapes.shape[0])


def _row_of_shape(sh: tuple[int, ...], k: int) -> float:
    return float(sh[k - 1]) if k - 1 < len(sh) else 0.0


def _prefix_of_shape(sh: tuple[int, ...], k: int) -> float:
    return float(sum(sh[: min(k, len(sh))]))


# ---------------------------------------------------------------------------
# individual checkers

def exact_excess(alpha: Sequence[float], k: int, n: int, cap: int = 10**7) -> float:
    """Exact E[prefix_k(shape)] - prefix_k(alpha) n by full enumeration."""
    a = check_dist(alpha)
    e = exact_sw_expectation(lambda sh: _prefix_of_shape(sh, k), a, n, cap)
    return e - prefix_sum(a, min(k, len(a))) * n


def excess_estimate(
    alpha: Sequence[float], k: int, n: int,
    budget: int = DEFAULT_BUDGET, seed: int = 0, **kw,
) -> BoundCheck:
    """Mean prefix-sum excess of the top k rows against itw(alpha, k)."""
    a = check_dist(alpha)
    kk = min(k, len(a))
    base = prefix_sum(a, kk) * n

    def stat(shapes: np.ndarray) -> np.ndarray:
        return shapes[:, :kk].sum(axis=1).astype(np.float64) - base

    def exact_fn():
        return exact_excess(a, kk, n), len(a) ** n

    return _mc_check("excess-itw", a, n, stat, exact_fn, itw(a, kk),
                     budget=budget, seed=seed, **kw)


def prefix_deviation_check(
    alpha: Sequence[float], k: int, n: int,
    budget: int = DEFAULT_BUDGET, seed: int = 0, **kw,
) -> BoundCheck:
    """Normalized prefix excess E[prefix_k(shape)/n - prefix_k(alpha)] vs 2k/sqrt(n)."""
    a = check_dist(alpha)
    kk = min(k, len(a))
    base = prefix_sum(a, kk)

    def stat(shapes: np.ndarray) -> np.ndarray:
        return shapes[:, :kk].sum(axis=1).astype(np.float64) / n - base

    def exact_fn():
        return exact_excess(a, kk, n) / n, len(a) ** n

    return _mc_check("prefix-deviation", a, n, stat, exact_fn, 2.0 * kk / math.sqrt(n),
                     budget=budget, seed=seed, **kw)


def prefix_deviation_trend(
    alpha: Sequence[float], k: int, n: int,
    budget: int = DEFAULT_BUDGET, seed: int = 0, **kw,
) -> BoundCheck:
    """Same statistic against k sqrt(tail_sum(alpha,k)/n), with constant 1.

    The true constant here is unspecified, so this check is reported for the
    trend only and is never asserted by the suites.
    """
    a = check_dist(alpha)
    kk = min(k, len(a))
    base = prefix_sum(a, kk)
    ref = kk * math.sqrt(tail_sum(a, kk) / n)

    def stat(shapes: np.ndarray) -> np.ndarray:
        return shapes[:, :kk].sum(axis=1).astype(np.float64) / n - base

    def exact_fn():
        return exact_excess(a, kk, n) / n, len(a) ** n

    return _mc_check("prefix-deviation-trend", a, n, stat, exact_fn, ref,
                     budget=budget, seed=seed, **kw)


def row_mean_check(
    alpha: Sequence[float], k: int, n: int,
    budget: int = DEFAULT_BUDGET, seed: int = 0, variant: str = "basic", **kw,
) -> BoundCheck:
    """Mean of row k inside its closed-form window ('basic' or 'sharp')."""
    a = check_dist(alpha)
    if variant == "basic":
        lo, hi = row_mean_bounds(a, k, n)
    elif variant == "sharp":
        lo, hi = row_mean_bounds_sharp(a, k, n)
    else:
        raise ValueError(f"unknown variant {variant!r}")

    def exact_fn():
        return exact_sw_expectation(lambda sh: _row_of_shape(sh, k), a, n), len(a) ** n

    return _mc_check(f"row-mean-{variant}", a, n, lambda s: _row_values(s, k), exact_fn, hi,
                     direction="window", lower=lo, budget=budget, seed=seed, **kw)


def variance_check(
    alpha: Sequence[float], k: int, n: int,
    budget: int = DEFAULT_BUDGET, seed: int = 0, **kw,
) -> BoundCheck:
    """Sample variance of row k against the bounded-difference bound 16n."""
    a = check_dist(alpha)

    def exact_fn():
        e1 = exact_sw_expectation(lambda sh: _row_of_shape(sh, k), a, n)
        e2 = exact_sw_expectation(lambda sh: _row_of_shape(sh, k) ** 2, a, n)
        return e2 - e1 * e1, len(a) ** n

    return _mc_check("row-variance", a, n, lambda s: _row_values(s, k), exact_fn,
                     variance_bound(n), budget=budget, seed=seed, estimator="variance", **kw)


def mean_squared_check(
    alpha: Sequence[float], k: int, n: int,
    budget: int = DEFAULT_BUDGET, seed: int = 0, **kw,
) -> BoundCheck:
    """E (row_k - alpha_k n)^2 against 42 alpha_k k n + 42 tail n."""
    a = check_dist(alpha)
    mid = a[k - 1] * n

    def stat(shapes: np.ndarray) -> np.ndarray:
        return (_row_values(shapes, k) - mid) ** 2

    def exact_fn():
        return exact_sw_expectation(lambda sh: (_row_of_shape(sh, k) - mid) ** 2, a, n), len(a) ** n

    return _mc_check("row-mean-squared", a, n, stat, exact_fn, mean_squared_bound(a, k, n),
                     budget=budget, seed=seed, **kw)


# metric-id -> (needs k, bound fn, vector stat fn, scalar fn); stats act on
# the normalized diagram rows
def _vec_hell(lam: np.ndarray, a: np.ndarray, k: int) -> np.ndarray:
    return ((np.sqrt(lam[:, :k]) - np.sqrt(a[:k])) ** 2).sum(axis=1)


def _vec_chi(lam: np.ndarray, a: np.ndarray, k: int) -> np.ndarray:
    with np.errstate(divide="ignore", invalid="ignore"):
        t = (lam[:, :k] - a[:k]) ** 2 / a[:k]
    t = np.where((a[:k] == 0) & (lam[:, :k] > 0), np.inf, np.nan_to_num(t, nan=0.0, posinf=np.inf))
    return t.sum(axis=1)


def _vec_kl(lam: np.ndarray, a: np.ndarray, k: int) -> np.ndarray:
    with np.errstate(divide="ignore", invalid="ignore"):
        t = lam * np.log(lam / a)
    t = np.where(lam == 0, 0.0, t)
    t = np.where((a == 0) & (lam > 0), np.inf, t)
    return t.sum(axis=1)


def _vec_l1(lam: np.ndarray, a: np.ndarray, k: int) -> np.ndarray:
    return np.abs(lam - a).sum(axis=1)


def _vec_l2(lam: np.ndarray, a: np.ndarray, k: int) -> np.ndarray:
    return ((lam[:, :k] - a[:k]) ** 2).sum(axis=1)


def _vec_tv_trunc(lam: np.ndarray, a: np.ndarray, k: int) -> np.ndarray:
    return 0.5 * np.abs(lam[:, :k] - a[:k]).sum(axis=1)


_RATES: dict[str, tuple[bool, Callable[[int, int, int], float], Callable]] = {
    # id: (truncated?, bound(d, k, n), vector stat)
    "chi2": (False, lambda d, k, n: d * d / n, _vec_chi),
    "hellinger2": (False, lambda d, k, n: d * d / n, _vec_hell),
    "kl": (False, lambda d, k, n: d * d / n, _vec_kl),
    "l2sq": (False, lambda d, k, n: d / n, _vec_l2),
    "l1": (False, lambda d, k, n: d / math.sqrt(n), _vec_l1),
    "l2sq-trunc": (True, lambda d, k, n: 46.0 * k / n, _vec_l2),
    "chi2-trunc": (True, lambda d, k, n: 46.0 * k * d / n, _vec_chi),
    "hellinger2-trunc": (True, lambda d, k, n: 46.0 * k * d / n, _vec_hell),
    "tv-trunc": (True, lambda d, k, n: (1.92 * k + 0.5) / math.sqrt(n), _vec_tv_trunc),
    "tv-trunc-sharp": (True, lambda d, k, n: (1.5 * k + 0.5) / math.sqrt(n), _vec_tv_trunc),
}

RATE_METRICS = tuple(_RATES)


def distance_rate_check(
    metric_id: str, alpha: Sequence[float], n: int, k: int | None = None,
    budget: int = DEFAULT_BUDGET, seed: int = 0, **kw,
) -> BoundCheck:
    """Mean distance between the normalized sampled diagram and alpha vs its rate bound."""
    if metric_id not in _RATES:
        raise ValueError(f"unknown metric id {metric_id!r}")
    truncated, bound_fn, vec = _RATES[metric_id]
    a = check_dist(alpha)
    d = len(a)
    if truncated:
        if k is None:
            raise ValueError(f"{metric_id} needs a truncation index k")
        if not 1 <= k <= d:
            raise ValueError(f"need 1 <= k <= {d}, got {k}")
    else:
        k = d
    arr = np.asarray(a)

    def stat(shapes: np.ndarray) -> np.ndarray:
        return vec(shapes.astype(np.float64) / n, arr, k)

    def exact_fn():
        law = exact_sw_distribution(a, n)
        total = 0.0
        for sh, p in law.items():
            row = np.zeros((1, d))
            row[0, : len(sh)] = sh
            total += p * float(vec(row / n, arr, k)[0])
        return total, d**n

    return _mc_check(f"rate-{metric_id}", a, n, stat, exact_fn, bound_fn(d, k, n),
                     budget=budget, seed=seed, **kw)


def entropy_bias_check(
    alpha: Sequence[float], n: int,
    budget: int = DEFAULT_BUDGET, seed: int = 0, **kw,
) -> BoundCheck:
    """Mean entropy of the normalized diagram inside [H(alpha) - 3d^2/2n, H(alpha)]."""
    a = check_dist(alpha)
    lo, hi = entropy_window(a, n)

    def stat(shapes: np.ndarray) -> np.ndarray:
        lam = shapes.astype(np.float64) / n
        with np.errstate(divide="ignore", invalid="ignore"):
            t = -lam * np.log(lam)
        return np.where(lam > 0, t, 0.0).sum(axis=1)

    def exact_fn():
        law = exact_sw_distribution(a, n)
        val = sum(p * shannon_entropy([r / n for r in sh]) for sh, p in law.items())
        return val, len(a) ** n

    return _mc_check("entropy-bias", a, n, stat, exact_fn, hi,
                     direction="window", lower=lo, budget=budget, seed=seed, **kw)


def coupling_consequence_check(
    alpha: Sequence[float], beta: Sequence[float], k: int, n: int,
    budget: int = DEFAULT_BUDGET, seed: int = 0, stream: int = 0,
    max_budget: int = MAX_BUDGET, mode: str = "auto", exact_cap: int = EXACT_CAP, **kw,
) -> BoundCheck:
    """E_beta[prefix_k] - E_alpha[prefix_k] >= 0 whenever beta majorizes alpha.

    Monte Carlo uses two child streams of (seed, stream) with a pooled CI.
    """
    a = check_dist(alpha)
    b = check_dist(beta)
    if len(a) != len(b):
        raise ValueError("alpha and beta need equal length")
    if not dominates(b, a):
        raise ValueError("beta must majorize alpha")
    d = len(a)
    kk = min(k, d)

    if mode == "exact" or (mode == "auto" and d**n <= exact_cap):
        ea = exact_sw_expectation(lambda sh: _prefix_of_shape(sh, kk), a, n)
        eb = exact_sw_expectation(lambda sh: _prefix_of_shape(sh, kk), b, n)
        est = eb - ea
        return BoundCheck("coupling-prefix-order", est, 0.0, 0.0, 2 * d**n, "exact",
                          _verdict(est, 0.0, 0.0, "ge", None), "ge")

    ss = np.random.SeedSequence(seed, spawn_key=(stream,))
    child_a, child_b = ss.spawn(2)
    rng_a = np.random.Generator(np.random.PCG64(child_a))
    rng_b = np.random.Generator(np.random.PCG64(child_b))

    def draw(total_alpha, rng_x, dist):
        return sample_sw_shapes(dist, n, total_alpha, seed, stream, rng=rng_x)[:, :kk].sum(axis=1).astype(np.float64)

    va = draw(budget, rng_a, a)
    vb = draw(budget, rng_b, b)
    total = budget
    while True:
        est = float(vb.mean() - va.mean())
        r = Z95 * math.sqrt(va.var(ddof=1) / va.size + vb.var(ddof=1) / vb.size)
        verdict = _verdict(est, r, 0.0, "ge", None)
        if verdict != "inconclusive" or total >= max_budget:
            break
        extra = min(total, max_budget - total)
        va = np.concatenate([va, draw(extra, rng_a, a)])
        vb = np.concatenate([vb, draw(extra, rng_b, b)])
        total += extra
    return BoundCheck("coupling-prefix-order", est, r, 0.0, 2 * total, "mc", verdict, "ge")


def lis_plancherel_check(n: int, budget: int = 2000, seed: int = 0, stream: int = 0) -> BoundCheck:
    """Mean longest increasing subsequence of random permutations vs 2 sqrt(n)."""
    vals = sample_plancherel_lis(n, budget, seed, stream).astype(np.float64)
    est, r = _mean_ci(vals)
    bound = 2.0 * math.sqrt(n)
    return BoundCheck("lis-plancherel", est, r, bound, budget, "mc",
                      _verdict(est, r, bound, "le", None), "le")
