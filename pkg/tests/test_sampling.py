import itertools
import math

import numpy as np
import pytest

from schurweyl.rsk import sh_rsk
from schurweyl.sampling import (
    AliasSampler,
    enumerate_histograms,
    enumerate_words,
    exact_sw_distribution,
    exact_sw_expectation,
    histogram_of,
    make_rng,
    mod_density,
    modmult_expectation,
    multinomial_pmf,
    sample_plancherel,
    sample_plancherel_lis,
    sample_plancherel_shapes,
    sample_sw,
    sample_sw_shapes,
    sample_word,
    sample_words,
)


def test_make_rng_streams_are_independent_and_stable():
    a = make_rng(7, 0).integers(0, 100, 5)
    b = make_rng(7, 1).integers(0, 100, 5)
    a2 = make_rng(7, 0).integers(0, 100, 5)
    assert np.array_equal(a, a2)
    assert not np.array_equal(a, b)


def test_alias_sampler_frozen_count():
    # pinned draw: fair coin, one word of a million letters
    w = sample_words((0.5, 0.5), 10**6, 1, seed=20260823)
    assert int((w == 1).sum()) == 499911


def test_alias_sampler_point_mass():
    s = AliasSampler((1.0,))
    out = s.sample(make_rng(0), 100)
    assert np.all(out == 1)


def test_alias_sampler_frequencies():
    alpha = (0.6, 0.3, 0.1)
    s = AliasSampler(alpha)
    out = s.sample(make_rng(1), 200_000)
    freq = [float((out == i).mean()) for i in (1, 2, 3)]
    assert freq == pytest.approx(list(alpha), abs=6e-3)


def test_sample_word_letters_in_range():
    w = sample_word((0.4, 0.3, 0.3), 50, seed=2)
    assert len(w) == 50
    assert set(w) <= {1, 2, 3}


def test_sample_sw_is_a_shape():
    sh = sample_sw((0.5, 0.3, 0.2), 40, seed=3)
    assert sum(sh) == 40
    assert all(a >= b for a, b in zip(sh, sh[1:]))


def test_sample_sw_shapes_matches_scalar_path():
    alpha = (0.7, 0.3)
    shapes = sample_sw_shapes(alpha, 30, 5, seed=4, stream=2)
    assert shapes.shape == (5, 2)
    assert np.all(shapes.sum(axis=1) == 30)
    # same seed and stream give the same letters, hence the same shapes
    words = sample_words(alpha, 30, 5, seed=4, stream=2)
    for i in range(5):
        sh = sh_rsk(tuple(int(x) for x in words[i]))
        assert tuple(shapes[i, : len(sh)]) == sh


def test_sample_sw_shapes_deterministic_rerun():
    a = sample_sw_shapes((0.5, 0.3, 0.2), 100, 50, seed=5)
    b = sample_sw_shapes((0.5, 0.3, 0.2), 100, 50, seed=5)
    assert np.array_equal(a, b)


def test_plancherel_shapes_and_lis():
    n = 9
    shapes = sample_plancherel_shapes(n, 40, seed=6)
    assert np.all(shapes.sum(axis=1) == n)
    sh = sample_plancherel(n, seed=7)
    assert sum(sh) == n
    vals = sample_plancherel_lis(n, 40, seed=6)
    assert np.array_equal(vals, shapes[:, 0])


def test_histogram_of():
    assert histogram_of((2, 3, 2, 1, 2, 2), 3) == (1, 4, 1)
    assert histogram_of((), 2) == (0, 0)
    with pytest.raises(ValueError):
        histogram_of((1, 4), 3)


def test_enumerate_words_and_cap():
    assert sorted(enumerate_words(2, 2)) == [(1, 1), (1, 2), (2, 1), (2, 2)]
    with pytest.raises(ValueError):
        list(enumerate_words(10, 10, cap=100))


def test_enumerate_histograms():
    hists = list(enumerate_histograms(3, 2))
    assert len(hists) == 6  # multiset coefficient C(4,2)
    assert all(sum(h) == 2 for h in hists)
    assert (0, 2, 0) in hists


def test_multinomial_pmf_sums_to_one():
    alpha = (0.5, 0.3, 0.2)
    total = sum(multinomial_pmf(h, alpha) for h in enumerate_histograms(3, 5))
    assert total == pytest.approx(1.0, abs=1e-12)
    assert multinomial_pmf((2, 0), (0.5, 0.5)) == pytest.approx(0.25)


def test_mod_density_mass_one():
    # the signed density integrates to 1 against the multinomial law
    alpha = (0.6, 0.3, 0.1)
    n = 7
    total = sum(
        multinomial_pmf(h, alpha) * mod_density(h, alpha)
        for h in enumerate_histograms(3, n)
    )
    assert total == pytest.approx(1.0, abs=1e-12)


def test_mod_density_rejects_ties():
    with pytest.raises(ValueError):
        mod_density((1, 1), (0.5, 0.5))


def test_modmult_expectation_constant():
    assert modmult_expectation(lambda h: 1.0, (0.75, 0.25), 5) == pytest.approx(1.0, abs=1e-12)


def test_exact_sw_distribution_fair_coin_n2():
    law = exact_sw_distribution((0.5, 0.5), 2)
    assert law == {(2,): pytest.approx(0.75), (1, 1): pytest.approx(0.25)}
    e = exact_sw_expectation(lambda sh: float(sh[0]), (0.5, 0.5), 2)
    assert e == pytest.approx(1.75)


def test_exact_sw_distribution_sums_to_one():
    for alpha, n in [((0.75, 0.25), 5), ((0.5, 0.3, 0.2), 4)]:
        law = exact_sw_distribution(alpha, n)
        assert sum(law.values()) == pytest.approx(1.0, abs=1e-12)
        # matches direct enumeration of all words
        direct = {}
        d = len(alpha)
        for w in itertools.product(range(1, d + 1), repeat=n):
            p = math.prod(alpha[c - 1] for c in w)
            sh = sh_rsk(w)
            direct[sh] = direct.get(sh, 0.0) + p
        assert set(direct) == set(law)
        for sh, p in direct.items():
            assert law[sh] == pytest.approx(p, abs=1e-12)


def test_exact_sw_distribution_point_mass_alphabet():
    law = exact_sw_distribution((1.0, 0.0), 3)
    assert law == {(3,): pytest.approx(1.0)}
