"""Compiled batch kernels against the pure-Python reference implementations."""

import numpy as np

from schurweyl import _kernels
from schurweyl.greene import lis
from schurweyl.rsk import sh_rsk
from schurweyl.sampling import make_rng


def test_word_shapes_matches_reference():
    rng = make_rng(600)
    m, n_max, d = 400, 40, 6
    letters = rng.integers(1, d + 1, size=(m, n_max), dtype=np.int32)
    lengths = rng.integers(0, n_max + 1, size=m).astype(np.int32)
    out = np.zeros((m, d), np.int32)
    _kernels.word_shapes(letters, lengths, d, out)
    for i in range(m):
        w = tuple(int(x) for x in letters[i, : lengths[i]])
        sh = sh_rsk(w)
        want = np.zeros(d, np.int32)
        want[: len(sh)] = sh
        assert np.array_equal(out[i], want), w


def test_word_shapes_single_letter_alphabet():
    letters = np.ones((3, 5), np.int32)
    lengths = np.array([0, 3, 5], np.int32)
    out = np.zeros((3, 1), np.int32)
    _kernels.word_shapes(letters, lengths, 1, out)
    assert out[:, 0].tolist() == [0, 3, 5]


def test_word_lis_matches_reference():
    rng = make_rng(601)
    m, n_max = 300, 50
    letters = rng.integers(1, 9, size=(m, n_max), dtype=np.int32)
    lengths = rng.integers(0, n_max + 1, size=m).astype(np.int32)
    out = np.zeros(m, np.int32)
    _kernels.word_lis(letters, lengths, out)
    for i in range(m):
        w = tuple(int(x) for x in letters[i, : lengths[i]])
        assert out[i] == lis(w), w


def test_perm_shapes_matches_reference():
    rng = make_rng(602)
    m, n = 200, 12
    perms = np.empty((m, n), np.int32)
    for i in range(m):
        perms[i] = rng.permutation(n) + 1
    out = np.zeros((m, n), np.int32)
    _kernels.perm_shapes(perms, out)
    for i in range(m):
        sh = sh_rsk(tuple(int(x) for x in perms[i]))
        want = np.zeros(n, np.int32)
        want[: len(sh)] = sh
        assert np.array_equal(out[i], want)


def test_perm_shapes_first_row_is_lis():
    rng = make_rng(603)
    m, n = 100, 30
    perms = np.empty((m, n), np.int32)
    for i in range(m):
        perms[i] = rng.permutation(n) + 1
    shapes = np.zeros((m, n), np.int32)
    _kernels.perm_shapes(perms, shapes)
    lis_out = np.zeros(m, np.int32)
    _kernels.word_lis(perms, np.full(m, n, np.int32), lis_out)
    assert np.array_equal(shapes[:, 0], lis_out)
