"""Kernel cross-checks: the numpy and loop/numba variants must agree on the
same inputs, and both must agree with tiny direct computations."""

import numpy as np
import pytest

from sidonlab import _kernels
from sidonlab._kernels import NUMPY_IMPLS, _LOOP_IMPLS, parity

from conftest import random_tables

# the numba-wrapped loops share code with _LOOP_IMPLS, so comparing the plain
# loop versions against numpy covers both compiled and interpreted paths
PAIRS = [(name, NUMPY_IMPLS[name], _LOOP_IMPLS[name]) for name in NUMPY_IMPLS]


def test_impl_dicts_cover_same_kernels():
    assert set(NUMPY_IMPLS) == set(_LOOP_IMPLS)
    assert set(_kernels.ACTIVE_IMPLS) == set(NUMPY_IMPLS)


def test_parity():
    assert parity(0) == 0
    assert parity(1) == 1
    assert parity(0b1011) == 1
    assert parity((1 << 40) | 1) == 0


def test_parity16_table_matches_bit_count():
    for x in (0, 1, 2, 3, 0xFFFF, 0x1234, 0xBEEF):
        assert _kernels._PARITY16[x] == (x.bit_count() & 1)


def test_fwht_roundtrip_and_agreement():
    for vals in random_tables(6, 3, seed=11):
        a = vals.copy()
        b = vals.copy()
        NUMPY_IMPLS["fwht_inplace"](a)
        _LOOP_IMPLS["fwht_inplace"](b)
        assert np.array_equal(a, b)
        # the transform is an involution up to the factor 2^n
        NUMPY_IMPLS["fwht_inplace"](a)
        assert np.array_equal(a, vals * 64)


def test_fwht_small_known():
    a = np.array([1, 0, 0, 0], np.int64)
    _kernels.fwht_inplace(a)
    assert a.tolist() == [1, 1, 1, 1]
    a = np.array([0, 1, 0, 0], np.int64)
    _kernels.fwht_inplace(a)
    assert a.tolist() == [1, -1, 1, -1]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_table_kernels_agree(n):
    for vals in random_tables(n, 2, seed=100 + n):
        assert np.array_equal(NUMPY_IMPLS["walsh_table"](vals, n),
                              _LOOP_IMPLS["walsh_table"](vals, n))
        assert np.array_equal(NUMPY_IMPLS["solution_table"](vals, n),
                              _LOOP_IMPLS["solution_table"](vals, n))
        assert np.array_equal(NUMPY_IMPLS["pair_xor_counts"](vals),
                              _LOOP_IMPLS["pair_xor_counts"](vals))
        assert (NUMPY_IMPLS["dproperty_missing"](vals, n)
                == _LOOP_IMPLS["dproperty_missing"](vals, n))
        assert NUMPY_IMPLS["ddt_max"](vals) == _LOOP_IMPLS["ddt_max"](vals)
        for a in (1, (1 << n) - 1):
            assert np.array_equal(NUMPY_IMPLS["ddt_row"](vals, a),
                                  _LOOP_IMPLS["ddt_row"](vals, a))
            assert np.array_equal(NUMPY_IMPLS["solution_row"](vals, a),
                                  _LOOP_IMPLS["solution_row"](vals, a))


def test_solution_row_matches_table_slice():
    n = 4
    vals = random_tables(n, 1, seed=7)[0]
    table = _kernels.solution_table(vals, n)
    for a in range(1 << n):
        row = _kernels.solution_row(vals, a)
        assert np.array_equal(table[a << n:(a + 1) << n], row)


def test_triple_and_collision_kernels_agree():
    rng = np.random.default_rng(5)
    for m in (5, 8, 10):
        pts = np.unique(rng.integers(0, 1 << m, size=12).astype(np.int64))
        assert np.array_equal(NUMPY_IMPLS["triple_mult"](pts, m),
                              _LOOP_IMPLS["triple_mult"](pts, m))
        assert (NUMPY_IMPLS["has_pair_collision"](pts, m)
                == bool(_LOOP_IMPLS["has_pair_collision"](pts, m)))


def test_triple_mult_tiny_direct():
    # S = {0,1,2,4} in F_2^3: the four triples xor to 3,5,6,7
    pts = np.array([0, 1, 2, 4], np.int64)
    mult = _kernels.triple_mult(pts, 3)
    assert mult.tolist() == [0, 0, 0, 1, 0, 1, 1, 1]


def test_has_pair_collision_direct():
    assert not _kernels.has_pair_collision(np.array([0, 1, 2, 4], np.int64), 3)
    # {0,1,2,3}: 0^1 == 2^3
    assert _kernels.has_pair_collision(np.array([0, 1, 2, 3], np.int64), 3)
