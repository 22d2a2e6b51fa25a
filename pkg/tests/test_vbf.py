"""Truth tables, Walsh transforms, APN/AB/plateaued predicates."""

import numpy as np
import pytest

from sidonlab import (TruthTable, WalshTable, algebraic_degree, build_named,
                      components_all_unbalanced, cyclotomic_equivalent,
                      from_power, graph_of, is_ab, is_apn, is_plateaued,
                      make_field, walsh_full)
from sidonlab.errors import CapabilityError, DomainError, ValidationError
from sidonlab.vbf import cyclotomic_residues, ddt_row, walsh_brute

from conftest import random_tables


def test_truth_table_validation():
    with pytest.raises(ValidationError):
        TruthTable.of(3, [0] * 7)
    with pytest.raises(ValidationError):
        TruthTable.of(3, [8] + [0] * 7)
    t = TruthTable.of(2, [0, 1, 2, 3])
    assert t.size == 4


def test_walsh_full_matches_brute():
    for vals in random_tables(3, 2, seed=9):
        f = TruthTable(3, vals)
        w = walsh_full(f)
        for u in range(8):
            for v in range(8):
                assert w.at(u, v) == walsh_brute(f, u, v)


def test_walsh_linear_function():
    # F(x) = x: W(u, v) = 2^n iff u == v else 0
    f = TruthTable.of(3, range(8))
    w = walsh_full(f)
    for u in range(8):
        for v in range(8):
            assert w.at(u, v) == (8 if u == v else 0)


def test_walsh_table_validation():
    with pytest.raises(ValidationError):
        WalshTable(2, np.zeros(16, np.int64))
    with pytest.raises(ValidationError):
        WalshTable(2, np.full(16, 4, np.int64))  # fails Parseval


def test_ddt_row_and_apn():
    f = from_power(make_field(3), 3)
    for a in range(1, 8):
        row = ddt_row(f, a)
        assert int(row.counts.max()) == 2
    assert is_apn(f)
    assert not is_apn(TruthTable.of(3, range(8)))  # linear: rows hit 8
    with pytest.raises(DomainError):
        ddt_row(f, 0)


def test_apn_matches_definition_oracle():
    for vals in random_tables(4, 4, seed=21) + [build_named("gold", 4, k=1).values]:
        f = TruthTable(4, vals)
        ok = all(
            max(np.bincount([int(vals[x ^ a] ^ vals[x]) for x in range(16)])) <= 2
            for a in range(1, 16)
        )
        assert is_apn(f) == ok


@pytest.mark.parametrize("n,expect", [(3, True), (4, False), (5, True)])
def test_is_ab_cube(n, expect):
    f = from_power(make_field(n), 3)
    assert is_ab(f) == expect  # even n is never AB


def test_inverse_not_ab_but_apn():
    f = build_named("inverse", 5)
    assert is_apn(f) and not is_ab(f) and not is_plateaued(f)


def test_plateaued_and_unbalanced():
    g = build_named("gold", 4, k=1)
    assert is_plateaued(g)
    assert components_all_unbalanced(g)
    # a permutation has all components balanced
    f = TruthTable.of(4, range(16))
    assert not components_all_unbalanced(f)


def test_algebraic_degree():
    assert algebraic_degree(TruthTable.of(3, [5] * 8)) == 0
    assert algebraic_degree(TruthTable.of(3, range(8))) == 1
    assert algebraic_degree(build_named("gold", 4, k=1)) == 2
    assert algebraic_degree(build_named("inverse", 5)) == 4  # n - 1
    assert algebraic_degree(build_named("welch", 5)) == 3  # d = 7, weight 3


def test_graph_of_encoding():
    f = TruthTable.of(2, [1, 0, 3, 2])
    g = graph_of(f)
    assert g.m == 4
    assert sorted(int(p) for p in g.points) == [0b0001, 0b0100, 0b1011, 0b1110]


def test_cyclotomic_residues_and_equivalence():
    assert cyclotomic_residues(5, 9) == {9, 18, 5, 10, 20}
    assert not cyclotomic_equivalent(5, 3, 7)
    assert cyclotomic_equivalent(5, 3, 3)
    assert cyclotomic_equivalent(5, 3, 6)
    assert cyclotomic_equivalent(5, 3, 12)
    # inverse branch: 3 * 21 = 63 = 1 mod 31
    assert cyclotomic_equivalent(5, 3, 21)
    with pytest.raises(DomainError):
        cyclotomic_equivalent(5, 0, 3)
    with pytest.raises(DomainError):
        cyclotomic_equivalent(5, 3, 31)


def test_walsh_capability_limit():
    with pytest.raises(CapabilityError):
        walsh_full(TruthTable(13, np.zeros(1 << 13, np.int64)))
