from collections import Counter
from math import comb

import pytest
from hypothesis import given, strategies as st

from equigrass import reference as ref
from equigrass.partitions import count_prt, enumerate_partitions, successors
from equigrass.schubert import (aseq_bidegree, aseq_to_symbol, cell_bidegree, e1_rank_chart,
                                enumerate_cells, gamma, is_minimal_pattern,
                                matrix_orbit_bidegree, minimal_patterns, parse_pattern,
                                partition_to_pattern, pattern_successors, pattern_to_partition,
                                render_pattern, symbol_to_aseq)

symbols = st.lists(st.integers(0, 6), min_size=1, max_size=5).map(lambda s: tuple(sorted(s)))


def test_cell_weight_examples():
    assert symbol_to_aseq((1, 3, 5)) == (2, 5, 8)
    assert cell_bidegree((1, 3, 5)) == (9, 5)
    assert cell_bidegree((0, 0, 0, 0)) == (0, 0)
    assert render_pattern(symbol_to_aseq((4, 4))) == "+-+-**"
    assert cell_bidegree((4, 4)) == (8, 4)


def test_gr2_u6():
    cells = enumerate_cells(2, ambient=6)
    assert len(cells) == comb(6, 2)
    assert Counter(bd for _, bd in cells) == Counter(ref.GR2_U6_CELLS)


def test_gr1_cells():
    assert [bd for _, bd in enumerate_cells(1, p_max=7)] == ref.GR1_CELLS


def test_enumerate_rejects_bad_input():
    with pytest.raises(ValueError):
        enumerate_cells(0, p_max=3)
    with pytest.raises(ValueError):
        enumerate_cells(2)
    with pytest.raises(ValueError):
        enumerate_cells(2, p_max=3, ambient=5)


def test_gr5_chart_values():
    chart = e1_rank_chart(5, 8)
    assert [chart[(2 * m, m)] for m in range(5)] == [1, 2, 5, 9, 16]
    assert [chart[pq] for pq in [(3, 3), (5, 4), (7, 5)]] == [1, 2, 4]


def test_gr1_chart_is_two_rays():
    chart = e1_rank_chart(1, 20)
    expected = {(2 * m, m): 1 for m in range(11)}
    expected.update({(2 * m + 1, m + 1): 1 for m in range(10)})
    assert chart.counts == expected


def test_successors_of_123():
    # moving the 3 gives 125, moving the 2 gives 143 = 134; the 1 is blocked
    assert pattern_successors((1, 2, 3)) == {(1, 2, 5), (1, 3, 4)}


def test_minimal_patterns():
    assert minimal_patterns(2) == [(1, 2), (1, 3), (2, 4)]
    assert [aseq_bidegree(a) for a in minimal_patterns(2)] == [(0, 0), (1, 1), (3, 3)]
    assert sorted(aseq_bidegree(a)[0] for a in minimal_patterns(4)) == [0, 1, 3, 6, 10]
    for k in range(1, 7):
        assert all(p == q for p, q in map(aseq_bidegree, minimal_patterns(k)))
    # only the last star of 2,4,..,2k has an empty box two to its right
    even = tuple(range(2, 2 * 5 + 1, 2))
    assert pattern_successors(even) == {(2, 4, 6, 8, 12)}


def test_minimal_patterns_by_search():
    for k in range(1, 6):
        top = comb(k + 1, 2) + 1
        found = [symbol_to_aseq(s) for p in range(top + 1) for s in enumerate_partitions(p, k)
                 if is_minimal_pattern(symbol_to_aseq(s))]
        assert sorted(found) == sorted(minimal_patterns(k))


def test_bijection_examples():
    assert partition_to_pattern((0, 0, 1, 2, 3)) == (1, 2, 4, 5, 8)
    assert pattern_to_partition((1, 4, 6, 7, 8, 12, 14, 16)) == (1, 2, 2, 2, 4, 4, 4, 5)
    assert partition_to_pattern((0, 0, 0)) == (2, 4, 6)


def test_gamma():
    assert gamma(3, 5) == 4
    assert [gamma(i, 5) for i in range(6, 0, -1)] == [0, 5, 1, 4, 2, 3]
    for k in range(1, 7):
        assert gamma(k + 1, k) == 0
    with pytest.raises(ValueError):
        gamma(0, 3)
    with pytest.raises(ValueError):
        gamma(5, 3)


def test_lines_through_ray_starts():
    for k in range(1, 6):
        chart = e1_rank_chart(k, comb(k + 1, 2) + 16)
        for i in range(1, k + 2):
            j = comb(i, 2)
            g = gamma(i, k)
            assert [chart[(j + 2 * r, j + r)] for r in range(9)] == \
                [count_prt(2 * r + g, k, g) for r in range(9)]


def test_parse_pattern():
    assert parse_pattern("{1,2,4}") == (1, 2, 4)
    assert parse_pattern("**+-*") == (1, 2, 5)
    with pytest.raises(ValueError):
        parse_pattern("3,3")


def test_matrix_oracle_small():
    for k in range(1, 4):
        for s, bd in enumerate_cells(k, p_max=8):
            assert matrix_orbit_bidegree(symbol_to_aseq(s)) == bd


@given(symbols)
def test_symbol_roundtrip(s):
    assert aseq_to_symbol(symbol_to_aseq(s)) == s


@given(symbols)
def test_successor_bidegree_shift(s):
    p, q = cell_bidegree(s)
    for b in pattern_successors(symbol_to_aseq(s)):
        assert aseq_bidegree(b) == (p + 2, q + 1)


@given(symbols)
def test_weight_bounds(s):
    p, q = cell_bidegree(s)
    assert 0 <= q <= p


@given(st.lists(st.integers(0, 9), min_size=1, max_size=6).map(lambda p: tuple(sorted(p))))
def test_bijection_roundtrip_and_successors(p):
    a = partition_to_pattern(p)
    assert pattern_to_partition(a) == p
    assert {partition_to_pattern(s) for s in successors(p)} == pattern_successors(a)


@given(symbols)
def test_bijection_inverse(s):
    a = symbol_to_aseq(s)
    assert partition_to_pattern(pattern_to_partition(a)) == a
