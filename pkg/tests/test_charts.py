from hypothesis import given, strategies as st

from equigrass.charts import RankChart
from equigrass.invariants import rank_chart_inv
from equigrass.schubert import e1_rank_chart

entries = st.dictionaries(st.tuples(st.integers(0, 15), st.integers(0, 15)),
                          st.integers(1, 200), max_size=25)


def test_accessors():
    chart = RankChart({(2, 1): 3, (2, 2): 1, (4, 2): 5}, k=2, p_max=4)
    assert chart[(2, 1)] == 3 and chart[(3, 3)] == 0
    assert chart.column_sums() == {2: 4, 4: 5}
    assert chart.diagonal_sums() == {-1: 3, 0: 1, -2: 5}
    assert chart.total() == 9
    assert chart.entries() == [(2, 1, 3), (2, 2, 1), (4, 2, 5)]


def test_merge_is_additive():
    a = RankChart({(1, 1): 1, (2, 1): 2})
    b = RankChart({(2, 1): 3})
    assert a.merge(b).counts == {(1, 1): 1, (2, 1): 5}


def test_ascii_origin_marker():
    text = rank_chart_inv(2, 6).to_ascii()
    assert "•" in text
    assert text.splitlines()[-1].split() == [str(p) for p in range(7)]


def test_line():
    assert rank_chart_inv(4, 18).line(2)[:9] == [1, 2, 5, 8, 14, 20, 30, 40, 55]


def test_csv_header():
    assert e1_rank_chart(1, 2).to_csv().splitlines() == ["p,q,count", "0,0,1", "1,1,1", "2,1,1"]


@given(entries)
def test_json_roundtrip(e):
    chart = RankChart(e, k=3, p_max=15)
    assert RankChart.from_json(chart.to_json()) == chart


@given(entries)
def test_csv_roundtrip(e):
    chart = RankChart(e, k=3, p_max=15)
    assert RankChart.from_csv(chart.to_csv()) == chart


@given(entries)
def test_ascii_roundtrip(e):
    chart = RankChart(e, p_max=15)
    assert RankChart.from_ascii(chart.to_ascii()) == chart


def test_real_chart_roundtrips():
    for chart in (rank_chart_inv(5, 21), e1_rank_chart(5, 21)):
        assert RankChart.from_ascii(chart.to_ascii()) == chart
        assert RankChart.from_json(chart.to_json()) == chart
