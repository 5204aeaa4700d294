from hypothesis import given, strategies as st

from equigrass.gf2 import EchelonBasis, complement_basis, from_bits, in_span, rank, to_bits
from equigrass.report import Report
from equigrass.suites import run_suites
from equigrass.symmetric import (elementary_monomial, from_elementary, parse_epoly,
                                 render_epoly, sym_mul, to_elementary)

vectors = st.lists(st.integers(0, 2 ** 12 - 1), max_size=10)


def test_gf2_basics():
    assert rank([0b11, 0b01, 0b10]) == 2
    assert in_span(0b10, [0b11, 0b01])
    assert not in_span(0b100, [0b11, 0b01])
    assert from_bits(to_bits([0, 3, 7])) == [0, 3, 7]
    space = EchelonBasis([0b11])
    assert complement_basis(space, [0b11, 0b01, 0b10]) == [1]
    assert space.rank == 1


@given(vectors)
def test_rank_bounds(rows):
    r = rank(rows)
    assert r <= len(rows)
    basis = EchelonBasis(rows)
    assert all(basis.contains(v) for v in rows)


def naive_rank(rows):
    rows, r = list(rows), 0
    for bit in range(12):
        pivot = next((i for i in range(r, len(rows)) if rows[i] >> bit & 1), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] >> bit & 1:
                rows[i] ^= rows[r]
        r += 1
    return r


@given(vectors)
def test_rank_matches_naive_elimination(rows):
    assert rank(rows) == naive_rank(rows)


def test_elementary_round_trip():
    for k in range(1, 4):
        for exps in [(1,) + (0,) * (k - 1), (2,) + (0,) * (k - 1), (0,) * (k - 1) + (1,)]:
            f = frozenset({exps})
            assert to_elementary(from_elementary(f), k) == f


def test_epoly_text():
    f = parse_epoly("w1 w2 + w1^3", 2)
    assert render_epoly(f) == "w1^3 + w1 w2"
    assert parse_epoly("0", 2) == frozenset()


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 2), st.integers(0, 2)), max_size=4))
def test_elementary_conversion(exps):
    f = frozenset()
    for e in exps:
        f ^= {e}
    assert to_elementary(from_elementary(f), 3) == f


def test_sym_mul_matches_elementary():
    e1 = elementary_monomial((1, 0))
    assert sym_mul(e1, e1) == elementary_monomial((2, 0))


def test_report_render_and_dict():
    rep = Report("demo")
    assert rep.check("one", 1, 1)
    assert not rep.check("two", [1], [2])
    rep.note("extra")
    text = rep.render()
    assert "PASS  one" in text and "FAIL  two: expected [1], computed [2]" in text
    d = rep.to_dict()
    assert d["ok"] is False and d["checks"][1]["computed"] == [2]
    assert rep.failures() == ["two"]


def test_runner_keeps_order():
    tasks = [("gr4", {}), ("kronholm", {"k": 2, "p_max": 8}), ("presentation", {"k": 3})]
    serial = run_suites(tasks, workers=1)
    pooled = run_suites(tasks, workers=2)
    assert [r.title for r in serial] == [r.title for r in pooled]
    assert [r.ok for r in serial] == [True, True, True]
