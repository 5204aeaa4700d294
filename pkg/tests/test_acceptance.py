"""The ten acceptance criteria, one test each.

Each test records a one-line verdict; ``conftest.py`` prints the lines at
the end of the pytest run.  Running this file directly prints them too.
"""

from __future__ import annotations

import io
import json
import sys
from contextlib import redirect_stderr, redirect_stdout
from math import comb

import pytest

from equigrass import reference as ref
from equigrass.charts import RankChart
from equigrass.cli import main
from equigrass.invariants import kronholm_combinatorial_check, verify_products
from equigrass.report import Report
from equigrass.schubert import enumerate_cells
from equigrass.suites import verify_bijection, verify_cells, verify_duality, verify_properties

VERDICTS: dict[int, str] = {}


def cli(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    with redirect_stdout(out), redirect_stderr(io.StringIO()):
        code = main(list(argv))
    return code, out.getvalue()


def record(n: int, rep: Report, summary: str) -> None:
    status = "PASS" if rep.ok else "FAIL"
    line = f"criterion {n:>2}: {status}  {summary}"
    if not rep.ok:
        line += f"  [failed: {'; '.join(rep.failures())}]"
    VERDICTS[n] = line
    assert rep.ok, line


def _window(chart: RankChart, p_max: int, q_max: int) -> dict:
    return {pq: c for pq, c in chart.counts.items() if pq[0] <= p_max and pq[1] <= q_max}


def test_criterion_01_invariant_charts():
    rep = Report("1")
    code, out = cli("chart", "inv", "--k", "4", "--pmax", "14", "--format", "ascii")
    rep.check("exit code", 0, code)
    inv4 = RankChart.from_ascii(out)
    rep.check("Inv_4 printed window", ref.INV4_CHART, _window(inv4, 14, ref.INV4_QWINDOW))
    for pq, want in [((5, 3), 4), ((8, 5), 8), ((13, 8), 16), ((14, 8), 30)]:
        rep.check(f"Inv_4 {pq}", want, inv4[pq])
    code, out = cli("chart", "inv", "--k", "5", "--pmax", "14", "--format", "json")
    inv5 = RankChart.from_json(out)
    printed = {pq: c for pq, c in ref.INV5_CHART.items() if pq[0] <= 14}
    rep.check("Inv_5 printed entries with p <= 14", printed, _window(inv5, 14, ref.INV5_QWINDOW))
    code, out = cli("chart", "inv", "--k", "5", "--pmax", "21", "--format", "json")
    rep.check("Inv_5 full printed window", ref.INV5_CHART,
              _window(RankChart.from_json(out), 21, ref.INV5_QWINDOW))
    # the figure prints 18 at (11,6) and 25 at (12,7)
    rep.check("Inv_5 (8,5), (11,6), (12,7)", (9, 18, 25),
              (inv5[(8, 5)], inv5[(11, 6)], inv5[(12, 7)]))
    record(1, rep, f"Inv_4 ({len(ref.INV4_CHART)} boxes) and Inv_5 ({len(ref.INV5_CHART)} boxes) "
                   "charts match exactly")


def test_criterion_02_cell_charts():
    rep = Report("2")
    code, out = cli("chart", "cells", "--k", "5", "--pmax", "20", "--format", "json")
    rep.check("exit code", 0, code)
    gr5 = RankChart.from_json(out)
    printed = {pq: c for pq, c in ref.GR5_CELLS_CHART.items() if pq[0] <= 20}
    rep.check("Gr_5 printed entries with p <= 20", printed, _window(gr5, 20, ref.GR5_CELLS_QWINDOW))
    starts = [(comb(i, 2), comb(i, 2)) for i in range(1, 7)]
    rep.check("ray starts hold one cell each", [1] * 6, [gr5[pq] for pq in starts])
    rep.check("(8,4), (12,6), (20,10)", (16, 39, 147), (gr5[(8, 4)], gr5[(12, 6)], gr5[(20, 10)]))
    code, out = cli("chart", "cells", "--k", "2", "--ambient", "6", "--format", "json")
    u6 = RankChart.from_json(out)
    rep.check("Gr_2(U^6) multiset", ref.GR2_U6_CELLS, u6.counts)
    rep.check("Gr_2(U^6) count", 15, len(enumerate_cells(2, ambient=6)))
    record(2, rep, "Gr_5 cell chart, ray starts and the 15 cells of Gr_2(U^6) match")


def test_criterion_03_cell_lines():
    rep = verify_cells(6, 10)
    record(3, rep, "E1 line ranks vanish off C(i,2) and equal prt(2r+gamma_i, k, gamma_i), "
                   "k <= 6, r <= 10")


def test_criterion_04_column_and_diagonal_sums():
    rep = Report("4")
    for k in range(1, 7):
        rep.extend(kronholm_combinatorial_check(k, 20))
    rep.extend(verify_duality(6, 20))
    record(4, rep, "column sums, diagonal sums, duality and support bounds, k <= 6, p <= 20")


def test_criterion_05_presentation_k2():
    code, out = cli("verify", "presentation", "--k", "2", "--format", "json")
    data = json.loads(out)
    rep = Report("5")
    for c in data["reports"][0]["checks"]:
        rep.check(c["label"], c["expected"], c["computed"])
    rep.check("exit code", 0, code)
    record(5, rep, "k = 2 relations, freeness over M2[c1, c2] to degree 14, forgetful images")


def test_criterion_06_presentation_k3_and_gr4():
    rep = Report("6")
    code3, out3 = cli("verify", "presentation", "--k", "3")
    code4, out4 = cli("verify", "gr4")
    rep.check("verify presentation --k 3 exit code", 0, code3)
    rep.check("verify gr4 exit code", 0, code4)
    rep.check("k = 3 remainders emitted", 3, out3.count("computed remainder"))
    rep.check("Gr_4 remainder emitted", True, "computed (rho, tau) remainder" in out4)
    rep.check("2-line sequence printed", True,
              "computed [1, 2, 5, 8, 14, 20, 30, 40, 55]" in out4)
    record(6, rep, "k = 3 squares exact, cross relations mod (rho, tau), Gr_4 relation and 2-line")


def test_criterion_07_product_identities():
    rep = verify_products(5, 4)
    record(7, rep, "w_j^2, w_1 w_i, w_1^(e) reduction, [w_1^(e)]^2 for k <= 5, e <= 4; "
                   "Newton for n <= 8")


def test_criterion_08_indecomposables():
    rep = Report("8")
    for k in range(1, 6):
        code, out = cli("verify", "indecomposables", "--k", str(k))
        rep.check(f"verify indecomposables --k {k}", 0, code)
    code, out = cli("verify", "indecomposables", "--k", "5", "--format", "json")
    checks = json.loads(out)["reports"][0]["checks"]
    total = next(c for c in checks if c["label"].startswith("total count"))
    rep.check("K = 5 total", 13, total["computed"])
    code, out = cli("verify", "indecomposables", "--k", "4", "--format", "json")
    checks = json.loads(out)["reports"][0]["checks"]
    total = next(c for c in checks if c["label"].startswith("total count"))
    rep.check("K = 4 total", 11, total["computed"])
    record(8, rep, "I/I^2 bidegree ranks and totals 3K - ones(K) for K <= 5")


def test_criterion_09_appendix():
    rep = Report("9")
    for n in range(1, 6):
        code, _ = cli("verify", "appendix", "--n", str(n), "--degmax", "14")
        rep.check(f"verify appendix --n {n} --degmax 14", 0, code)
    record(9, rep, "deRham basis, exterior presentation, shift identities, eta series, "
                   "alpha(n) for n <= 10^6")


def test_criterion_10_properties():
    rep = verify_properties(200, 4, 10)
    rep.extend(verify_bijection(5, 12))
    record(10, rep, "200 random triples (k <= 4, degree <= 10), round trips, bijection "
                    "exhaustive for k <= 5, dimension <= 12")


if __name__ == "__main__":
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)
