import json

import pytest

from equigrass import reference as ref
from equigrass.charts import RankChart
from equigrass.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_chart_inv_ascii(capsys):
    code, out, _ = run(capsys, "chart", "inv", "--k", "4", "--pmax", "14", "--format", "ascii")
    assert code == 0
    chart = RankChart.from_ascii(out)
    for pq, c in ref.INV4_CHART.items():
        assert chart[pq] == c


def test_chart_json_roundtrip(capsys):
    code, out, _ = run(capsys, "chart", "cells", "--k", "5", "--pmax", "20", "--format", "json")
    assert code == 0
    chart = RankChart.from_json(out)
    assert chart[(8, 4)] == 16 and chart[(12, 6)] == 39 and chart[(20, 10)] == 147
    assert RankChart.from_json(chart.to_json()) == chart


def test_chart_ambient(capsys):
    code, out, _ = run(capsys, "chart", "cells", "--k", "2", "--ambient", "6", "--format", "csv")
    assert code == 0
    assert RankChart.from_csv(out).total() == 15


def test_verify_presentation_k2_fails_on_printed_relation(capsys):
    code, out, _ = run(capsys, "verify", "presentation", "--k", "2")
    assert code == 2
    fails = [ln for ln in out.splitlines() if ln.startswith("FAIL")]
    assert len(fails) == 1 and "w1 w2 = rho w2" in fails[0]


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "gr4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] and data["reports"][0]["checks"][2]["expected"] == ref.INV4_TWO_LINE


@pytest.mark.parametrize("argv", [
    ["verify", "kronholm", "--k", "3", "--pmax", "12"],
    ["verify", "duality", "--k", "4", "--pmax", "12"],
    ["verify", "indecomposables", "--k", "4", "--degmax", "10"],
    ["verify", "appendix", "--n", "2", "--degmax", "8"],
    ["verify", "presentation", "--k", "3"],
    ["verify", "charts"],
    ["verify", "bijection", "--k", "3", "--dimmax", "8"],
    ["verify", "properties", "--samples", "10"],
])
def test_verify_suites_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0, out
    assert "FAIL" not in out


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--k", "3", "w_2 * w_1^(1)", "--compare", "w_1*w_2*c_1")
    assert code == 0
    assert "mod (rho, tau): yes" in out


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "--k", "2", "w_1 * w_1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["terms"] == [{"partition": [0, 1], "coefficient": "r"},
                             {"partition": [0, 2], "coefficient": "t"}]


def test_forget(capsys):
    code, out, _ = run(capsys, "forget", "--k", "2", "w_1^(1)")
    assert code == 0 and out.strip() == "w1^3 + w1 w2"


def test_bijection(capsys):
    code, out, _ = run(capsys, "bijection", "partition-to-pattern", "[0,0,1,2,3]")
    assert code == 0 and "{1,2,4,5,8}" in out
    code, out, _ = run(capsys, "bijection", "pattern-to-partition", "{1,4,6,7,8,12,14,16}")
    assert code == 0 and out.strip() == "[1,2,2,2,4,4,4,5]"


@pytest.mark.parametrize("argv", [
    [], ["chart"], ["chart", "inv", "--k", "4"], ["chart", "inv", "--k", "x", "--pmax", "3"],
    ["verify", "presentation", "--k", "4"], ["eval", "--k", "3", "w_1^("],
    ["eval", "--k", "2", "w_3"], ["bijection", "pattern-to-partition", "3,3"],
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err


def test_syntax_error_offset(capsys):
    _, _, err = run(capsys, "eval", "--k", "3", "w_1^(")
    assert "offset 5" in err


def test_thread_cap(monkeypatch, capsys):
    monkeypatch.setenv("EQUIGRASS_THREADS", "1")
    code, _, _ = run(capsys, "verify", "gr4")
    assert code == 0
    monkeypatch.setenv("EQUIGRASS_THREADS", "many")
    code, _, err = run(capsys, "verify", "gr4")
    assert code == 1 and "EQUIGRASS_THREADS" in err
