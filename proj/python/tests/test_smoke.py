import json
import math

import mlgap


def test_markov_value_of_two():
    v = mlgap.markov_value("2")
    assert v["exact"] == "2*sqrt(2)"
    assert abs(v["value"] - math.sqrt(8)) < 1e-12
    assert v["lower"] <= v["upper"]


def test_gap_constant_below_sqrt10():
    g = mlgap.gap_constant("B4.1", "E2")
    assert g["majorant"] == "sqrt(2) + sqrt(3)"
    assert g["value"] < math.sqrt(10)


def test_certificate():
    c = mlgap.verify_case("4.1")
    assert c["verdict"] and c["margin_met"]
    assert c["s"] == "0.174813"


def test_dimension_inside_bracket():
    e = mlgap.estimate_dimension("E2", order=6)
    assert e["method"] == "HEURISTIC"
    assert abs(e["value"] - 0.531291) < 5e-4
    lo, hi = mlgap.pressure_bracket("E2", 6)
    assert lo < e["value"] < hi


def test_rigorous_report():
    r = json.loads(mlgap.report("rigorous"))
    assert r["global_bound"] == "0.986927"
    assert r["estimates"] == []


def test_cli_errors():
    status, out, err = mlgap.cli(["verify-cover", "no-such-case"])
    assert status == 2
    assert "no-such-case" in err
