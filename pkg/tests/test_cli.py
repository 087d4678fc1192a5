from __future__ import annotations

import io
import json
from fractions import Fraction

import pytest
from hypothesis import given

from gfpoly.cli import main
from gfpoly.constructions import omega_of_posets
from gfpoly.errors import CycleDetected, ParseError
from gfpoly.io import AnalysisReport, parse_polytope, parse_poset, parse_rational, poset_to_json, rational
from gfpoly.posets import antichain, chain

from oracles import posets


def run(*argv: str) -> tuple[int, dict]:
    buf = io.StringIO()
    code = main(list(argv), buf)
    return code, json.loads(buf.getvalue())


@pytest.fixture
def files(tmp_path):
    def write(name: str, obj: dict) -> str:
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)

    return write


def test_parse_poset_examples():
    assert parse_poset('{"d":2,"covers":[[1,2]]}') == chain(2)
    assert parse_poset('{"d":3,"covers":[]}') == antichain(3)
    with pytest.raises(CycleDetected):
        parse_poset('{"d":2,"covers":[[1,2],[2,1]]}')


@pytest.mark.parametrize("text", ["", "[1]", '{"d":0}', '{"d":2,"covers":[[1]]}', '{"d":2,"covers":[[1,3]]}', '{"d":true}'])
def test_parse_poset_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_poset(text)


@given(posets(max_d=6))
def test_poset_json_round_trip(P):
    assert parse_poset(json.dumps(poset_to_json(P))) == P


def test_rationals_are_num_den_pairs():
    assert rational(Fraction(3, 6)) == {"num": 1, "den": 2}
    assert parse_rational({"num": -4, "den": 6}) == Fraction(-2, 3)
    with pytest.raises(ParseError):
        parse_rational({"num": 1})
    rep = AnalysisReport(vertices=[[0]], facets=[], ehrhart=[Fraction(1), Fraction(1, 3)], volume=Fraction(7, 2))
    js = rep.to_json()
    assert js["volume"] == {"num": 7, "den": 2} and js["ehrhart"][1] == {"num": 1, "den": 3}
    assert "float" not in json.dumps(js) and not any(isinstance(v, float) for v in js.values())


def test_parse_polytope_rejects_ragged():
    with pytest.raises(ParseError):
        parse_polytope('{"ambient_dim": 2, "vertices": [[0, 0], [1]]}')


def test_build_then_analyze_round_trip(files, tmp_path):
    P = files("P.json", {"d": 2, "covers": [[1, 2]]})
    out = tmp_path / "W.json"
    assert main(["build", "--kind", "omega-oc", P, P, "-o", str(out)], io.StringIO()) == 0
    W = parse_polytope(out.read_text())
    assert W == omega_of_posets(chain(2), chain(2), "oc")
    code, rep = run("analyze", str(out), "--reflexive", "--normal")
    assert code == 0 and rep["reflexive"] is True and rep["normal"]["verdict"] is True
    assert rep["vertices"] == [list(v) for v in W.vertices]
    assert list(rep)[:4] == ["vertices", "facets", "reflexive", "normal"]


def test_build_to_stdout(files):
    A = files("A.json", {"d": 2, "covers": []})
    code, poly = run("build", "--kind", "order", A)
    assert code == 0 and len(poly["vertices"]) == 4


def test_volume_cross_check(files):
    A = files("A.json", {"d": 2, "covers": []})
    code, res = run("volume", A, A, "--method", "linext", "--method", "ehrhart")
    assert code == 0 and res["cross_check"] is True
    assert res["volume"] == {"ehrhart": {"num": 2, "den": 1}, "linext": {"num": 2, "den": 1}}


def test_ehrhart_command(files, tmp_path):
    P = files("P.json", {"d": 1, "covers": []})
    out = str(tmp_path / "W.json")
    assert main(["build", "--kind", "omega-oo", P, P, "-o", out], io.StringIO()) == 0
    code, res = run("ehrhart", out)
    assert code == 0 and res["text"] == "2*n^2 + 2*n + 1"


def test_groebner_command(files):
    C = files("C.json", {"d": 2, "covers": [[1, 2]]})
    code, rep = run("groebner", C, C, "--family", "oc", "--degree", "3")
    assert code == 0 and rep["passed"] is True


def test_usage_and_parse_errors_exit_2(files, tmp_path):
    bad = files("bad.json", {"d": 2, "covers": [[1, 2], [2, 1]]})
    code, err = run("build", "--kind", "order", bad)
    assert code == 2 and err["error"] == "CycleDetected"
    code, err = run("analyze", str(tmp_path / "missing.json"))
    assert code == 2 and set(err) == {"error", "message"}
    C = files("C.json", {"d": 2, "covers": []})
    code, err = run("build", "--kind", "omega-oc", C)
    assert code == 2
    assert main(["no-such-command"], io.StringIO()) == 2


def test_budget_exit_3(files):
    A = files("A.json", {"d": 2, "covers": []})
    code, err = run("groebner", A, A, "--family", "oo", "--max-pairs", "0")
    assert code == 3 and err["error"] == "BudgetExceeded"


def test_classify2d_command():
    code, res = run("classify2d")
    assert code == 0 and res["classes"] == 16
    assert [res["histogram"][str(b)] for b in range(3, 10)] == [1, 3, 2, 4, 2, 3, 1]
