import json
import os
from pathlib import Path

import pytest

import wittrank

DATA = Path(os.environ.get("WITTRANK_DATA", Path(__file__).resolve().parents[2] / "data"))


def load(name):
    return json.loads((DATA / name).read_text())


def test_rank_golden():
    assert wittrank.rank(load("w1.json"))["r"] == 4
    out = wittrank.rank(load("w1_plus_w2.json"))
    assert (out["r"], out["s"]) == (6, 4)


def test_accepts_text():
    assert wittrank.rank((DATA / "w2.json").read_text())["r"] == 2


def test_signature_breakpoints():
    p = wittrank.signature(load("w1_plus_w2.json"), plot=8)
    assert p["sigma_at_zero"] == 0
    assert sorted(b["J"] for b in p["breakpoints"]) == [2]
    assert len(p["plot"]) >= 8


def test_realize_22nd_roots():
    out = wittrank.realize(load("figure1.json"))
    assert out["verification"]["dimension"] == 8
    assert out["verification"]["profile_match"] is True


def test_norm_ball():
    ball = wittrank.norm_ball(load("w1.json"), load("w2.json"), "s")
    assert {tuple(v) for v in ball["vertices"]} == {
        ("-1/4", "-1/4"),
        ("1/4", "-3/4"),
        ("1/4", "1/4"),
        ("-1/4", "3/4"),
    }


def test_knot():
    out = wittrank.knot(load("knots.json"), "sum(mirror(5_1),10_132)")
    assert out["genus_lower_bound"] == 3


def test_diagonalize_round_trip():
    d = wittrank.diagonalize(load("t25_seifert_form.json"))
    assert wittrank.rank(d)["r"] == 4


def test_normalize_expr():
    assert wittrank.normalize_expr("(t - 1)*(t^-1 - 1)") == wittrank.normalize_expr("2 - t - t^-1")


def test_errors():
    with pytest.raises(wittrank.InputError):
        wittrank.rank({"kind": "diagonal", "entries": ["1 +"]})
    with pytest.raises(wittrank.MathError):
        wittrank.rank({"kind": "matrix", "entries": [["1", "t"], ["t", "1"]]})
    with pytest.raises(ValueError):
        wittrank.norm_ball(load("w1.json"), load("w2.json"), "bogus")
