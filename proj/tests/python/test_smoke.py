import json

import pytest

import tropgeo


def poly(nvars, terms):
    return json.dumps(
        {"nvars": nvars, "terms": [{"coeff": c, "exp": e} for c, e in terms]}
    )


def rational(num, den):
    return json.dumps({"num": json.loads(num), "den": json.loads(den)})


def test_eval_matches_max_plus():
    f = rational(poly(1, [("0", [0]), ("0", [1])]), poly(1, [("0", [1])]))
    assert tropgeo.eval_function(f, "-3") == "3"
    assert tropgeo.eval_function(f, "2") == "0"


def test_eval_neg_inf():
    f = rational(poly(1, []), poly(1, [("0", [0])]))
    assert tropgeo.eval_function(f, "5") == "-inf"


def test_canonicalize_drops_redundant_terms():
    p = poly(1, [("0", [0]), ("-3", [1]), ("0", [2])])
    out = json.loads(tropgeo.canonicalize(p))
    assert len(out["terms"]) == 2


def test_func_eq():
    assert tropgeo.func_eq(
        poly(1, [("0", [1]), ("0", [1])]), poly(1, [("0", [1])])
    )
    assert not tropgeo.func_eq(
        poly(1, [("0", [0]), ("0", [1])]), poly(1, [("0", [1])])
    )


def test_variety_membership():
    pair = json.dumps(
        {
            "lhs": json.loads(
                rational(poly(1, [("0", [1])]), poly(1, [("0", [0])]))
            ),
            "rhs": json.loads(
                rational(poly(1, [("0", [0])]), poly(1, [("0", [0])]))
            ),
        }
    )
    union = json.loads(tropgeo.variety(pair))
    assert union["nvars"] == 1
    assert len(union["pieces"]) == 1


def test_generate_then_verify_roundtrip():
    union = json.dumps(
        {
            "nvars": 2,
            "pieces": [
                {
                    "nvars": 2,
                    "halfspaces": [
                        {"normal": [1, 0], "offset": "0"},
                        {"normal": [-1, 0], "offset": "0"},
                        {"normal": [0, 1], "offset": "0"},
                        {"normal": [0, -1], "offset": "0"},
                    ],
                }
            ],
        }
    )
    cert = tropgeo.generate(union)
    report = json.loads(tropgeo.verify(cert, samples=50, seed=1))
    assert report["ok"]
    assert report["failures"] == []
    f = json.dumps(json.loads(cert)["f"])
    assert tropgeo.eval_function(f, "0,0") == "0"
    assert tropgeo.eval_function(f, "2,0") == "2"


def test_curve_check_flags_parallel_rays():
    complex_json = json.dumps(
        {
            "nvars": 2,
            "vertices": [["0", "0"], ["0", "1"]],
            "segments": [[0, 1]],
            "rays": [{"base": 0, "dir": [1, 0]}, {"base": 1, "dir": [1, 0]}],
        }
    )
    report = json.loads(tropgeo.curve_check(complex_json))
    assert not report["ok"]
    assert report["duplicate_rays"][0]["first_ray"] == 0
    assert report["duplicate_rays"][0]["second_ray"] == 1


def test_chart_tent_values():
    complex_json = json.dumps(
        {
            "nvars": 1,
            "vertices": [["0"], ["2"]],
            "segments": [[0, 1]],
            "rays": [],
        }
    )
    chart = json.loads(tropgeo.chart(complex_json, "segment", 0))
    assert chart["construction"] == "lemma10"
    fn = json.dumps({"num": chart["num"], "den": chart["den"]})
    assert tropgeo.eval_function(fn, "1") == "0"
    assert tropgeo.eval_function(fn, "0") == "-1"
    assert tropgeo.eval_function(fn, "2") == "-1"
    assert tropgeo.eval_function(fn, "5") == "-1"


def test_project_onto_cone():
    cone = json.dumps(
        {
            "nvars": 2,
            "halfspaces": [
                {"normal": [-1, 0], "offset": "0"},
                {"normal": [0, -1], "offset": "0"},
            ],
        }
    )
    out = json.loads(tropgeo.project_onto_cone(cone, "1,-2"))
    assert out["toward_cone"] == ["1", "0"]
    assert out["toward_polar"] == ["0", "-2"]


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError):
        tropgeo.eval_function("{not json", "0")
    with pytest.raises(ValueError):
        tropgeo.eval_function(
            rational(poly(1, [("0.5", [0])]), poly(1, [("0", [0])])), "0"
        )
