import io
import json
from fractions import Fraction
from pathlib import Path

import pytest

from gpolyhedra import serialization as ser
from gpolyhedra.cli import run
from gpolyhedra.errors import InputError
from gpolyhedra.polyhedron import contains_h, h_to_v

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj), encoding="utf-8")
    return str(p)


def test_convert_square_to_v():
    res = call_json("convert", "--in", str(SAMPLES / "square_h.json"), "--to", "v")
    assert res["points"] == [["0", "0"], ["0", "1"], ["1", "0"], ["1", "1"]]
    assert res["rays"] == [] and res["lineality"] == []


def test_convert_round_trip(tmp_path):
    res = call_json("convert", "--in", str(SAMPLES / "orthant_v.json"), "--to", "h")
    h = ser.hform_from_json(res)
    assert contains_h(h, (5, 7)) and not contains_h(h, (-1, 0))
    back = call_json("convert", "--in", write(tmp_path, "h.json", res), "--to", "v")
    assert back["rays"] == [["0", "1"], ["1", "0"]]


def test_lp_solve_unbounded_is_a_report():
    res = call_json("lp-solve", "--set", str(SAMPLES / "orthant_v.json"), "--objective", "[-1,0]")
    assert res == {"solvable": False, "value": None, "witness": None, "unbounded_direction": ["1", "0"]}


def test_lp_solve_square():
    res = call_json("lp-solve", "--set", str(SAMPLES / "square_h.json"), "--objective", '["1", "1/2"]')
    assert res["solvable"] and res["value"] == "0" and res["witness"] == ["0", "0"]


def test_lp_solution_set_and_cone():
    res = call_json("lp-solution-set", "--set", str(SAMPLES / "square_h.json"), "--objective", "[1,0]")
    assert res["points"] == [["0", "0"], ["0", "1"]]
    res = call_json("lp-cone", "--set", str(SAMPLES / "orthant_v.json"))
    assert res["rays"] == [["0", "1"], ["1", "0"]]
    code, out, err = call("lp-solution-set", "--set", str(SAMPLES / "orthant_v.json"), "--objective", "[-1,0]")
    assert code == 1 and out == "" and "solvable" in err


def test_vlp_flat_cone_exit_1():
    code, out, err = call("vlp-weak-set", "--in", str(SAMPLES / "vlp_flat_k.json"))
    assert code == 1 and out == ""
    assert "int K empty" in err


def test_vlp_commands():
    res = call_json("vlp-weak-set", "--in", str(SAMPLES / "vlp_square.json"))
    assert not res["covers_all_of_D"]
    assert [(p["I"], p["J"]) for p in res["pieces"]] == [([0], []), ([0, 1], []), ([0, 2], [])]
    res = call_json("vlp-exists", "--in", str(SAMPLES / "vlp_square.json"))
    assert res["exists"] and res["sufficient_criterion"]
    res = call_json("vlp-oracle", "--in", str(SAMPLES / "vlp_square.json"), "--point", '[0, "1/2"]')
    assert res == {"weakly_efficient": True}
    code, _, err = call("vlp-oracle", "--in", str(SAMPLES / "vlp_square.json"), "--point", "[5,5]")
    assert code == 1


def test_membership_and_strict(tmp_path):
    res = call_json("membership", "--in", str(SAMPLES / "orthant_v.json"), "--point", "[1,2]")
    assert res["member"] and res["certificate"]["lambda"] == ["1"]
    res = call_json("membership", "--in", str(SAMPLES / "square_h.json"), "--point", "[2,0]")
    assert res == {"member": False}
    res = call_json("membership", "--in", str(SAMPLES / "square_h.json"), "--strict-rows", "[0,1,2,3]")
    x = [Fraction(v) for v in res["point"]]
    assert all(0 < v < 1 for v in x)


def test_structure_commands():
    res = call_json("decompose", "--in", str(SAMPLES / "halfplane_h.json"))
    assert res["x0"] == [["0", "1"]] and res["d1"]["rays"] == [["-1"]]
    res = call_json("recession", "--in", str(SAMPLES / "halfplane_h.json"))
    assert res["points"] == [["0", "0"]] and res["rays"] == [["-1", "0"]]
    res = call_json("dual-cone", "--in", str(SAMPLES / "orthant_v.json"))
    assert res["rays"] == [["0", "1"], ["1", "0"]]


def test_cone_rep_rejects_shifted():
    code, _, err = call("cone-rep", "--in", str(SAMPLES / "square_h.json"))
    assert code == 1 and "cone" in err


def test_demo_cab():
    code, out, err = call("demo-cab", "--omega1", "1", "--omega2", "0,1", "--a", "0", "--b", "1",
                          "--alpha1", "1", "--alpha2", "1")
    assert code == 0
    assert "delta     = 1/12" in out
    payload = json.loads(out[out.index("{"):])
    assert payload["gram"] == [["1", "1/2"], ["1/2", "1/3"]] and payload["identities_ok"]
    code, out, err = call("demo-cab", "--omega1", "1", "--omega2", "2", "--a", "0", "--b", "1",
                          "--alpha1", "1", "--alpha2", "1")
    assert code == 1 and out == "" and "delta = 0" in err


@pytest.mark.parametrize(
    "obj, field",
    [
        ({"dim": 2, "points": [[0, 0]], "extra": 1}, "extra"),
        ({"dim": 2, "points": [[0, 0.5]]}, "points[0][1]"),
        ({"dim": 2, "ineq": {"C": [[1, 0]], "alpha": []}}, "ineq.alpha"),
        ({"points": [[0]]}, "dim"),
        ({"dim": 2, "points": [[0, 0]], "rays": [[0, 0]]}, "rays"),
    ],
)
def test_malformed_files_exit_2(tmp_path, obj, field):
    code, out, err = call("convert", "--in", write(tmp_path, "bad.json", obj), "--to", "h")
    assert code == 2 and out == ""
    assert field in err and err.count("\n") == 1


def test_unknown_verb_and_bad_json(tmp_path):
    code, _, err = call("frobnicate")
    assert code == 2 and err.startswith("error:")
    p = tmp_path / "broken.json"
    p.write_text("{", encoding="utf-8")
    code, _, err = call("convert", "--in", str(p), "--to", "v")
    assert code == 2 and "invalid JSON" in err


def test_out_flag_and_determinism(tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = call("vlp-weak-set", "--in", str(SAMPLES / "vlp_square.json"), "--out", str(target))
    assert code == 0 and out == ""
    first = target.read_text()
    code, second, _ = call("vlp-weak-set", "--in", str(SAMPLES / "vlp_square.json"))
    assert first == second


def test_parse_helpers():
    assert ser.parse_rat("−2/4", "x") == Fraction(-1, 2)
    with pytest.raises(InputError):
        ser.parse_rat(1.5, "x")
    g = h_to_v(ser.hform_from_json({"dim": 1, "ineq": {"C": [["1"]], "alpha": ["3/2"]}}))
    assert g.points == ((Fraction(3, 2),),)
