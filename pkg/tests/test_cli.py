import io
import json
from importlib import resources

import jsonschema
import pytest

from knotforge.cli import run

from conftest import STANDARD_TREFOIL

SCHEMA = json.loads(resources.files("knotforge").joinpath("data/cli_schema.json").read_text())


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def check_json(key, *argv):
    code, out, err = call("--json", *argv)
    assert code == 0, err
    payload = json.loads(out)
    jsonschema.validate(payload, {"$defs": SCHEMA["$defs"], "$ref": f"#/$defs/{key}"})
    return payload


def test_jones_example():
    assert call("jones", STANDARD_TREFOIL) == (0, "-t^-4+t^-3+t^-1\n", "")


def test_table_check():
    code, out, _ = call("table", "check")
    assert code == 0 and out == "all Tait checks passed\n"


def test_writhe_unknot():
    assert call("writhe", "PD[]") == (0, "0\n", "")


def test_exit_codes(tmp_path):
    assert call("writhe", "PD[X(1,2,3)]")[0] == 1
    assert call("validate", "PD[X(1,4,2,5),X(3,3,4,1),X(5,2,6,3)]")[0] == 1
    assert call("span", "PD[X(1,2,2,1)]")[0] == 1
    assert call("bogus")[0] == 2
    assert call("writhe")[0] == 2
    assert call("writhe", "no_such_knot")[0] == 2
    assert call("bracket", "--naive", "--fast", "3_1")[0] == 2
    assert call("flype", "apply", "3_1")[0] == 2
    assert call("flype", "apply", "3_1", "--site", "99")[0] == 1
    assert call("table", "check", str(tmp_path / "missing.tsv"))[0] == 1


def test_input_sources(tmp_path):
    f = tmp_path / "k.pd"
    f.write_text(STANDARD_TREFOIL)
    assert call("writhe", str(f))[1] == "-3\n"
    assert call("writhe", "3_1")[1] == "3\n"
    assert call("writhe", STANDARD_TREFOIL)[1] == "-3\n"


def test_json_flag_position():
    assert call("--json", "writhe", "4_1")[1] == call("writhe", "4_1", "--json")[1]


@pytest.mark.parametrize(
    "key, argv",
    [
        ("validate", ["validate", "3_1"]),
        ("writhe", ["writhe", "3_1"]),
        ("alternating", ["alternating", "8_19"]),
        ("reduce", ["reduce", "PD[X(1,2,2,1)]"]),
        ("gauss", ["gauss", "4_1"]),
        ("canonical", ["canonical", "5_2"]),
        ("bracket", ["bracket", "3_1"]),
        ("bracket", ["bracket", "--naive", "3_1"]),
        ("kauffman", ["kauffman", "3_1"]),
        ("jones", ["jones", "4_1"]),
        ("span", ["span", "8_19"]),
        ("states", ["states", "3_1"]),
        ("surface", ["surface", "3_1"]),
        ("surface", ["surface", "3_1", "--color", "white"]),
        ("howie", ["howie", "3_1"]),
        ("composite", ["composite", "3_1#3_1"]),
        ("composite", ["composite", "3_1"]),
        ("flype_list", ["flype", "list", "7_7"]),
        ("flype_apply", ["flype", "apply", "7_7", "--site", "0"]),
        ("flype_orbit", ["flype", "orbit", "7_7"]),
        ("table_check", ["table", "check"]),
    ],
)
def test_json_matches_schema(key, argv):
    check_json(key, *argv)


def test_text_and_json_agree():
    assert int(call("writhe", "5_1")[1]) == check_json("writhe", "writhe", "5_1")["writhe"]
    payload = check_json("states", "states", "3_1")
    assert f"|s+D| = {payload['s_plus']}" in call("states", "3_1")[1]
    surf = check_json("surface", "surface", "3_1", "--color", "black")["surfaces"][0]
    assert f"chi {surf['euler_char']}" in call("surface", "3_1", "--color", "black")[1]
    poly = check_json("jones", "jones", "3_1")["jones"]
    assert poly == {"1": 1, "3": 1, "4": -1}


def test_deterministic():
    assert call("flype", "orbit", "7_7") == call("flype", "orbit", "7_7")


def test_table_check_reports_failures(tmp_path):
    f = tmp_path / "t.tsv"
    f.write_text("x\tPD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]\t0\n")
    code, out, _ = call("table", "check", str(f))
    assert code == 1 and "alternating flag" in out


def test_help_exits_zero():
    assert call("--help")[0] == 0
