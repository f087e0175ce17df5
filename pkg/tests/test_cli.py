import json
import subprocess
import sys

import pytest

from wedge.cli import run

LAM_STATE = '{"terms":[{"charge":0,"partition":[4,4,3,3,2,2,1],"coeff":"1"}]}'


def test_mn():
    code, out = run(["mn", "--mul", "-k", "2", "--lambda", "1"])
    assert code == 0
    assert out == (
        '{"terms":[{"zexp":0,"partition":[3],"coeff":"1"},{"zexp":0,"partition":[1,1,1],"coeff":"-1"}]}\n'
    )
    code, out = run(["mn", "--perp", "-k", "4", "--lambda", "4,4,3,3,2,2,1"])
    assert code == 0 and len(json.loads(out)["terms"]) == 3


def test_act_fermion():
    code, out = run(["act", "--side", "fermion", "--element", '{"central":"0","finite":[[-1,3,"1"]]}', "--state", LAM_STATE])
    assert code == 0
    assert json.loads(out) == {"terms": [{"charge": 0, "partition": [4, 2, 2, 2, 2, 2, 1], "coeff": "1"}]}


def test_act_reads_files(tmp_path):
    element = tmp_path / "x.json"
    element.write_text('{"periodic":{"N":1,"entries":[[0,1,1,"1"]]}}')
    state = tmp_path / "v.json"
    state.write_text('{"terms":[{"zexp":3,"partition":[1],"coeff":"1"}]}')
    code, out = run(["act", "--side", "boson", "--element", str(element), "--state", str(state)])
    assert code == 0 and json.loads(out)["terms"][0]["coeff"] == "3"


def test_domain_error_exit_code(capsys):
    code, out = run(
        ["act", "--side", "boson", "--element", '{"periodic":{"N":2,"entries":[[1,1,2,"1"]]}}', "--state", '{"terms":[]}']
    )
    assert code == 1 and out == ""
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "UnsupportedElement"


def test_parse_error_reports_position(capsys):
    bad = '{"terms":[{"charge":0,"partition":[1,2],"coeff":"1"}]}'
    code, _ = run(["act", "--side", "fermion", "--element", "{}", "--state", bad])
    assert code == 1
    err = json.loads(capsys.readouterr().err)
    assert err == {
        "error": "ParseError",
        "message": "partition parts must be weakly decreasing",
        "position": "terms[0].partition",
    }


def test_missing_file(capsys):
    code, _ = run(["act", "--side", "fermion", "--element", "/nonexistent/x.json", "--state", "{}"])
    assert code == 1
    assert json.loads(capsys.readouterr().err)["error"] == "ParseError"


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["mn", "--mul", "--perp", "-k", "1", "--lambda", "1"],
        ["mn", "--mul", "-k", "0", "--lambda", "1"],
        ["act", "--side", "left", "--element", "{}", "--state", "{}"],
        ["verify", "everything"],
        ["verify", "mn", "--bogus", "1"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    code, out = run(argv)
    assert code == 2 and out == ""


def test_maya():
    code, out = run(["maya", "--encode", "--lambda", "4,4,3,3,2,2,1"])
    assert code == 0
    assert json.loads(out) == {
        "charge": 0,
        "partition": [4, 4, 3, 3, 2, 2, 1],
        "monomial": "4,3,1,0,-2,-3,-5,-7,...",
        "plus": [4, 3, 1],
        "minus": [-1, -4, -6],
    }
    _, out = run(["maya", "--decode", "--monomial", "3,0,-1,..."])
    assert json.loads(out)["charge"] == 1 and json.loads(out)["partition"] == [2]
    _, out = run(["maya", "--decode", "--plus", "4,3,1", "--minus=-1,-4,-6"])
    assert json.loads(out)["partition"] == [4, 4, 3, 3, 2, 2, 1]
    _, out = run(["maya", "--code", "--lambda", "4,4,3,3,2,2,1", "--lo=-6", "--hi", "4"])
    assert json.loads(out) == {"lo": -6, "hi": 4, "code": "RURUURUURUU"}
    _, out = run(["maya", "--frobenius", "--lambda", "4,4,3,3,2,2,1"])
    assert json.loads(out) == {"u": ["7/2", "5/2", "1/2"], "v": ["13/2", "9/2", "3/2"]}


def test_cocycle():
    _, out = run(["cocycle", "--A", '{"finite":[[0,1,"1"]]}', "--B", '{"finite":[[1,0,"1"]]}'])
    assert json.loads(out) == {"value": "1"}
    shift = '{"periodic":{"N":1,"entries":[[%d,1,1,"1"]]}}'
    _, out = run(["cocycle", "--A", shift % 2, "--B", shift % -2])
    assert json.loads(out) == {"value": "2"}
    loop = '{"n":1,"terms":[{"power":%d,"matrix":[["1"]]}]}'
    _, out = run(["cocycle", "--closed-form", "--A", loop % 2, "--B", loop % -2])
    assert json.loads(out) == {"value": "2"}


def test_verify_correspondence():
    argv = ["verify", "correspondence", "--charge-max", "1", "--weight-max", "5", "--index-max", "4"]
    code, out = run(argv)
    assert code == 0
    result = json.loads(out)
    assert result["failures"] == 0
    # 81 elementary + 8 shifts + charge + 2 scalars, on 3 charges x 19 partitions
    assert result["checked"] == (81 + 8 + 1 + 2) * 3 * 19
    assert run(argv) == (code, out)


def test_verify_small_suites():
    for argv in (
        ["verify", "mn", "--weight-max", "3", "--k-max", "2"],
        ["verify", "relations", "--charge-max", "1", "--weight-max", "2", "--pair-max", "3", "--quad-max", "2"],
        ["verify", "cocycle", "--index-max", "2", "--triple-max", "1", "--osc-max", "2", "--loop-size-max", "2"],
        ["verify", "universal", "--power-max", "1", "--algebra", "sl2"],
        ["verify", "oscillator", "--weight-max", "4"],
    ):
        code, out = run(argv)
        assert code == 0, argv
        assert json.loads(out)["failures"] == 0


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wedge.cli", "mn", "--mul", "-k", "1", "--lambda", ""],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == '{"terms":[{"zexp":0,"partition":[1],"coeff":"1"}]}\n'
