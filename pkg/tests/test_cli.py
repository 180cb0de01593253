from __future__ import annotations

import json
import subprocess
import sys

import pytest

from reeskit.cli import main, parse_monomial_list
from reeskit.errors import ParseError, WrongVariable
from reeskit.generators import normalize_input

from conftest import m


def run(capsysbinary, *argv):
    code = main(list(argv))
    out, err = capsysbinary.readouterr()
    return code, out.decode("utf-8"), err.decode("utf-8")


def test_parse_monomial_list():
    assert parse_monomial_list("T0^15,T0^9*T1^6,T1^13") == (m("T0^15"), m("T0^9*T1^6"), m("T1^13"))
    assert parse_monomial_list("T0^2,T0*T1,T1^2") == (m("T0^2"), m("T0*T1"), m("T1^2"))
    with pytest.raises(WrongVariable) as e:
        parse_monomial_list("T0^15,X0,T1^13")
    assert e.value.position == 6
    with pytest.raises(ParseError):
        parse_monomial_list("T0^15,T1^13")
    with pytest.raises(ParseError) as e:
        parse_monomial_list("T0^15,,T1^13")
    assert e.value.position == 6


def test_ideal_round_trip():
    text = "T0^16*T1^2,T0^10*T1^8,T0*T1^15"
    p = normalize_input(*parse_monomial_list(text))
    mu0, mu1 = p.common_factor
    again = ",".join(str(g * m(f"T0^{mu0}*T1^{mu1}")) for g in p.ideal_generators())
    assert again == text


def test_gens(capsysbinary):
    code, out, _ = run(capsysbinary, "gens", "15", "13", "9", "6", "--format", "text")
    assert code == 0
    assert out.splitlines() == [
        "T0^6*X1 - T1^6*X0",
        "T1^7*X1 - T0^9*X2",
        "T1*X1^2 - T0^3*X0*X2",
        "T0^3*X1^3 - T1^5*X0^2*X2",
        "X1^5 - T1^4*X0^3*X2^2",
    ]
    _, out2, _ = run(capsysbinary, "gens", "--ideal", "T0^15,T0^9*T1^6,T1^13")
    assert out2 == out


def test_json_envelope(capsysbinary):
    _, out, _ = run(capsysbinary, "gens", "2", "2", "1", "1", "--format", "json")
    doc = json.loads(out)
    assert doc["schemaVersion"] == 1 and doc["params"] == {"d1": 2, "d2": 2, "u1": 1, "u2": 1}
    assert [g["lead"] for g in doc["generators"]] == ["T0*X1", "T1*X1", "X1^2"]


def test_betti(capsysbinary):
    assert run(capsysbinary, "betti", "21", "21", "6", "15")[1] == "β0=6 β1=8 β2=3 pd=2\n"


def test_trace_plane(capsysbinary):
    code, out, _ = run(capsysbinary, "trace", "21", "21", "6", "15", "--plane")
    assert code == 0 and out.splitlines()[-1] == "7\t0\t2\t\t0\tX1^7 - X0^2*X2^5"
    code, _, err = run(capsysbinary, "trace", "15", "13", "9", "6", "--plane")
    assert code == 2 and "equigenerated" in err


def test_graph_and_resolution(capsysbinary):
    _, dot, _ = run(capsysbinary, "graph", "15", "13", "9", "6", "--augmented")
    assert dot.count(" -> ") == 8
    _, js, _ = run(capsysbinary, "graph", "15", "13", "9", "6", "--format", "json")
    assert len(json.loads(js)["graph"]["edges"]) == 6
    _, cas, _ = run(capsysbinary, "resolution", "2", "2", "1", "1", "--minimal", "--format", "cas")
    assert "phi1 = matrix{{X1,X2},{X0,X1},{-T0,-T1}};" in cas
    _, colon, _ = run(capsysbinary, "colon", "15", "13", "9", "6")
    assert colon.splitlines()[1] == "M_1: T1^7, T1*X1, X1^2"


def test_verify(capsysbinary):
    code, out, _ = run(capsysbinary, "verify", "2", "2", "1", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schemaVersion"] == 1 and all(c["pass"] for c in doc["checks"])


def test_sweep_small(capsysbinary):
    code, out, _ = run(capsysbinary, "sweep", "--dmax", "5", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["pass"] and doc["validParams"] == 100


def test_errors(capsysbinary):
    code, _, err = run(capsysbinary, "gens", "--ideal", "T0^15,X0,T1^13")
    assert code == 2 and "position 6" in err
    assert run(capsysbinary, "gens", "2", "2", "2", "1")[0] == 2
    assert run(capsysbinary, "gens", "2", "2", "1")[0] == 2
    assert run(capsysbinary, "gens", "--ideal", "T0^4,T0^2,T1^3")[0] == 3
    with pytest.raises(SystemExit):
        main(["gens", "15", "13", "9", "6", "--format", "dot"])


def test_output_file(tmp_path, capsysbinary):
    path = tmp_path / "g.dot"
    assert run(capsysbinary, "graph", "2", "2", "1", "1", "-o", str(path))[1] == ""
    data = path.read_bytes()
    assert b"\r" not in data and data.endswith(b"}\n")


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "reeskit", "betti", "15", "13", "9", "6"],
        capture_output=True, check=True,
    ).stdout
    assert out == "β0=5 β1=6 β2=2 pd=2\n".encode("utf-8")
