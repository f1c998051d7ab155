import json
import subprocess
import sys

import pytest

from qmcrystal.cli import main
from qmcrystal.serialize import parse_graph_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_dot(capsys):
    code, out, err = run(capsys, "build", "--type", "G2", "--hw", "1,0", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph") and out.count("->") == 6
    assert "7 nodes, 6 edges" in err


def test_build_e8_json(capsys):
    code, out, _ = run(capsys, "build", "--type", "E8", "--hw", "0,0,0,0,0,0,0,1", "--format", "json")
    assert code == 0
    assert len(parse_graph_json(out)) == 248


def test_build_to_file(capsys, tmp_path):
    path = tmp_path / "g.json"
    code, out, _ = run(capsys, "build", "--type", "G2", "--hw", "1,0", "--out", str(path))
    assert code == 0
    assert json.loads(out) == {"nodes": 7, "edges": 6}
    assert len(parse_graph_json(path.read_bytes())) == 7


@pytest.mark.parametrize("argv", [
    ["build", "--type", "G2", "--hw", "1"],
    ["build", "--type", "G2", "--hw", "1,x"],
    ["build", "--type", "G2", "--hw", "-1,0"],
    ["build", "--type", "Q2", "--hw", "1,0"],
    ["build", "--type", "G2", "--hw", "1,0", "--node-cap", "0"],
    ["build", "--type", "G2"],
    ["frobnicate"],
    [],
    ["verify", "lemma", "--type", "G2", "--index", "3"],
    ["tensor", "--type", "G2", "--a", "1,0", "--b", "1,0"],
    ["tensor", "--type", "G2", "--a", "1,0", "--b", "1,0", "--component", "3,0"],
    ["dim", "--type", "G2", "--hw", "0,-1"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_node_cap_exit_3(capsys):
    code, _, err = run(capsys, "build", "--type", "E8", "--hw", "0,0,0,0,0,0,0,1", "--node-cap", "100")
    assert code == 3
    assert "cap" in err


def test_node_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("QMCRYSTAL_NODE_CAP", "3")
    code, _, _ = run(capsys, "build", "--type", "G2", "--hw", "1,0")
    assert code == 3


def _summands(out):
    doc = json.loads(out)
    assert doc["kind"] == "fusion" and doc["pass"] is True
    return doc["payload"]["summands"]


def test_tensor_decompose_g2(capsys):
    code, out, _ = run(capsys, "tensor", "--type", "G2", "--a", "1,0", "--b", "1,0", "--decompose")
    assert code == 0
    s = _summands(out)
    assert len(s) == 4
    assert sorted(x["dim"] for x in s) == [1, 7, 14, 27]


def test_tensor_decompose_f4(capsys):
    code, out, _ = run(capsys, "tensor", "--type", "F4", "--a", "0,0,0,1", "--b", "0,0,0,1",
                       "--decompose")
    assert code == 0
    assert sum(x["dim"] * x["multiplicity"] for x in _summands(out)) == 676


def test_tensor_decompose_a1(capsys):
    code, out, _ = run(capsys, "tensor", "--type", "A1", "--a", "1", "--b", "1", "--decompose")
    assert code == 0
    assert {tuple(x["highest_weight"]): x["multiplicity"] for x in _summands(out)} == {(2,): 1, (0,): 1}


def test_tensor_component(capsys):
    code, out, _ = run(capsys, "tensor", "--type", "G2", "--a", "1,0", "--b", "1,0", "--component", "1,0")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "component"
    assert doc["payload"]["seed"] == [0, 3]
    assert doc["payload"]["size"] == 7
    assert doc["payload"]["zero_weight_members"] == [[1, 5]]


def test_tensor_component_dot(capsys):
    code, out, _ = run(capsys, "tensor", "--type", "G2", "--a", "1,0", "--b", "1,0", "--component", "1,0",
                       "--format", "dot")
    assert code == 0
    assert "fillcolor=yellow" in out


def test_verify_lemma_e8(capsys):
    code, out, _ = run(capsys, "verify", "lemma", "--type", "E8", "--index", "8")
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True and doc["failures"] == []
    assert doc["payload"]["zero_node_count"] == 8


def test_verify_lemma_hypothesis_fails(capsys):
    code, out, _ = run(capsys, "verify", "lemma", "--type", "A2", "--index", "1")
    assert code == 1
    doc = json.loads(out)
    assert doc["pass"] is False
    assert doc["failures"][0].startswith("hypothesis fails")


def test_verify_paper_g2(capsys):
    code, out, _ = run(capsys, "verify", "paper-g2")
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True and doc["payload"]["mismatches"] == []


def test_verify_sweep(capsys):
    code, out, _ = run(capsys, "verify", "sweep", "--max-dim", "14")
    assert code == 0
    assert json.loads(out)["kind"] == "sweep"


def test_verify_quasiminuscule(capsys):
    code, out, _ = run(capsys, "verify", "quasiminuscule", "--type", "F4", "--hw", "0,0,0,1")
    assert code == 0
    assert json.loads(out)["payload"]["status"] == "quasi-minuscule"


@pytest.mark.parametrize("t,hw,d", [("F4", "0,0,0,1", "26"), ("G2", "0,0", "1"),
                                    ("E8", "0,0,0,0,0,0,0,1", "248")])
def test_dim(capsys, t, hw, d):
    code, out, _ = run(capsys, "dim", "--type", t, "--hw", hw)
    assert code == 0 and out.strip() == d


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", "--type", "E8", "--w", "0,0,0,0,0,0,0,1")
    assert code == 0 and out.splitlines()[0] == "240"
    code, out, _ = run(capsys, "orbit", "--type", "G2", "--w", "1,0", "--format", "json")
    doc = json.loads(out)
    assert doc["size"] == 6 and doc["orbit"][0] == [2, -1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qmcrystal", "dim", "--type", "F4", "--hw", "0,0,0,1"],
                          capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0 and proc.stdout.strip() == "26"
    proc = subprocess.run([sys.executable, "-m", "qmcrystal", "build", "--type", "G2", "--hw", "1"],
                          capture_output=True, text=True, timeout=60)
    assert proc.returncode == 2
