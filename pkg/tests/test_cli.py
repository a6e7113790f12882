import io
import json
import os
import subprocess
import sys

import pytest

from aksch.cache import FILE_NAME, SCHEMA_VERSION, EnumerationCache, cache_key
from aksch.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    return code, json.loads(out) if out.strip() else None


def test_classify():
    code, data = call_json("classify", "--n", "5", "--r", "3", "--e", "6", "--f", "0,1,3")
    assert code == 0 and data["kind"] == "INFINITE"
    assert data["bounds"] == {"e": 6, "twoF1plus4": 6, "f2plus1": 4, "gplus2": 5}
    code, data = call_json("classify", "--n", "2", "--r", "2", "--q-one")
    assert data["kind"] == "INFINITE" and data["note"] == "tame-or-wild unknown"
    code, data = call_json("classify", "--n", "3", "--e", "inf", "--f", "0,0")
    assert data["bounds"]["f2plus1"] == "infinity"


def test_one_parameter_report():
    code, data = call_json("classify", "--one-parameter", "--e", "6", "--r", "3")
    assert code == 0
    assert data["classifierMaxFiniteN"] == 3 and data["closedFormMaxFiniteN"] == 4 and not data["agree"]


def test_orbits():
    code, data = call_json("orbits", "--n", "4", "--e", "2", "--orbit", "0", "--orbit", "1")
    assert code == 0 and data["kind"] == "INFINITE"


def test_blocks():
    code, data = call_json("blocks", "--n", "2", "--r", "2", "--e", "5", "--f", "0,1")
    assert code == 0 and sorted(data["sizes"]) == [1, 1, 3]
    code, data = call_json("blocks", "--n", "2", "--r", "3", "--e", "9", "--f", "0,3,6")
    assert all("morita" in b for b in data["blocks"])


def test_decompose():
    code, data = call_json("decompose", "--n", "2", "--r", "2", "--e", "5", "--f", "0,1", "--content", "0,1")
    assert code == 0
    block = data["blocks"][0]
    assert block["D"] == [[1, 0, 0], [1, 1, 0], [0, 1, 1]]
    assert block["C"] == [[2, 1, 0], [1, 2, 1], [0, 1, 1]]
    assert block["ordering"] == [[[], [1, 1]], [[1], [1]], [[2], []]]
    assert block["config"]["deformExponents"] == [2, 4]


def test_decompose_infinite_type_exit_3():
    code, data = call_json("decompose", "--n", "5", "--r", "3", "--e", "6", "--f", "0,1,3",
                           "--content", "3,2,1,0,5")
    assert code == 3 and "finite type" in data["error"]


def test_jantzen_gate_exit_3():
    code, data = call_json("jantzen", "--n", "5", "--r", "2", "--e", "5", "--f", "0,1")
    assert code == 3
    assert data == {"error": "modular system requires n < e or q-deformation"}


def test_jantzen_config_flags():
    code, data = call_json("jantzen", "--n", "2", "--r", "2", "--e", "5", "--f", "0,1",
                           "--content", "0,1", "--deform-exponents", "3,5")
    assert data["blocks"][0]["J"] == [[0, 0, 0], [3, 0, 0], [-3, 3, 0]]
    code, data = call_json("jantzen", "--n", "2", "--r", "2", "--e", "5", "--f", "0,1",
                           "--content", "0,1", "--pure", "1", "--pure", "2")
    assert code == 3 and "degenerate" in data["error"]
    code, data = call_json("jantzen", "--n", "5", "--r", "2", "--e", "5", "--f", "0,1",
                           "--q-deform", "7")
    assert code == 0 and data["config"]["qDeform"] == 7


@pytest.mark.parametrize("argv", [
    ["classify", "--n", "2", "--e", "1", "--f", "0"],
    ["classify", "--n", "2", "--e", "5", "--f", "0,x"],
    ["classify", "--n", "2", "--r", "3", "--e", "5", "--f", "0,1"],
    ["classify", "--n", "2", "--e", "5"],
    ["blocks", "--r", "2", "--e", "5", "--f", "0,1"],
    ["decompose", "--n", "2", "--e", "5", "--f", "0,1", "--content", "0"],
    ["jantzen", "--n", "2", "--e", "5", "--f", "0,1", "--deform-exponents", "2,2"],
    ["jantzen", "--n", "2", "--e", "5", "--f", "0,1", "--pure", "3"],
    ["grading", "--n", "2", "--r", "2", "--p", "1,1", "--epsilon", "3,0"],
    ["quiver", "--m", "0"],
    ["nonsense"],
    [],
])
def test_flag_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2 and err


def test_dims_and_grading_and_quiver():
    code, data = call_json("dims", "--n", "2", "--r", "1", "--m", "2")
    assert data["dimSchur"] == 10 and data["dimHecke"] == 2
    code, data = call_json("grading", "--n", "2", "--r", "2", "--m", "2,2", "--p", "1,1", "--epsilon", "1,1")
    assert data["lhs"] == data["rhs"] == 16 and data["pass"]
    code, data = call_json("quiver", "--m", "3")
    assert data["dim"] == 9


def test_worked_examples_command():
    code, data = call_json("paper-examples")
    assert code == 0 and data["pass"]
    flagged = [it for it in data["items"] if it.get("flagged")]
    assert len(flagged) == 1


def test_table_format():
    code, out, _ = call("decompose", "--n", "2", "--r", "2", "--e", "5", "--f", "0,1",
                        "--content", "0,1", "--format", "table")
    assert code == 0 and "D:" in out and "  0 1 1" in out


def test_output_is_deterministic():
    argv = ["blocks", "--n", "3", "--r", "3", "--e", "5", "--f", "0,1,3"]
    assert call(*argv)[1] == call(*argv)[1]


def test_module_entry_point(tmp_path):
    env = dict(os.environ, AKSCH_CACHE_DIR=str(tmp_path))
    proc = subprocess.run([sys.executable, "-m", "aksch", "classify", "--n", "2", "--e", "5", "--f", "0,1"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0 and json.loads(proc.stdout)["kind"] == "FINITE"


# cache

GRID = [(n, r) for n in range(0, 5) for r in (1, 2, 3)]


def test_cache_round_trip_identical(tmp_path):
    for n, r in GRID:
        argv = ["dims", "--n", str(n), "--r", str(r), "--cache-dir", str(tmp_path)]
        fresh = call(*argv, "--no-cache")[1]
        miss = call(*argv)[1]
        hit = call(*argv)[1]
        assert fresh == miss == hit
    data = json.loads((tmp_path / FILE_NAME).read_text())
    assert data["version"] == SCHEMA_VERSION and len(data["entries"]) == len(GRID)


def test_cache_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("AKSCH_CACHE_DIR", str(tmp_path / "env"))
    call("dims", "--n", "2", "--r", "2")
    assert (tmp_path / "env" / FILE_NAME).exists()


@pytest.mark.parametrize("garbage", ["{not json", "[]", json.dumps({"version": 0, "entries": {}}), ""])
def test_corrupt_cache_is_recomputed(tmp_path, garbage):
    (tmp_path / FILE_NAME).write_text(garbage)
    argv = ["dims", "--n", "3", "--r", "2", "--cache-dir", str(tmp_path)]
    assert call(*argv)[1] == call(*argv, "--no-cache")[1]
    data = json.loads((tmp_path / FILE_NAME).read_text())
    assert data["version"] == SCHEMA_VERSION


def test_cache_writes_leave_no_temp_files(tmp_path):
    cache = EnumerationCache(tmp_path)
    for k in range(5):
        cache.put(cache_key("x", k, 1, (1,)), {"k": k})
    assert [p.name for p in tmp_path.iterdir()] == [FILE_NAME]
    assert EnumerationCache(tmp_path).get(cache_key("x", 3, 1, (1,))) == {"k": 3}
