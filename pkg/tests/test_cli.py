import json
import shutil
import subprocess

import pytest

from griffin.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out)


SIGMA_JSON = {
    "shape": [4, 3, 1],
    "boxes": [[1, 1, 4], [1, 3, 6], [1, 4, 9], [2, 1, 3], [2, 2, 8], [2, 3, 1], [3, 1, 2]],
    "floats": [[5, 5], [7, 3], [10, 3], [11, 1]],
}


@pytest.fixture
def sigma_file(tmp_path):
    path = tmp_path / "sigma.json"
    path.write_text(json.dumps(SIGMA_JSON))
    return str(path)


def test_gens(capsys):
    code, out, _ = run(capsys, "gens", "2", "1")
    assert code == 0 and out.strip() == "e2({1,2}) = x1*x2"
    data = run_json(capsys, "gens", "2", "1", "--s", "2")
    assert [g["name"] for g in data["generators"]] == ["e2({1,2})", "x1^2", "x2^2"]
    assert data["s"] == "2"


def test_gb_with_certificates(capsys):
    code, out, _ = run(capsys, "gb", "5", "2,2,1", "--certify")
    assert code == 0
    assert "(0,1,2,0,0): x2*x3^2 - x2^2*x5 - x2^2*x4 + x1*x4*x5 - x1*x2^2" in out
    assert "(x2*x3)*e1({1,2,3,4,5})" in out
    data = run_json(capsys, "gb", "2", "1", "--s", "2")
    assert [e["target"] for e in data["elements"]] == [[1, 1], [2, 0], [0, 2]]


def test_reduced_gb(capsys):
    code, out, _ = run(capsys, "reduced-gb", "3", "1,1,1", "--order", "lex")
    assert code == 0
    assert out.splitlines() == ["x3 + x2 + x1", "x2^2 + x1*x2 + x1^2", "x1^3"]
    data = run_json(capsys, "reduced-gb", "2", "2,1")
    assert [e["text"] for e in data["elements"]] == ["1"]


def test_basis(capsys):
    data = run_json(capsys, "basis", "3", "2,1", "--s", "2")
    assert data["size"] == 3
    assert sorted(map(tuple, data["monomials"])) == [(0, 0, 0), (0, 1, 0), (1, 0, 0)]
    data = run_json(capsys, "basis", "2", "1", "--max-deg", "2")
    assert data["size"] == 5
    code, _, err = run(capsys, "basis", "2", "1")
    assert code == 3 and "max-deg" in err


def test_dset(capsys):
    code, out, _ = run(capsys, "dset", "4", "3,1")
    assert code == 0
    lines = out.split()
    assert "(0,0,0,1)" in lines and "(1,0,0,1)" in lines
    direct = run_json(capsys, "dset", "4", "3,1", "--direct")
    recursive = run_json(capsys, "dset", "4", "3,1")
    assert direct["elements"] == recursive["elements"]
    minimal = run_json(capsys, "dset", "4", "3,1", "--minimal")
    assert [1, 0, 0, 1] not in minimal["elements"]


def test_code_and_decode(capsys, sigma_file):
    code, out, _ = run(capsys, "code", "11", "3,2,2,1", "--diagram", sigma_file)
    assert code == 0 and out.strip() == "(1,0,1,3,4,2,3,0,0,2,1)"
    data = run_json(capsys, "decode", "11", "3,2,2,1", "1,0,1,3,4,2,3,0,0,2,1")
    assert data["empty_boxes"] == 1
    assert {k: data[k] for k in SIGMA_JSON} == SIGMA_JSON
    code, out, _ = run(capsys, "decode", "2", "1", "[0,1]")
    assert code == 0 and "1" in out


def test_code_input_errors(capsys, tmp_path, sigma_file):
    code, _, err = run(capsys, "code", "11", "3,2,2", "--diagram", sigma_file)
    assert code == 3
    code, _, _ = run(capsys, "code", "11", "3,2,2,1", "--diagram", str(tmp_path / "missing.json"))
    assert code == 3
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"shape": [1], "boxes": [[1, 1, 2]], "floats": [[1, 1]]}))
    code, _, err = run(capsys, "code", "2", "1", "--diagram", str(bad))
    assert code == 3 and "decreasing" in err


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "1", "1")
    assert code == 0 and "ALL PASS" in out
    data = run_json(capsys, "verify", "5", "2,2,1")
    assert data["passed"] and data["schema"] == 1
    assert [c["status"] for c in data["checks"]] == ["pass"] * 6


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "4", "1,1", "--max-deg", "6")
    assert code == 1 and "FAIL" in out


def test_conjecture_command(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, out, _ = run(capsys, "conjecture", "--n-max", "2", "--s-max", "2", "--json", "--out", str(out_file))
    assert code == 0 and out == ""
    data = json.loads(out_file.read_text())
    assert data["passed"] and data["params"]["cells"] == len(data["checks"])


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "3", "1,1,1", "--s", "3")
    assert code == 0 and out.splitlines()[0].startswith("1 2 2 1")
    data = run_json(capsys, "hilbert", "3", "2,1", "--max-deg", "4")
    assert data["total"] == 3
    code, _, _ = run(capsys, "hilbert", "3", "2,1")
    assert code == 3


@pytest.mark.parametrize(
    "argv",
    [["frobnicate"], ["gens"], ["gens", "2", "1", "--bogus"], ["reduced-gb", "2", "1", "--order", "deglex"], []],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["gens", "2", "1,2"],
        ["gens", "2", "0"],
        ["gens", "2", "1", "--s", "x"],
        ["gb", "2", "2,2"],
        ["verify", "3", "1,1", "--s", "1"],
        ["decode", "2", "1", "1,-1"],
        ["decode", "2", "1", "1,0,0"],
    ],
)
def test_invalid_input_exit_code(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 3 and err.startswith("griffin: error:")


def test_size_cap(capsys, monkeypatch):
    monkeypatch.setenv("GRIFFIN_MAX_N", "3")
    code, _, err = run(capsys, "gb", "4", "1")
    assert code == 3 and "GRIFFIN_MAX_N" in err
    code, _, err = run(capsys, "conjecture", "--n-max", "4")
    assert code == 3


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0


@pytest.mark.skipif(shutil.which("griffin") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["griffin", "dset", "1", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "(1)"
