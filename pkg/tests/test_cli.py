import json
from pathlib import Path

import pytest

from stammerlab import cli

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    return cli.run(list(argv))


def test_convert_running_example():
    code, out, err = run("convert", "permutation", "chain", "513462")
    assert code == 0 and err == ""
    assert out == "UD UDUD UDUUDD UDUUUDDD UUUUUDDDDD UUUUUDUDDDDD\n"


def test_convert_json():
    code, out, _ = run("--json", "convert", "rook", "stammering", "[6,1,4,3,2]")
    assert code == 0
    assert json.loads(out)[:4] == [[], [1], [2], [1]]
    code, out, _ = run("convert", "rook", "permutation", "--json", "[6,10,7,1,3,2]")
    assert json.loads(out) == [5, 4, 7, 1, 3, 2, 6]


def test_convert_from_file(tmp_path):
    f = tmp_path / "obj.json"
    f.write_text('{"shape": "UUDD", "dots": [[1, 1], [2, 1]]}')
    code, out, _ = run("convert", "laguerre", "dyck-path", "--input", str(f))
    assert (code, out) == (0, "UUDD\n")


def test_enumerate_counts():
    code, out, _ = run("enumerate", "permutation", "3")
    assert code == 0 and len(out.splitlines()) == 6
    code, out, _ = run("--json", "enumerate", "stammering", "2")
    assert len(json.loads(out)) == 6


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["count", "empty-to", "4", "--shape", "21"], "960\n"),
        (["count", "to-empty", "4", "--shape", "[2,1]"], "40\n"),
        (["count", "partial", "3", "--k", "3"], "24\n"),
        (["count", "laguerre", "4"], "24\n"),
        (["count", "stammering", "2"], "6\n"),
    ],
)
def test_count(argv, expected):
    assert run(*argv) == (0, expected, "")


def test_count_with_brute_force():
    code, out, _ = run("--json", "count", "empty-to", "3", "--shape", "1", "--brute")
    data = json.loads(out)
    assert code == 0 and data["value"] == data["brute"]


def test_ansatz():
    assert run("ansatz", "partition", "2") == (0, "a^2 + a*b + q*a*b + b^2 + a + b\n", "")
    code, out, _ = run("ansatz", "partition", "3", "--at", "1,1,1")
    assert out.splitlines()[-1] == "24"
    code, out, _ = run("ansatz", "normal-order", "FE")
    assert out == "(1) E^0 F^1 + (1) E^1 F^0 + (q) E^1 F^1\n"
    code, out, _ = run("--json", "ansatz", "prob", "xo", "--at", "1/2,1,1")
    assert json.loads(out)["value"] == "5/2"


def test_verify_report_dir(tmp_path):
    code, out, _ = run("verify", "counts", "--max-n", "3", "--report-dir", str(tmp_path))
    assert code == 0 and all(line.startswith("PASS") for line in out.splitlines())
    rows = (tmp_path / "verify.tsv").read_text().splitlines()
    assert rows[0].split("\t")[:3] == ["suite", "check", "passed"]
    assert len(rows) == len(out.splitlines()) + 1
    assert (tmp_path / "verify.svg").read_text().lstrip().startswith("<?xml")


def test_verify_json():
    code, out, _ = run("--json", "verify", "lattice", "--max-n", "2")
    assert code == 0 and json.loads(out)["passed"] is True


def test_output_file(tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = run("convert", "permutation", "rook", "513462", "--output", str(target))
    assert (code, out) == (0, "")
    assert target.read_text() == "6 1 4 3 2\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["enumerate", "rook"],
        ["enumerate", "rook", "9"],
        ["enumerate", "rook", "-1"],
        ["convert", "dyck-path", "chain", "UD"],
        ["convert", "rook", "chain"],
        ["count", "partial", "3"],
        ["ansatz", "normal-order", "FXE"],
        ["ansatz", "prob", "xq"],
        ["ansatz", "partition", "two"],
        ["ansatz", "partition", "2", "--at", "1,1"],
        ["convert", "rook", "chain", "[1]", "extra"],
        ["--seed-order", "random", "enumerate", "rook", "2"],
    ],
)
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and "usage error" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["convert", "rook", "chain", "[1,1]"],
        ["convert", "permutation", "rook", "1134"],
        ["convert", "chain", "rook", "[]"],
        ["render", "laguerre", '{"shape": "UDDU", "dots": []}'],
    ],
)
def test_validation_errors(argv):
    code, out, err = run(*argv)
    assert code == 1 and out == "" and err.startswith("stammerlab: ")


def test_max_n_env(monkeypatch):
    monkeypatch.setenv("STAMMERLAB_MAX_N", "2")
    assert run("enumerate", "rook", "3")[0] == 2
    assert run("enumerate", "rook", "2")[0] == 0
    monkeypatch.setenv("STAMMERLAB_MAX_N", "lots")
    assert run("enumerate", "rook", "2")[0] == 2


def test_render_golden():
    code, out, _ = run("render", "permutation", "513462")
    assert code == 0 and out == (GOLDEN / "chain_513462.txt").read_text()
    code, out, _ = run("render", "rook", "[6,1,4,3,2]")
    assert out == (GOLDEN / "growth_61432.txt").read_text()


def test_main_writes_streams(capsys):
    assert cli.main(["convert", "permutation", "dyck-path", "21"]) == 0
    assert capsys.readouterr().out == "UUDD\n"
    assert cli.main(["enumerate", "rook"]) == 2
    assert "usage error" in capsys.readouterr().err
    assert cli.main(["--help"]) == 0
