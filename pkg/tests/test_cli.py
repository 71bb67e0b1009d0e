from __future__ import annotations

import subprocess
import sys

import pytest

from hereditary.cli import main
from hereditary.gen import enumerate_graphs, write_graph6
from hereditary.graph import complete, path
from hereditary.graph import graph6_encode


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def manifest(path):
    return dict(line.split(" = ", 1) for line in path.read_text().splitlines())


def test_recognize_tsv(tmp_path, capsys):
    f = tmp_path / "in.g6"
    write_graph6(f, [path(4), complete(3), complete(2).complement()])
    code, out, _ = run(capsys, "recognize", "--class", "threshold", "--input", str(f))
    assert code == 0
    assert out.splitlines() == ["0\tfalse", "1\ttrue", "2\ttrue"]


def test_member_with_witness(capsys):
    code, out, _ = run(capsys, "member", "--class", "edge-add:cograph", "--graph6", graph6_encode(path(4)).decode(), "Bw")
    assert code == 0
    lines = [line.split("\t") for line in out.splitlines()]
    assert lines[0][:2] == ["0", "true"] and lines[0][2] != "-"
    assert lines[1] == ["1", "true", "-"]


def test_enumerate_writes_files(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("HEREDITARY_OUTPUT_DIR", str(tmp_path / "env"))
    code, out, _ = run(capsys, "enumerate", "--n-max", "5")
    assert code == 0
    assert out.splitlines()[-1] == "5\t34"
    assert manifest(tmp_path / "env" / "manifest.txt")["count_n5"] == "34"
    assert (tmp_path / "env" / "graphs_n5.g6").read_text().count("\n") == 35


def test_obstructions_report(tmp_path, capsys):
    out_dir = tmp_path / "rep"
    code, out, _ = run(capsys, "obstructions", "--class", "edge-add:threshold", "--n-max", "6", "--output-dir", str(out_dir))
    assert code == 0
    m = manifest(out_dir / "manifest.txt")
    assert m["count_n4"] == "1" and m["count_n5"] == "2" and m["count_n6"] == "16"
    assert m["total"] == "19" and m["bound_respected"] == "true"
    assert "total\t19" in out


def test_obstructions_from_input_file(tmp_path, capsys):
    f = tmp_path / "g5.g6"
    write_graph6(f, enumerate_graphs(5))
    code, out, _ = run(capsys, "obstructions", "--class", "edge-add:split", "--n-max", "5", "--input", str(f),
                       "--output-dir", str(tmp_path / "o"))
    assert code == 0 and "5\t2" in out.splitlines()


def test_verify(capsys):
    assert run(capsys, "verify", "--duality", "cograph", "--n-max", "6")[0] == 0
    code, out, _ = run(capsys, "verify", "--bounds", "edge-add:threshold", "--n-max", "6")
    assert code == 0 and out.rstrip().endswith("true")
    code, _, err = run(capsys, "verify", "--duality", "chordal", "--n-max", "5")
    assert code == 2 and "complement" in err


def test_matroid_command(tmp_path, capsys):
    code, out, err = run(capsys, "matroid", "--class", "add:no-3-point-line", "--q", "2", "--r-max", "3", "--bounds",
                         "--output-dir", str(tmp_path / "m"))
    assert code == 0
    assert out.splitlines() == ["2 2 : 0,1,2"]
    assert "bound\t4\ttrue" in err
    assert manifest(tmp_path / "m" / "manifest.txt")["bound_respected"] == "true"


@pytest.mark.parametrize(
    "argv, needle",
    [
        (["obstructions", "--class", "bogus", "--n-max", "4"], "bad class spec"),
        (["obstructions", "--class", "edge-add:split", "--n-max", "11"], "--n-max"),
        (["recognize", "--class", "split", "--input", "/nonexistent/x.g6"], "cannot read"),
        (["matroid", "--class", "independent", "--q", "3", "--r-max", "4"], "--r-max"),
        (["enumerate", "--n-max", "3", "--threads", "0"], "--threads"),
    ],
)
def test_errors_exit_nonzero(argv, needle, capsys):
    code, out, err = run(capsys, *argv)
    assert code != 0 and needle in err and out == ""


def test_bad_graph6_line(tmp_path, capsys):
    f = tmp_path / "bad.g6"
    f.write_text("Bw\nB!\n")
    code, _, err = run(capsys, "recognize", "--class", "split", "--input", str(f))
    assert code == 2 and ":2:" in err


def test_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "hereditary", "member", "--class", "split", "--graph6", "Ch"],
                          capture_output=True, text=True, check=False)
    assert done.returncode == 0 and done.stdout == "0\ttrue\t-\n"
