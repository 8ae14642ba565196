from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from arrangetop.arrangement import CATALOG, builtin
from arrangetop.cli import emit_input, main, parse_arrangement_text
from arrangetop.errors import DuplicateLine, ParseError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lattice_json(capsys):
    code, out, _ = run(capsys, "lattice", "--builtin", "ceva3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["multiplicity_counts"] == {"2": 0, "3": 12}


def test_json_is_deterministic(capsys):
    outs = [run(capsys, "resonance", "--builtin", "ceva3", "--format", "json")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_spectrum_json(capsys):
    code, out, _ = run(capsys, "spectrum", "--builtin", "central(4)", "--format", "json", "--crosscheck")
    doc = json.loads(out)
    assert code == 0 and doc["dims"] == {"0": 3, "1": 2, "2": 2, "3": 2}


def test_pencil_json(capsys):
    code, out, _ = run(capsys, "pencil", "--builtin", "ceva3", "--blocks", "[[1,2,3],[7,8,9],[4,5,6]]",
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["lift"]["equation"] == "u*v*(u + v) = 1"
    assert doc["milnor_algebra"]["graded_dims"] == [1, 2, 1]


def test_cover_json(capsys):
    code, out, _ = run(capsys, "cover", "--builtin", "central(4)", "--point", "1", "--format", "json")
    assert code == 0 and json.loads(out)["components"] == 4


def test_exit_codes(capsys):
    assert run(capsys, "lattice", "--builtin", "nonsense")[0] == 1
    assert run(capsys, "lattice", "--bogus")[0] == 1
    assert run(capsys, "lattice")[0] == 1
    assert run(capsys, "pencil", "--builtin", "triangle", "--blocks", "[[1],[2],[3]]")[0] == 2
    assert run(capsys, "pencil", "--builtin", "triangle", "--blocks", "not json")[0] == 1
    code, _, err = run(capsys, "cover", "--builtin", "triangle", "--point", "1")
    assert code == 2 and err.startswith("error:")


@pytest.mark.parametrize("name", CATALOG)
def test_emit_input_round_trip(name):
    A = builtin(name)
    B = parse_arrangement_text(emit_input(A))
    assert B.conductor == A.conductor
    assert B.lines == A.lines


def test_file_input(tmp_path, capsys):
    path = tmp_path / "tri.txt"
    path.write_text("# three lines\nconductor 3\n1, 0, 0\n0, 1, 0\n1, z, z^2\n")
    code, out, _ = run(capsys, "lattice", str(path), "--format", "json")
    assert code == 0 and json.loads(out)["multiplicity_counts"] == {"2": 3}


def test_parse_errors():
    with pytest.raises(ParseError) as info:
        parse_arrangement_text("conductor 3\n1, 0, 0\n0, 1 +, 0\n")
    assert (info.value.line, info.value.col) == (3, 7)
    with pytest.raises(ParseError) as info:
        parse_arrangement_text("1, 0\n")
    assert info.value.line == 1
    with pytest.raises(ParseError):
        parse_arrangement_text("1, 0, 0\nconductor 3\n")
    with pytest.raises(ParseError):
        parse_arrangement_text("# empty\n")


def test_duplicate_line_reports_file_lines():
    with pytest.raises(DuplicateLine) as info:
        parse_arrangement_text("conductor 1\n1, 0, 0\n\n0, 1, 0\n2, 0, 0\n")
    assert (info.value.i, info.value.j) == (2, 5)


def test_report_text(capsys):
    code, out, _ = run(capsys, "report", "--builtin", "triangle")
    assert code == 0 and out.strip().endswith("verdict: INCONCLUSIVE")


def test_threads_give_identical_output(tmp_path):
    def spectrum(threads):
        env = dict(os.environ, ARRANGETOP_THREADS=str(threads))
        return subprocess.run(
            [sys.executable, "-m", "arrangetop", "spectrum", "--builtin", "central(4)", "--format", "json"],
            env=env, capture_output=True, check=True,
        ).stdout

    assert spectrum(1) == spectrum(2)
