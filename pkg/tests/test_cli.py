from __future__ import annotations

import json

import pytest

from lusztigcone.cli import main

from conftest import GOLDEN


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_matrices_golden(capsys):
    code, out, _ = run(capsys, "matrices", "--cartan", "A3", "--word", "2,3,2,1,2,3",
                       "--which", "V,T,C,P,X,L")
    assert code == 0
    assert out == (GOLDEN / "a3_232123.txt").read_text()


def test_single_matrix(capsys):
    assert run(capsys, "matrices", "--cartan", "A1", "--word", "1", "--which", "V") == (0, "1\n", "")


def test_matrices_json_and_explicit_cartan(capsys):
    code, out, _ = run(capsys, "matrices", "--cartan-matrix", "2,-1;-1,2", "--word", "1,2,1",
                       "--which", "L", "--format", "json")
    assert code == 0
    assert json.loads(out)["matrices"]["L"] == [[-1, 1, -1], [0, 0, 1], [1, 0, 0]]


def test_bad_word(capsys):
    code, _, err = run(capsys, "matrices", "--cartan", "A3", "--word", "2,3,2,1,2,2")
    assert code == 2
    assert "not a reduced expression for w0" in err


@pytest.mark.parametrize("argv", [
    ["matrices", "--word", "1"],
    ["matrices", "--cartan", "A1", "--cartan-matrix", "2", "--word", "1"],
    ["matrices", "--cartan", "Q3", "--word", "1"],
    ["matrices", "--cartan", "A2", "--word", "1,2,1", "--which", "Z"],
    ["verify", "--cartan", "A2"],
    ["verify", "--cartan", "A2", "--all", "--checks", "nope"],
    ["string-lowest", "--cartan", "A2", "--word", "1,2,1", "--weight", "1,-1"],
    ["trop", "eval", "--vars", "x", "--expr", "x-1", "--point", "1"],
    ["member", "--cartan", "A2", "--word", "1,2,1", "--point", "1,2"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_verify_a3_all(capsys):
    code, out, _ = run(capsys, "verify", "--cartan", "A3", "--all", "--box", "3", "--no-matrices")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 16
    assert all(json.loads(line)["pass"] for line in lines)


def test_verify_single_and_text(capsys):
    code, out, _ = run(capsys, "verify", "--cartan", "A1", "--word", "1")
    assert code == 0 and json.loads(out)["pass"]
    code, out, _ = run(capsys, "verify", "--cartan", "B2", "--all", "--format", "text")
    assert code == 0
    assert out.splitlines()[-1] == "2/2 words passed"


def test_verify_output_is_deterministic(capsys):
    argv = ["verify", "--cartan", "B3", "--sample", "4", "--seed", "9", "--checks",
            "LX_identity,ST_convention"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv, "--jobs", "2")
    assert first == second


def test_member(capsys):
    code, out, _ = run(capsys, "member", "--cartan", "A2", "--word", "1,2,1", "--point", "1,0,0")
    assert code == 0 and out == "definition: outside\nL: outside\n"
    _, out, _ = run(capsys, "member", "--cartan", "A2", "--word", "1,2,1", "--point", "0,0,0")
    assert out == "definition: inside\nL: inside\ncoefficients: 0,0,0\n"
    # fifth column of the printed X
    _, out, _ = run(capsys, "member", "--cartan", "A3", "--word", "2,3,2,1,2,3",
                    "--point", "1,1,0,1,1,0", "--format", "json")
    assert json.loads(out)["coefficients"] == [0, 0, 0, 0, 1, 0]


def test_words(capsys):
    assert run(capsys, "words", "--cartan", "A2", "--list") == (0, "1,2,1\n2,1,2\n", "")
    assert run(capsys, "words", "--cartan", "B3", "--count")[1] == "42\n"


def test_trop(capsys):
    assert run(capsys, "trop", "eval", "--vars", "x,y", "--expr", "(x^3+y^3)/(x+y)",
               "--point", "2,5")[1] == "4\n"
    out = run(capsys, "trop", "form", "--vars", "x,y", "--expr", "(x^3+y^3)/(x+y)")[1]
    assert json.loads(out) == {"num": [[0, 3], [3, 0]], "den": [[0, 1], [1, 0]]}


def test_string_lowest(capsys):
    assert run(capsys, "string-lowest", "--cartan", "A2", "--word", "1,2,1",
               "--weight", "1,0")[1] == "1,1,0\n"
