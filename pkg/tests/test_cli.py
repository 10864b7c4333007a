import json
import re

import pytest

from reachlab import build_A_n, build_B_8
from reachlab.core import format_dfa, parse_dfa_file
from reachlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def corpus(tmp_path):
    path = tmp_path / "automata.txt"
    path.write_text("# corpus\n" + format_dfa(build_B_8()) + "\n\n" + format_dfa(build_A_n(10)) + "\n")
    return path


def test_check_b8_text(capsys, corpus):
    code, out, _ = run_cli(capsys, "check", "--file", str(corpus))
    assert code == 0
    assert "completely reachable: yes" in out
    assert "don violations: 1" in out
    assert "{0,1,2,4,5,6}: 17 > 16" in out


def test_check_json_matches_text(capsys):
    _, text, _ = run_cli(capsys, "check", "--builtin", "B8")
    _, js, _ = run_cli(capsys, "check", "--builtin", "B8", "--format", "json")
    report = json.loads(js)
    assert report["completely_reachable"] is True
    assert report["don_violations"] == [{"set": [0, 1, 2, 4, 5, 6], "shortest": 17, "bound": 16}]
    # same numbers once the text-only violation count is dropped
    text = re.sub(r"don violations: \d+", "", text)
    assert sorted(map(int, re.findall(r"\d+", text))) == sorted(map(int, re.findall(r"\d+", js)))


def test_file_index(capsys, corpus):
    _, out, _ = run_cli(capsys, "check", "--file", str(corpus), "--index", "1", "--format", "json")
    assert json.loads(out)["n"] == 10


def test_shortest_word(capsys):
    code, out, _ = run_cli(capsys, "shortest-word", "--builtin", "B8", "--set", "0,1,2,4,5,6", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["length"] == 17 and report["don_bound"] == 16


def test_construct_word(capsys):
    code, out, _ = run_cli(capsys, "construct-word", "--a-map", "1,2,3,1", "--set", "1,2", "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert report["bfs_length"] <= report["length"] <= report["bound"] == 11
    code, _, err = run_cli(capsys, "construct-word", "--builtin", "B8", "--set", "1,2")
    assert code == 1 and "standardized" in err


def test_expand(capsys):
    _, out, _ = run_cli(capsys, "expand", "--a-map", "1,2,3,1", "--set", "1,2", "--format", "json")
    assert json.loads(out)["word"] == "a"


def test_counterexample(capsys):
    code, out, _ = run_cli(capsys, "counterexample", "--n", "10", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["violates"] and report["shortest"] == 22
    code, out, _ = run_cli(capsys, "counterexample", "--n", "10", "--format", "dot")
    assert code == 0 and out.count("->") == 7


def test_export_dot(capsys):
    code, out, _ = run_cli(capsys, "export-dot", "--builtin", "A10", "--letters", "a", "--omit-fixed")
    edges = set(re.findall(r"(\d+) -> (\d+)", out))
    assert code == 0
    assert edges == {("0", "7"), ("7", "1"), ("1", "8"), ("8", "5"), ("5", "6"), ("6", "9"), ("9", "5")}


def test_bounds(capsys):
    _, out, _ = run_cli(capsys, "bounds", "--n", "8", "--s", "6", "--format", "csv")
    assert out.splitlines()[1].startswith("8,6,16,23,")


def test_enumerate(capsys, tmp_path):
    dest = tmp_path / "viol.txt"
    code, out, _ = run_cli(capsys, "enumerate", "--n", "6", "--format", "csv", "--emit-violators", str(dest))
    assert code == 0
    assert out.splitlines() == ["n,mode,candidates,cr,violators", out.splitlines()[1]]
    assert out.splitlines()[1].startswith("6,binary,1800,")
    assert dest.read_text() == ""


@pytest.mark.parametrize(
    "argv, code",
    [
        (["check", "--a-map", "1,2,x"], 2),
        (["check", "--a-map", "1,2,9,1"], 2),
        (["check", "--a-map", ""], 2),
        (["shortest-word", "--builtin", "B8", "--set", "1,9"], 2),
        (["shortest-word", "--builtin", "B8", "--set", "1;2"], 2),
        (["check", "--builtin", "C7"], 2),
        (["check", "--file", "/nonexistent/automata.txt"], 2),
        (["check", "--builtin", "A9"], 1),
        (["counterexample", "--n", "9"], 1),
        (["shortest-word", "--a-map", "2,1,2,3", "--set", "0,2"], 1),
        (["enumerate", "--n", "11"], 1),
        (["enumerate", "--n", "9"], 1),
        (["bounds", "--n", "4", "--s", "5"], 1),
        (["check", "--a-map", "1,2,3,1"], 0),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, _, err = run_cli(capsys, *argv)
    assert got == code
    if code == 2:
        assert re.match(r"error: \d+:\d+: ", err)


def test_malformed_file_position(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("n=4; a=1,2,3,1\n# ok\nn=4; a=1,2,7,1\n")
    code, _, err = run_cli(capsys, "check", "--file", str(path))
    assert code == 2 and err.startswith("error: 3:12:")


def test_round_trip_corpus(corpus):
    dfas = parse_dfa_file(corpus.read_text())
    assert dfas == [build_B_8(), build_A_n(10)]
    assert parse_dfa_file("\n".join(format_dfa(d) for d in dfas)) == dfas
