import io
import json
import subprocess
import sys

import pytest

from tripants.cli import run
from tripants.triarc import parse_move_label, parse_tri_arc


def call(*argv):
    out = io.StringIO()
    status = run(list(argv), out)
    return status, out.getvalue()


def test_neighbors_prints_nine_lines():
    status, text = call("neighbors", "a,b,ab")
    lines = text.splitlines()
    assert status == 0 and len(lines) == 9
    for line in lines:
        label, triarc = line.split("\t")
        parse_move_label(label)
        assert str(parse_tri_arc(triarc)) == triarc
    assert "big:ab\ta,b,AB" in lines


def test_project():
    assert call("project", "a,b,ab") == (0, "inf,0/1,1/1\n")


def test_flip():
    assert call("flip", "--arc", "ab", "--kind", "big", "a,b,ab") == (0, "a,b,AB\n")
    # the arc may be given in either orientation
    assert call("flip", "--arc", "BA", "--kind", "big", "a,b,ab") == (0, "a,b,AB\n")


def test_push():
    status, text = call("push", "a", "a,b,ab")
    assert status == 0
    assert parse_tri_arc(text.strip()) == parse_tri_arc("a,abA,aabA")


def test_distance():
    assert call("distance", "--max", "2", "a,b,ab", "a,b,AB") == (0, "1\n")
    assert call("distance", "--lower-bound", "a,b,ab", "a,b,AB") == (0, "0\n")


def test_distance_not_found(capsys):
    status, text = call("distance", "--max", "1", "a,b,ab", "a,abA,aabA")
    assert status == 1 and text == ""
    assert "NotFound" in capsys.readouterr().err


def test_farey_distance():
    assert call("farey-distance", "inf,0/1,1/1", "1/3,2/5,1/2") == (0, "3\n")
    assert call("farey-distance", "--", "-1/1,0/1,inf", "0/1,1/1,inf") == (0, "1\n")


def test_explore_formats():
    status, dot = call("explore", "--radius", "1", "a,b,ab")
    assert status == 0 and dot.startswith("graph tripants {")
    status, jl = call("explore", "--radius", "1", "--format", "jsonl", "--filter", "big", "a,b,ab")
    records = [json.loads(l) for l in jl.splitlines()]
    assert len([r for r in records if "vertex" in r]) == 4
    assert {r["kind"] for r in records if "kind" in r} == {"big"}


def test_path_output_replays():
    status, text = call("path", "a,b,ab", "a,abA,aabA")
    lines = text.splitlines()
    assert status == 0 and lines[0] == "length\t2"
    assert lines[-1].split("\t")[1] == "a,abA,aabA"


def test_verify_degree():
    status, text = call("verify", "--suite", "degree", "--radius", "3")
    assert status == 0
    assert text.splitlines()[-1].startswith("SUMMARY")
    assert all(l.startswith(("PASS", "SUMMARY")) for l in text.splitlines())


@pytest.mark.parametrize(
    "argv, status, err",
    [
        (["project", "a,b,xy"], 2, "ParseError"),
        (["project", "a,b,aB"], 0, ""),
        (["project", "a,a,b"], 1, "NotDistinct"),
        (["project", "a,b,aabb"], 1, "NoDecomposition"),
        (["flip", "--arc", "ba", "--kind", "big", "a,b,ab"], 1, "ArcNotInTriple"),
        (["farey-distance", "inf,0/1,2/1", "inf,0/1,1/1"], 1, "NotATriangle"),
        (["explore", "--radius", "9", "a,b,ab"], 1, "RadiusCap"),
        (["frobnicate"], 2, ""),
        (["flip", "--kind", "huge", "--arc", "a", "a,b,ab"], 2, ""),
    ],
)
def test_exit_codes(argv, status, err, capsys):
    assert call(*argv)[0] == status
    assert err in capsys.readouterr().err


def test_every_printed_triarc_reparses():
    _, text = call("explore", "--radius", "2", "--format", "jsonl", "a,b,ab")
    for line in text.splitlines():
        r = json.loads(line)
        for key in ("vertex", "from", "to"):
            if key in r:
                assert str(parse_tri_arc(r[key])) == r[key]


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "tripants", "explore", "--radius", "2", "a,b,ab"]
    one = subprocess.run(cmd, capture_output=True, check=True).stdout
    two = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert one == two and one.count(b"--") > 0
