import json
from fractions import Fraction

import pytest

from delaycode import io
from delaycode.cli import BAD_INPUT, FAIL, OK, main
from delaycode.codetuple import markov_analyze, uniform
from delaycode.errors import FormatError
from delaycode.rct import ExpandedIndex, expand_minimal, validate
from delaycode.samples import (FULL, all_empty, mirror_pair, sample_codetuple,
                               sample_rct)

F1 = sample_codetuple()
R3 = sample_rct()
MU4 = uniform("abcd")


@pytest.fixture
def files(tmp_path):
    paths = {
        "ct": tmp_path / "codetuple.json",
        "rct": tmp_path / "rct.json",
        "mirror": tmp_path / "mirror.json",
        "empty": tmp_path / "all_empty.json",
        "payload": tmp_path / "payload.txt",
    }
    io.dump_json(io.codetuple_to_json(F1, MU4), paths["ct"])
    io.dump_json(io.rct_to_json(R3, MU4), paths["rct"])
    io.dump_json(io.codetuple_to_json(mirror_pair()), paths["mirror"])
    io.dump_json(io.codetuple_to_json(all_empty()), paths["empty"])
    paths["payload"].write_text("acdb\n")
    return paths


def test_fraction_forms():
    assert io.parse_fraction([1, 4]) == io.parse_fraction("1/4") == Fraction(1, 4)
    assert io.parse_fraction(1) == 1
    for bad in [0.25, True, "0.25", [1, 0], "x/2", [1, 2, 3]]:
        with pytest.raises(FormatError):
            io.parse_fraction(bad)


def test_mu_forms():
    assert io.parse_mu("uniform", "ab") == io.parse_mu([[1, 2], "1/2"], "ab")
    with pytest.raises(FormatError):
        io.parse_mu({"a": "1/2", "b": "1/3"}, "ab")
    with pytest.raises(FormatError):
        io.parse_mu(["1/2"], "ab")


def test_codetuple_roundtrip():
    F, mu = io.codetuple_from_json(json.loads(io.dump_json(io.codetuple_to_json(F1, MU4))))
    assert F == F1 and mu == MU4


def test_rct_roundtrip():
    R, mu = io.rct_from_json(io.rct_to_json(R3))
    assert R == R3 and mu is None


def test_expanded_ids_become_labels():
    G = expand_minimal(R3, ExpandedIndex(FULL, io.parse_seed("{00,01,10,11}|000", 2).phi))
    doc = io.codetuple_to_json(G)
    assert doc["tables"][0]["id"] == "{00,01,10,11}:000"
    G2, _ = io.codetuple_from_json(doc)
    assert markov_analyze(G2, MU4).L == markov_analyze(G, MU4).L


def test_format_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"k": 2,\n "alphabet": [}')
    with pytest.raises(FormatError) as e:
        io.load_json(bad)
    assert ":2:" in str(e.value)
    with pytest.raises(FormatError):
        io.codetuple_from_json({"k": 2, "alphabet": ["a"]})
    with pytest.raises(FormatError):
        io.rct_from_json({"k": 1, "alphabet": ["a"], "tables": [{"A": ["0"], "f": {"a": "0"}, "tau": {"a": "0"}}]})


def test_seed_roundtrip():
    s = io.parse_seed("{00,10}|101", 2)
    assert io.format_seed(s) == "{00,10}|101"
    assert io.parse_seed("{0}", 1).phi == io.parse_seed("{0}|0", 1).phi


def test_cli_orbits(capsys):
    assert main(["orbits", "4"]) == OK
    assert capsys.readouterr().out.strip().endswith("231")
    assert main(["orbits", "3", "--mode", "verify"]) == OK
    assert main(["orbits", "2", "--mode", "enumerate"]) == OK
    assert "{00,01}" in capsys.readouterr().out


def test_cli_validate(files):
    assert main(["validate", str(files["ct"])]) == OK
    assert main(["validate", str(files["rct"])]) == OK
    assert main(["validate", str(files["empty"])]) == FAIL


def test_cli_analyze(files, capsys):
    assert main(["analyze", str(files["ct"]), "--potentials"]) == OK
    assert "85/24" in capsys.readouterr().out
    assert main(["analyze", str(files["rct"]), "--mu", '{"a": "1/4", "b": "1/4", "c": "1/4", "d": "1/4"}']) == OK
    assert "9/4" in capsys.readouterr().out
    assert main(["analyze", str(files["ct"]), "--mu", '{"a": 0.25}']) == BAD_INPUT


def test_cli_reduce_expand(files, tmp_path, capsys):
    out, trace = tmp_path / "r.json", tmp_path / "t.json"
    assert main(["reduce", str(files["mirror"]), "-o", str(out), "--trace", str(trace)]) == OK
    R, _ = io.rct_from_json(io.load_json(out))
    assert len(R.domain) == 1
    assert validate(R, uniform("abc")).L == Fraction(5, 3)
    assert [s["kind"] for s in io.load_json(trace)] == ["relabel", "merge", "finalize"]
    g = tmp_path / "g.json"
    assert main(["expand", str(files["rct"]), "--seed", "{00,01,10,11}|000", "-o", str(g)]) == OK
    G, _ = io.codetuple_from_json(io.load_json(g))
    assert len(G) == 7


def test_cli_encode_decode(files, tmp_path, capsys):
    stream = tmp_path / "s.txt"
    assert main(["encode", str(files["rct"]), str(files["payload"]), "--seed", "{00,01,10,11}|000",
                 "-o", str(stream)]) == OK
    assert stream.read_text().splitlines() == ["k=2 start={00,01,10,11}|000", "1011110100"]
    assert main(["decode", str(files["rct"]), str(stream)]) == OK
    assert capsys.readouterr().out.strip() == "acdb"
    stream.write_text("k=2 start={00,01,10,11}|000\n100\n")
    assert main(["decode", str(files["rct"]), str(stream)]) == FAIL
    stream.write_text("garbage\n")
    assert main(["decode", str(files["rct"]), str(stream)]) == BAD_INPUT


def test_cli_micro_search(capsys):
    assert main(["micro-search", "--mu", "[[1,2],[1,4],[1,4]]"]) == OK
    assert "match: yes" in capsys.readouterr().out
    assert main(["micro-search", "--mu", "[0.5, 0.5]"]) == BAD_INPUT
    assert main(["micro-search", "--mu", "[[1,2],[1,2]]", "--k", "2"]) == FAIL


def test_cli_bad_paths(tmp_path):
    assert main(["validate", str(tmp_path / "missing.json")]) == BAD_INPUT
    assert main(["nonsense"]) == BAD_INPUT


def test_cli_selftest(capsys):
    assert main(["selftest"]) == OK
