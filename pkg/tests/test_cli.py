import json

import pytest

from parray_crystal.cli import main
from parray_crystal.poset import antichain, build_poset, chain, disjoint_union, dump_poset, figure1_poset, poset_q


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, P in {
        "q": poset_q(),
        "fig1": figure1_poset(),
        "chain_point": disjoint_union(chain(3, "x"), antichain(1, "w")),
        "single": antichain(1),
        "nuio": build_poset(["1", "2", "3"], [("1", "3")], {"1": 1, "2": 2, "3": 3}),
    }.items():
        path = tmp_path / f"{name}.json"
        dump_poset(P, path)
        out[name] = str(path)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    out["bad"] = str(bad)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate(files, capsys):
    code, out, _ = run(capsys, "validate", "--poset", files["fig1"])
    assert code == 0 and "(3+1)-free: yes" in out
    code, out, _ = run(capsys, "validate", "--poset", files["chain_point"])
    assert code == 0 and "(3+1)-free: no (chain x1<x2<x3, point w1)" in out
    code, out, _ = run(capsys, "validate", "--poset", files["chain_point"], "--format", "json")
    assert json.loads(out)["three_plus_one_witness"] == ["x1", "x2", "x3", "w1"]


def test_bad_input_exit_2(files, capsys):
    assert run(capsys, "validate", "--poset", files["bad"])[0] == 2
    assert run(capsys, "validate", "--poset", "/nonexistent.json")[0] == 2
    assert run(capsys, "validate")[0] == 2
    assert run(capsys, "expand", "--poset", files["q"], "--rows", "0")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["expand", "--format", "xml"])
    assert info.value.code == 2


def test_expand(files, capsys):
    code, out, _ = run(capsys, "expand", "--poset", files["q"], "--rows", "4")
    assert code == 0
    assert any(line.split(": ", 1)[1].startswith("s[2,2] + s[2,1,1] ") for line in out.splitlines()
               if line.startswith("component"))
    assert "total equals chromatic_sym: yes" in out
    code, out, _ = run(capsys, "expand", "--poset", files["single"])
    assert code == 0 and "s[1] " in out


def test_expand_fig1_totals(files, capsys):
    code, out, _ = run(capsys, "expand", "--poset", files["fig1"], "--rows", "4", "--format", "json")
    assert code == 0 and json.loads(out)["matches_chromatic"] is True


def test_qexpand(files, capsys):
    code, out, err = run(capsys, "qexpand", "--poset", files["q"])
    assert code == 2 and "natural unit interval order" in err
    code, out, _ = run(capsys, "qexpand", "--poset", files["nuio"])
    assert code == 0 and "equals chromatic_qsym: yes" in out


def test_crystal_dot(files, capsys):
    code, out, _ = run(capsys, "crystal-dot", "--poset", files["q"], "--rows", "4",
                       "--array", '{"rows": [["c","a"],["d","b"]]}')
    assert code == 0 and out.startswith("digraph")
    for src, r, tgt in [("c a\\nd b", 2, "c a\\nb\\nd"), ("c a\\nb\\nd", 1, "b\\nc a\\nd")]:
        ids = {}
        for line in out.splitlines():
            if "[label=" in line and "->" not in line:
                ids[line.split('label="')[1].split('"')[0]] = line.split()[0]
        assert f'{ids[src]} -> {ids[tgt]} [label="{r}"' in out
    code, out, _ = run(capsys, "crystal-dot", "--poset", files["q"], "--array", '{"rows": [["a","c"]]}')
    assert code == 2


def test_crystal_dot_all(files, capsys, tmp_path):
    target = tmp_path / "all.dot"
    code, _, _ = run(capsys, "crystal-dot", "--poset", files["q"], "--out", str(target))
    assert code == 0 and target.read_text().count("subgraph cluster_") == 13


def test_tworow(files, capsys):
    code, out, _ = run(capsys, "tworow", "--poset", files["q"], "--tableau", '{"rows": [["c","a"],["d","b"]]}')
    assert code == 0 and "2 not Schur-expandable" in out
    code, out, _ = run(capsys, "tworow", "--poset", files["q"], "--format", "dot")
    assert code == 0 and out.count("gray85") == 20
    code, _, err = run(capsys, "tworow", "--poset", files["q"], "--tableau", '{"rows": [["d","a"],["b"],["c"]]}')
    assert code == 2


def test_verify_all_single_poset_deterministic(files, capsys):
    first = run(capsys, "verify-all", "--poset", files["q"], "--seed", "3", "--format", "json")
    second = run(capsys, "verify-all", "--poset", files["q"], "--seed", "3", "--format", "json")
    assert first[0] == 0 and first == second
    assert json.loads(first[1])["failed"] == 0


def test_verify_all_time_box(files, capsys):
    code, out, _ = run(capsys, "verify-all", "--poset", files["fig1"], "--rows", "4", "--time-limit", "0.05")
    assert code == 0 and "SKIP" in out and "skipped" in out.splitlines()[-1]
