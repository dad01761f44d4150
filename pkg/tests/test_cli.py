import json
import subprocess
import sys

import pytest

from matchfactory.cli import main
from matchfactory.constructions import build_H
from matchfactory.io import read_graph, write_graph
from matchfactory.petersen import petersen


@pytest.fixture(scope="module")
def h1_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("g") / "h1.json"
    write_graph(build_H(1).graph, path)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_H(tmp_path, capsys):
    code, out, _ = run(capsys, "construct", "H", "--k", "1", "--out", str(tmp_path / "h"), "--format", "dot")
    assert code == 0
    assert read_graph(tmp_path / "h.json").n == 60
    prov = json.loads((tmp_path / "h.provenance.json").read_text())
    assert prov["family"] == "H" and len(prov["blocks"]) == 4
    assert (tmp_path / "h.dot").read_text().startswith("graph G {")


def test_construct_S_from_named_base(tmp_path, capsys):
    code, out, _ = run(capsys, "construct", "S", "--k", "1", "--base", "K4", "--out", str(tmp_path / "s"),
                       "--format", "json")
    assert code == 0 and json.loads(out)["n"] == 126


def test_construct_S_from_file(tmp_path, capsys):
    base = tmp_path / "petersen.json"
    write_graph(petersen()[0], base)
    code, out, _ = run(capsys, "construct", "S", "--k", "1", "--base", str(base), "--out", str(tmp_path / "s"))
    assert code == 0 and read_graph(tmp_path / "s.json").n == 19 * 15 + 30


@pytest.mark.parametrize("argv", [
    ["construct", "P", "--k", "0", "--out", "x"],
    ["construct", "S", "--k", "1", "--out", "x"],
    ["construct", "S", "--k", "1", "--base", "no-such-file", "--out", "x"],
    ["certify", "3"],
    ["verify", "no-such-file"],
    ["construct", "H"],
])
def test_input_errors_exit_3(argv, tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, _, err = run(capsys, *argv)
    assert code == 3 and "error" in err


def test_usage_errors_exit_3(capsys):
    assert main(["construct", "X", "--out", "x"]) == 3
    assert main(["certify", "four"]) == 3
    assert main(["--help"]) == 0


def test_unparseable_graph_exit_3(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "edges": [[0, 0]]}')
    assert run(capsys, "verify", str(bad))[0] == 3


def test_verify_H1_all_checks(h1_file, capsys):
    code, out, _ = run(capsys, "verify", h1_file, "--m", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert all(c["verdict"] == "pass" for c in doc["checks"])
    assert doc["checks"][-1]["computed"] == "no"
    assert doc["search"]["verdict"] == "no"


def test_verify_is_reproducible(h1_file, capsys):
    a = run(capsys, "verify", h1_file, "--m", "2", "--format", "json")[1]
    b = run(capsys, "verify", h1_file, "--m", "2", "--format", "json")[1]
    assert a == b


def test_verify_petersen_rgraph(capsys):
    code, out, _ = run(capsys, "verify", "petersen", "--checks", "rgraph")
    assert code == 0 and "pass\tr-graph\tr-graph\t3\t3" in out


def test_verify_bridged_cubic_fails(tmp_path, capsys):
    block = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 4)]
    edges = block + [(a + 5, b + 5) for a, b in block] + [(4, 9)]
    path = tmp_path / "bridged.json"
    path.write_text(json.dumps({"n": 10, "edges": edges}))
    assert run(capsys, "verify", str(path), "--checks", "rgraph")[0] == 1


def test_verify_expectations(h1_file, capsys):
    assert run(capsys, "verify", h1_file, "--checks", "order,regular", "--order", "60", "--r", "4")[0] == 0
    assert run(capsys, "verify", h1_file, "--checks", "order", "--order", "61")[0] == 1
    assert run(capsys, "verify", h1_file, "--checks", "bogus")[0] == 3
    assert run(capsys, "verify", h1_file, "--checks", "disjoint-pm")[0] == 3


def test_verify_unknown_exit_2(h1_file, capsys):
    code, out, _ = run(capsys, "verify", h1_file, "--checks", "disjoint-pm", "--m", "2", "--budget-nodes", "3")
    assert code == 2 and out.count("unknown") >= 1


def test_certify_r4(capsys):
    code, out, _ = run(capsys, "certify", "4", "--format", "json", "--sat")
    doc = json.loads(out)
    assert code == 0
    verdicts = {c["anchor"]: c for c in doc["checks"]}
    assert verdicts["no-disjoint-perfect-matchings"]["computed"] == "no"
    assert verdicts["cnf-cross-check"]["computed"] == "unsat"
    assert doc["timing"] is None


def test_certify_r5_with_small_budget(capsys):
    code, out, _ = run(capsys, "certify", "5", "--budget-nodes", "1000", "--format", "json")
    doc = json.loads(out)
    assert code == 2
    by_anchor = {c["anchor"]: c for c in doc["checks"]}
    assert by_anchor["edge-connectivity"]["computed"] == 4
    assert by_anchor["r-graph"]["computed"] == 5
    assert by_anchor["variant-identity"]["verdict"] == "pass"
    assert by_anchor["no-disjoint-perfect-matchings"]["verdict"] == "unknown"
    assert doc["notes"]


@pytest.mark.parametrize("suite", ["petersen", "lemma3", "phi"])
def test_oracle_suites(suite, capsys):
    code, out, _ = run(capsys, "oracle", suite)
    assert code == 0 and "fail" not in out


def test_extend_auto(h1_file, tmp_path, capsys):
    out_path = tmp_path / "h1s.json"
    code, out, _ = run(capsys, "extend", h1_file, "--out", str(out_path), "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert {c["anchor"]: c["computed"] for c in doc["checks"]}["cover-size"] == 35
    assert read_graph(out_path).n == 270
    assert any("70(r-1)" in note for note in doc["notes"])


def test_extend_non_cover(h1_file, tmp_path, capsys):
    cover = tmp_path / "cover.json"
    cover.write_text("[0, 1]")
    assert run(capsys, "extend", h1_file, "--cover", str(cover))[0] == 3


def test_extend_empty_cover_keeps_simple_graph(tmp_path, capsys):
    cover = tmp_path / "cover.json"
    cover.write_text('{"cover": []}')
    out_path = tmp_path / "p.json"
    assert run(capsys, "extend", "petersen", "--cover", str(cover), "--out", str(out_path))[0] == 0
    assert read_graph(out_path) == petersen()[0]


def test_figures_are_written(h1_file, tmp_path, capsys):
    figs = tmp_path / "figs"
    assert run(capsys, "verify", h1_file, "--checks", "rgraph", "--figures", str(figs))[0] == 0
    assert run(capsys, "construct", "P", "--k", "1", "--out", str(tmp_path / "p"), "--figures", str(figs))[0] == 0
    names = sorted(p.name for p in figs.iterdir())
    assert names == ["p.png", "verify-checks.png", "verify-cuts.png"]
    assert all((figs / n).read_bytes()[:4] == b"\x89PNG" for n in names)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "matchfactory", "oracle", "petersen", "--format", "json"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["schema"] == "matchfactory.report/1"
