import json

import pytest
from click.testing import CliRunner

from brkz.cli import main
from brkz.koszul import validate_report


@pytest.fixture
def run():
    runner = CliRunner()
    return lambda *args: runner.invoke(main, list(args))


def test_ext_example(run):
    r = run("ext", "--operad", "k-id", "--flavor", "even", "--max-arity", "6")
    assert r.exit_code == 0
    doc = json.loads(r.output)
    validate_report(doc)
    deg0 = {row["arity"]: row["decomposition"] for row in doc["rows"] if row["degree"] == 0}
    assert deg0[2] == {"(2)": 1} and deg0[4] == {} and deg0[6] == {"(3,3)": 1}


def test_ext_com_ge3_is_schema_valid(run):
    r = run("ext", "--operad", "com-ge3", "--max-arity", "6")
    assert r.exit_code == 0
    validate_report(json.loads(r.output))


def test_tor_all_zero(run):
    r = run("tor", "--operad", "k-id", "--flavor", "even", "--legs", "2")
    doc = json.loads(r.output)
    assert r.exit_code == 0 and all(row["homology_dim"] == 0 for row in doc["rows"])


def test_tsv_mirror(run):
    r = run("ext", "--max-arity", "4", "--format", "tsv")
    lines = r.output.splitlines()
    assert lines[0].split("\t")[:4] == ["degree", "arity", "chain_dim", "homology_dim"]
    assert len(lines) == 1 + 6


def test_exit_codes(run, tmp_path):
    assert run("ext", "--max-arity", "12").exit_code == 4
    assert run("ext", "--max-arity", "16", "--allow-large").exit_code == 4
    assert run("ext", "--operad", "no-such-operad").exit_code == 2
    assert run("ce-compare", "--form", "symmetric").exit_code == 2
    assert run("ce-compare", "--operad", "com-ge3").exit_code == 2
    assert run("ext", "--flavor", "sideways").exit_code == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "Operad", "family": "algebra", "name": "broken",
                               "mult": [[["0", "1"], ["0", "0"]], [["0", "0"], ["1", "0"]]],
                               "sigma": [["1", "0"], ["0", "1"]]}))
    r = run("ext", "--operad", str(bad))
    assert r.exit_code == 2 and "triple" in r.output


def test_reports_are_deterministic(run, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("ext", "--max-arity", "6", "-o", str(a))
    run("ext", "--max-arity", "6", "--jobs", "2", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_other_commands(run, tmp_path):
    r = run("nontorsion", "--ell", "2", "--d-max", "2")
    assert r.exit_code == 0 and json.loads(r.output)["checks"]["nonzero"]
    r = run("plethysm", "--t", "3", "--twist", "(-;+)")
    assert r.exit_code == 0 and json.loads(r.output)["checks"]["equals_even_columns"]
    r = run("ce-compare", "--operad", "dual")
    assert r.exit_code == 0 and json.loads(r.output)["checks"]["match"]
    g = tmp_path / "g.json"
    r = run("hairy", "--operad", "com-ge3", "--legs", "1", "--max-x", "7", "--graphs-out", str(g))
    assert r.exit_code == 0 and json.loads(g.read_text())
    assert run("koszul-check", "--max-size", "4").exit_code == 0


def test_verify_quick(run):
    r = run("verify", "--max", "4")
    assert r.exit_code == 0
    assert r.output.count("PASS") == 7
