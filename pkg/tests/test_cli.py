"""Golden-file tests for every CLI subcommand.

Regenerate the golden outputs with:  GOLDEN_UPDATE=1 pytest tests/test_cli.py
"""

import json
import os
import pathlib

import pytest

from cayleykit.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"
DATA = pathlib.Path(__file__).parent / "data"

CASES = {
    "enumerate.txt": ["enumerate", "<r,s | r^5=s^2=1, r^3s=sr, srs=r^2>"],
    "enumerate.json": [
        "enumerate",
        "<r,s | r^5=s^2=1, r^3s=sr, srs=r^2>",
        "--json",
    ],
    "identify_presentation.txt": [
        "identify",
        "--presentation",
        "<r,f | r^6=f^2=1, rfr=f>",
    ],
    "identify_table.txt": ["identify", "--table", str(DATA / "latin_cyclic5.txt")],
    "identify_graph.txt": ["identify", "--graph", str(DATA / "petersen_graph.json")],
    "check_graph.txt": ["check-graph", str(DATA / "petersen_graph.json")],
    "check_graph_full.json": [
        "check-graph",
        str(DATA / "petersen_graph.json"),
        "--full-order",
        "--json",
    ],
    "check_table.txt": ["check-table", str(DATA / "latin_nonassoc5.txt")],
    "check_table.json": ["check-table", str(DATA / "latin_nonassoc5.txt"), "--json"],
    "make.txt": ["make", "dihedral", "4", "--table"],
    "make_pauli.json": ["make", "pauli", "1", "--json"],
    "quotient.txt": [
        "quotient",
        "--presentation",
        "<r,s | r^8=1, s^2=r^4, s^-1 r s=r^-1>",
        "--normal",
        "r^4",
        "--table",
    ],
    "fixture_emit.txt": ["fixture", "petersen"],
    "fixture_analyze.txt": ["fixture", "petersen", "--analyze"],
    "fixture_analyze_all.txt": ["fixture", "--analyze-all"],
}


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out


def run_cli_err(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.err


def canonical(name, text):
    if not name.endswith(".json"):
        return text
    document = json.loads(text)
    document.pop("timing_ms", None)
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys):
    code, out = run_cli(CASES[name], capsys)
    assert code == 0
    got = canonical(name, out)
    path = GOLDEN / name
    if os.environ.get("GOLDEN_UPDATE"):
        path.write_text(got)
    assert path.exists(), f"golden file {name} missing; run with GOLDEN_UPDATE=1"
    assert got == path.read_text()


def test_json_output_is_deterministic(capsys):
    args = ["fixture", "mirror16", "--analyze", "--json"]
    _, first = run_cli(args, capsys)
    _, second = run_cli(args, capsys)
    strip = lambda text: canonical("x.json", text)
    assert strip(first) == strip(second)


def test_usage_error_exit_code(capsys):
    code, err = run_cli_err(["enumerate", "<r | r"], capsys)
    assert code == 2
    assert "error:" in err


def test_unknown_family_exit_code(capsys):
    code, _ = run_cli(["make", "heisenberg", "3"], capsys)
    assert code == 2


def test_cap_exceeded_exit_code(capsys):
    code, err = run_cli_err(
        ["enumerate", "<r,f | r^4=f^2=1, rfr=f>", "--max-cosets", "4"], capsys
    )
    assert code == 3
    assert "cap exceeded" in err


def test_cap_env_override(capsys, monkeypatch):
    monkeypatch.setenv("CAYLEY_MAX_COSETS", "4")
    code, _ = run_cli(["enumerate", "<r,f | r^4=f^2=1, rfr=f>"], capsys)
    assert code == 3
    monkeypatch.setenv("CAYLEY_MAX_COSETS", "64")
    code, _ = run_cli(["enumerate", "<r,f | r^4=f^2=1, rfr=f>"], capsys)
    assert code == 0


def test_expect_assertion(capsys):
    code, _ = run_cli(["make", "quaternion", "16", "--expect", "Q_16"], capsys)
    assert code == 0
    code, _ = run_cli(["make", "quaternion", "16", "--expect", "Q_32"], capsys)
    assert code == 4
    code, _ = run_cli(
        ["fixture", "twist32_k3", "--analyze", "--expect", "SD_8"], capsys
    )
    assert code == 0


def test_dot_output_written(tmp_path, capsys):
    out = tmp_path / "graph.dot"
    code, _ = run_cli(["fixture", "petersen", "--dot", str(out)], capsys)
    assert code == 0
    text = out.read_text()
    assert text.startswith("digraph G {")
    assert "dir=none" in text


def test_make_dot_output(tmp_path, capsys):
    out = tmp_path / "d4.dot"
    code, _ = run_cli(["make", "dihedral", "4", "--dot", str(out)], capsys)
    assert code == 0
    assert len([l for l in out.read_text().splitlines() if "->" in l]) == 12


def test_identify_rejects_nongroup_table(capsys):
    code, out = run_cli(["identify", "--table", str(DATA / "latin_nonassoc5.txt")], capsys)
    assert code == 0
    assert "not a group" in out


def test_fixture_requires_name_or_all(capsys):
    code, _ = run_cli(["fixture"], capsys)
    assert code == 2


def test_quotient_rejects_bad_word(capsys):
    code, _ = run_cli(
        ["quotient", "--presentation", "<r | r^6>", "--normal", "q^2"], capsys
    )
    assert code == 2
