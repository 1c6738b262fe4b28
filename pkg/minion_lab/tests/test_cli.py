from __future__ import annotations

import json
import os

import jsonschema
import pytest

from app import EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from backend.operations import result_schema
from components import CommandEntry, build_parser


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "3:00010111")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "SM"
    code, out, _ = run(capsys, "classify", "and", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["class"] == "McU"


def test_member_and_minors(capsys):
    assert run(capsys, "member", "--class", "McU", "2:0001")[1].strip() == "true"
    assert run(capsys, "member", "--class", "SM", "2:0001")[1].strip() == "false"
    code, out, _ = run(capsys, "minors", "--arity", "2", "maj")
    assert code == EXIT_OK
    assert set(out.split()) == {"2:0011", "2:0101"}


def test_closure_and_extension(capsys):
    code, out, _ = run(capsys, "closure", "--arity", "2", "and")
    assert code == EXIT_OK
    assert set(out.split()) == {"2:0011", "2:0101", "2:0001"}
    code, out, _ = run(capsys, "extend-sm", "--n", "2", "--true", "11", "--false", "00")
    assert code == EXIT_OK
    assert out.strip() == "2:0011"


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--gens", "nimp,const1", "xor")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith("h = ")
    assert lines[-1] == "replay = 2:0110"
    code, out, _ = run(capsys, "bisect", "--gens", "xor", "xor3")
    assert code == EXIT_OK
    assert "is not bisectable" in out


def test_stable_for_and_meet(capsys):
    code, out, _ = run(capsys, "stable-for", "--c1", "Ic", "--c2", "S")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 7
    assert out.splitlines()[0] == "Omega"
    assert run(capsys, "meet", "S", "M")[1].splitlines() == ["meet SM", "join Omega"]


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--class", "Omega_neq", "--clone", "Omega", "--side", "left", "--bound", "2,2")
    assert code == EXIT_OK
    assert out.startswith("left Omega_neq under Omega into Omega_neq: counterexample")
    code, out, _ = run(capsys, "check", "--class", "Refl", "--clone", "S", "--format", "json")
    assert json.loads(out)["kind"] == "holds_at_bound"


def test_small_table_run(capsys):
    code, out, _ = run(capsys, "verify-table", "--bound", "2,2", "--class", "Vak", "--clone", "Ic", "--clone", "Omega")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "ok"
    assert "corollary lists: 38/38 reproduced" in out


def test_lattice_dot(capsys):
    code, out, _ = run(capsys, "lattice", "--format", "dot")
    assert code == EXIT_OK
    assert out.startswith("digraph minion_lattice {")


def test_listings(capsys):
    assert len(run(capsys, "roster")[1].splitlines()) == 93
    assert len(run(capsys, "clones")[1].splitlines()) == 20
    code, out, _ = run(capsys, "operations", "--format", "json")
    assert code == EXIT_OK
    assert len(json.loads(out)["operations"]) == 16


def test_usage_errors(capsys):
    assert run(capsys, "classify", "and", "--format", "dot")[0] == EXIT_USAGE
    assert run(capsys, "member", "2:0001")[0] == EXIT_USAGE
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "nonsense")[0] == EXIT_USAGE


def test_invalid_input(capsys):
    code, _, err = run(capsys, "classify", "2:012")
    assert code == EXIT_INVALID
    assert err.startswith("error: ")
    assert run(capsys, "member", "--class", "Nope", "2:0001")[0] == EXIT_INVALID
    assert run(capsys, "check", "--class", "SM", "--clone", "SM", "--bound", "4,4")[0] == EXIT_INVALID
    assert run(capsys, "stable-for", "--c1", "Ic", "--c2", "Ic")[0] == EXIT_INVALID


def test_max_arity_override_is_scoped(capsys):
    assert run(capsys, "classify", "const0", "--max-arity", "8")[1].splitlines()[0] == "Vak0"
    assert "MINION_MAX_ARITY" not in os.environ


def test_mismatch_exit_code(capsys, monkeypatch):
    entry = CommandEntry("fail", "always reports a mismatch", None, (), lambda args: {}, lambda result, args: "")
    monkeypatch.setattr(CommandEntry, "run", lambda self, args: {"ok": False})
    monkeypatch.setattr("app.build_parser", lambda: build_parser([entry]))
    assert run(capsys, "fail")[0] == EXIT_MISMATCH


def test_json_output_matches_the_shipped_schema(capsys):
    for argv, operation in (
        (("classify", "maj", "--format", "json"), "classify"),
        (("stable-for", "--c1", "Ic", "--c2", "S", "--format", "json"), "stable_for"),
        (("lattice", "--format", "json"), "lattice"),
    ):
        code, out, _ = run(capsys, *argv)
        assert code == EXIT_OK
        jsonschema.validate(json.loads(out), result_schema(operation))
    code, out, _ = run(capsys, "operations", "--format", "json")
    assert all("result" in entry for entry in json.loads(out)["operations"])


def test_html_export_to_a_new_directory(capsys, tmp_path):
    pytest.importorskip("plotly")
    target = tmp_path / "fresh" / "lattice.html"
    code, out, _ = run(capsys, "lattice", "--format", "html", "--output", str(target))
    assert code == EXIT_OK
    assert out.strip() == str(target)
    assert target.is_file()
