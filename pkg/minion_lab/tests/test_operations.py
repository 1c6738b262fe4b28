from __future__ import annotations

import json

import jsonschema
import pytest

from backend.errors import ArityError, HypothesisError, ParseError, SchemaError, UnknownNameError
from backend.operations import (
    execute_operation,
    get_operation_schemas,
    list_operations,
    result_schema,
    run_operation,
    validate_result,
)


NAMES = [
    "classify",
    "closure",
    "member",
    "minors",
    "bisect",
    "decompose",
    "extend_sm",
    "lattice",
    "meet",
    "check_stability",
    "verify_roster",
    "verify_table",
    "verify_lemmas",
    "stable_for",
    "roster",
    "clones",
]


def test_schemas_cover_every_operation():
    schemas = get_operation_schemas()
    assert [schema["name"] for schema in schemas] == NAMES
    assert [op.name for op in list_operations()] == NAMES
    for schema in schemas:
        assert schema["parameters"]["type"] == "object"
        assert schema["description"]
        jsonschema.Draft202012Validator.check_schema(schema["result"])


def test_classify_and_member():
    assert run_operation("classify", {"functions": ["maj"]})["class"] == "SM"
    assert run_operation("classify", {"functions": "3:00010111"})["class"] == "SM"
    assert run_operation("classify")["class"] == "Empty"
    assert run_operation("member", {"class": "McU", "function": "2:0001"}) == {
        "class": "McU",
        "function": "2:0001",
        "member": True,
    }
    assert run_operation("member", {"class": "SM", "function": "and"})["member"] is False


def test_closure_and_minors():
    result = run_operation("closure", {"functions": ["and"], "arity": 2})
    assert result["count"] == 3
    assert set(result["members"]) == {"2:0011", "2:0101", "2:0001"}
    stable = run_operation("closure", {"functions": ["not"], "arity": 1, "c2": "S"})
    assert set(stable["members"]) == {"1:01", "1:10"}
    minors = run_operation("minors", {"function": "maj", "arity": 2})
    assert minors["function"] == "3:00010111"
    assert set(minors["minors"]) == {"2:0011", "2:0101"}
    with pytest.raises(ParseError, match="arity must be an integer"):
        run_operation("minors", {"function": "maj", "arity": "two"})


def test_bisect_and_decompose():
    report = run_operation("bisect", {"target": "and", "generators": ["and"]})
    assert report["bisectable"] is True
    decomposition = run_operation("decompose", {"target": "xor", "generators": ["nimp", "const1"]})
    assert decomposition["replay"] == "2:0110"
    assert decomposition["target"] == "2:0110"
    assert len(decomposition["phis"]) == 4


def test_extend_sm():
    result = run_operation("extend_sm", {"n": 2, "true": ["11"], "false": ["00"]})
    assert result == {"points": {"n": 2, "true": ["11"], "false": ["00"]}, "function": "2:0011"}
    with pytest.raises(HypothesisError):
        run_operation("extend_sm", {"n": 2, "true": ["10", "01"]})
    with pytest.raises(ArityError):
        run_operation("extend_sm", {"n": 3, "true": ["10"]})


def test_meet_and_stable_for():
    assert run_operation("meet", {"a": "S", "b": "M"}) == {"a": "S", "b": "M", "meet": "SM", "join": "Omega"}
    result = run_operation("stable_for", {"c1": "Ic", "c2": "S"})
    assert result["count"] == 7
    assert result["classes"][0] == "Omega"


def test_check_stability():
    result = run_operation(
        "check_stability", {"class": "Omega_neq", "clone": "Omega", "side": "left", "bound": "2,2"}
    )
    assert result["kind"] == "counterexample"
    assert result["replays"] is True
    assert result["witness"]["form"] == "compose"
    assert run_operation("check_stability", {"class": "Refl", "clone": "S"})["kind"] == "holds_at_bound"
    with pytest.raises(ParseError, match="side"):
        run_operation("check_stability", {"class": "Refl", "clone": "S", "side": "up"})


def test_listings():
    roster = run_operation("roster")
    assert roster["count"] == 93
    assert roster["classes"][0]["name"] == "Omega"
    clones = run_operation("clones")
    assert len(clones["clones"]) == 20


def test_small_table_run():
    result = run_operation("verify_table", {"bound": "2,2", "classes": ["Vak"], "clones": ["Ic", "Omega"]})
    assert result["ok"] is True
    assert len(result["corollaries"]) == 38


def test_errors():
    with pytest.raises(UnknownNameError, match="Unknown operation: nope"):
        run_operation("nope", {})
    with pytest.raises(UnknownNameError):
        execute_operation("nope", "{}")
    with pytest.raises(ParseError, match="class is required"):
        run_operation("member", {"function": "2:0001"})
    with pytest.raises(ParseError, match="c2 is required"):
        run_operation("stable_for", {"c1": "Ic", "c2": ""})
    with pytest.raises(ParseError, match="Invalid arguments for member"):
        execute_operation("member", "{not json")


def test_execute_returns_json():
    text = execute_operation("member", json.dumps({"class": "SM", "function": "maj"}))
    assert json.loads(text)["member"] is True
    assert json.loads(execute_operation("roster", None))["count"] == 93


PAYLOADS = [
    ("classify", {"functions": ["and", "xor"]}),
    ("classify", {}),
    ("closure", {"functions": ["not"], "arity": 1, "c2": "S"}),
    ("member", {"class": "SM", "function": "maj"}),
    ("minors", {"function": "xor3", "arity": 2}),
    ("bisect", {"target": "xor3", "generators": ["xor"]}),
    ("bisect", {"target": "and", "generators": ["and"]}),
    ("decompose", {"target": "or", "generators": ["maj", "const1"]}),
    ("extend_sm", {"n": 3, "true": ["011"]}),
    ("lattice", {"dot": True}),
    ("meet", {"a": "Vak0", "b": "Vak1"}),
    ("check_stability", {"class": "Omega_neq", "clone": "Omega", "side": "left", "bound": "2,2"}),
    ("check_stability", {"class": "Refl", "clone": "S", "bound": "2,2"}),
    ("verify_roster", {"m_max": 2}),
    ("verify_table", {"bound": "2,2", "classes": ["Refl"], "clones": ["S", "Omega"]}),
    pytest.param("verify_lemmas", {"bound": "3,3"}, marks=pytest.mark.slow),
    ("stable_for", {"c1": "Omega", "c2": "Omega"}),
    ("roster", {}),
    ("clones", {}),
]


@pytest.mark.parametrize("name, payload", PAYLOADS)
def test_results_match_the_shipped_schema(name, payload):
    result = run_operation(name, payload)
    assert validate_result(name, result) is result
    jsonschema.validate(json.loads(execute_operation(name, json.dumps(payload))), result_schema(name))


def test_every_operation_has_a_payload_checked_against_its_schema():
    checked = {param.values[0] if hasattr(param, "values") else param[0] for param in PAYLOADS}
    assert checked == set(NAMES)


def test_malformed_results_are_rejected():
    result = run_operation("meet", {"a": "S", "b": "M"})
    with pytest.raises(SchemaError, match="meet result does not match its schema at <root>"):
        validate_result("meet", {key: value for key, value in result.items() if key != "join"})
    with pytest.raises(SchemaError, match="members/0"):
        validate_result("closure", {"arity": 2, "count": 1, "members": ["2:012"]})
    with pytest.raises(UnknownNameError, match="No output schema"):
        result_schema("nope")
