"""Registry of named library operations shared by the command line and scripts."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable
import json

import jsonschema

from .classify import PointSets, classify_functions, extend_sm, is_bisectable, parse_point, sm_decompose
from .closure import sm_closure, stable_closure
from .clones import fragment_as_dict
from .config import OUTPUT_SCHEMA_PATH
from .errors import ParseError, SchemaError, UnknownNameError
from .lattice import build_lattice
from .predicates import class_member, get_class, get_roster
from .truthtable import all_minors, format_table, parse_function
from .verify import (
    check_left_stability,
    check_right_stability,
    stable_classes_for,
    verify_corollaries,
    verify_lemmas,
    verify_roster,
    verify_table2,
)


OperationHandler = Callable[[dict], dict]


@dataclass
class Operation:
    name: str
    description: str
    parameters: dict
    handler: OperationHandler


def _require(payload: dict, key: str):
    value = payload.get(key)
    if value is None or value == "" or value == []:
        raise ParseError(f"{key} is required")
    return value


def _functions(payload: dict, key: str = "functions") -> list:
    values = payload.get(key) or []
    if isinstance(values, str):
        values = [values]
    return [parse_function(str(text)) for text in values]


def _arity(payload: dict, key: str = "arity") -> int:
    value = _require(payload, key)
    try:
        return int(value)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{key} must be an integer, got {value!r}") from exc


def _classify(payload: dict) -> dict:
    return classify_functions(_functions(payload)).as_dict()


def _closure(payload: dict) -> dict:
    functions = _functions(payload)
    arity = _arity(payload)
    inner, outer = payload.get("c1"), payload.get("c2")
    if inner or outer:
        members = stable_closure(functions, inner or "Ic", outer or "SM", arity)
    else:
        members = sm_closure(functions, arity)
    return {"arity": arity, "count": len(members), "members": members.to_lines()}


def _member(payload: dict) -> dict:
    klass = get_class(str(_require(payload, "class")))
    f = parse_function(str(_require(payload, "function")))
    return {"class": klass.name, "function": format_table(f), "member": class_member(klass, f)}


def _minors(payload: dict) -> dict:
    f = parse_function(str(_require(payload, "function")))
    members = all_minors(f, _arity(payload))
    return {"function": format_table(f), "arity": members.arity, "count": len(members), "minors": members.to_lines()}


def _bisect(payload: dict) -> dict:
    f = parse_function(str(_require(payload, "target")))
    return is_bisectable(f, _functions(payload, "generators")).as_dict()


def _decompose(payload: dict) -> dict:
    f = parse_function(str(_require(payload, "target")))
    gens = _functions(payload, "generators")
    decomposition = sm_decompose(f, gens)
    result = decomposition.as_dict()
    result["target"] = format_table(f)
    result["generators"] = [format_table(g) for g in gens]
    result["replay"] = format_table(decomposition.replay())
    return result


def _extend_sm(payload: dict) -> dict:
    n = _arity(payload, "n")
    points = PointSets(
        n,
        frozenset(parse_point(str(text), n) for text in payload.get("true") or []),
        frozenset(parse_point(str(text), n) for text in payload.get("false") or []),
    )
    points.check()
    return {"points": points.as_dict(), "function": format_table(extend_sm(points))}


def _lattice(payload: dict) -> dict:
    bound = payload.get("m_max")
    lattice = build_lattice(int(bound) if bound is not None else None)
    result = lattice.as_dict()
    result["automorphisms"] = lattice.automorphism_images()
    if payload.get("dot"):
        result["dot"] = lattice.to_dot()
    return result


def _meet(payload: dict) -> dict:
    lattice = build_lattice()
    a, b = str(_require(payload, "a")), str(_require(payload, "b"))
    return {"a": a, "b": b, "meet": lattice.meet(a, b).name, "join": lattice.join(a, b).name}


def _check_stability(payload: dict) -> dict:
    side = payload.get("side", "right")
    if side not in ("right", "left"):
        raise ParseError(f"side must be right or left, got {side!r}")
    check = check_right_stability if side == "right" else check_left_stability
    verdict = check(
        str(_require(payload, "class")),
        str(_require(payload, "clone")),
        payload.get("bound", "3,3"),
        target=payload.get("target"),
    )
    result = verdict.as_dict()
    result["replays"] = verdict.replays()
    return result


def _verify_roster(payload: dict) -> dict:
    return verify_roster(int(payload.get("m_max", 4))).as_dict()


def _verify_table(payload: dict) -> dict:
    report = verify_table2(payload.get("bound", "3,3"), payload.get("classes"), payload.get("clones"))
    checks = verify_corollaries()
    result = report.as_dict()
    result["corollaries"] = [check.as_dict() for check in checks]
    result["ok"] = report.ok and all(check.ok for check in checks)
    return result


def _verify_lemmas(payload: dict) -> dict:
    return verify_lemmas(payload.get("bound", "3,3")).as_dict()


def _stable_for(payload: dict) -> dict:
    inner, outer = str(_require(payload, "c1")), str(_require(payload, "c2"))
    names = [entry.name for entry in stable_classes_for(inner, outer)]
    return {"c1": inner, "c2": outer, "count": len(names), "classes": names}


def _roster(_: dict) -> dict:
    return {"count": len(get_roster()), "classes": [entry.as_dict() for entry in get_roster()]}


def _clones(_: dict) -> dict:
    return fragment_as_dict()


_FUNCTION_LIST = {
    "type": "array",
    "items": {"type": "string", "description": "Truth table in n:bits form or a named function"},
}
_BOUND = {"type": "string", "description": "Search bound k,m (clone arity, member arity)"}

_OPERATIONS: dict[str, Operation] = {
    "classify": Operation(
        name="classify",
        description="Name the roster class generated by a set of functions.",
        parameters={"type": "object", "properties": {"functions": _FUNCTION_LIST}, "required": []},
        handler=_classify,
    ),
    "closure": Operation(
        name="closure",
        description="List the m-ary slice of the class generated by the functions (SM on the left by default).",
        parameters={
            "type": "object",
            "properties": {
                "functions": _FUNCTION_LIST,
                "arity": {"type": "integer", "description": "Slice arity (1..4)"},
                "c1": {"type": "string", "description": "Optional clone composed on the right"},
                "c2": {"type": "string", "description": "Optional clone composed on the left"},
            },
            "required": ["arity"],
        },
        handler=_closure,
    ),
    "member": Operation(
        name="member",
        description="Test whether a function belongs to a roster class.",
        parameters={
            "type": "object",
            "properties": {
                "class": {"type": "string", "description": "Roster class name"},
                "function": {"type": "string", "description": "Truth table in n:bits form"},
            },
            "required": ["class", "function"],
        },
        handler=_member,
    ),
    "minors": Operation(
        name="minors",
        description="List the distinct minors of a function at a given arity.",
        parameters={
            "type": "object",
            "properties": {
                "function": {"type": "string", "description": "Truth table in n:bits form"},
                "arity": {"type": "integer", "description": "Target arity"},
            },
            "required": ["function", "arity"],
        },
        handler=_minors,
    ),
    "bisect": Operation(
        name="bisect",
        description="Check whether a target is bisectable by a generator set, with witnesses.",
        parameters={
            "type": "object",
            "properties": {"target": {"type": "string"}, "generators": _FUNCTION_LIST},
            "required": ["target"],
        },
        handler=_bisect,
    ),
    "decompose": Operation(
        name="decompose",
        description="Write a target as a self-dual monotone function of generator minors.",
        parameters={
            "type": "object",
            "properties": {"target": {"type": "string"}, "generators": _FUNCTION_LIST},
            "required": ["target"],
        },
        handler=_decompose,
    ),
    "extend_sm": Operation(
        name="extend_sm",
        description="Extend required true and false points to a self-dual monotone function.",
        parameters={
            "type": "object",
            "properties": {
                "n": {"type": "integer", "description": "Arity"},
                "true": {"type": "array", "items": {"type": "string"}, "description": "Bit strings such as 110"},
                "false": {"type": "array", "items": {"type": "string"}},
            },
            "required": ["n"],
        },
        handler=_extend_sm,
    ),
    "lattice": Operation(
        name="lattice",
        description="Inclusion order, covers, meet-irreducibles and automorphisms of the roster.",
        parameters={
            "type": "object",
            "properties": {
                "m_max": {"type": "integer", "description": "Decision arity (escalates when omitted)"},
                "dot": {"type": "boolean", "description": "Include Graphviz source"},
            },
        },
        handler=_lattice,
    ),
    "meet": Operation(
        name="meet",
        description="Meet and join of two roster classes.",
        parameters={
            "type": "object",
            "properties": {"a": {"type": "string"}, "b": {"type": "string"}},
            "required": ["a", "b"],
        },
        handler=_meet,
    ),
    "check_stability": Operation(
        name="check_stability",
        description="Bounded search for a composite leaving a class under one clone and side.",
        parameters={
            "type": "object",
            "properties": {
                "class": {"type": "string"},
                "clone": {"type": "string"},
                "side": {"type": "string", "enum": ["right", "left"]},
                "bound": _BOUND,
                "target": {"type": "string", "description": "Class the composites must stay in (default: class)"},
            },
            "required": ["class", "clone"],
        },
        handler=_check_stability,
    ),
    "verify_roster": Operation(
        name="verify_roster",
        description="Check count, distinctness, minor closure and majority closure of the roster.",
        parameters={"type": "object", "properties": {"m_max": {"type": "integer"}}},
        handler=_verify_roster,
    ),
    "verify_table": Operation(
        name="verify_table",
        description="Compare bounded stability verdicts with the stability table and the corollary lists.",
        parameters={
            "type": "object",
            "properties": {
                "bound": _BOUND,
                "classes": {"type": "array", "items": {"type": "string"}},
                "clones": {"type": "array", "items": {"type": "string"}},
            },
        },
        handler=_verify_table,
    ),
    "verify_lemmas": Operation(
        name="verify_lemmas",
        description="Reproduce the noninclusion witnesses and the clone content clauses.",
        parameters={"type": "object", "properties": {"bound": _BOUND}},
        handler=_verify_lemmas,
    ),
    "stable_for": Operation(
        name="stable_for",
        description="Roster classes stable under c1 on the right and c2 on the left.",
        parameters={
            "type": "object",
            "properties": {"c1": {"type": "string"}, "c2": {"type": "string"}},
            "required": ["c1", "c2"],
        },
        handler=_stable_for,
    ),
    "roster": Operation(
        name="roster",
        description="List the roster classes with their expressions and stability rows.",
        parameters={"type": "object", "properties": {}, "required": []},
        handler=_roster,
    ),
    "clones": Operation(
        name="clones",
        description="The clone fragment: predicates, generators and order.",
        parameters={"type": "object", "properties": {}, "required": []},
        handler=_clones,
    ),
}


@lru_cache(maxsize=1)
def _output_document() -> dict:
    return json.loads(OUTPUT_SCHEMA_PATH.read_text(encoding="utf-8"))


def result_schema(name: str) -> dict:
    """Standalone JSON schema of an operation's result, with the shared definitions attached."""

    document = _output_document()
    schema = document["operations"].get(name)
    if schema is None:
        raise UnknownNameError(f"No output schema for operation: {name}")
    return {"$schema": document["$schema"], "$defs": document["$defs"], "allOf": [schema]}


def validate_result(name: str, result: dict) -> dict:
    """Check a result against the shipped output schema and return it unchanged."""

    try:
        jsonschema.validate(instance=json.loads(json.dumps(result, default=str)), schema=result_schema(name))
    except jsonschema.ValidationError as exc:
        path = "/".join(str(part) for part in exc.absolute_path) or "<root>"
        raise SchemaError(f"{name} result does not match its schema at {path}: {exc.message}") from exc
    return result


def get_operation_schemas() -> list[dict]:
    """Return JSON-schema descriptions of every operation's parameters and result."""

    return [
        {
            "name": op.name,
            "description": op.description,
            "parameters": op.parameters,
            "result": result_schema(op.name),
        }
        for op in _OPERATIONS.values()
    ]


def list_operations() -> list[Operation]:
    return list(_OPERATIONS.values())


def run_operation(name: str, payload: dict | None = None) -> dict:
    """Run a registered operation on a parsed payload."""

    op = _OPERATIONS.get(name)
    if not op:
        raise UnknownNameError(f"Unknown operation: {name}")
    return op.handler(payload or {})


def execute_operation(name: str, arguments_json: str | None) -> str:
    """Execute a registered operation and return a JSON string."""

    if name not in _OPERATIONS:
        raise UnknownNameError(f"Unknown operation: {name}")
    if arguments_json:
        try:
            args = json.loads(arguments_json)
        except json.JSONDecodeError as exc:
            raise ParseError(f"Invalid arguments for {name}: {exc}") from exc
    else:
        args = {}
    return json.dumps(validate_result(name, run_operation(name, args)), indent=2, default=str)


__all__ = [
    "Operation",
    "execute_operation",
    "get_operation_schemas",
    "list_operations",
    "result_schema",
    "run_operation",
    "validate_result",
]
