"""Text renderers for classification, closure and the self-dual monotone witnesses."""

from __future__ import annotations

import argparse


def render_classification(result: dict, _: argparse.Namespace | None = None) -> str:
    arities = ", ".join(str(m) for m in result.get("checked_arities", []))
    return f"{result['class']}\nclosure oracle agrees at arities {arities}"


def render_members(result: dict, _: argparse.Namespace | None = None) -> str:
    """One canonical table per line, as in the slice file format."""

    key = "minors" if "minors" in result else "members"
    return "\n".join(result.get(key, []))


def render_member(result: dict, _: argparse.Namespace | None = None) -> str:
    return "true" if result.get("member") else "false"


def render_bisection(result: dict, _: argparse.Namespace | None = None) -> str:
    if result.get("bisectable"):
        return f"{result['target']} is bisectable ({len(result.get('witnesses', []))} pairs witnessed)"
    failure = result.get("failure") or {}
    first, second = failure.get("pair", ["?", "?"])
    return f"{result['target']} is not bisectable: condition {failure.get('condition', '?')} fails on {first}, {second}"


def render_decomposition(result: dict, _: argparse.Namespace | None = None) -> str:
    generators = result.get("generators", [])
    lines = [f"h = {result['h']}"]
    for position, phi in enumerate(result.get("phis", []), start=1):
        source = generators[phi["gen_index"]] if phi["gen_index"] < len(generators) else phi["gen_index"]
        sigma = ",".join(str(entry) for entry in phi["sigma"])
        lines.append(f"phi_{position} = {source} under ({sigma})")
    lines.append(f"replay = {result.get('replay', '?')}")
    return "\n".join(lines)


def render_extension(result: dict, _: argparse.Namespace | None = None) -> str:
    return result["function"]


__all__ = [
    "render_bisection",
    "render_classification",
    "render_decomposition",
    "render_extension",
    "render_member",
    "render_members",
]
