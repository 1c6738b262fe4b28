"""Lattice summaries and exports."""

from __future__ import annotations

from pathlib import Path
import argparse

from backend.config import export_path
from backend.lattice import build_lattice


def render_lattice(result: dict, args: argparse.Namespace) -> str:
    """Summary text, Graphviz source, or the path of a written HTML export."""

    fmt = getattr(args, "format", "text")
    if fmt == "dot":
        return result["dot"].rstrip("\n")
    if fmt == "html":
        target = Path(args.output) if getattr(args, "output", None) else export_path("lattice.html")
        build_lattice(getattr(args, "m_max", None)).to_html(target)
        return str(target)

    lines = [
        f"{len(result['nodes'])} classes, {len(result['covers'])} covers, decided at arity {result['decision_arity']}",
        f"top {result['top']}, bottom {result['bottom']}",
        f"meet-irreducible: {', '.join(result['meet_irreducibles'])}",
    ]
    clones = result.get("clones", {})
    if clones:
        lines.append("clones: " + ", ".join(f"{clone}={name}" for clone, name in clones.items()))
    for kind, mapping in result.get("automorphisms", {}).items():
        moved = sum(1 for name, image in mapping.items() if name != image)
        lines.append(f"{kind}: moves {moved} classes")
    return "\n".join(lines)


def render_meet(result: dict, _: argparse.Namespace | None = None) -> str:
    return f"meet {result['meet']}\njoin {result['join']}"


__all__ = ["render_lattice", "render_meet"]
