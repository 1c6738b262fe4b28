"""Text renderers for the verification commands and roster listings."""

from __future__ import annotations

import argparse


def _status(ok: bool) -> str:
    return "ok" if ok else "FAILED"


def render_roster_report(result: dict, _: argparse.Namespace | None = None) -> str:
    lines = [
        f"{result['count']} classes, distinct at arity {result['decision_arity']}; "
        f"minor and majority closure checked up to arity {result['max_arity']}"
    ]
    lines += [f"  {name}: minor outside the class ({detail})" for name, detail in result["minor_violations"].items()]
    lines += [f"  {name}: not majority closed at arity {m}" for name, m in result["mu_violations"].items()]
    lines.append(_status(result["ok"]))
    return "\n".join(lines)


def render_table_report(result: dict, _: argparse.Namespace | None = None) -> str:
    k, m = result["bound"]
    lines = [
        f"stability table at bound {k},{m}: {result['checked']} checks, "
        f"{result['counterexamples']} counterexamples, {len(result['mismatches'])} mismatches "
        f"({result['elapsed_seconds']}s)"
    ]
    for item in result["mismatches"]:
        expected = "stable" if item["expected_stable"] else "unstable"
        lines.append(f"  {item['side']:5} {item['class']:14} {item['clone']:6} expected {expected}")
    for verdict in result["unreplayable"]:
        lines.append(f"  witness for {verdict['class']} under {verdict['clone']} does not replay")
    for check in result.get("corollaries", []):
        if not check["ok"]:
            lines.append(
                f"  ({check['inner']}, {check['outer']}) list differs: "
                f"missing {', '.join(check['missing']) or '-'}, extra {', '.join(check['extra']) or '-'}"
            )
    if "corollaries" in result:
        agreed = sum(1 for check in result["corollaries"] if check["ok"])
        lines.append(f"corollary lists: {agreed}/{len(result['corollaries'])} reproduced")
    lines.append(_status(result["ok"]))
    return "\n".join(lines)


def render_lemma_report(result: dict, _: argparse.Namespace | None = None) -> str:
    items, clauses = result["noninclusions"], result["unary_content"]
    failed = [item for item in items if not item["ok"]]
    failed_clauses = [clause for clause in clauses if not clause["ok"]]
    lines = [
        f"noninclusions: {len(items) - len(failed)}/{len(items)} reproduced",
        f"clone content clauses: {len(clauses) - len(failed_clauses)}/{len(clauses)} hold",
    ]
    lines += [f"  item {item['item']} under {item['clone']}: no witness" for item in failed]
    lines += [f"  clause {clause['clause']} fails for {clause['clone']}" for clause in failed_clauses]
    lines.append(_status(result["ok"]))
    return "\n".join(lines)


def render_verdict(result: dict, _: argparse.Namespace | None = None) -> str:
    head = f"{result['side']} {result['class']} under {result['clone']} into {result['target']}: {result['kind']}"
    witness = result.get("witness")
    if witness is None:
        return head
    inner = ", ".join(witness["inner"])
    return f"{head}\n  {witness['form']} {witness['outer']} with {inner} = {witness['composite']}"


def render_stable_for(result: dict, _: argparse.Namespace | None = None) -> str:
    return "\n".join(result["classes"])


def render_roster(result: dict, _: argparse.Namespace | None = None) -> str:
    width = max((len(entry["name"]) for entry in result["classes"]), default=0)
    return "\n".join(
        f"{entry['name']:{width}}  right {entry['right_clone']:6} left {entry['left_clone']:6} {entry['expr']}"
        for entry in result["classes"]
    )


def render_clones(result: dict, _: argparse.Namespace | None = None) -> str:
    lines = []
    for clone in result["clones"]:
        generators = clone["generators"]
        listed = "-" if generators is None else "{" + ", ".join(generators) + "}"
        lines.append(f"{clone['name']:6} {clone['predicate']}  generated by {listed}")
    return "\n".join(lines)


def render_operations(result: dict, _: argparse.Namespace | None = None) -> str:
    return "\n".join(f"{op['name']}: {op['description']}" for op in result["operations"])


__all__ = [
    "render_clones",
    "render_lemma_report",
    "render_operations",
    "render_roster",
    "render_roster_report",
    "render_stable_for",
    "render_table_report",
    "render_verdict",
]
