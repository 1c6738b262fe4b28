"""Command table and argument parser for the command line."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable
import argparse

from backend.operations import get_operation_schemas, run_operation

from .classification import (
    render_bisection,
    render_classification,
    render_decomposition,
    render_extension,
    render_member,
    render_members,
)
from .lattice_view import render_lattice, render_meet
from .verification import (
    render_clones,
    render_lemma_report,
    render_operations,
    render_roster,
    render_roster_report,
    render_stable_for,
    render_table_report,
    render_verdict,
)


Renderer = Callable[[dict, argparse.Namespace], str]
ArgumentSpec = tuple[tuple[str, ...], dict]

TEXT_FORMATS = ("text", "json")
LATTICE_FORMATS = ("text", "json", "dot", "html")


def _csv(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


_BOUND_ARG: ArgumentSpec = (("--bound",), {"default": "3,3", "help": "Search bound k,m (default: 3,3)"})
_FUNCTIONS_ARG: ArgumentSpec = (("functions",), {"nargs": "*", "metavar": "FN", "help": "Tables in n:bits form"})
_GENS_ARG: ArgumentSpec = (
    ("--gens",),
    {"type": _csv, "action": "extend", "default": [], "help": "Comma-separated generator tables (repeatable)"},
)


@dataclass(frozen=True)
class CommandEntry:
    name: str
    help: str
    operation: str | None
    arguments: tuple[ArgumentSpec, ...]
    payload: Callable[[argparse.Namespace], dict]
    render: Renderer
    formats: tuple[str, ...] = TEXT_FORMATS

    def run(self, args: argparse.Namespace) -> dict:
        payload = self.payload(args)
        if self.operation is None:
            return {"operations": get_operation_schemas()}
        return run_operation(self.operation, payload)


DEFAULT_COMMANDS: tuple[CommandEntry, ...] = (
    CommandEntry(
        "classify",
        "Name the class generated by the given functions",
        "classify",
        (_FUNCTIONS_ARG,),
        lambda args: {"functions": args.functions},
        render_classification,
    ),
    CommandEntry(
        "closure",
        "Print the m-ary slice of the generated class",
        "closure",
        (
            (("--arity",), {"type": int, "required": True, "help": "Slice arity (1..4)"}),
            (("--c1",), {"help": "Clone composed on the right (default Ic)"}),
            (("--c2",), {"help": "Clone composed on the left (default SM)"}),
            _FUNCTIONS_ARG,
        ),
        lambda args: {"functions": args.functions, "arity": args.arity, "c1": args.c1, "c2": args.c2},
        render_members,
    ),
    CommandEntry(
        "member",
        "Test membership of a function in a roster class",
        "member",
        ((("--class",), {"dest": "class_name", "required": True}), (("function",), {"metavar": "FN"})),
        lambda args: {"class": args.class_name, "function": args.function},
        render_member,
    ),
    CommandEntry(
        "minors",
        "List the distinct minors of a function at one arity",
        "minors",
        ((("--arity",), {"type": int, "required": True}), (("function",), {"metavar": "FN"})),
        lambda args: {"function": args.function, "arity": args.arity},
        render_members,
    ),
    CommandEntry(
        "bisect",
        "Check bisectability of a target by a generator set",
        "bisect",
        (_GENS_ARG, (("target",), {"metavar": "TARGET"})),
        lambda args: {"target": args.target, "generators": args.gens},
        render_bisection,
    ),
    CommandEntry(
        "decompose",
        "Decompose a target through generator minors and a self-dual monotone function",
        "decompose",
        (_GENS_ARG, (("target",), {"metavar": "TARGET"})),
        lambda args: {"target": args.target, "generators": args.gens},
        render_decomposition,
    ),
    CommandEntry(
        "extend-sm",
        "Extend required true and false points to a self-dual monotone function",
        "extend_sm",
        (
            (("--n",), {"type": int, "required": True, "help": "Arity"}),
            (("--true",), {"dest": "true_points", "nargs": "*", "default": [], "metavar": "POINT"}),
            (("--false",), {"dest": "false_points", "nargs": "*", "default": [], "metavar": "POINT"}),
        ),
        lambda args: {"n": args.n, "true": args.true_points, "false": args.false_points},
        render_extension,
    ),
    CommandEntry(
        "lattice",
        "Summarise or export the lattice of the roster classes",
        "lattice",
        (
            (("--m-max",), {"type": int, "default": None, "help": "Decision arity (escalates when omitted)"}),
            (("--output",), {"default": None, "help": "HTML export path"}),
        ),
        lambda args: {"m_max": args.m_max, "dot": args.format == "dot"},
        render_lattice,
        LATTICE_FORMATS,
    ),
    CommandEntry(
        "meet",
        "Meet and join of two roster classes",
        "meet",
        ((("a",), {}), (("b",), {})),
        lambda args: {"a": args.a, "b": args.b},
        render_meet,
    ),
    CommandEntry(
        "check",
        "Search one class and clone for a composite leaving the class",
        "check_stability",
        (
            (("--class",), {"dest": "class_name", "required": True}),
            (("--clone",), {"required": True}),
            (("--side",), {"choices": ("right", "left"), "default": "right"}),
            (("--target",), {"default": None}),
            _BOUND_ARG,
        ),
        lambda args: {
            "class": args.class_name,
            "clone": args.clone,
            "side": args.side,
            "target": args.target,
            "bound": args.bound,
        },
        render_verdict,
    ),
    CommandEntry(
        "verify-93",
        "Check the roster: count, distinctness, minor and majority closure",
        "verify_roster",
        ((("--m-max",), {"type": int, "default": 4}),),
        lambda args: {"m_max": args.m_max},
        render_roster_report,
    ),
    CommandEntry(
        "verify-table",
        "Reproduce the stability table and the corollary lists by bounded search",
        "verify_table",
        (
            _BOUND_ARG,
            (("--class",), {"dest": "classes", "action": "append", "default": None}),
            (("--clone",), {"dest": "clones", "action": "append", "default": None}),
        ),
        lambda args: {"bound": args.bound, "classes": args.classes, "clones": args.clones},
        render_table_report,
    ),
    CommandEntry(
        "verify-lemmas",
        "Reproduce the noninclusion witnesses and clone content clauses",
        "verify_lemmas",
        (_BOUND_ARG,),
        lambda args: {"bound": args.bound},
        render_lemma_report,
    ),
    CommandEntry(
        "stable-for",
        "List classes stable under c1 on the right and c2 on the left",
        "stable_for",
        ((("--c1",), {"required": True}), (("--c2",), {"required": True})),
        lambda args: {"c1": args.c1, "c2": args.c2},
        render_stable_for,
    ),
    CommandEntry("roster", "List the roster classes", "roster", (), lambda args: {}, render_roster),
    CommandEntry("clones", "List the clone fragment", "clones", (), lambda args: {}, render_clones),
    CommandEntry("operations", "List the registered operations", None, (), lambda args: {}, render_operations),
)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default="text", help="Output format: text or json (lattice: also dot, html)")
    common.add_argument("--max-arity", type=int, default=None, help="Override MINION_MAX_ARITY for this run")
    common.add_argument(
        "--log-level",
        default=None,
        choices=("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"),
        help="Logging level (default: MINION_LOG_LEVEL or WARNING)",
    )
    return common


def build_parser(entries: Iterable[CommandEntry] | None = None) -> argparse.ArgumentParser:
    """Build the top-level parser with one subcommand per entry."""

    entries = tuple(entries or DEFAULT_COMMANDS)
    if not entries:
        raise ValueError("The command line requires at least one command entry.")

    parser = argparse.ArgumentParser(
        prog="minion-lab",
        description="Boolean function classes stable under the self-dual monotone clone",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()
    for entry in entries:
        command = sub.add_parser(entry.name, help=entry.help, parents=[common])
        for flags, options in entry.arguments:
            command.add_argument(*flags, **options)
        command.set_defaults(entry=entry)
    return parser


__all__ = ["CommandEntry", "DEFAULT_COMMANDS", "build_parser"]
