"""Command table and text renderers for the minion-lab command line."""

from .navigation import CommandEntry, DEFAULT_COMMANDS, build_parser
from .classification import render_classification, render_members
from .lattice_view import render_lattice
from .verification import render_roster_report, render_table_report

__all__ = [
    "CommandEntry",
    "DEFAULT_COMMANDS",
    "build_parser",
    "render_classification",
    "render_lattice",
    "render_members",
    "render_roster_report",
    "render_table_report",
]
