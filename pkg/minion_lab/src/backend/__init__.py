"""Backend library for the self-dual monotone stable class toolkit."""

from .classify import PointSets, classify_functions, extend_sm, generated_class, is_bisectable, sm_decompose
from .closure import left_close, right_compose_slice, sm_closure, stable_closure
from .clones import clone_leq, clone_members, get_clone, unary_content
from .errors import MinionError
from .lattice import ClassLattice, build_lattice
from .operations import execute_operation, get_operation_schemas, run_operation
from .predicates import class_member, enumerate_class, get_class, get_roster
from .truthtable import ArgMap, FnSet, TruthTable, format_table, parse, parse_function
from .verify import (
    check_left_stability,
    check_right_stability,
    stable_classes_for,
    verify_corollaries,
    verify_roster,
    verify_table2,
)

__all__ = [
    "ArgMap",
    "ClassLattice",
    "FnSet",
    "MinionError",
    "PointSets",
    "TruthTable",
    "build_lattice",
    "check_left_stability",
    "check_right_stability",
    "class_member",
    "classify_functions",
    "clone_leq",
    "clone_members",
    "enumerate_class",
    "execute_operation",
    "extend_sm",
    "format_table",
    "generated_class",
    "get_class",
    "get_clone",
    "get_operation_schemas",
    "get_roster",
    "is_bisectable",
    "left_close",
    "parse",
    "parse_function",
    "right_compose_slice",
    "run_operation",
    "sm_closure",
    "sm_decompose",
    "stable_classes_for",
    "stable_closure",
    "unary_content",
    "verify_corollaries",
    "verify_roster",
    "verify_table2",
]
