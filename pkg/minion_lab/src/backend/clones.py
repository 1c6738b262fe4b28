"""The fragment of Post's lattice that indexes the stability table."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import logging

import networkx as nx
import numpy as np

from .config import ENUMERATION_LIMIT, load_settings
from .errors import LatticeError, UnknownNameError
from .predicates import ClassExpr, holds, parse_expr, space_mask
from .truthtable import FnSet, TruthTable, format_table, named


_log = logging.getLogger("minion_lab.clones")


@dataclass(frozen=True)
class CloneId:
    """A named clone with its membership predicate and optional generating set."""

    name: str
    expr: ClassExpr
    source: str
    generators: tuple[TruthTable, ...] | None = None
    external_generators: bool = False

    def as_dict(self) -> dict[str, object]:
        return {
            "name": self.name,
            "predicate": self.source,
            "generators": None if self.generators is None else [format_table(g) for g in self.generators],
            "external_generators": self.external_generators,
        }

    def __str__(self) -> str:
        return self.name


# name, predicate, generator names (None: predicate only), generators from outside the stability proofs
_CLONE_DEFINITIONS: tuple[tuple[str, str, tuple[str, ...] | None, bool], ...] = (
    ("Ic", "projection", (), False),
    ("SM", "and(selfdual, monotone)", ("maj",), False),
    ("Sc", "and(selfdual, val0(0))", None, False),
    ("S", "selfdual", ("maj", "not"), False),
    ("Mc", "and(monotone, val0(0), val1(1))", ("maj", "and", "or"), False),
    ("M0", "and(monotone, val0(0))", None, False),
    ("M1", "and(monotone, val1(1))", None, False),
    ("M", "monotone", ("and", "or", "const0", "const1"), True),
    ("McU", "and(monotone, sep1(2), val1(1))", ("maj", "and"), False),
    ("MU", "and(monotone, sep1(2))", ("maj", "const0"), False),
    ("TcU", "and(sep1(2), val1(1))", None, False),
    ("U", "sep1(2)", ("maj", "nimp"), False),
    ("McW", "and(monotone, sep0(2), val0(0))", None, False),
    ("MW", "and(monotone, sep0(2))", None, False),
    ("TcW", "and(sep0(2), val0(0))", None, False),
    ("W", "sep0(2)", None, False),
    ("Tc", "and(val0(0), val1(1))", None, False),
    ("T0", "val0(0)", None, False),
    ("T1", "val1(1)", None, False),
    ("Omega", "all", None, False),
)

# Hasse covers of the fragment (lower, upper).
POST_FRAGMENT_COVERS: tuple[tuple[str, str], ...] = (
    ("Ic", "SM"),
    ("SM", "Sc"),
    ("SM", "McU"),
    ("SM", "McW"),
    ("Sc", "S"),
    ("Sc", "Tc"),
    ("S", "Omega"),
    ("McU", "Mc"),
    ("McU", "MU"),
    ("McU", "TcU"),
    ("McW", "Mc"),
    ("McW", "MW"),
    ("McW", "TcW"),
    ("MU", "M0"),
    ("MU", "U"),
    ("MW", "M1"),
    ("MW", "W"),
    ("TcU", "U"),
    ("TcU", "Tc"),
    ("TcW", "W"),
    ("TcW", "Tc"),
    ("Mc", "M0"),
    ("Mc", "M1"),
    ("Mc", "Tc"),
    ("M0", "M"),
    ("M0", "T0"),
    ("M1", "M"),
    ("M1", "T1"),
    ("U", "T0"),
    ("W", "T1"),
    ("Tc", "T0"),
    ("Tc", "T1"),
    ("M", "Omega"),
    ("T0", "Omega"),
    ("T1", "Omega"),
)

UNARY_NAMES = ("const0", "id", "not", "const1")


def _build_clones() -> dict[str, CloneId]:
    clones: dict[str, CloneId] = {}
    for name, source, generator_names, external in _CLONE_DEFINITIONS:
        generators = None if generator_names is None else tuple(named(g) for g in generator_names)
        clone = CloneId(name, parse_expr(source), source, generators, external)
        if generators is not None:
            outside = [format_table(g) for g in generators if not holds(clone.expr, g)]
            if outside:
                raise LatticeError(f"generators {', '.join(outside)} are not members of clone {name}")
        clones[name] = clone
    return clones


CLONES: dict[str, CloneId] = _build_clones()


def clone_names() -> tuple[str, ...]:
    return tuple(CLONES)


def get_clone(name: str | CloneId) -> CloneId:
    if isinstance(name, CloneId):
        return name
    try:
        return CLONES[name]
    except KeyError:
        raise UnknownNameError(f"unknown clone {name!r}; expected one of {', '.join(CLONES)}") from None


def clone_mask(c: str | CloneId, arity: int) -> np.ndarray:
    return space_mask(get_clone(c).expr, arity)


def clone_members(c: str | CloneId, arity: int) -> FnSet:
    """The exact m-ary slice of a clone (m <= 4)."""

    return FnSet.from_codes(arity, np.flatnonzero(clone_mask(c, arity)).tolist())


def unary_content(c: str | CloneId) -> frozenset[str]:
    """Names of the unary functions in the clone."""

    mask = clone_mask(c, 1)
    return frozenset(name for name in UNARY_NAMES if mask[named(name).bits])


@lru_cache(maxsize=1)
def fragment_order() -> nx.DiGraph:
    """Reflexive-free transitive closure of the fragment's cover table."""

    graph = nx.DiGraph()
    graph.add_nodes_from(CLONES)
    graph.add_edges_from(POST_FRAGMENT_COVERS)
    return nx.transitive_closure(graph, reflexive=False)


def _slice_order(arity: int) -> np.ndarray:
    names = clone_names()
    masks = [np.concatenate([clone_mask(name, m) for m in range(1, arity + 1)]).astype(np.float64) for name in names]
    stacked = np.vstack(masks)
    outside = stacked @ (1.0 - stacked).T
    return outside == 0


@lru_cache(maxsize=1)
def clone_order() -> tuple[np.ndarray, int]:
    """Inclusion matrix of the fragment and the arity that decided it."""

    names = clone_names()
    arity = load_settings().decision_arity
    while True:
        leq = _slice_order(arity)
        tied = [(a, b) for i, a in enumerate(names) for j, b in enumerate(names) if i < j and leq[i, j] and leq[j, i]]
        if not tied:
            break
        if arity >= ENUMERATION_LIMIT:
            raise LatticeError(f"clones {tied[0][0]} and {tied[0][1]} have equal slices up to arity {arity}")
        _log.info("clone slices tie at arity %d, escalating", arity)
        arity += 1

    closure = fragment_order()
    for i, a in enumerate(names):
        for j, b in enumerate(names):
            if i == j:
                continue
            expected = closure.has_edge(a, b)
            if bool(leq[i, j]) != expected:
                raise LatticeError(f"slice order and cover table disagree on {a} <= {b}")
            generators = CLONES[a].generators
            if generators is not None and all(holds(CLONES[b].expr, g) for g in generators) != expected:
                raise LatticeError(f"generators of {a} disagree with the order on {a} <= {b}")
    _log.debug("clone order decided at arity %d", arity)
    leq.setflags(write=False)
    return leq, arity


def clone_leq(c: str | CloneId, d: str | CloneId) -> bool:
    """Whether clone c is contained in clone d."""

    names = clone_names()
    leq, _ = clone_order()
    return bool(leq[names.index(get_clone(c).name), names.index(get_clone(d).name)])


def clones_above(c: str | CloneId) -> tuple[str, ...]:
    return tuple(name for name in CLONES if clone_leq(c, name))


def fragment_as_dict() -> dict[str, object]:
    """The fragment as JSON-ready data: clones, covers and the full order relation."""

    names = clone_names()
    leq, arity = clone_order()
    return {
        "decision_arity": arity,
        "clones": [CLONES[name].as_dict() for name in names],
        "covers": [list(edge) for edge in POST_FRAGMENT_COVERS],
        "leq": [[a, b] for i, a in enumerate(names) for j, b in enumerate(names) if i != j and leq[i, j]],
    }


__all__ = [
    "CLONES",
    "CloneId",
    "POST_FRAGMENT_COVERS",
    "UNARY_NAMES",
    "clone_leq",
    "clone_mask",
    "clone_members",
    "clone_names",
    "clone_order",
    "clones_above",
    "fragment_as_dict",
    "fragment_order",
    "get_clone",
    "unary_content",
]
