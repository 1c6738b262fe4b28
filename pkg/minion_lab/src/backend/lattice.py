"""The inclusion lattice of the roster classes, with exports of its Hasse diagram."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
import json
import logging
import time

import networkx as nx
import numpy as np

try:  # pragma: no cover - optional dependency
    import plotly.graph_objects as go
except ImportError:  # pragma: no cover - optional dependency
    go = None

from .clones import clone_mask, clone_names
from .config import ENUMERATION_LIMIT, load_settings
from .errors import ArityError, LatticeError
from .predicates import ClassId, get_class, get_roster, roster_images, space_mask


_log = logging.getLogger("minion_lab.lattice")

IMAGE_KINDS = ("negation", "inner_negation", "dual")
CLONE_FILL = "#ffd966"


def _slice_matrix(masks: list[np.ndarray]) -> np.ndarray:
    return np.vstack(masks).astype(np.float64)


def _class_masks(arity: int) -> list[np.ndarray]:
    return [
        np.concatenate([space_mask(entry.expr, m) for m in range(1, arity + 1)])
        for entry in get_roster()
    ]


@dataclass
class ClassLattice:
    """Inclusion order of the roster classes decided on slices up to ``decision_arity``."""

    names: tuple[str, ...]
    leq: np.ndarray
    decision_arity: int
    hasse: nx.DiGraph
    signatures: dict[bytes, str] = field(repr=False)
    masks: np.ndarray = field(repr=False)

    def index(self, c: str | ClassId) -> int:
        return self.names.index(get_class(c).name)

    def le(self, a: str | ClassId, b: str | ClassId) -> bool:
        return bool(self.leq[self.index(a), self.index(b)])

    def lt(self, a: str | ClassId, b: str | ClassId) -> bool:
        return self.le(a, b) and not self.le(b, a)

    @property
    def top(self) -> str:
        return self.names[int(np.flatnonzero(self.leq.all(axis=0))[0])]

    @property
    def bottom(self) -> str:
        return self.names[int(np.flatnonzero(self.leq.all(axis=1))[0])]

    @property
    def covers(self) -> list[tuple[str, str]]:
        """Hasse edges as (lower, upper) pairs in roster order."""

        return sorted(self.hasse.edges, key=lambda edge: (self.names.index(edge[0]), self.names.index(edge[1])))

    def upper_covers(self, c: str | ClassId) -> list[str]:
        name = get_class(c).name
        return sorted(self.hasse.successors(name), key=self.names.index)

    def lower_covers(self, c: str | ClassId) -> list[str]:
        name = get_class(c).name
        return sorted(self.hasse.predecessors(name), key=self.names.index)

    def meet(self, a: str | ClassId, b: str | ClassId) -> ClassId:
        """The roster class whose slices are the intersections of the slices of a and b."""

        both = self.masks[self.index(a)] * self.masks[self.index(b)]
        name = self.signatures.get(np.packbits(both > 0).tobytes())
        if name is None:
            raise LatticeError(f"the intersection of {a} and {b} is not a roster class")
        return get_class(name)

    def join(self, a: str | ClassId, b: str | ClassId) -> ClassId:
        upper = np.flatnonzero(self.leq[self.index(a)] & self.leq[self.index(b)])
        least = [i for i in upper if self.leq[i, upper].all()]
        if len(least) != 1:
            raise LatticeError(f"{a} and {b} have no least common upper bound")
        return get_class(self.names[least[0]])

    def meet_irreducibles(self) -> list[str]:
        """Classes other than the top with exactly one upper cover."""

        top = self.top
        return [name for name in self.names if name != top and self.hasse.out_degree(name) == 1]

    def automorphism_images(self) -> dict[str, dict[str, str]]:
        """Roster permutations induced by negation, inner negation and duality.

        Each permutation is checked to be an order automorphism.
        """

        images: dict[str, dict[str, str]] = {}
        for kind in IMAGE_KINDS:
            mapping = roster_images(kind, self.decision_arity)
            order = np.array([self.names.index(mapping[name]) for name in self.names])
            if len(set(order.tolist())) != len(order):
                raise LatticeError(f"{kind} does not permute the roster")
            if not np.array_equal(self.leq, self.leq[np.ix_(order, order)]):
                raise LatticeError(f"{kind} is not an order automorphism")
            images[kind] = mapping
        return images

    def clone_classes(self) -> dict[str, str]:
        """Roster classes that coincide with a clone of the fragment, keyed by clone name."""

        found: dict[str, str] = {}
        for clone in clone_names():
            mask = np.concatenate([clone_mask(clone, m) for m in range(1, self.decision_arity + 1)])
            name = self.signatures.get(np.packbits(mask).tobytes())
            if name is not None:
                found[clone] = name
        return found

    def heights(self) -> dict[str, int]:
        height: dict[str, int] = {}
        for name in nx.topological_sort(self.hasse):
            below = [height[lower] + 1 for lower in self.hasse.predecessors(name)]
            height[name] = max(below, default=0)
        return height

    def as_dict(self) -> dict[str, object]:
        n = len(self.names)
        return {
            "decision_arity": self.decision_arity,
            "nodes": list(self.names),
            "top": self.top,
            "bottom": self.bottom,
            "leq": [
                [self.names[i], self.names[j]] for i in range(n) for j in range(n) if i != j and self.leq[i, j]
            ],
            "covers": [list(edge) for edge in self.covers],
            "meet_irreducibles": self.meet_irreducibles(),
            "clones": self.clone_classes(),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_dot(self) -> str:
        """Graphviz source of the Hasse diagram with clone classes highlighted."""

        highlighted = set(self.clone_classes().values())
        lines = ["digraph minion_lattice {", "  rankdir=BT;", "  node [shape=box, fontname=Helvetica];"]
        for name in self.names:
            if name in highlighted:
                lines.append(f'  "{name}" [style=filled, fillcolor="{CLONE_FILL}"];')
            else:
                lines.append(f'  "{name}";')
        for lower, upper in self.covers:
            lines.append(f'  "{lower}" -> "{upper}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_figure(self):
        if go is None:
            raise LatticeError("Plotly is required for the HTML export. Install it via `pip install plotly`.")
        height = self.heights()
        levels: dict[int, list[str]] = {}
        for name in self.names:
            levels.setdefault(height[name], []).append(name)
        position: dict[str, tuple[float, float]] = {}
        for level, members in levels.items():
            for slot, name in enumerate(members):
                position[name] = (slot - (len(members) - 1) / 2.0, float(level))

        edge_x: list[float | None] = []
        edge_y: list[float | None] = []
        for lower, upper in self.covers:
            edge_x += [position[lower][0], position[upper][0], None]
            edge_y += [position[lower][1], position[upper][1], None]
        highlighted = set(self.clone_classes().values())
        fig = go.Figure()
        fig.add_trace(
            go.Scatter(x=edge_x, y=edge_y, mode="lines", line=dict(color="#999999", width=1), hoverinfo="none")
        )
        fig.add_trace(
            go.Scatter(
                x=[position[name][0] for name in self.names],
                y=[position[name][1] for name in self.names],
                mode="markers+text",
                text=list(self.names),
                textposition="top center",
                marker=dict(
                    size=10,
                    color=[CLONE_FILL if name in highlighted else "#1f77b4" for name in self.names],
                    line=dict(width=1, color="#333333"),
                ),
                name="Classes",
            )
        )
        fig.update_layout(
            height=900,
            margin=dict(l=0, r=0, t=24, b=0),
            paper_bgcolor="rgba(0,0,0,0)",
            showlegend=False,
            xaxis=dict(visible=False),
            yaxis=dict(visible=False),
        )
        return fig

    def to_html(self, path: Path | str | None = None) -> str:
        html = self.to_figure().to_html(include_plotlyjs="cdn", full_html=True)
        if path is not None:
            target = Path(path)
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(html, encoding="utf-8")
        return html


def _antisymmetry_failures(leq: np.ndarray, names: tuple[str, ...]) -> list[tuple[str, str]]:
    tied = np.argwhere(np.triu(leq & leq.T, k=1))
    return [(names[i], names[j]) for i, j in tied]


@lru_cache(maxsize=4)
def build_lattice(m_max: int | None = None) -> ClassLattice:
    """Decide the order by slice containment at every arity up to ``m_max``.

    Without an explicit bound the configured decision arity is used and raised
    by one when two classes still share all slices.
    """

    explicit = m_max is not None
    arity = m_max if explicit else load_settings().decision_arity
    if not 2 <= arity <= ENUMERATION_LIMIT:
        raise ArityError(f"lattice bound must lie in 2..{ENUMERATION_LIMIT}, got {arity}")
    names = get_roster().names
    started = time.perf_counter()
    while True:
        masks = _slice_matrix(_class_masks(arity))
        leq = (masks @ (1.0 - masks).T) == 0
        tied = _antisymmetry_failures(leq, names)
        if not tied:
            break
        if explicit or arity >= ENUMERATION_LIMIT:
            a, b = tied[0]
            raise LatticeError(f"{a} and {b} share every slice up to arity {arity}; raise the bound")
        _log.info("%d class pairs tie at arity %d, escalating", len(tied), arity)
        arity += 1

    strict = nx.DiGraph()
    strict.add_nodes_from(names)
    strict.add_edges_from((names[i], names[j]) for i, j in np.argwhere(leq) if i != j)
    hasse = nx.transitive_reduction(strict)
    hasse.add_nodes_from(names)
    signatures = {np.packbits(row > 0).tobytes(): name for name, row in zip(names, masks)}
    leq.setflags(write=False)
    lattice = ClassLattice(names, leq, arity, hasse, signatures, masks)
    if lattice.top != "Omega" or lattice.bottom != "Empty":
        raise LatticeError(f"expected top Omega and bottom Empty, got {lattice.top} and {lattice.bottom}")
    _log.info(
        "lattice of %d classes with %d covers decided at arity %d in %.2fs",
        len(names),
        hasse.number_of_edges(),
        arity,
        time.perf_counter() - started,
    )
    return lattice


__all__ = ["ClassLattice", "IMAGE_KINDS", "build_lattice"]
