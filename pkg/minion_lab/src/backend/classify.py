"""Classification of generator sets and constructive self-dual monotone witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence
import logging

import numpy as np

from .closure import sm_closure
from .config import max_arity
from .errors import ArityError, BudgetError, HypothesisError, LatticeError, NotBisectableError, ParseError
from .lattice import build_lattice
from .predicates import ClassId, enumerate_class, get_roster, holds
from .truthtable import (
    ArgMap,
    TruthTable,
    all_arg_maps,
    compose,
    format_table,
    minor,
    minor_row_matrix,
    row_index,
    row_tuple,
)


_log = logging.getLogger("minion_lab.classify")

ORACLE_ARITY = 3


def parse_point(text: str, arity: int | None = None) -> tuple[int, ...]:
    """Read a tuple literal such as ``110``."""

    text = (text or "").strip()
    if not text or set(text) - {"0", "1"}:
        raise ParseError(f"expected a bit string such as 110, got {text!r}")
    if arity is not None and len(text) != arity:
        raise ArityError(f"tuple {text!r} has {len(text)} entries, expected {arity}")
    return tuple(int(ch) for ch in text)


def format_point(point: Sequence[int]) -> str:
    return "".join(str(int(bit)) for bit in point)


# ---------------------------------------------------------------------------
# Point sets and the self-dual monotone extension
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PointSets:
    """Required true points and false points of an n-ary function."""

    n: int
    true_points: frozenset[tuple[int, ...]] = frozenset()
    false_points: frozenset[tuple[int, ...]] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ArityError(f"point sets need a positive arity, got {self.n}")
        for point in self.true_points | self.false_points:
            if len(point) != self.n or any(bit not in (0, 1) for bit in point):
                raise ArityError(f"point {point!r} is not a 0/1 tuple of length {self.n}")

    @classmethod
    def from_rows(cls, n: int, true_rows: Iterable[int], false_rows: Iterable[int]) -> "PointSets":
        return cls(
            n,
            frozenset(row_tuple(row, n) for row in true_rows),
            frozenset(row_tuple(row, n) for row in false_rows),
        )

    def true_rows(self) -> np.ndarray:
        return np.array(sorted(row_index(point) for point in self.true_points), dtype=np.int64)

    def false_rows(self) -> np.ndarray:
        return np.array(sorted(row_index(point) for point in self.false_points), dtype=np.int64)

    def violation(self) -> tuple[str, tuple[int, ...], tuple[int, ...]] | None:
        """First pair breaking the extension hypotheses, with the clause it breaks."""

        full = (1 << self.n) - 1
        true_rows, false_rows = self.true_rows(), self.false_rows()
        meets = (true_rows[:, None] & true_rows[None, :]) == 0
        joins = (false_rows[:, None] | false_rows[None, :]) == full
        below = (true_rows[:, None] & ~false_rows[None, :] & full) == 0
        clauses = (
            ("true point below the complement of a true point", true_rows, true_rows, meets),
            ("complement of a false point below a false point", false_rows, false_rows, joins),
            ("true point below a false point", true_rows, false_rows, below),
        )
        for label, left, right, broken in clauses:
            hits = np.argwhere(broken)
            if hits.size:
                i, j = hits[0]
                return label, row_tuple(int(left[i]), self.n), row_tuple(int(right[j]), self.n)
        return None

    def check(self) -> None:
        found = self.violation()
        if found is not None:
            label, u, v = found
            raise HypothesisError(f"{label}: {format_point(u)}, {format_point(v)}", pair=(u, v))

    def as_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "true": sorted(format_point(point) for point in self.true_points),
            "false": sorted(format_point(point) for point in self.false_points),
        }


def _upset_mask(seeds: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    up = np.zeros(size, dtype=bool)
    up[seeds] = True
    rows = np.arange(size, dtype=np.int64)
    for bit in range(n):
        step = 1 << bit
        has = (rows & step) != 0
        up[has] |= up[rows[has] ^ step]
    return up


def _bits_from_mask(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def extend_sm(ps: PointSets) -> TruthTable:
    """A self-dual monotone function that is 1 on the true points and 0 on the false points.

    Starts from the up-closure of the true points and the complemented false
    points and keeps adding the lexicographically greatest free tuple. That
    tuple always has first coordinate 1 and is maximal among free tuples, so
    every free row ends up with the value of its first coordinate.
    """

    ps.check()
    n = ps.n
    if n > max_arity():
        raise ArityError(f"extension of arity {n} exceeds MAX_ARITY={max_arity()}")
    full = (1 << n) - 1
    seeds = np.concatenate([ps.true_rows(), full ^ ps.false_rows()]).astype(np.int64)
    up = _upset_mask(seeds, n)
    rows = np.arange(1 << n, dtype=np.int64)
    below = up[rows ^ full]
    first = ((rows >> (n - 1)) & 1).astype(bool)
    values = up | (~below & first)
    return TruthTable(n, _bits_from_mask(values))


# ---------------------------------------------------------------------------
# Bisectability and decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MinorRef:
    """An n-ary minor of a generator, identified by generator index and argument map."""

    gen_index: int
    sigma: ArgMap
    table: TruthTable

    def as_dict(self) -> dict[str, object]:
        return {"gen_index": self.gen_index, "sigma": self.sigma.as_list(), "table": format_table(self.table)}


def generator_minors(gens: Sequence[TruthTable], arity: int) -> list[MinorRef]:
    """Distinct ``arity``-ary minors of the generators, first occurrence kept.

    Order: generator index, then the argument map's image tuple.
    """

    seen: set[int] = set()
    found: list[MinorRef] = []
    for gen_index, g in enumerate(gens):
        for sigma in all_arg_maps(g.arity, arity):
            table = minor(g, sigma)
            if table.bits in seen:
                continue
            seen.add(table.bits)
            found.append(MinorRef(gen_index, sigma, table))
    return found


@dataclass(frozen=True)
class PairWitness:
    condition: str
    first: tuple[int, ...]
    second: tuple[int, ...]
    minor: MinorRef | None

    def as_dict(self) -> dict[str, object]:
        return {
            "condition": self.condition,
            "pair": [format_point(self.first), format_point(self.second)],
            "witness": None if self.minor is None else self.minor.as_dict(),
        }


@dataclass
class BisectionReport:
    """Outcome of the bisectability test with one witness per checked pair."""

    target: TruthTable
    bisectable: bool
    witnesses: list[PairWitness] = field(default_factory=list)
    failure: PairWitness | None = None

    def __bool__(self) -> bool:
        return self.bisectable

    def as_dict(self) -> dict[str, object]:
        return {
            "target": format_table(self.target),
            "bisectable": self.bisectable,
            "failure": None if self.failure is None else self.failure.as_dict(),
            "witnesses": [witness.as_dict() for witness in self.witnesses],
        }


_CONDITIONS = (
    ("A", True, True, True, True),
    ("B", False, False, False, False),
    ("C", True, False, True, False),
)


def is_bisectable(f: TruthTable, gens: Sequence[TruthTable]) -> BisectionReport:
    """Check the three pair conditions against the n-ary minors of the generators.

    (A) two true points share a minor that is 1 on both; (B) two false points
    share a minor that is 0 on both; (C) a true and a false point are split by a
    minor that is 1 on the first and 0 on the second. Pairs may repeat a point.
    """

    phis = generator_minors(gens, f.arity)
    size = f.size
    values = np.array([[(ref.table.bits >> row) & 1 for row in range(size)] for ref in phis], dtype=bool)
    values = values.reshape(len(phis), size)
    true_rows, false_rows = f.true_rows(), f.false_rows()
    report = BisectionReport(f, True)
    for label, left_true, right_true, left_value, right_value in _CONDITIONS:
        left = true_rows if left_true else false_rows
        right = true_rows if right_true else false_rows
        for i, a in enumerate(left):
            for b in (right[i:] if left_true == right_true else right):
                hits = (values[:, a] == left_value) & (values[:, b] == right_value)
                pair = (row_tuple(a, f.arity), row_tuple(b, f.arity))
                if not hits.any():
                    report.bisectable = False
                    report.failure = PairWitness(label, pair[0], pair[1], None)
                    return report
                report.witnesses.append(PairWitness(label, pair[0], pair[1], phis[int(np.argmax(hits))]))
    return report


@dataclass(frozen=True)
class Decomposition:
    """f = h(phi_1, ..., phi_N) with h self-dual monotone and each phi a generator minor."""

    h: TruthTable
    phis: tuple[MinorRef, ...]

    def replay(self) -> TruthTable:
        return compose(self.h, [ref.table for ref in self.phis])

    def as_dict(self) -> dict[str, object]:
        return {
            "h": format_table(self.h),
            "phis": [{"gen_index": ref.gen_index, "sigma": ref.sigma.as_list()} for ref in self.phis],
        }


def sm_decompose(f: TruthTable, gens: Sequence[TruthTable]) -> Decomposition:
    report = is_bisectable(f, gens)
    if not report:
        failure = report.failure
        raise NotBisectableError(
            f"{format_table(f)} is not bisectable: condition {failure.condition} fails on "
            f"{format_point(failure.first)}, {format_point(failure.second)}"
        )
    phis = generator_minors(gens, f.arity)
    width = len(phis)
    if width > max_arity():
        raise BudgetError(f"decomposition needs an outer function of arity {width}, MAX_ARITY is {max_arity()}")
    images = [0] * f.size
    for ref in phis:
        for row in range(f.size):
            images[row] = (images[row] << 1) | ((ref.table.bits >> row) & 1)
    points = PointSets.from_rows(
        width,
        {images[row] for row in f.true_rows()},
        {images[row] for row in f.false_rows()},
    )
    h = extend_sm(points)
    decomposition = Decomposition(h, tuple(phis))
    if decomposition.replay() != f:
        raise LatticeError(f"decomposition of {format_table(f)} does not replay")
    _log.debug("decomposed %s through %d generator minors", format_table(f), width)
    return decomposition


def minor_search(f: TruthTable, spec: Mapping, arity: int) -> ArgMap | None:
    """First argument map sigma into ``arity`` positions whose minor matches ``spec``.

    ``spec`` maps tuples (or bit strings) of length ``arity`` to required values.
    """

    rows: list[int] = []
    wanted: list[int] = []
    for key, value in spec.items():
        point = parse_point(key, arity) if isinstance(key, str) else tuple(int(bit) for bit in key)
        if len(point) != arity:
            raise ArityError(f"required point {point!r} does not have {arity} entries")
        rows.append(row_index(point))
        wanted.append(1 if value else 0)
    index = minor_row_matrix(f.arity, arity)
    values = np.array([(f.bits >> row) & 1 for row in range(f.size)], dtype=np.int64)
    if not rows:
        return ArgMap((1,) * f.arity, arity)
    matches = (values[index[rows, :]] == np.array(wanted)[:, None]).all(axis=0)
    hits = np.flatnonzero(matches)
    if hits.size == 0:
        return None
    return ArgMap(_nth_image(f.arity, arity, int(hits[0])), arity)


def _nth_image(source_arity: int, target_arity: int, position: int) -> tuple[int, ...]:
    """Image tuple of the map at ``position`` in lexicographic order."""

    digits = []
    for _ in range(source_arity):
        digits.append(position % target_arity + 1)
        position //= target_arity
    return tuple(reversed(digits))


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


def containing_classes(functions: Iterable[TruthTable]) -> list[ClassId]:
    """Roster classes (in roster order) that contain every given function."""

    functions = list(functions)
    return [entry for entry in get_roster() if all(holds(entry.expr, f) for f in functions)]


def oracle_arities(functions: Sequence[TruthTable]) -> tuple[int, ...]:
    if not functions:
        return (1,)
    top = min(ORACLE_ARITY, max(f.arity for f in functions) + 1)
    return tuple(range(1, top + 1))


@dataclass(frozen=True)
class Classification:
    name: str
    checked_arities: tuple[int, ...]
    containing: tuple[str, ...]

    def as_dict(self) -> dict[str, object]:
        return {
            "class": self.name,
            "checked_arities": list(self.checked_arities),
            "containing": list(self.containing),
        }


def classify_functions(functions: Iterable[TruthTable]) -> Classification:
    """Generated class of F, cross-checked against the closure oracle."""

    functions = list(functions)
    lattice = build_lattice()
    containing = containing_classes(functions)
    names = [entry.name for entry in containing]
    minimal = [a for a in names if not any(lattice.lt(b, a) for b in names)]
    if len(minimal) != 1:
        raise LatticeError(f"no unique least containing class: {', '.join(minimal) or 'none'}")
    result = minimal[0]
    arities = oracle_arities(functions)
    for m in arities:
        closure = sm_closure(functions, m)
        expected = enumerate_class(result, m)
        if closure.codes != expected.codes:
            raise LatticeError(
                f"closure slice at arity {m} has {len(closure)} members, class {result} has {len(expected)}"
            )
    return Classification(result, arities, tuple(names))


def generated_class(functions: Iterable[TruthTable]) -> ClassId:
    return get_roster().get(classify_functions(functions).name)


__all__ = [
    "BisectionReport",
    "Classification",
    "Decomposition",
    "MinorRef",
    "PairWitness",
    "PointSets",
    "classify_functions",
    "containing_classes",
    "extend_sm",
    "format_point",
    "generated_class",
    "generator_minors",
    "is_bisectable",
    "minor_search",
    "oracle_arities",
    "parse_point",
    "sm_decompose",
]
