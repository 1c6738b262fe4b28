"""Bounded verification of the stability table, the corollary lists and the supporting lemmas.

Right composition K.C is searched through the star products f * g (every
member of K composed with one clone member in its first argument) plus full
binary compositions. Left composition C.K is decided through binary row
projections: the target class is majority closed, so a composite lies in it
exactly when each of its row pairs does.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence
import logging
import time

import numpy as np

from .closure import is_mu_closed, minor_violation
from .clones import CloneId, clone_leq, clone_mask, clone_members, clone_names, get_clone, unary_content
from .config import ENUMERATION_LIMIT
from .errors import ArityError, LatticeError, MinionError, ParseError
from .lattice import build_lattice
from .predicates import ClassId, class_codes, get_class, get_roster, holds, table_rows, table_space
from .truthtable import (
    ArgMap,
    TruthTable,
    compose,
    format_table,
    maj3,
    minor,
    named,
    row_index,
    star,
)


_log = logging.getLogger("minion_lab.verify")

DEFAULT_BOUND = (3, 3)
RIGHT_LIMIT = 3
FULL_COMPOSITION_ARITY = 2


class VerdictKind(str, Enum):
    HOLDS = "holds_at_bound"
    COUNTEREXAMPLE = "counterexample"


def parse_bound(text: str | Sequence[int]) -> tuple[int, int]:
    """Read a search bound ``k,m`` (clone arity, member arity)."""

    if isinstance(text, str):
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 2 or not all(part.isdigit() for part in parts):
            raise ParseError(f"expected a bound of the form k,m, got {text!r}")
        return int(parts[0]), int(parts[1])
    k, m = text
    return int(k), int(m)


def _check_bound(bound: str | Sequence[int], limit: int) -> tuple[int, int]:
    k, m = parse_bound(bound)
    if not (1 <= k <= limit and 1 <= m <= limit):
        raise ArityError(f"search bound ({k},{m}) must lie within 1..{limit}")
    return k, m


@dataclass(frozen=True)
class Witness:
    """A composite outside the target class: outer(inner...) or the star product."""

    form: str
    outer: TruthTable
    inner: tuple[TruthTable, ...]
    composite: TruthTable

    def recompute(self) -> TruthTable:
        if self.form == "star":
            return star(self.outer, self.inner[0])
        return compose(self.outer, list(self.inner))

    def as_dict(self) -> dict[str, object]:
        return {
            "form": self.form,
            "outer": format_table(self.outer),
            "inner": [format_table(g) for g in self.inner],
            "composite": format_table(self.composite),
        }


@dataclass(frozen=True)
class StabilityVerdict:
    kind: VerdictKind
    side: str
    class_name: str
    clone: str
    target: str
    bound: tuple[int, int]
    witness: Witness | None = None

    @property
    def holds(self) -> bool:
        return self.kind is VerdictKind.HOLDS

    def replays(self) -> bool:
        """A counterexample replays when its composite recomputes and lies outside the target."""

        if self.witness is None:
            return self.holds
        composite = self.witness.recompute()
        return composite == self.witness.composite and not holds(get_class(self.target).expr, composite)

    def as_dict(self) -> dict[str, object]:
        return {
            "kind": self.kind.value,
            "side": self.side,
            "class": self.class_name,
            "clone": self.clone,
            "target": self.target,
            "bound": list(self.bound),
            "witness": None if self.witness is None else self.witness.as_dict(),
        }


# ---------------------------------------------------------------------------
# Right composition
# ---------------------------------------------------------------------------


def _star_rows(f_codes: np.ndarray, n: int, j: int) -> np.ndarray:
    """Rows of f * g for every f in ``f_codes`` and every j-ary g: shape (|F|, 2^(2^j), 2^(n+j-1))."""

    total = n + j - 1
    rows = np.arange(1 << total, dtype=np.int64)
    high = rows >> (n - 1)
    low = rows & ((1 << (n - 1)) - 1)
    inner = table_space(j)[:, high].astype(np.int64)
    index = (inner << (n - 1)) | low
    return table_rows(f_codes, n)[:, index]


def _pair_rows(f_codes: np.ndarray, j: int) -> np.ndarray:
    """Rows of f(g1, g2) for binary f and all j-ary g1, g2: shape (|F|, G, G, 2^j)."""

    inner = table_space(j).astype(np.int64)
    index = (inner[:, None, :] << 1) | inner[None, :, :]
    return table_rows(f_codes, 2)[:, index]


@lru_cache(maxsize=None)
def _star_membership(outer: str, target: str, n: int, j: int) -> np.ndarray:
    codes = class_codes(outer, n)
    if codes.size == 0:
        return np.ones((0, 1 << (1 << j)), dtype=bool)
    composites = _star_rows(codes, n, j)
    flat = composites.reshape(-1, composites.shape[-1])
    return get_class(target).expr.evaluate(flat).reshape(len(codes), -1)


@lru_cache(maxsize=None)
def _pair_membership(outer: str, target: str, j: int) -> np.ndarray:
    codes = class_codes(outer, 2)
    size = 1 << (1 << j)
    if codes.size == 0:
        return np.ones((0, size, size), dtype=bool)
    composites = _pair_rows(codes, j)
    flat = composites.reshape(-1, composites.shape[-1])
    return get_class(target).expr.evaluate(flat).reshape(len(codes), size, size)


def check_right_stability(
    k_class: str | ClassId,
    c: str | CloneId,
    bound: str | Sequence[int] = DEFAULT_BOUND,
    target: str | ClassId | None = None,
) -> StabilityVerdict:
    """Search f in K (arity <= m) and g in C (arity <= k) for a composite outside the target.

    The target defaults to K itself.
    """

    k, m = _check_bound(bound, RIGHT_LIMIT)
    klass, clone = get_class(k_class), get_clone(c)
    goal = get_class(target) if target is not None else klass

    def verdict(witness: Witness | None) -> StabilityVerdict:
        kind = VerdictKind.HOLDS if witness is None else VerdictKind.COUNTEREXAMPLE
        return StabilityVerdict(kind, "right", klass.name, clone.name, goal.name, (k, m), witness)

    for n in range(1, m + 1):
        for j in range(1, k + 1):
            members = _star_membership(klass.name, goal.name, n, j)
            columns = np.flatnonzero(clone_mask(clone, j))
            bad = np.argwhere(~members[:, columns])
            if bad.size:
                f = TruthTable(n, int(class_codes(klass, n)[bad[0][0]]))
                g = TruthTable(j, int(columns[bad[0][1]]))
                return verdict(Witness("star", f, (g,), star(f, g)))
    if m >= 2:
        for j in range(1, min(k, FULL_COMPOSITION_ARITY) + 1):
            members = _pair_membership(klass.name, goal.name, j)
            columns = np.flatnonzero(clone_mask(clone, j))
            bad = np.argwhere(~members[np.ix_(np.arange(members.shape[0]), columns, columns)])
            if bad.size:
                i, a, b = bad[0]
                f = TruthTable(2, int(class_codes(klass, 2)[i]))
                inner = (TruthTable(j, int(columns[a])), TruthTable(j, int(columns[b])))
                return verdict(Witness("compose", f, inner, compose(f, list(inner))))
    return verdict(None)


# ---------------------------------------------------------------------------
# Left composition
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _row_pairs(arity: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = list(combinations(range(1 << arity), 2))
    return np.array([r for r, _ in pairs], dtype=np.int64), np.array([s for _, s in pairs], dtype=np.int64)


@lru_cache(maxsize=None)
def _pair_relations(name: str, arity: int) -> np.ndarray:
    """4-bit code of the set of value pairs each row pair takes over the class slice."""

    first, second = _row_pairs(arity)
    codes = class_codes(name, arity)
    relations = np.zeros(len(first), dtype=np.uint8)
    if codes.size == 0:
        return relations
    rows = table_rows(codes, arity).astype(np.int64)
    values = 2 * rows[:, first] + rows[:, second]
    for q in range(4):
        relations |= ((values == q).any(axis=0).astype(np.uint8) << q)
    return relations


def _relation_choices(relation: int, k: int) -> list[tuple[int, ...]]:
    pairs = [q for q in range(4) if (relation >> q) & 1]
    return list(product(pairs, repeat=k))


@lru_cache(maxsize=None)
def _pair_images(k: int) -> np.ndarray:
    """For each of the 16 binary relations and each k-ary g, the 4-bit code of g applied to relation pairs."""

    space = table_space(k)
    images = np.zeros((16, space.shape[0]), dtype=np.uint8)
    for relation in range(1, 16):
        choices = _relation_choices(relation, k)
        left = [row_index([q >> 1 for q in choice]) for choice in choices]
        right = [row_index([q & 1 for q in choice]) for choice in choices]
        values = (space[:, left].astype(np.uint8) << 1) | space[:, right]
        for q in range(4):
            images[relation] |= ((values == q).any(axis=1).astype(np.uint8) << q)
    return images


def _left_witness(klass: ClassId, arity: int, pair: int, g: TruthTable, missing: int) -> Witness:
    first, second = _row_pairs(arity)
    r, s = int(first[pair]), int(second[pair])
    relation = int(_pair_relations(klass.name, arity)[pair])
    codes = class_codes(klass, arity)
    for choice in _relation_choices(relation, g.arity):
        a = row_index([q >> 1 for q in choice])
        b = row_index([q & 1 for q in choice])
        if 2 * g.value(a) + g.value(b) != missing:
            continue
        inner = []
        for q in choice:
            hit = next(int(code) for code in codes if ((code >> r) & 1) == q >> 1 and ((code >> s) & 1) == q & 1)
            inner.append(TruthTable(arity, hit))
        return Witness("compose", g, tuple(inner), compose(g, inner))
    raise LatticeError(f"no left witness for {klass.name} at rows {r}, {s}")  # pragma: no cover - guarded by the image table


def check_left_stability(
    k_class: str | ClassId,
    c: str | CloneId,
    bound: str | Sequence[int] = DEFAULT_BOUND,
    target: str | ClassId | None = None,
) -> StabilityVerdict:
    """Decide whether g(f_1, ..., f_k) stays in the target for g in C and f_i in K, up to the bound."""

    k, m = _check_bound(bound, ENUMERATION_LIMIT)
    klass, clone = get_class(k_class), get_clone(c)
    goal = get_class(target) if target is not None else klass

    def verdict(witness: Witness | None) -> StabilityVerdict:
        kind = VerdictKind.HOLDS if witness is None else VerdictKind.COUNTEREXAMPLE
        return StabilityVerdict(kind, "left", klass.name, clone.name, goal.name, (k, m), witness)

    for arity in range(1, m + 1):
        source = _pair_relations(klass.name, arity)
        allowed = _pair_relations(goal.name, arity)
        for j in range(1, k + 1):
            columns = np.flatnonzero(clone_mask(clone, j))
            images = _pair_images(j)[source][:, columns]
            bad = images & ~allowed[:, None]
            hits = np.argwhere(bad)
            if hits.size:
                pair, column = (int(x) for x in hits[0])
                excess = int(bad[pair, column])
                missing = (excess & -excess).bit_length() - 1
                g = TruthTable(j, int(columns[column]))
                return verdict(_left_witness(klass, arity, pair, g, missing))
    return verdict(None)


# ---------------------------------------------------------------------------
# Stability table and corollaries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    class_name: str
    right_clone: str
    left_clone: str

    def as_dict(self) -> dict[str, str]:
        return {"class": self.class_name, "right": self.right_clone, "left": self.left_clone}


def table_rows_for_roster() -> list[TableRow]:
    rows = []
    for entry in get_roster():
        for clone in (entry.right_clone, entry.left_clone):
            get_clone(clone)
        rows.append(TableRow(entry.name, entry.right_clone, entry.left_clone))
    return rows


@dataclass(frozen=True)
class Mismatch:
    class_name: str
    clone: str
    side: str
    expected: bool
    verdict: StabilityVerdict

    def as_dict(self) -> dict[str, object]:
        return {
            "class": self.class_name,
            "clone": self.clone,
            "side": self.side,
            "expected_stable": self.expected,
            "verdict": self.verdict.as_dict(),
        }


@dataclass
class TableReport:
    bound: tuple[int, int]
    checked: int = 0
    counterexamples: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    unreplayable: list[StabilityVerdict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.unreplayable

    def as_dict(self) -> dict[str, object]:
        return {
            "bound": list(self.bound),
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "mismatches": [item.as_dict() for item in self.mismatches],
            "unreplayable": [item.as_dict() for item in self.unreplayable],
            "elapsed_seconds": round(self.elapsed, 3),
            "ok": self.ok,
        }


def verify_table2(
    bound: str | Sequence[int] = DEFAULT_BOUND,
    classes: Sequence[str] | None = None,
    clones: Sequence[str] | None = None,
) -> TableReport:
    """Compare bounded verdicts with the stability rows for every class, clone and side."""

    bound = _check_bound(bound, RIGHT_LIMIT)
    report = TableReport(bound)
    started = time.perf_counter()
    wanted = set(classes) if classes is not None else None
    for row in table_rows_for_roster():
        if wanted is not None and row.class_name not in wanted:
            continue
        for clone in clones or clone_names():
            for side, limit_clone, check in (
                ("right", row.right_clone, check_right_stability),
                ("left", row.left_clone, check_left_stability),
            ):
                verdict = check(row.class_name, clone, bound)
                expected = clone_leq(clone, limit_clone)
                report.checked += 1
                if not verdict.holds:
                    report.counterexamples += 1
                    if not verdict.replays():
                        report.unreplayable.append(verdict)
                if verdict.holds != expected:
                    report.mismatches.append(Mismatch(row.class_name, clone, side, expected, verdict))
        _log.debug("checked stability row %s", row.class_name)
    report.elapsed = time.perf_counter() - started
    _log.info("stability table: %d checks, %d mismatches in %.2fs", report.checked, len(report.mismatches), report.elapsed)
    return report


def stable_classes_for(c1: str | CloneId, c2: str | CloneId) -> list[ClassId]:
    """Classes stable under right composition with c1 and left composition with c2."""

    inner, outer = get_clone(c1), get_clone(c2)
    if not clone_leq("SM", outer):
        raise MinionError(f"left clone {outer.name} does not contain SM; the table does not cover it")
    return [
        entry
        for entry in get_roster()
        if clone_leq(inner, entry.right_clone) and clone_leq(outer, entry.left_clone)
    ]


@dataclass(frozen=True)
class CorollaryCheck:
    inner: str
    outer: str
    expected: tuple[str, ...]
    computed: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return set(self.expected) == set(self.computed) and len(self.expected) == len(self.computed)

    def as_dict(self) -> dict[str, object]:
        return {
            "inner": self.inner,
            "outer": self.outer,
            "count": len(self.computed),
            "missing": sorted(set(self.expected) - set(self.computed)),
            "extra": sorted(set(self.computed) - set(self.expected)),
            "ok": self.ok,
        }


def verify_corollaries() -> list[CorollaryCheck]:
    """Recompute every published list of (Ic, C)- and (C, C)-stable classes."""

    roster = get_roster()
    checks = []
    for clone, expected in roster.clonoid_lists.items():
        computed = tuple(entry.name for entry in stable_classes_for("Ic", clone))
        checks.append(CorollaryCheck("Ic", clone, expected, computed))
    for clone, expected in roster.self_stable_lists.items():
        computed = tuple(entry.name for entry in stable_classes_for(clone, clone))
        checks.append(CorollaryCheck(clone, clone, expected, computed))
    return checks


# ---------------------------------------------------------------------------
# Lemmas
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NonInclusion:
    """If C is not below ``outside`` but is below ``inside`` and ``required`` <= K, then K.C (or C.K) leaves ``target``."""

    label: str
    side: str
    outside: tuple[str, ...]
    required: str
    target: str
    inside: tuple[str, ...] = ()

    def applies_to(self, clone: str) -> bool:
        return all(not clone_leq(clone, x) for x in self.outside) and all(clone_leq(clone, x) for x in self.inside)


NONINCLUSIONS: tuple[NonInclusion, ...] = (
    NonInclusion("a", "right", ("Tc",), "Omega_eq", "Omega_leq"),
    NonInclusion("b", "right", ("Tc",), "Omega_neq", "Omega_meet0"),
    NonInclusion("c", "right", ("T0",), "Refl_00", "Omega_0x_c"),
    NonInclusion("d", "right", ("Tc",), "Refl_00", "Omega_00_c"),
    NonInclusion("e", "right", ("Tc",), "Omega_01", "Omega_01_c"),
    NonInclusion("f", "right", ("S",), "Sc", "Smin"),
    NonInclusion("g", "right", ("Tc",), "McU", "Omega_neq"),
    NonInclusion("h", "right", ("Tc",), "SM", "Omega_leq", inside=("S",)),
    NonInclusion("i", "right", ("Tc",), "U_Wneg", "Omega_eq"),
    NonInclusion("j", "right", ("S",), "Smin_00", "Smin", inside=("Tc",)),
    NonInclusion("k", "right", ("U",), "SM", "U"),
    NonInclusion("l", "right", ("U",), "U_Wneg", "U"),
    NonInclusion("m", "right", ("S",), "U_Wneg", "U_Wneg"),
    NonInclusion("n", "right", ("M",), "U_Wneg", "U", inside=("S",)),
    NonInclusion("o", "right", ("S",), "Refl_00", "Refl"),
    NonInclusion("p", "left", ("M",), "Omega_01_c", "Omega_leq"),
    NonInclusion("q", "left", ("U",), "Smin", "Omega_meet0"),
    NonInclusion("r", "left", ("S",), "S", "Omega_neq"),
    NonInclusion("s", "left", ("M",), "Refl_00_c", "Omega_0x_c"),
    NonInclusion("t", "left", ("T0",), "Refl_00", "Omega_meet0"),
    NonInclusion("u", "left", ("M0",), "Omega_01_c0", "Omega_01_c0"),
    NonInclusion("v", "left", ("U",), "U_Wneg", "Smin"),
    NonInclusion("w", "left", ("M",), "Smin_neq", "Smin", inside=("S",)),
    NonInclusion("x", "left", ("MU",), "TcU_c0", "Smin_01_c0"),
    NonInclusion("y", "left", ("Tc",), "SM", "Omega_01"),
    NonInclusion("z", "left", ("U",), "McU", "Smin"),
)


@dataclass(frozen=True)
class NonInclusionResult:
    label: str
    clone: str
    verdict: StabilityVerdict

    @property
    def ok(self) -> bool:
        return not self.verdict.holds and self.verdict.replays()

    def as_dict(self) -> dict[str, object]:
        return {"item": self.label, "clone": self.clone, "ok": self.ok, "verdict": self.verdict.as_dict()}


def verify_noninclusions(bound: str | Sequence[int] = DEFAULT_BOUND) -> list[NonInclusionResult]:
    """Reproduce every noninclusion by bounded search, for each fragment clone meeting its hypotheses."""

    results = []
    for item in NONINCLUSIONS:
        check = check_right_stability if item.side == "right" else check_left_stability
        for clone in clone_names():
            if item.applies_to(clone):
                verdict = check(item.required, clone, bound, target=item.target)
                results.append(NonInclusionResult(item.label, clone, verdict))
    return results


# (label, clone bound, arity, alternatives); a clone not below the bound has a member matching one alternative
UNARY_CONTENT_CLAUSES: tuple[tuple[str, str, int, tuple[dict[str, int], ...]], ...] = (
    ("i", "T0", 1, ({"0": 1},)),
    ("ii", "Tc", 1, ({"0": 1}, {"1": 0})),
    ("iii", "M", 3, ({"001": 1, "011": 0},)),
    ("iv", "S", 2, ({"01": 0, "10": 0}, {"01": 1, "10": 1})),
    ("v", "U", 3, ({"001": 1, "010": 1},)),
)


@dataclass(frozen=True)
class ClauseResult:
    label: str
    clone: str
    premise: bool
    witness: TruthTable | None

    @property
    def ok(self) -> bool:
        return self.premise == (self.witness is not None)

    def as_dict(self) -> dict[str, object]:
        return {
            "clause": self.label,
            "clone": self.clone,
            "premise": self.premise,
            "witness": None if self.witness is None else format_table(self.witness),
            "ok": self.ok,
        }


def _pattern_member(clone: str, arity: int, pattern: dict[str, int]) -> TruthTable | None:
    for f in clone_members(clone, arity):
        if all(f.value(int(point, 2)) == value for point, value in pattern.items()):
            return f
    return None


def verify_unary_content() -> list[ClauseResult]:
    """Each clone escapes a bound exactly when it contains a member of the matching shape."""

    results = []
    for label, bound_clone, arity, alternatives in UNARY_CONTENT_CLAUSES:
        for clone in clone_names():
            premise = not clone_leq(clone, bound_clone)
            witness = None
            for pattern in alternatives:
                witness = _pattern_member(clone, arity, pattern)
                if witness is not None:
                    break
            results.append(ClauseResult(label, clone, premise, witness))
    return results


def constant_or_negation_content(clone: str | CloneId) -> frozenset[str]:
    """Members of the clone among 0, 1 and negation."""

    return unary_content(clone) & {"const0", "const1", "not"}


@dataclass
class LemmaReport:
    noninclusions: list[NonInclusionResult]
    clauses: list[ClauseResult]

    @property
    def ok(self) -> bool:
        return all(item.ok for item in self.noninclusions) and all(item.ok for item in self.clauses)

    def as_dict(self) -> dict[str, object]:
        return {
            "ok": self.ok,
            "noninclusions": [item.as_dict() for item in self.noninclusions],
            "unary_content": [item.as_dict() for item in self.clauses],
        }


def verify_lemmas(bound: str | Sequence[int] = DEFAULT_BOUND) -> LemmaReport:
    return LemmaReport(verify_noninclusions(bound), verify_unary_content())


# ---------------------------------------------------------------------------
# Roster checks
# ---------------------------------------------------------------------------


@dataclass
class RosterReport:
    count: int
    max_arity: int
    decision_arity: int
    minor_violations: dict[str, str] = field(default_factory=dict)
    mu_violations: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.count == 93 and not self.minor_violations and not self.mu_violations

    def as_dict(self) -> dict[str, object]:
        return {
            "count": self.count,
            "max_arity": self.max_arity,
            "decision_arity": self.decision_arity,
            "minor_violations": self.minor_violations,
            "mu_violations": self.mu_violations,
            "elapsed_seconds": round(self.elapsed, 3),
            "ok": self.ok,
        }


def verify_roster(m_max: int = ENUMERATION_LIMIT) -> RosterReport:
    """Count, distinctness, minor closure and majority closure of every class slice."""

    if not 1 <= m_max <= ENUMERATION_LIMIT:
        raise ArityError(f"roster checks run at arity 1..{ENUMERATION_LIMIT}, got {m_max}")
    started = time.perf_counter()
    roster = get_roster()
    lattice = build_lattice()
    report = RosterReport(len(roster), m_max, lattice.decision_arity)
    for entry in roster:
        slices = {m: class_codes(entry, m).tolist() for m in range(1, m_max + 1)}
        violation = minor_violation(slices)
        if violation is not None:
            f, sigma = violation
            report.minor_violations[entry.name] = f"{format_table(f)} under {sigma}"
        for m, codes in slices.items():
            if not is_mu_closed(codes, m):
                report.mu_violations[entry.name] = m
                break
    report.elapsed = time.perf_counter() - started
    _log.info("roster checks finished in %.2fs", report.elapsed)
    return report


# ---------------------------------------------------------------------------
# Star product with the majority
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StarMuIdentity:
    f: TruthTable
    minors: tuple[TruthTable, TruthTable, TruthTable]
    composite: TruthTable
    product: TruthTable

    @property
    def holds(self) -> bool:
        return self.composite == self.product

    def as_dict(self) -> dict[str, object]:
        return {
            "f": format_table(self.f),
            "minors": [format_table(g) for g in self.minors],
            "majority_of_minors": format_table(self.composite),
            "star": format_table(self.product),
            "holds": self.holds,
        }


def star_mu_identity(f: TruthTable) -> StarMuIdentity:
    """Compare f * maj with the majority of the minors that feed argument i (i = 1, 2, 3) into f's first slot."""

    n = f.arity
    minors = tuple(minor(f, ArgMap((i,) + tuple(range(4, n + 3)), n + 2)) for i in (1, 2, 3))
    maj = named("maj")
    return StarMuIdentity(f, minors, maj3(*minors), star(f, maj))


__all__ = [
    "DEFAULT_BOUND",
    "NONINCLUSIONS",
    "UNARY_CONTENT_CLAUSES",
    "ClauseResult",
    "CorollaryCheck",
    "LemmaReport",
    "Mismatch",
    "NonInclusion",
    "NonInclusionResult",
    "RosterReport",
    "StabilityVerdict",
    "StarMuIdentity",
    "TableReport",
    "TableRow",
    "VerdictKind",
    "Witness",
    "check_left_stability",
    "check_right_stability",
    "constant_or_negation_content",
    "parse_bound",
    "stable_classes_for",
    "star_mu_identity",
    "table_rows_for_roster",
    "verify_corollaries",
    "verify_lemmas",
    "verify_noninclusions",
    "verify_roster",
    "verify_table2",
]
