"""Membership predicates for the base properties and the stable-class roster.

Expressions evaluate on Boolean row matrices: one row per truth table, one
column per input row of the table. A single function of any arity and a whole
table space at arity m <= 4 go through the same evaluator; table-space masks
are cached, and negation/inner-negation/dual images become index permutations
there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence
import logging
import re

import numpy as np

from .config import ENUMERATION_LIMIT, load_settings
from .errors import ArityError, LatticeError, ParseError, RosterError, UnknownNameError
from .roster_store import RosterRecord, load_roster_records, load_roster_document
from .truthtable import FnSet, TruthTable


_log = logging.getLogger("minion_lab.predicates")


class PropTag(str, Enum):
    ALL = "all"
    EMPTY = "empty"
    VAL0 = "val0"
    VAL1 = "val1"
    EQ = "eq"
    NEQ = "neq"
    LEQ = "leq"
    GEQ = "geq"
    MEET0 = "meet0"
    JOIN1 = "join1"
    MONOTONE = "monotone"
    SELF_DUAL = "selfdual"
    REFLEXIVE = "reflexive"
    SMIN = "smin"
    SMAJ = "smaj"
    SEP1 = "sep1"
    SEP0 = "sep0"
    CONSTANT = "constant"
    PROJECTION = "projection"


_VALUED_TAGS = {PropTag.VAL0, PropTag.VAL1, PropTag.SEP1, PropTag.SEP0}


# ---------------------------------------------------------------------------
# Row matrices
# ---------------------------------------------------------------------------


def table_rows(codes: Sequence[int] | np.ndarray, arity: int) -> np.ndarray:
    """Boolean matrix with row i holding the bits of ``codes[i]``."""

    size = 1 << arity
    if size <= 62:
        values = np.asarray(codes, dtype=np.int64).reshape(-1)
        return ((values[:, None] >> np.arange(size, dtype=np.int64)) & 1).astype(bool)
    rows = np.zeros((len(codes), size), dtype=bool)
    for i, code in enumerate(codes):
        code = int(code)
        for row in range(size):
            rows[i, row] = (code >> row) & 1
    return rows


def pack_rows(rows: np.ndarray) -> np.ndarray:
    """Inverse of :func:`table_rows` for tables of up to 64 rows."""

    size = rows.shape[1]
    if size > 64:
        raise ArityError("packing supports tables with at most 64 rows")
    shifts = np.arange(size, dtype=np.uint64)
    return np.bitwise_or.reduce(rows.astype(np.uint64) << shifts, axis=1)


def _check_space_arity(arity: int) -> None:
    if not 1 <= arity <= ENUMERATION_LIMIT:
        raise ArityError(f"full enumeration supports arity 1..{ENUMERATION_LIMIT}, got {arity}")


@lru_cache(maxsize=None)
def table_space(arity: int) -> np.ndarray:
    """Row matrix of every table of the given arity, indexed by bit vector."""

    _check_space_arity(arity)
    rows = table_rows(np.arange(1 << (1 << arity), dtype=np.int64), arity)
    rows.setflags(write=False)
    return rows


@lru_cache(maxsize=None)
def complement_index(arity: int) -> np.ndarray:
    _check_space_arity(arity)
    codes = np.arange(1 << (1 << arity), dtype=np.int64)
    return codes ^ ((1 << (1 << arity)) - 1)


@lru_cache(maxsize=None)
def reverse_index(arity: int) -> np.ndarray:
    """Bit vector of the inner negation of every table."""

    return pack_rows(table_space(arity)[:, ::-1]).astype(np.int64)


@lru_cache(maxsize=None)
def _monotone_pairs(size: int) -> tuple[tuple[int, int], ...]:
    arity = size.bit_length() - 1
    return tuple(
        (row, row | (1 << bit)) for row in range(size) for bit in range(arity) if not (row >> bit) & 1
    )


@lru_cache(maxsize=None)
def _separating_sets(size: int, rank: int, ones: bool) -> tuple[tuple[int, ...], ...]:
    """Row sets of at most ``rank`` rows with no common 1 (ones=True) or no common 0."""

    last = size - 1
    found: list[tuple[int, ...]] = []
    for width in range(1, rank + 1):
        for subset in combinations(range(size), width):
            if ones:
                meet = last
                for row in subset:
                    meet &= row
                if meet == 0:
                    found.append(subset)
            else:
                join = 0
                for row in subset:
                    join |= row
                if join == last:
                    found.append(subset)
    return tuple(found)


@lru_cache(maxsize=None)
def _projection_patterns(size: int) -> np.ndarray:
    arity = size.bit_length() - 1
    rows = np.arange(size)
    return np.array([((rows >> (arity - i)) & 1).astype(bool) for i in range(1, arity + 1)])


# ---------------------------------------------------------------------------
# Expressions
# ---------------------------------------------------------------------------


class ClassExpr:
    """Base of the class-expression tree."""

    def evaluate(self, rows: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.describe()


@dataclass(frozen=True)
class BaseProp(ClassExpr):
    tag: PropTag
    value: int | None = None

    def __post_init__(self) -> None:
        if self.tag in _VALUED_TAGS and self.value is None:
            raise ParseError(f"{self.tag.value} needs an argument")
        if self.tag in {PropTag.VAL0, PropTag.VAL1} and self.value not in (0, 1):
            raise ParseError(f"{self.tag.value} takes 0 or 1, got {self.value}")
        if self.tag in {PropTag.SEP1, PropTag.SEP0} and (self.value is None or self.value < 2):
            raise ParseError(f"{self.tag.value} needs a rank k >= 2, got {self.value}")
        if self.tag not in _VALUED_TAGS and self.value is not None:
            raise ParseError(f"{self.tag.value} takes no argument")

    def evaluate(self, rows: np.ndarray) -> np.ndarray:
        count, size = rows.shape
        last = size - 1
        first_bit, last_bit = rows[:, 0], rows[:, last]
        tag = self.tag
        if tag is PropTag.ALL:
            return np.ones(count, dtype=bool)
        if tag is PropTag.EMPTY:
            return np.zeros(count, dtype=bool)
        if tag is PropTag.VAL0:
            return first_bit == bool(self.value)
        if tag is PropTag.VAL1:
            return last_bit == bool(self.value)
        if tag is PropTag.EQ:
            return first_bit == last_bit
        if tag is PropTag.NEQ:
            return first_bit != last_bit
        if tag is PropTag.LEQ:
            return ~first_bit | last_bit
        if tag is PropTag.GEQ:
            return first_bit | ~last_bit
        if tag is PropTag.MEET0:
            return ~(first_bit & last_bit)
        if tag is PropTag.JOIN1:
            return first_bit | last_bit
        if tag is PropTag.CONSTANT:
            return rows.all(axis=1) | ~rows.any(axis=1)
        if tag is PropTag.SELF_DUAL:
            return (rows != rows[:, ::-1]).all(axis=1)
        if tag is PropTag.REFLEXIVE:
            return (rows == rows[:, ::-1]).all(axis=1)
        if tag is PropTag.SMIN:
            return ~(rows & rows[:, ::-1]).any(axis=1)
        if tag is PropTag.SMAJ:
            return (rows | rows[:, ::-1]).all(axis=1)
        if tag is PropTag.MONOTONE:
            result = np.ones(count, dtype=bool)
            for low, high in _monotone_pairs(size):
                result &= ~rows[:, low] | rows[:, high]
            return result
        if tag is PropTag.SEP1:
            result = np.ones(count, dtype=bool)
            for subset in _separating_sets(size, self.value, True):
                result &= ~rows[:, list(subset)].all(axis=1)
            return result
        if tag is PropTag.SEP0:
            result = np.ones(count, dtype=bool)
            for subset in _separating_sets(size, self.value, False):
                result &= rows[:, list(subset)].any(axis=1)
            return result
        if tag is PropTag.PROJECTION:
            patterns = _projection_patterns(size)
            return (rows[:, None, :] == patterns[None, :, :]).all(axis=2).any(axis=1)
        raise ParseError(f"unhandled property {tag}")  # pragma: no cover - exhaustive

    def describe(self) -> str:
        if self.value is None:
            return self.tag.value
        return f"{self.tag.value}({self.value})"


@dataclass(frozen=True)
class Intersect(ClassExpr):
    parts: tuple[ClassExpr, ...]

    def evaluate(self, rows: np.ndarray) -> np.ndarray:
        result = np.ones(rows.shape[0], dtype=bool)
        for part in self.parts:
            result &= part.evaluate(rows)
        return result

    def describe(self) -> str:
        return "and(" + ", ".join(part.describe() for part in self.parts) + ")"


@dataclass(frozen=True)
class Union(ClassExpr):
    parts: tuple[ClassExpr, ...]

    def evaluate(self, rows: np.ndarray) -> np.ndarray:
        result = np.zeros(rows.shape[0], dtype=bool)
        for part in self.parts:
            result |= part.evaluate(rows)
        return result

    def describe(self) -> str:
        return "or(" + ", ".join(part.describe() for part in self.parts) + ")"


@dataclass(frozen=True)
class NegImage(ClassExpr):
    """Holds of f iff the inner expression holds of the negation of f."""

    inner: ClassExpr

    def evaluate(self, rows: np.ndarray) -> np.ndarray:
        return self.inner.evaluate(~rows)

    def describe(self) -> str:
        return f"neg({self.inner.describe()})"


@dataclass(frozen=True)
class InnerNegImage(ClassExpr):
    inner: ClassExpr

    def evaluate(self, rows: np.ndarray) -> np.ndarray:
        return self.inner.evaluate(rows[:, ::-1])

    def describe(self) -> str:
        return f"inneg({self.inner.describe()})"


@dataclass(frozen=True)
class DualImage(ClassExpr):
    inner: ClassExpr

    def evaluate(self, rows: np.ndarray) -> np.ndarray:
        return self.inner.evaluate(~rows[:, ::-1])

    def describe(self) -> str:
        return f"dual({self.inner.describe()})"


@dataclass(frozen=True)
class Named(ClassExpr):
    """A resolved reference to another roster class; evaluates as its expression."""

    name: str
    inner: ClassExpr = field(compare=True)

    def evaluate(self, rows: np.ndarray) -> np.ndarray:
        return self.inner.evaluate(rows)

    def describe(self) -> str:
        return self.name


@dataclass(frozen=True)
class Ref(ClassExpr):
    """An unresolved name inside a parsed expression."""

    name: str

    def evaluate(self, rows: np.ndarray) -> np.ndarray:
        raise RosterError(f"unresolved reference {self.name!r}")

    def describe(self) -> str:
        return self.name


def neg_image(expr: ClassExpr) -> ClassExpr:
    if isinstance(expr, NegImage):
        return expr.inner
    return NegImage(expr)


def inner_neg_image(expr: ClassExpr) -> ClassExpr:
    if isinstance(expr, InnerNegImage):
        return expr.inner
    return InnerNegImage(expr)


def dual_image(expr: ClassExpr) -> ClassExpr:
    if isinstance(expr, DualImage):
        return expr.inner
    return DualImage(expr)


@lru_cache(maxsize=None)
def space_mask(expr: ClassExpr, arity: int) -> np.ndarray:
    """Membership mask of ``expr`` over the whole table space of ``arity``."""

    if isinstance(expr, BaseProp):
        mask = expr.evaluate(table_space(arity))
    elif isinstance(expr, Intersect):
        mask = np.ones(1 << (1 << arity), dtype=bool)
        for part in expr.parts:
            mask = mask & space_mask(part, arity)
    elif isinstance(expr, Union):
        mask = np.zeros(1 << (1 << arity), dtype=bool)
        for part in expr.parts:
            mask = mask | space_mask(part, arity)
    elif isinstance(expr, NegImage):
        mask = space_mask(expr.inner, arity)[complement_index(arity)]
    elif isinstance(expr, InnerNegImage):
        mask = space_mask(expr.inner, arity)[reverse_index(arity)]
    elif isinstance(expr, DualImage):
        full = (1 << (1 << arity)) - 1
        mask = space_mask(expr.inner, arity)[reverse_index(arity) ^ full]
    elif isinstance(expr, Named):
        mask = space_mask(expr.inner, arity)
    else:
        raise RosterError(f"cannot evaluate {expr!r}")
    mask = np.array(mask, dtype=bool)
    mask.setflags(write=False)
    return mask


# ---------------------------------------------------------------------------
# Expression syntax
# ---------------------------------------------------------------------------


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")
_COMBINATORS = {"and", "or", "neg", "inneg", "dual"}


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    position = 0
    text = text.strip()
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:  # pragma: no cover - the pattern accepts any non-space
            raise ParseError(f"cannot tokenize {text!r} at {position}")
        tokens.append(match.group(1) or match.group(2) or match.group(3))
        position = match.end()
    return tokens


class _ExprParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.position = 0

    def _peek(self) -> str | None:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def _take(self, expected: str | None = None) -> str:
        token = self._peek()
        if token is None or (expected is not None and token != expected):
            raise ParseError(f"{self.text!r}: expected {expected or 'a token'}, got {token!r}")
        self.position += 1
        return token

    def parse(self) -> ClassExpr:
        expr = self._expr()
        if self._peek() is not None:
            raise ParseError(f"{self.text!r}: trailing input at {self._peek()!r}")
        return expr

    def _expr(self) -> ClassExpr:
        word = self._take()
        if not re.match(r"[A-Za-z_]", word):
            raise ParseError(f"{self.text!r}: unexpected {word!r}")
        if word in _COMBINATORS:
            self._take("(")
            parts = [self._expr()]
            while self._peek() == ",":
                self._take(",")
                parts.append(self._expr())
            self._take(")")
            if word in {"and", "or"}:
                return Intersect(tuple(parts)) if word == "and" else Union(tuple(parts))
            if len(parts) != 1:
                raise ParseError(f"{self.text!r}: {word} takes one argument")
            return {"neg": neg_image, "inneg": inner_neg_image, "dual": dual_image}[word](parts[0])
        try:
            tag = PropTag(word)
        except ValueError:
            return Ref(word)
        value = None
        if self._peek() == "(":
            self._take("(")
            digits = self._take()
            if not digits.isdigit():
                raise ParseError(f"{self.text!r}: {word} takes an integer argument")
            value = int(digits)
            self._take(")")
        return BaseProp(tag, value)


def parse_expr(text: str) -> ClassExpr:
    """Parse the roster expression syntax, e.g. ``and(smin, or(Omega_01, Vak0))``."""

    return _ExprParser(text).parse()


def _resolve(expr: ClassExpr, definitions: dict[str, ClassExpr], stack: tuple[str, ...]) -> ClassExpr:
    if isinstance(expr, Ref):
        if expr.name in stack:
            raise RosterError("reference cycle: " + " -> ".join(stack + (expr.name,)))
        if expr.name not in definitions:
            raise RosterError(f"unknown reference {expr.name!r}")
        return Named(expr.name, _resolve(definitions[expr.name], definitions, stack + (expr.name,)))
    if isinstance(expr, (Intersect, Union)):
        return type(expr)(tuple(_resolve(part, definitions, stack) for part in expr.parts))
    if isinstance(expr, (NegImage, InnerNegImage, DualImage)):
        return type(expr)(_resolve(expr.inner, definitions, stack))
    return expr


# ---------------------------------------------------------------------------
# Roster
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassId:
    """A roster class: canonical name, defining expression and stability row."""

    name: str
    expr: ClassExpr
    index: int
    right_clone: str
    left_clone: str
    source: str = ""

    def as_dict(self) -> dict[str, object]:
        return {
            "name": self.name,
            "index": self.index,
            "expr": self.source or self.expr.describe(),
            "right_clone": self.right_clone,
            "left_clone": self.left_clone,
        }

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Roster:
    classes: tuple[ClassId, ...]
    clonoid_lists: dict[str, tuple[str, ...]]
    self_stable_lists: dict[str, tuple[str, ...]]
    meet_irreducibles: tuple[str, ...]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(entry.name for entry in self.classes)

    def get(self, name: str) -> ClassId:
        for entry in self.classes:
            if entry.name == name:
                return entry
        raise UnknownNameError(f"unknown class {name!r}")

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)


def build_roster(records: Sequence[RosterRecord], document: dict | None = None) -> Roster:
    names = [record.name for record in records]
    duplicates = sorted({name for name in names if names.count(name) > 1})
    if duplicates:
        raise RosterError(f"duplicate class names: {', '.join(duplicates)}")
    parsed = {record.name: parse_expr(record.expr) for record in records}
    classes = tuple(
        ClassId(
            name=record.name,
            expr=_resolve(parsed[record.name], parsed, (record.name,)),
            index=position,
            right_clone=record.right_clone,
            left_clone=record.left_clone,
            source=record.expr,
        )
        for position, record in enumerate(records)
    )
    document = document or {}

    def _expand(lists: dict[str, list[str]]) -> dict[str, tuple[str, ...]]:
        expanded: dict[str, tuple[str, ...]] = {}
        for clone, members in lists.items():
            if members == ["*"]:
                expanded[clone] = tuple(names)
                continue
            unknown = [member for member in members if member not in parsed]
            if unknown:
                raise RosterError(f"list for {clone} names unknown classes: {', '.join(unknown)}")
            expanded[clone] = tuple(members)
        return expanded

    corollaries = document.get("corollaries", {})
    meet_irreducibles = tuple(document.get("meet_irreducibles", ()))
    for name in meet_irreducibles:
        if name not in parsed:
            raise RosterError(f"meet-irreducible list names unknown class {name!r}")
    return Roster(
        classes=classes,
        clonoid_lists=_expand(corollaries.get("clonoids", {})),
        self_stable_lists=_expand(corollaries.get("self_stable", {})),
        meet_irreducibles=meet_irreducibles,
    )


@lru_cache(maxsize=1)
def get_roster() -> Roster:
    document = load_roster_document()
    roster = build_roster(load_roster_records(document), document)
    _log.debug("roster loaded with %d classes", len(roster))
    return roster


def get_class(name: str | ClassId) -> ClassId:
    if isinstance(name, ClassId):
        return name
    return get_roster().get(name)


def class_names() -> tuple[str, ...]:
    return get_roster().names


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def holds(prop: BaseProp | ClassExpr, f: TruthTable) -> bool:
    """Decide a property for one function by scanning its rows."""

    return bool(prop.evaluate(table_rows([f.bits], f.arity))[0])


def class_member(c: ClassId | str, f: TruthTable) -> bool:
    return holds(get_class(c).expr, f)


def members_mask(expr: ClassExpr, tables: Iterable[TruthTable]) -> np.ndarray:
    """Membership of several functions of one arity at once."""

    tables = list(tables)
    if not tables:
        return np.zeros(0, dtype=bool)
    arity = tables[0].arity
    if any(table.arity != arity for table in tables):
        raise ArityError("members_mask needs tables of one arity")
    return expr.evaluate(table_rows([table.bits for table in tables], arity))


def class_mask(c: ClassId | str, arity: int) -> np.ndarray:
    return space_mask(get_class(c).expr, arity)


def class_codes(c: ClassId | str, arity: int) -> np.ndarray:
    return np.flatnonzero(class_mask(c, arity))


def enumerate_class(c: ClassId | str, arity: int) -> FnSet:
    """The m-ary slice of a roster class (m <= 4)."""

    return FnSet.from_codes(arity, class_codes(c, arity).tolist())


def slice_signature(expr: ClassExpr, max_arity: int) -> tuple[bytes, ...]:
    """Hashable fingerprint of the slices at arities 1..max_arity."""

    return tuple(np.packbits(space_mask(expr, arity)).tobytes() for arity in range(1, max_arity + 1))


_IMAGE_MAPS = {"negation": neg_image, "inner_negation": inner_neg_image, "dual": dual_image}


def roster_images(kind: str, max_arity: int | None = None) -> dict[str, str]:
    """Map each class to the roster class equal to its image under ``kind``.

    Classes are matched by their slices at arities up to ``max_arity``
    (the configured decision arity by default).
    """

    if kind not in _IMAGE_MAPS:
        raise UnknownNameError(f"unknown image kind {kind!r}; expected one of {sorted(_IMAGE_MAPS)}")
    depth = max_arity or load_settings().decision_arity
    roster = get_roster()
    by_signature: dict[tuple[bytes, ...], str] = {}
    for entry in roster:
        signature = slice_signature(entry.expr, depth)
        if signature in by_signature:
            raise LatticeError(
                f"{entry.name} and {by_signature[signature]} agree up to arity {depth}; raise the decision arity"
            )
        by_signature[signature] = entry.name
    images: dict[str, str] = {}
    for entry in roster:
        image_signature = slice_signature(_IMAGE_MAPS[kind](entry.expr), depth)
        if image_signature not in by_signature:
            raise LatticeError(f"{kind} image of {entry.name} is not a roster class")
        images[entry.name] = by_signature[image_signature]
    return images


__all__ = [
    "BaseProp",
    "ClassExpr",
    "ClassId",
    "DualImage",
    "InnerNegImage",
    "Intersect",
    "NegImage",
    "PropTag",
    "Roster",
    "Union",
    "build_roster",
    "class_codes",
    "class_mask",
    "class_member",
    "class_names",
    "dual_image",
    "enumerate_class",
    "get_class",
    "get_roster",
    "holds",
    "inner_neg_image",
    "members_mask",
    "neg_image",
    "pack_rows",
    "parse_expr",
    "roster_images",
    "slice_signature",
    "space_mask",
    "table_rows",
    "table_space",
]
