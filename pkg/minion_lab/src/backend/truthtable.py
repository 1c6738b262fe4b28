"""Truth tables of Boolean functions and the minor/composition algebra on them.

Row convention: row index ``i`` of an ``n``-ary table encodes the tuple
``(a_1, ..., a_n)`` with ``a_1`` as the most significant binary digit of ``i``.
Bit ``i`` of :attr:`TruthTable.bits` is ``f(row i)``; the text form
``"n:b0b1..."`` lists the rows in increasing index order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence
import re

import numpy as np

from .config import max_arity
from .errors import ArityError, ParseError, UnknownNameError


_TEXT_FORMAT = re.compile(r"^\s*(\d+)\s*:\s*([01]+)\s*$")


def row_index(values: Sequence[int | bool]) -> int:
    """Return the row index of a tuple (first coordinate most significant)."""

    index = 0
    for value in values:
        index = (index << 1) | (1 if value else 0)
    return index


def row_tuple(index: int, arity: int) -> tuple[int, ...]:
    return tuple((index >> (arity - 1 - j)) & 1 for j in range(arity))


def _check_arity(arity: int) -> None:
    if not isinstance(arity, int) or isinstance(arity, bool) or arity < 1:
        raise ArityError(f"arity must be a positive integer, got {arity!r}")
    limit = max_arity()
    if arity > limit:
        raise ArityError(f"arity {arity} exceeds MAX_ARITY={limit}")


@dataclass(frozen=True, order=True)
class TruthTable:
    """An n-ary Boolean function stored as its 2^n output bits."""

    arity: int
    bits: int

    def __post_init__(self) -> None:
        _check_arity(self.arity)
        if not isinstance(self.bits, int) or not 0 <= self.bits < 1 << (1 << self.arity):
            raise ParseError(f"bit vector {self.bits!r} does not fit a table of arity {self.arity}")

    @property
    def size(self) -> int:
        return 1 << self.arity

    @property
    def full(self) -> int:
        """Bit mask with every row set."""

        return (1 << self.size) - 1

    def value(self, row: int) -> int:
        return (self.bits >> row) & 1

    def true_rows(self) -> list[int]:
        return [row for row in range(self.size) if (self.bits >> row) & 1]

    def false_rows(self) -> list[int]:
        return [row for row in range(self.size) if not (self.bits >> row) & 1]

    def __call__(self, *args: int | bool) -> int:
        return evaluate(self, args)

    def __str__(self) -> str:
        return format_table(self)


@dataclass(frozen=True)
class ArgMap:
    """A map sigma: {1..n} -> {1..m}, stored as the image tuple (sigma(1), ..., sigma(n))."""

    image: tuple[int, ...]
    target_arity: int

    def __post_init__(self) -> None:
        if not self.image:
            raise ArityError("an argument map needs at least one source position")
        if self.target_arity < 1:
            raise ArityError(f"target arity must be positive, got {self.target_arity}")
        for entry in self.image:
            if not 1 <= entry <= self.target_arity:
                raise ArityError(f"image entry {entry} outside 1..{self.target_arity}")

    @property
    def source_arity(self) -> int:
        return len(self.image)

    def followed_by(self, tau: "ArgMap") -> "ArgMap":
        """Return tau . sigma, so that minor(minor(f, sigma), tau) = minor(f, sigma.followed_by(tau))."""

        if tau.source_arity != self.target_arity:
            raise ArityError(
                f"cannot follow a map into {self.target_arity} arguments by a map from {tau.source_arity}"
            )
        return ArgMap(tuple(tau.image[entry - 1] for entry in self.image), tau.target_arity)

    def as_list(self) -> list[int]:
        return list(self.image)

    def __str__(self) -> str:
        return "(" + ",".join(str(entry) for entry in self.image) + f")->{self.target_arity}"


@dataclass(frozen=True)
class FnSet:
    """A finite set of truth tables of one arity, stored by bit vectors."""

    arity: int
    codes: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        _check_arity(self.arity)
        limit = 1 << (1 << self.arity)
        for code in self.codes:
            if not 0 <= code < limit:
                raise ParseError(f"code {code} does not fit arity {self.arity}")

    @classmethod
    def of(cls, tables: Iterable[TruthTable], arity: int | None = None) -> "FnSet":
        tables = list(tables)
        if arity is None:
            if not tables:
                raise ArityError("an empty set needs an explicit arity")
            arity = tables[0].arity
        for table in tables:
            if table.arity != arity:
                raise ArityError(f"table {table} does not have arity {arity}")
        return cls(arity, frozenset(table.bits for table in tables))

    @classmethod
    def from_codes(cls, arity: int, codes: Iterable[int]) -> "FnSet":
        return cls(arity, frozenset(int(code) for code in codes))

    def sorted_codes(self) -> list[int]:
        return sorted(self.codes)

    @property
    def members(self) -> tuple[TruthTable, ...]:
        return tuple(TruthTable(self.arity, code) for code in self.sorted_codes())

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[TruthTable]:
        return iter(self.members)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, TruthTable):
            return item.arity == self.arity and item.bits in self.codes
        return item in self.codes

    def to_lines(self) -> list[str]:
        return [format_table(table) for table in self.members]

    def as_dict(self) -> dict[str, object]:
        return {"arity": self.arity, "size": len(self.codes), "members": self.to_lines()}


def evaluate(f: TruthTable, values: Sequence[int | bool]) -> int:
    """Return f(values) by direct table lookup."""

    if len(values) != f.arity:
        raise ArityError(f"expected {f.arity} arguments, got {len(values)}")
    return f.value(row_index(values))


def parse(text: str) -> TruthTable:
    match = _TEXT_FORMAT.match(text or "")
    if match is None:
        raise ParseError(f"expected 'n:bits', got {text!r}")
    arity = int(match.group(1))
    digits = match.group(2)
    if arity < 1:
        raise ArityError(f"arity must be positive in {text!r}")
    _check_arity(arity)
    if len(digits) != 1 << arity:
        raise ParseError(f"{text!r}: arity {arity} needs {1 << arity} bits, got {len(digits)}")
    bits = 0
    for row, digit in enumerate(digits):
        if digit == "1":
            bits |= 1 << row
    return TruthTable(arity, bits)


def format_table(f: TruthTable) -> str:
    return f"{f.arity}:" + "".join("1" if (f.bits >> row) & 1 else "0" for row in range(f.size))


def from_function(fn: Callable[..., int | bool], arity: int) -> TruthTable:
    bits = 0
    for row in range(1 << arity):
        if fn(*row_tuple(row, arity)):
            bits |= 1 << row
    return TruthTable(arity, bits)


def projection(index: int, arity: int) -> TruthTable:
    """The projection onto argument ``index`` (1-based)."""

    if not 1 <= index <= arity:
        raise ArityError(f"projection index {index} outside 1..{arity}")
    shift = arity - index
    bits = 0
    for row in range(1 << arity):
        if (row >> shift) & 1:
            bits |= 1 << row
    return TruthTable(arity, bits)


def constant(value: int | bool, arity: int) -> TruthTable:
    _check_arity(arity)
    return TruthTable(arity, (1 << (1 << arity)) - 1 if value else 0)


NAMED_TABLES: dict[str, str] = {
    "const0": "1:00",
    "const1": "1:11",
    "id": "1:01",
    "not": "1:10",
    "and": "2:0001",
    "or": "2:0111",
    "xor": "2:0110",
    "iff": "2:1001",
    "nimp": "2:0010",
    "imp": "2:1101",
    "maj": "3:00010111",
    "xor3": "3:01101001",
}


def named(name: str) -> TruthTable:
    try:
        return parse(NAMED_TABLES[name])
    except KeyError:
        raise UnknownNameError(f"unknown named function {name!r}") from None


def parse_function(text: str) -> TruthTable:
    """Parse either the canonical text form or a named function."""

    if text in NAMED_TABLES:
        return named(text)
    return parse(text)


@lru_cache(maxsize=4096)
def minor_rows(image: tuple[int, ...], target_arity: int) -> tuple[int, ...]:
    """Source row of f read by each row of the minor f_sigma."""

    source_arity = len(image)
    rows: list[int] = []
    for row in range(1 << target_arity):
        index = 0
        for position, entry in enumerate(image):
            bit = (row >> (target_arity - entry)) & 1
            index |= bit << (source_arity - 1 - position)
        rows.append(index)
    return tuple(rows)


def minor(f: TruthTable, sigma: ArgMap) -> TruthTable:
    """Return f_sigma, the m-ary function a -> f(a . sigma)."""

    if sigma.source_arity != f.arity:
        raise ArityError(f"map has {sigma.source_arity} source positions, function has arity {f.arity}")
    bits = 0
    for row, source in enumerate(minor_rows(sigma.image, sigma.target_arity)):
        bits |= ((f.bits >> source) & 1) << row
    return TruthTable(sigma.target_arity, bits)


def all_arg_maps(source_arity: int, target_arity: int) -> Iterator[ArgMap]:
    """Every map [n] -> [m], in lexicographic order of the image tuple."""

    for image in product(range(1, target_arity + 1), repeat=source_arity):
        yield ArgMap(image, target_arity)


@lru_cache(maxsize=64)
def minor_row_matrix(source_arity: int, target_arity: int) -> np.ndarray:
    """Source row index for every (target row, argument map) pair."""

    maps = np.array(list(product(range(target_arity), repeat=source_arity)), dtype=np.int64)
    rows = np.arange(1 << target_arity, dtype=np.int64)
    coords = (rows[:, None] >> (target_arity - 1 - np.arange(target_arity))) & 1
    picked = coords[:, maps]
    weights = 1 << (source_arity - 1 - np.arange(source_arity))
    return (picked * weights).sum(axis=2)


def minor_codes(f: TruthTable, target_arity: int) -> np.ndarray:
    """Sorted distinct bit vectors of the target-arity minors of f."""

    _check_arity(target_arity)
    if target_arity > 6:
        raise ArityError("vectorised minors support target arity up to 6")
    index = minor_row_matrix(f.arity, target_arity)
    values = ((f.bits >> np.arange(f.size, dtype=object)) & 1).astype(np.uint64)
    picked = values[index]
    shifts = np.arange(1 << target_arity, dtype=np.uint64)[:, None]
    codes = np.bitwise_or.reduce(picked << shifts, axis=0)
    return np.unique(codes)


def all_minors(f: TruthTable, target_arity: int) -> FnSet:
    if target_arity > 6:
        return FnSet.from_codes(target_arity, {minor(f, sigma).bits for sigma in all_arg_maps(f.arity, target_arity)})
    return FnSet.from_codes(target_arity, minor_codes(f, target_arity).tolist())


def compose(f: TruthTable, gs: Sequence[TruthTable]) -> TruthTable:
    """Return f(g_1, ..., g_n), evaluated pointwise."""

    if len(gs) != f.arity:
        raise ArityError(f"{f.arity}-ary function composed with {len(gs)} functions")
    arities = {g.arity for g in gs}
    if len(arities) != 1:
        raise ArityError(f"inner functions must share one arity, got {sorted(arities)}")
    inner_arity = arities.pop()
    bits = 0
    for row in range(1 << inner_arity):
        index = 0
        for g in gs:
            index = (index << 1) | ((g.bits >> row) & 1)
        bits |= ((f.bits >> index) & 1) << row
    return TruthTable(inner_arity, bits)


def star(f: TruthTable, g: TruthTable) -> TruthTable:
    """Return f * g: (a_1..a_{m+n-1}) -> f(g(a_1..a_m), a_{m+1}, ..., a_{m+n-1})."""

    n, m = f.arity, g.arity
    total = m + n - 1
    _check_arity(total)
    tail = n - 1
    tail_mask = (1 << tail) - 1
    bits = 0
    for row in range(1 << total):
        index = (((g.bits >> (row >> tail)) & 1) << tail) | (row & tail_mask)
        bits |= ((f.bits >> index) & 1) << row
    return TruthTable(total, bits)


def negate(f: TruthTable) -> TruthTable:
    return TruthTable(f.arity, f.bits ^ f.full)


def inner_negate(f: TruthTable) -> TruthTable:
    """f^n(a) = f(not a); row r of the result is row (2^n - 1 - r) of f."""

    last = f.size - 1
    bits = 0
    for row in f.true_rows():
        bits |= 1 << (last - row)
    return TruthTable(f.arity, bits)


def dual(f: TruthTable) -> TruthTable:
    return negate(inner_negate(f))


def maj3(f: TruthTable, g: TruthTable, h: TruthTable) -> TruthTable:
    if not f.arity == g.arity == h.arity:
        raise ArityError(f"majority needs equal arities, got {f.arity}, {g.arity}, {h.arity}")
    return TruthTable(f.arity, (f.bits & g.bits) | (f.bits & h.bits) | (g.bits & h.bits))


def unary_collapse(f: TruthTable) -> TruthTable:
    """The unary minor a -> f(a, ..., a)."""

    return TruthTable(1, f.value(0) | (f.value(f.size - 1) << 1))


__all__ = [
    "ArgMap",
    "FnSet",
    "NAMED_TABLES",
    "TruthTable",
    "all_arg_maps",
    "all_minors",
    "compose",
    "constant",
    "dual",
    "evaluate",
    "format_table",
    "from_function",
    "inner_negate",
    "maj3",
    "minor",
    "minor_codes",
    "minor_row_matrix",
    "minor_rows",
    "named",
    "negate",
    "parse",
    "parse_function",
    "projection",
    "row_index",
    "row_tuple",
    "star",
    "unary_collapse",
]
