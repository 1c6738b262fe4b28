"""Exact finite-arity composition closures.

Every result is the exact m-ary slice of a composition class. Right
composition with a clone slice enumerates inner tuples; left closure runs a
fixpoint over generator applications; the (J,SM)-closure uses the majority
hull, which is determined by binary row projections.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Sequence
import logging

import numpy as np

from .clones import CloneId, clone_members, get_clone
from .config import ENUMERATION_LIMIT, load_settings
from .errors import ArityError, BudgetError, MinionError
from .predicates import pack_rows, table_rows, table_space
from .truthtable import ArgMap, FnSet, TruthTable, all_minors, minor_rows


_log = logging.getLogger("minion_lab.closure")

_WORD_ARITY = 6
MAX_GENERATOR_ARITY = 3


def _full_word(arity: int) -> np.uint64:
    return np.uint64((1 << (1 << arity)) - 1)


def apply_bitwise(g: TruthTable, args: Sequence, full):
    """Pointwise g(args) on bit vectors (ints or broadcastable uint64 arrays)."""

    if len(args) != g.arity:
        raise ArityError(f"{g.arity}-ary function applied to {len(args)} arguments")
    result = None
    for row in g.true_rows():
        term = None
        for position, arg in enumerate(args):
            if (row >> (g.arity - 1 - position)) & 1:
                literal = arg
            else:
                literal = ~arg & full
            term = literal if term is None else term & literal
        result = term if result is None else result | term
    if result is None:
        zero = args[0] ^ args[0]
        for arg in args[1:]:
            zero = zero | (arg ^ arg)
        return zero
    return result


def _check_enumerable(arity: int) -> None:
    if not 1 <= arity <= ENUMERATION_LIMIT:
        raise ArityError(f"closures are computed at arity 1..{ENUMERATION_LIMIT}, got {arity}")


def _check_budget(count: int, what: str) -> None:
    budget = load_settings().budget
    if count > budget:
        raise BudgetError(f"{what} needs {count} candidate tuples, budget is {budget}")


def _apply_all(g: TruthTable, codes: np.ndarray, arity: int) -> np.ndarray:
    """g applied to every tuple over ``codes``, as a flat uint64 array."""

    full = _full_word(arity)
    codes = codes.astype(np.uint64)
    k = g.arity
    if k == 1:
        return np.asarray(apply_bitwise(g, [codes], full)).reshape(-1)
    rest_shape = [1] * (k - 1)
    chunks = []
    for head in codes:
        args = [head]
        for position in range(k - 1):
            shape = list(rest_shape)
            shape[position] = -1
            args.append(codes.reshape(shape))
        chunks.append(np.broadcast_to(apply_bitwise(g, args, full), (len(codes),) * (k - 1)).reshape(-1))
    return np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.uint64)


def right_compose_slice(functions: Iterable[TruthTable], c: str | CloneId, arity: int) -> FnSet:
    """m-ary slice of F.C: every f in F applied to tuples of m-ary members of C."""

    _check_enumerable(arity)
    clone = get_clone(c)
    inner = np.array(clone_members(clone, arity).sorted_codes(), dtype=np.uint64)
    functions = list(functions)
    _check_budget(sum(len(inner) ** f.arity for f in functions), f"composing into {clone.name} at arity {arity}")
    found: set[int] = set()
    for f in functions:
        if f.arity > _WORD_ARITY:
            raise ArityError(f"right composition supports outer arity up to {_WORD_ARITY}")
        found.update(int(code) for code in np.unique(_apply_all(f, inner, arity)))
    return FnSet.from_codes(arity, found)


def left_close(s: FnSet, gens: Sequence[TruthTable]) -> FnSet:
    """Least superset of s closed under pointwise application of every generator."""

    arity = s.arity
    if arity > _WORD_ARITY:
        raise ArityError(f"left closure supports arity up to {_WORD_ARITY}")
    for g in gens:
        if g.arity > MAX_GENERATOR_ARITY:
            raise ArityError(f"generator arity is capped at {MAX_GENERATOR_ARITY}, got {g.arity}")
    known = np.array(s.sorted_codes(), dtype=np.uint64)
    rounds = 0
    while known.size:
        _check_budget(sum(len(known) ** g.arity for g in gens), f"left closure round {rounds + 1}")
        produced = [known] + [_apply_all(g, known, arity) for g in gens]
        grown = np.unique(np.concatenate(produced))
        rounds += 1
        if grown.size == known.size:
            break
        known = grown
    _log.debug("left closure at arity %d settled after %d rounds with %d members", arity, rounds, known.size)
    return FnSet.from_codes(arity, (int(code) for code in known))


def mu_hull(codes: Iterable[int], arity: int) -> FnSet:
    """Majority closure of a set of m-ary tables.

    A majority-closed set of tables is the set of all tables whose values on
    every pair of rows occur together in the set, so the hull is read off the
    binary row projections.
    """

    _check_enumerable(arity)
    codes = np.unique(np.fromiter((int(code) for code in codes), dtype=np.int64))
    if codes.size == 0:
        return FnSet(arity)
    rows = table_rows(codes, arity).astype(np.int64)
    space = table_space(arity).astype(np.int64)
    keep = np.ones(space.shape[0], dtype=bool)
    for r, s in combinations(range(rows.shape[1]), 2):
        present = np.zeros(4, dtype=bool)
        present[2 * rows[:, r] + rows[:, s]] = True
        keep &= present[2 * space[:, r] + space[:, s]]
    return FnSet.from_codes(arity, np.flatnonzero(keep).tolist())


def sm_closure(functions: Iterable[TruthTable], arity: int) -> FnSet:
    """m-ary slice of the class generated by F under minors and the majority clone."""

    _check_enumerable(arity)
    minors: set[int] = set()
    for f in functions:
        minors.update(all_minors(f, arity).codes)
    return mu_hull(minors, arity)


def stable_closure(functions: Iterable[TruthTable], c1: str | CloneId, c2: str | CloneId, arity: int) -> FnSet:
    """m-ary slice of C2(F C1); C2 must carry a generating set."""

    inner, outer = get_clone(c1), get_clone(c2)
    if outer.generators is None:
        raise MinionError(f"clone {outer.name} has no generating set; left closure needs one")
    return left_close(right_compose_slice(functions, inner, arity), outer.generators)


def elementary_maps(arity: int, max_arity: int) -> list[ArgMap]:
    """Maps out of [arity] that generate every minor map within arities up to max_arity.

    A transposition and a full cycle generate the permutations, one merge of
    the first two positions generates identifications and one added last
    position generates fictitious arguments.
    """

    maps: list[ArgMap] = []
    if arity >= 2:
        maps.append(ArgMap((2, 1) + tuple(range(3, arity + 1)), arity))
        maps.append(ArgMap(tuple(range(2, arity + 1)) + (1,), arity))
        maps.append(ArgMap((1,) + tuple(range(1, arity)), arity - 1))
    if arity < max_arity:
        maps.append(ArgMap(tuple(range(1, arity + 1)), arity + 1))
    return maps


def _apply_map(codes: np.ndarray, arity: int, sigma: ArgMap) -> np.ndarray:
    rows = table_rows(codes, arity)
    return pack_rows(rows[:, list(minor_rows(sigma.image, sigma.target_arity))]).astype(np.int64)


def minor_violation(slices: Mapping[int, Iterable[int]]) -> tuple[TruthTable, ArgMap] | None:
    """First member whose minor falls outside the family of slices, or None.

    ``slices`` maps each arity 1..k to the member codes at that arity.
    """

    arities = sorted(slices)
    if arities != list(range(1, len(arities) + 1)):
        raise ArityError(f"slices must cover arities 1..k without gaps, got {arities}")
    top = arities[-1]
    members = {m: np.unique(np.fromiter((int(c) for c in slices[m]), dtype=np.int64)) for m in arities}
    for arity in arities:
        codes = members[arity]
        if codes.size == 0:
            continue
        for sigma in elementary_maps(arity, top):
            images = _apply_map(codes, arity, sigma)
            outside = ~np.isin(images, members[sigma.target_arity])
            if outside.any():
                return TruthTable(arity, int(codes[np.argmax(outside)])), sigma
    return None


def is_minor_closed(slices: Mapping[int, Iterable[int]]) -> bool:
    return minor_violation(slices) is None


def is_mu_closed(codes: Iterable[int], arity: int) -> bool:
    codes = set(int(code) for code in codes)
    return mu_hull(codes, arity).codes == frozenset(codes)


__all__ = [
    "FnSet",
    "MAX_GENERATOR_ARITY",
    "apply_bitwise",
    "elementary_maps",
    "is_minor_closed",
    "is_mu_closed",
    "left_close",
    "minor_violation",
    "mu_hull",
    "right_compose_slice",
    "sm_closure",
    "stable_closure",
]
