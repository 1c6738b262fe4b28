"""Hypothesis strategies for truth tables and argument maps."""

from __future__ import annotations

from hypothesis import strategies as st

from backend.truthtable import ArgMap, TruthTable


@st.composite
def tables(draw, min_arity: int = 1, max_arity: int = 3) -> TruthTable:
    n = draw(st.integers(min_arity, max_arity))
    return TruthTable(n, draw(st.integers(0, (1 << (1 << n)) - 1)))


@st.composite
def tables_of_arity(draw, arity: int) -> TruthTable:
    return TruthTable(arity, draw(st.integers(0, (1 << (1 << arity)) - 1)))


@st.composite
def arg_maps(draw, source_arity: int, max_target: int = 3) -> ArgMap:
    m = draw(st.integers(1, max_target))
    image = draw(st.lists(st.integers(1, m), min_size=source_arity, max_size=source_arity))
    return ArgMap(tuple(image), m)
