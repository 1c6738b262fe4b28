from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest

from backend.errors import ParseError, RosterError, UnknownNameError
from backend.predicates import (
    BaseProp,
    Intersect,
    PropTag,
    build_roster,
    class_mask,
    class_member,
    class_names,
    enumerate_class,
    get_class,
    get_roster,
    holds,
    members_mask,
    parse_expr,
    reverse_index,
    roster_images,
    space_mask,
    table_space,
)
from backend.roster_store import RosterRecord
from backend.truthtable import TruthTable, from_function, named, projection, row_tuple


def _tables(arity: int):
    return [TruthTable(arity, bits) for bits in range(1 << (1 << arity))]


def _points(f: TruthTable):
    return [row_tuple(row, f.arity) for row in range(f.size)]


def _complement(point):
    return tuple(1 - bit for bit in point)


def _self_dual(f):
    return all(f(*a) != f(*_complement(a)) for a in _points(f))


def _monotone(f):
    return all(f(*a) <= f(*b) for a in _points(f) for b in _points(f) if all(x <= y for x, y in zip(a, b)))


def _sep1(f, k):
    true_points = [a for a in _points(f) if f(*a)]
    for width in range(1, k + 1):
        for group in combinations(true_points, width):
            if not any(all(point[i] for point in group) for i in range(f.arity)):
                return False
    return True


REFERENCE = {
    "selfdual": _self_dual,
    "monotone": _monotone,
    "reflexive": lambda f: all(f(*a) == f(*_complement(a)) for a in _points(f)),
    "smin": lambda f: all(not (f(*a) and f(*_complement(a))) for a in _points(f)),
    "smaj": lambda f: all(f(*a) or f(*_complement(a)) for a in _points(f)),
    "sep1(2)": lambda f: _sep1(f, 2),
    "sep1(3)": lambda f: _sep1(f, 3),
    "leq": lambda f: f(*(0,) * f.arity) <= f(*(1,) * f.arity),
    "meet0": lambda f: not (f(*(0,) * f.arity) and f(*(1,) * f.arity)),
    "constant": lambda f: f.bits in (0, f.full),
}


@pytest.mark.parametrize("source", sorted(REFERENCE))
@pytest.mark.parametrize("arity", [1, 2, 3])
def test_base_properties_match_their_definitions(source, arity):
    expr = parse_expr(source)
    reference = REFERENCE[source]
    mask = space_mask(expr, arity)
    for f in _tables(arity):
        assert bool(mask[f.bits]) == bool(reference(f)), (source, str(f))


def test_single_function_checks():
    assert holds(BaseProp(PropTag.SELF_DUAL), named("maj"))
    assert holds(BaseProp(PropTag.SEP1, 2), named("nimp"))
    assert not holds(BaseProp(PropTag.SEP1, 2), named("xor"))
    assert holds(BaseProp(PropTag.SMIN), named("nimp"))
    assert holds(BaseProp(PropTag.PROJECTION), projection(2, 3))
    assert not holds(BaseProp(PropTag.PROJECTION), named("maj"))
    assert holds(BaseProp(PropTag.VAL1, 1), named("or"))
    assert members_mask(parse_expr("monotone"), [named("and"), named("xor")]).tolist() == [True, False]


def test_properties_scale_past_the_enumeration_limit():
    xor5 = from_function(lambda *a: sum(a) % 2, 5)
    maj5 = from_function(lambda *a: sum(a) >= 3, 5)
    assert holds(BaseProp(PropTag.SELF_DUAL), xor5)
    assert holds(BaseProp(PropTag.MONOTONE), maj5)
    assert holds(BaseProp(PropTag.SELF_DUAL), maj5)
    assert not holds(BaseProp(PropTag.MONOTONE), xor5)


@pytest.mark.parametrize(
    "text",
    ["and(", "sep1", "val0(2)", "sep1(1)", "smin(1)", "and(smin))", "neg(smin, smaj)", "val0(x)", "(smin)"],
)
def test_malformed_expressions(text):
    with pytest.raises(ParseError):
        parse_expr(text)


def test_expressions_render_back_to_their_syntax():
    text = "and(smin, or(Omega_01, Vak0))"
    assert parse_expr(text).describe() == text
    assert str(parse_expr("neg(neg(monotone))")) == "monotone"
    assert isinstance(parse_expr("and(monotone, val0(0))"), Intersect)


def test_roster_has_93_distinct_names():
    roster = get_roster()
    assert len(roster) == 93
    assert len(set(roster.names)) == 93
    assert roster.names[0] == "Omega"
    assert roster.names[-1] == "Empty"
    assert class_names() == roster.names
    with pytest.raises(UnknownNameError):
        get_class("Nope")


def test_named_memberships():
    assert class_member("SM", named("maj"))
    assert class_member("McU", named("and"))
    assert not class_member("SM", named("and"))
    assert class_member("Refl_00", named("xor"))
    assert class_member("U_Wneg", named("nimp"))
    assert not any(class_member("Empty", f) for f in _tables(2))


def test_small_slices():
    assert enumerate_class("SM", 2).to_lines() == ["2:0101", "2:0011"]
    assert set(enumerate_class("McU", 2).to_lines()) == {"2:0011", "2:0101", "2:0001"}
    assert set(enumerate_class("Vak", 1).to_lines()) == {"1:00", "1:11"}
    assert enumerate_class("Vak0", 2).to_lines() == ["2:0000"]
    assert len(enumerate_class("Empty", 3)) == 0
    assert len(enumerate_class("Omega", 2)) == 16


@pytest.mark.parametrize("kind", ["negation", "inner_negation", "dual"])
def test_images_permute_the_roster(kind):
    mapping = roster_images(kind)
    assert sorted(mapping.values()) == sorted(mapping)
    assert all(mapping[mapping[name]] == name for name in mapping)
    for arity in (1, 2, 3):
        full = (1 << (1 << arity)) - 1
        codes = np.arange(full + 1)
        image = {
            "negation": codes ^ full,
            "inner_negation": reverse_index(arity),
            "dual": reverse_index(arity) ^ full,
        }[kind]
        for name, partner in mapping.items():
            assert np.array_equal(class_mask(partner, arity)[image], class_mask(name, arity)), (name, arity)


def test_known_image_pairs():
    negation = roster_images("negation")
    assert negation["M"] == "Mneg"
    assert negation["Vak0"] == "Vak1"
    assert negation["Omega"] == "Omega"
    assert negation["S"] == "S"
    dual = roster_images("dual")
    assert dual["U"] == "W"
    assert dual["SM"] == "SM"
    assert dual["Smin"] == "Smaj"
    with pytest.raises(UnknownNameError):
        roster_images("reverse")


def test_roster_rejects_cycles_and_unknown_references():
    cyclic = [RosterRecord("A", "B", "Ic", "SM"), RosterRecord("B", "and(A, smin)", "Ic", "SM")]
    with pytest.raises(RosterError, match="cycle"):
        build_roster(cyclic)
    with pytest.raises(RosterError, match="unknown reference"):
        build_roster([RosterRecord("A", "and(smin, Missing)", "Ic", "SM")])
    with pytest.raises(RosterError, match="duplicate"):
        build_roster([RosterRecord("A", "smin", "Ic", "SM"), RosterRecord("A", "smaj", "Ic", "SM")])


def test_roster_lists_expand_and_validate():
    records = [RosterRecord("A", "smin", "Ic", "SM"), RosterRecord("B", "and(A, monotone)", "Ic", "SM")]
    roster = build_roster(records, {"corollaries": {"clonoids": {"SM": ["*"], "S": ["B"]}}})
    assert roster.clonoid_lists == {"SM": ("A", "B"), "S": ("B",)}
    assert roster.classes[1].expr.describe() == "and(A, monotone)"
    assert holds(roster.classes[1].expr, named("and"))
    assert not holds(roster.classes[1].expr, named("or"))
    with pytest.raises(RosterError):
        build_roster(records, {"corollaries": {"self_stable": {"SM": ["C"]}}})
    with pytest.raises(RosterError):
        build_roster(records, {"meet_irreducibles": ["C"]})


def test_table_space_is_indexed_by_bit_vector():
    space = table_space(2)
    assert space.shape == (16, 4)
    assert space[named("and").bits].tolist() == [False, False, False, True]
    with pytest.raises(ValueError):
        space[0, 0] = True
