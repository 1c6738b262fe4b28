from __future__ import annotations

from hypothesis import given, settings, strategies as st
import pytest

from backend.errors import ArityError, ParseError, UnknownNameError
from backend.truthtable import (
    ArgMap,
    FnSet,
    TruthTable,
    all_arg_maps,
    all_minors,
    compose,
    constant,
    dual,
    evaluate,
    format_table,
    from_function,
    inner_negate,
    maj3,
    minor,
    minor_codes,
    named,
    negate,
    parse,
    parse_function,
    projection,
    row_index,
    row_tuple,
    star,
    unary_collapse,
)
from strategies import arg_maps, tables, tables_of_arity


def test_text_form_reads_first_row_first():
    f = parse("2:0001")
    assert f.arity == 2
    assert f.true_rows() == [3]
    assert format_table(f) == "2:0001"
    assert str(named("maj")) == "3:00010111"


def test_first_argument_is_most_significant():
    assert row_index((1, 0, 0)) == 4
    assert row_tuple(4, 3) == (1, 0, 0)
    assert evaluate(named("nimp"), (1, 0)) == 1
    assert named("nimp")(0, 1) == 0
    assert evaluate(named("maj"), (1, 0, 1)) == 1


def test_projections_and_constants():
    assert format_table(projection(1, 2)) == "2:0011"
    assert format_table(projection(2, 2)) == "2:0101"
    assert format_table(constant(0, 2)) == "2:0000"
    assert format_table(constant(1, 3)) == "3:11111111"
    with pytest.raises(ArityError):
        projection(3, 2)


def test_from_function_matches_named_tables():
    assert from_function(lambda a, b: a and b, 2) == named("and")
    assert from_function(lambda a, b, c: a ^ b ^ c, 3) == named("xor3")
    assert from_function(lambda a, b: a <= b, 2) == named("imp")


@pytest.mark.parametrize("text", ["2:011", "abc", "", "2:0120", "1:"])
def test_malformed_text_is_rejected(text):
    with pytest.raises(ParseError):
        parse(text)


def test_arity_zero_and_oversized_tables():
    with pytest.raises(ArityError):
        parse("0:0")
    with pytest.raises(ArityError):
        parse("7:" + "0" * 128)
    with pytest.raises(ParseError):
        TruthTable(1, 4)


def test_max_arity_follows_the_environment(monkeypatch):
    monkeypatch.setenv("MINION_MAX_ARITY", "7")
    assert parse("7:" + "1" * 128).arity == 7


def test_parse_function_accepts_names():
    assert parse_function("xor") == parse("2:0110")
    assert parse_function("2:0110") == named("xor")
    with pytest.raises(UnknownNameError):
        named("nand")


def test_star_product():
    assert format_table(star(named("and"), named("or"))) == "3:00010101"


def test_minor_examples():
    assert format_table(minor(named("nimp"), ArgMap((2, 1), 2))) == "2:0100"
    assert format_table(minor(named("maj"), ArgMap((1, 1, 2), 2))) == "2:0011"
    assert set(all_minors(named("and"), 2).to_lines()) == {"2:0001", "2:0011", "2:0101"}
    with pytest.raises(ArityError):
        minor(named("and"), ArgMap((1,), 2))


def test_argument_map_validation():
    with pytest.raises(ArityError):
        ArgMap((1, 3), 2)
    with pytest.raises(ArityError):
        ArgMap((), 2)
    assert list(all_arg_maps(2, 2))[1] == ArgMap((1, 2), 2)
    assert len(list(all_arg_maps(3, 2))) == 8


def test_composition_examples():
    pr1, pr2 = projection(1, 2), projection(2, 2)
    assert compose(named("maj"), [pr1, pr2, constant(0, 2)]) == named("and")
    assert compose(named("maj"), [pr1, pr2, constant(1, 2)]) == named("or")
    assert compose(named("imp"), [named("id"), named("not")]) == named("not")
    assert compose(named("xor"), [named("id"), named("const1")]) == named("not")
    assert compose(named("iff"), [named("id"), named("const0")]) == named("not")
    assert compose(named("xor3"), [pr1, pr2, constant(0, 2)]) == named("xor")
    with pytest.raises(ArityError):
        compose(named("and"), [pr1])
    with pytest.raises(ArityError):
        compose(named("and"), [pr1, named("id")])


def test_majority_of_two_implications_and_a_constant():
    nimp21 = minor(named("nimp"), ArgMap((2, 1), 2))
    assert maj3(named("nimp"), nimp21, constant(1, 2)) == named("xor")
    with pytest.raises(ArityError):
        maj3(named("and"), named("and"), named("id"))


def test_negations_and_duals():
    assert dual(named("and")) == named("or")
    assert format_table(inner_negate(named("nimp"))) == "2:0100"
    assert negate(named("xor")) == named("iff")
    assert unary_collapse(named("xor")) == named("const0")
    assert unary_collapse(named("maj")) == named("id")


def test_fnset_views():
    s = FnSet.of([named("and"), projection(1, 2), named("and")])
    assert len(s) == 2
    assert named("and") in s
    assert named("or") not in s
    assert s.to_lines() == ["2:0001", "2:0011"]
    with pytest.raises(ArityError):
        FnSet.of([named("and"), named("id")])


@given(data=st.data())
@settings(max_examples=150, deadline=None)
def test_minor_of_a_minor_is_a_minor(data):
    f = data.draw(tables())
    sigma = data.draw(arg_maps(f.arity))
    tau = data.draw(arg_maps(sigma.target_arity))
    assert minor(minor(f, sigma), tau) == minor(f, sigma.followed_by(tau))


@given(data=st.data())
@settings(max_examples=150, deadline=None)
def test_majority_commutes_with_minors(data):
    n = data.draw(st.integers(1, 3))
    f, g, h = (data.draw(tables_of_arity(n)) for _ in range(3))
    sigma = data.draw(arg_maps(n))
    assert minor(maj3(f, g, h), sigma) == maj3(minor(f, sigma), minor(g, sigma), minor(h, sigma))


@given(f=tables(max_arity=4))
@settings(deadline=None)
def test_negations_are_involutions(f):
    assert negate(negate(f)) == f
    assert inner_negate(inner_negate(f)) == f
    assert dual(dual(f)) == f


@given(f=tables(max_arity=4))
@settings(deadline=None)
def test_star_with_the_identity_is_neutral(f):
    assert star(f, named("id")) == f


@given(f=tables(), m=st.integers(1, 3))
@settings(deadline=None)
def test_vectorised_minors_match_the_map_enumeration(f, m):
    expected = sorted({minor(f, sigma).bits for sigma in all_arg_maps(f.arity, m)})
    assert minor_codes(f, m).tolist() == expected
