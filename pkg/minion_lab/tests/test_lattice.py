from __future__ import annotations

import json

import numpy as np
import pytest

from backend.errors import ArityError
from backend.lattice import IMAGE_KINDS, build_lattice
from backend.predicates import class_codes, get_roster


SELF_PAIRED = {"Omega", "Omega_neq", "Omega_eq", "S", "Refl", "Vak", "Empty"}


@pytest.fixture(scope="module")
def lattice():
    return build_lattice()


def test_bounds(lattice):
    assert lattice.top == "Omega"
    assert lattice.bottom == "Empty"
    assert lattice.decision_arity in (3, 4)
    assert len(lattice.names) == 93


def test_order(lattice):
    assert lattice.le("SM", "Sc")
    assert lattice.le("McU", "Mc")
    assert lattice.le("Empty", "Vak0")
    assert not lattice.le("Vak0", "Empty")
    assert lattice.lt("Refl_00", "Refl")
    assert not lattice.lt("SM", "SM")
    assert all(lattice.le(name, "Omega") for name in lattice.names)


def test_meets_and_joins(lattice):
    assert lattice.meet("S", "M").name == "SM"
    assert lattice.meet("U", "Omega_00").name == "U_00"
    assert lattice.meet("Vak0", "Vak1").name == "Empty"
    for name in ("SM", "Smin", "Refl_11"):
        assert lattice.meet(name, "Omega").name == name
        assert lattice.join(name, "Empty").name == name
    assert lattice.join("Vak0", "Vak1").name == "Vak"
    assert lattice.join("SM", "SMneg").name == "S"


def test_covers_form_the_hasse_diagram(lattice):
    covers = lattice.covers
    assert ("Empty", "Vak0") in covers
    assert ("Empty", "Omega") not in covers
    for lower, upper in covers:
        assert lattice.lt(lower, upper)
        assert upper in lattice.upper_covers(lower)
        assert lower in lattice.lower_covers(upper)


def test_meet_irreducibles_match_the_roster_list(lattice):
    expected = set(get_roster().meet_irreducibles) - {"Omega"}
    assert set(lattice.meet_irreducibles()) == expected
    assert "SM" not in lattice.meet_irreducibles()


def test_automorphisms(lattice):
    images = lattice.automorphism_images()
    assert set(images) == set(IMAGE_KINDS)
    assert images["negation"]["M"] == "Mneg"
    assert images["dual"]["U"] == "W"
    fixed = {name for name, image in images["negation"].items() if name == image}
    assert fixed == SELF_PAIRED
    assert "SM" not in fixed


def test_clone_classes_are_highlighted(lattice):
    clones = lattice.clone_classes()
    assert clones["SM"] == "SM"
    assert clones["Omega"] == "Omega"
    assert clones["McU"] == "McU"
    assert "Ic" not in clones
    dot = lattice.to_dot()
    assert dot.startswith("digraph minion_lattice {")
    assert '"SM" [style=filled' in dot
    assert '"Empty" -> "Vak0";' in dot


def test_json_export(lattice):
    payload = json.loads(lattice.to_json())
    assert payload["top"] == "Omega"
    assert len(payload["nodes"]) == 93
    assert ["SM", "S"] in payload["leq"]
    assert len(payload["covers"]) == len(lattice.covers)


def test_html_export(lattice, tmp_path):
    pytest.importorskip("plotly")
    target = tmp_path / "lattice.html"
    html = lattice.to_html(target)
    assert target.read_text(encoding="utf-8") == html
    assert "Omega" in html


def test_explicit_bounds():
    with pytest.raises(ArityError):
        build_lattice(5)
    with pytest.raises(ArityError):
        build_lattice(1)


def test_negation_fixes_classes_with_self_paired_slices(lattice):
    fixed = set()
    for name in lattice.names:
        slices = [class_codes(name, m) for m in (1, 2, 3)]
        full = [(1 << (1 << m)) - 1 for m in (1, 2, 3)]
        if all(set(codes.tolist()) == {int(code) ^ mask for code in codes} for codes, mask in zip(slices, full)):
            fixed.add(name)
    assert fixed == SELF_PAIRED
    negation = lattice.automorphism_images()["negation"]
    assert all(negation[negation[name]] == name for name in lattice.names)


def test_html_export_creates_missing_directories(lattice, tmp_path):
    pytest.importorskip("plotly")
    target = tmp_path / "nested" / "exports" / "lattice.html"
    lattice.to_html(target)
    assert target.is_file()


@pytest.mark.slow
def test_order_is_settled_at_arity_three():
    at_three, at_four = build_lattice(3), build_lattice(4)
    assert at_three.names == at_four.names
    assert np.array_equal(at_three.leq, at_four.leq)
    assert at_three.covers == at_four.covers
    assert build_lattice().decision_arity == 3
