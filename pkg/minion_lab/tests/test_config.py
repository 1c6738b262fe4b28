from __future__ import annotations

import pytest

import backend.config as config
from backend.config import DEFAULT_BUDGET, ROSTER_PATH, export_path, load_settings, max_arity
from backend.errors import ArityError, ConfigError
from backend.truthtable import ArgMap, TruthTable, minor, named, projection


def test_defaults():
    settings = load_settings()
    assert settings.as_dict() == {
        "max_arity": 6,
        "enumeration_limit": 4,
        "budget": DEFAULT_BUDGET,
        "decision_arity": 3,
        "log_level": "WARNING",
    }
    assert ROSTER_PATH.name == "roster.json"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("MINION_MAX_ARITY", " 12 ")
    monkeypatch.setenv("MINION_BUDGET", "5000")
    monkeypatch.setenv("MINION_DECISION_ARITY", "4")
    monkeypatch.setenv("MINION_LOG_LEVEL", "debug")
    settings = load_settings()
    assert (settings.max_arity, settings.budget, settings.decision_arity, settings.log_level) == (12, 5000, 4, "DEBUG")
    assert max_arity() == 12


@pytest.mark.parametrize(
    "name, value",
    [
        ("MINION_MAX_ARITY", "5"),
        ("MINION_MAX_ARITY", "21"),
        ("MINION_MAX_ARITY", "six"),
        ("MINION_BUDGET", "0"),
        ("MINION_DECISION_ARITY", "5"),
        ("MINION_LOG_LEVEL", "LOUD"),
    ],
)
def test_bad_values(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError, match=name):
        load_settings()


def test_blank_values_fall_back(monkeypatch):
    monkeypatch.setenv("MINION_MAX_ARITY", "  ")
    assert load_settings().max_arity == 6


def test_table_construction_does_not_resolve_full_settings(monkeypatch):
    def refuse():
        raise AssertionError("full settings resolved on the table path")

    monkeypatch.setattr(config, "load_settings", refuse)
    assert minor(named("maj"), ArgMap((1, 1, 2), 2)) == projection(1, 2)
    assert TruthTable(3, 0).arity == 3
    with pytest.raises(ArityError):
        TruthTable(7, 0)


def test_max_arity_follows_the_environment(monkeypatch):
    assert max_arity() == 6
    monkeypatch.setenv("MINION_MAX_ARITY", "8")
    assert max_arity() == 8
    assert TruthTable(8, 0).arity == 8
    monkeypatch.setenv("MINION_MAX_ARITY", "nine")
    with pytest.raises(ConfigError, match="MINION_MAX_ARITY"):
        max_arity()
    monkeypatch.delenv("MINION_MAX_ARITY")
    assert max_arity() == 6


def test_export_path_creates_the_directory(monkeypatch, tmp_path):
    root = tmp_path / "cache" / "exports"
    monkeypatch.setattr(config, "EXPORTS_ROOT", root)
    target = export_path("lattice.html")
    assert target == root / "lattice.html"
    assert root.is_dir()
