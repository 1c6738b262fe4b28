"""Path helpers, environment loading and runtime settings shared by backend modules."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
import importlib.util
import logging
import os

from .errors import ConfigError


REPO_ROOT = Path(__file__).resolve().parents[3]
PROJECT_ROOT = Path(__file__).resolve().parents[2]
DATA_ROOT = PROJECT_ROOT / "data"
ROSTER_PATH = DATA_ROOT / "roster.json"
OUTPUT_SCHEMA_PATH = DATA_ROOT / "output_schema.json"
CACHE_ROOT = PROJECT_ROOT / ".cache"
EXPORTS_ROOT = CACHE_ROOT / "exports"

DEFAULT_MAX_ARITY = 6
MAX_ARITY_CEILING = 20
ENUMERATION_LIMIT = 4
DEFAULT_BUDGET = 10**8
DEFAULT_DECISION_ARITY = 3

_log = logging.getLogger("minion_lab.config")
_env_loaded = False


def export_path(filename: str) -> Path:
    """Path of an export file under the cache, creating the directory on demand."""

    EXPORTS_ROOT.mkdir(parents=True, exist_ok=True)
    return EXPORTS_ROOT / filename


def load_environment(force: bool = False) -> list[Path]:
    """Load `.env` files from the repo root and the sub-project root.

    Variables already present in the process environment win. Returns the
    files that were read.
    """

    global _env_loaded
    if _env_loaded and not force:
        return []
    _env_loaded = True

    if importlib.util.find_spec("dotenv") is None:  # pragma: no cover - optional dependency
        return []
    from dotenv import load_dotenv

    loaded: list[Path] = []
    for env_path in (REPO_ROOT / ".env", PROJECT_ROOT / ".env"):
        if env_path.exists():
            load_dotenv(env_path, override=False)
            loaded.append(env_path)
            _log.debug("loaded environment from %s", env_path)
    return loaded


@dataclass(frozen=True)
class Settings:
    """Runtime knobs resolved from the environment."""

    max_arity: int = DEFAULT_MAX_ARITY
    enumeration_limit: int = ENUMERATION_LIMIT
    budget: int = DEFAULT_BUDGET
    decision_arity: int = DEFAULT_DECISION_ARITY
    log_level: str = "WARNING"

    def as_dict(self) -> dict[str, int | str]:
        return {
            "max_arity": self.max_arity,
            "enumeration_limit": self.enumeration_limit,
            "budget": self.budget,
            "decision_arity": self.decision_arity,
            "log_level": self.log_level,
        }


def _int_setting(name: str, default: int, low: int, high: int) -> int:
    return _parse_int(name, os.environ.get(name), default, low, high)


def _parse_int(name: str, raw: str | None, default: int, low: int, high: int) -> int:
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.strip())
    except ValueError as exc:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from exc
    if not low <= value <= high:
        raise ConfigError(f"{name} must lie in {low}..{high}, got {value}")
    return value


def load_settings() -> Settings:
    """Resolve settings from the environment (read on every call)."""

    load_environment()
    level = os.environ.get("MINION_LOG_LEVEL", "WARNING").strip().upper() or "WARNING"
    if level not in {"CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"}:
        raise ConfigError(f"MINION_LOG_LEVEL must be a logging level name, got {level!r}")
    return Settings(
        max_arity=_max_arity_for(os.environ.get("MINION_MAX_ARITY")),
        budget=_int_setting("MINION_BUDGET", DEFAULT_BUDGET, 1, 10**12),
        decision_arity=_int_setting("MINION_DECISION_ARITY", DEFAULT_DECISION_ARITY, 2, ENUMERATION_LIMIT),
        log_level=level,
    )


@lru_cache(maxsize=8)
def _max_arity_for(raw: str | None) -> int:
    return _parse_int("MINION_MAX_ARITY", raw, DEFAULT_MAX_ARITY, DEFAULT_MAX_ARITY, MAX_ARITY_CEILING)


def max_arity() -> int:
    """Largest accepted arity, parsed once per distinct MINION_MAX_ARITY value."""

    load_environment()
    return _max_arity_for(os.environ.get("MINION_MAX_ARITY"))
