from __future__ import annotations

from pathlib import Path
import sys

import pytest

SRC = Path(__file__).resolve().parents[1] / "src"
for path in (SRC, SRC / "frontend"):
    if str(path) not in sys.path:
        sys.path.insert(0, str(path))


@pytest.fixture(autouse=True)
def _clean_settings(monkeypatch):
    """Tests see default settings regardless of the caller's environment."""

    for name in ("MINION_MAX_ARITY", "MINION_BUDGET", "MINION_DECISION_ARITY", "MINION_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
