"""Disk-backed helpers for the class roster file (names, expressions, stability rows)."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
import json
import logging

from .config import ROSTER_PATH
from .errors import RosterError


_log = logging.getLogger("minion_lab.roster_store")

_REQUIRED_KEYS = ("name", "expr", "right", "left")


@dataclass(frozen=True)
class RosterRecord:
    """One roster entry as stored on disk."""

    name: str
    expr: str
    right_clone: str
    left_clone: str

    def as_dict(self) -> dict[str, str]:
        return {"name": self.name, "expr": self.expr, "right": self.right_clone, "left": self.left_clone}

    @classmethod
    def from_dict(cls, payload: dict) -> "RosterRecord":
        missing = [key for key in _REQUIRED_KEYS if not str(payload.get(key, "")).strip()]
        if missing:
            raise RosterError(f"roster entry {payload.get('name', '?')!r} lacks {', '.join(missing)}")
        return cls(
            name=str(payload["name"]).strip(),
            expr=" ".join(str(payload["expr"]).split()),
            right_clone=str(payload["right"]).strip(),
            left_clone=str(payload["left"]).strip(),
        )


def _normalize_name_lists(lists: object) -> dict[str, list[str]]:
    if not isinstance(lists, dict):
        return {}
    normalized: dict[str, list[str]] = {}
    for clone, members in lists.items():
        if isinstance(members, str):
            members = [members]
        if not isinstance(members, list):
            continue
        normalized[str(clone).strip()] = [str(member).strip() for member in members if str(member).strip()]
    return normalized


def _normalize_document(payload: dict) -> dict:
    corollaries = payload.get("corollaries") or {}
    if not isinstance(corollaries, dict):
        corollaries = {}
    irreducibles = payload.get("meet_irreducibles") or []
    return {
        "classes": [entry for entry in payload.get("classes") or [] if isinstance(entry, dict)],
        "corollaries": {
            "clonoids": _normalize_name_lists(corollaries.get("clonoids")),
            "self_stable": _normalize_name_lists(corollaries.get("self_stable")),
        },
        "meet_irreducibles": [str(name).strip() for name in irreducibles if str(name).strip()],
    }


def load_roster_document(path: Path | str | None = None) -> dict:
    """Read and normalise the roster file."""

    path = Path(path) if path is not None else ROSTER_PATH
    if not path.exists():
        raise RosterError(f"roster file not found: {path}")
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise RosterError(f"roster file {path} is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise RosterError(f"roster file {path} must hold a JSON object")
    document = _normalize_document(payload)
    _log.debug("read %d roster entries from %s", len(document["classes"]), path)
    return document


def load_roster_records(document: dict | None = None) -> list[RosterRecord]:
    document = document if document is not None else load_roster_document()
    records = [RosterRecord.from_dict(entry) for entry in document.get("classes", [])]
    if not records:
        raise RosterError("roster file lists no classes")
    return records


def save_roster(path: Path | str, records: list[RosterRecord], document: dict | None = None) -> None:
    """Persist records plus the corollary and meet-irreducible lists."""

    document = _normalize_document(document or {})
    payload = {
        "classes": [record.as_dict() for record in records],
        "corollaries": document["corollaries"],
        "meet_irreducibles": document["meet_irreducibles"],
    }
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


__all__ = ["RosterRecord", "load_roster_document", "load_roster_records", "save_roster"]
