from __future__ import annotations

from pathlib import Path
from typing import Sequence
import json
import logging
import os
import sys

# Ensure sibling `backend/` modules are importable when run from frontend/
PROJECT_SRC = Path(__file__).resolve().parents[1]
if str(PROJECT_SRC) not in sys.path:
    sys.path.insert(0, str(PROJECT_SRC))

from backend.config import load_environment, load_settings
from backend.errors import MinionError
from components import build_parser

_log = logging.getLogger("minion_lab.cli")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INVALID = 3


def _configure_logging(level: str | None) -> None:
    logging.basicConfig(
        level=getattr(logging, level or load_settings().log_level),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command and return the process exit status."""

    load_environment()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        entry = args.entry
        if args.format not in entry.formats:
            parser.error(f"{entry.name} supports --format {', '.join(entry.formats)}")
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    previous = os.environ.get("MINION_MAX_ARITY")
    if args.max_arity is not None:
        os.environ["MINION_MAX_ARITY"] = str(args.max_arity)
    try:
        _configure_logging(args.log_level)
        _log.debug("running %s", entry.name)
        result = entry.run(args)
        if args.format == "json":
            print(json.dumps(result, indent=2, default=str))
        else:
            print(entry.render(result, args))
    except MinionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    finally:
        if args.max_arity is not None:
            if previous is None:
                os.environ.pop("MINION_MAX_ARITY", None)
            else:
                os.environ["MINION_MAX_ARITY"] = previous

    if isinstance(result, dict) and result.get("ok") is False:
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover - command-line entry
    sys.exit(main())
