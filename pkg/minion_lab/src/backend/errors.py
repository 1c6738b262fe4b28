"""Exception hierarchy shared by the backend modules."""

from __future__ import annotations


class MinionError(RuntimeError):
    """Raised for recoverable input and computation failures."""


class ParseError(MinionError, ValueError):
    """Malformed truth table, tuple literal or class expression."""


class ArityError(MinionError, ValueError):
    """Arity mismatch, or an arity outside the supported range."""


class BudgetError(MinionError):
    """A composition would enumerate more candidates than the configured budget."""


class UnknownNameError(MinionError, KeyError):
    """Unknown class, clone, named function or operation."""

    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class RosterError(MinionError):
    """The roster file is inconsistent."""


class ConfigError(MinionError, ValueError):
    """An environment setting has an invalid value."""


class HypothesisError(MinionError, ValueError):
    """Point sets violate the hypotheses of the self-dual monotone extension."""

    def __init__(self, message: str, pair: tuple[tuple[int, ...], tuple[int, ...]] | None = None):
        super().__init__(message)
        self.pair = pair


class NotBisectableError(MinionError):
    """The target function is not bisectable by the generator set."""


class LatticeError(MinionError):
    """Order, meet or classification inconsistency; signals a roster bug."""


class SchemaError(MinionError):
    """An operation result does not match its shipped output schema."""


__all__ = [
    "ArityError",
    "BudgetError",
    "ConfigError",
    "HypothesisError",
    "LatticeError",
    "MinionError",
    "NotBisectableError",
    "ParseError",
    "RosterError",
    "SchemaError",
    "UnknownNameError",
]
