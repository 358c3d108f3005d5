"""Exception types raised by the simulation layers.

All of them derive from ValueError so callers that only care about
"bad input" can catch one class.
"""

from __future__ import annotations


class DimensionError(ValueError):
    """Shape mismatch, bad qubit index, or a register beyond the qubit limit."""


class InvariantError(ValueError):
    """A value violates a named physical invariant (trace, hermiticity, simplex...)."""

    def __init__(self, invariant: str, detail: str = "") -> None:
        self.invariant = invariant
        message = f"violated invariant: {invariant}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class ImpossibleBranchError(ValueError):
    """A measurement branch with vanishing probability was asked for its state."""


class CoefficientParseError(ValueError):
    """A coefficient file could not be turned into a simplex vector."""
