"""Exception hierarchy shared by the library and the command line.

Every error carries the exit code the CLI uses when it reaches the top level.
"""
from __future__ import annotations

from typing import Optional


class SquigError(Exception):
    """Base class for all squigonometry errors."""

    exit_code = 1


class ArgumentError(SquigError, ValueError):
    """Malformed arguments or violated argument preconditions."""

    exit_code = 2


class DomainError(SquigError, ValueError):
    """Input outside the mathematical domain of an operation."""

    exit_code = 3


class PoleError(DomainError):
    """Division by a vanishing denominator in a reciprocal function."""

    exit_code = 5

    def __init__(self, function: str, t: float) -> None:
        self.function = function
        self.t = t
        super().__init__(f"{function} has a pole at t={t!r}")


class AccuracyError(SquigError, RuntimeError):
    """A numerical method did not reach the requested accuracy."""

    exit_code = 4

    def __init__(
        self,
        message: str,
        best_estimate: Optional[float] = None,
        error: Optional[float] = None,
    ) -> None:
        self.best_estimate = best_estimate
        self.error = error
        super().__init__(message)


class SolverError(AccuracyError):
    """Root bracketing or convergence failure."""
