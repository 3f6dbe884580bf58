"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class DualRankError(Exception):
    """Base class for all errors raised by :mod:`dualrank`."""


class DimensionError(DualRankError, ValueError):
    """Operand shapes are incompatible."""


class RankError(DualRankError, ValueError):
    """A matrix does not have the rank an operation requires."""


class NotInvertibleError(RankError):
    """A square matrix (or the real part of a dual matrix) is singular."""


class ResidualError(DualRankError):
    """An existence test failed; ``residual`` holds the nonzero witness."""

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual


class ConsistencyError(ResidualError):
    """The two-sided equation ``AX + YB = C`` has no solution."""


class DecompositionError(ResidualError):
    """A dual matrix has no dual r-rank decomposition."""


class DMPGIError(ResidualError):
    """A dual matrix has no dual Moore-Penrose inverse."""


class PreconditionError(DualRankError, ValueError):
    """An input violates a structural precondition (e.g. not idempotent)."""


class FormulaDiscrepancyError(DualRankError, AssertionError):
    """Two closed forms that must agree produced different matrices."""


class ParseError(DualRankError, ValueError):
    """Malformed rational or matrix document."""


class SchemaError(ParseError):
    """Well-formed JSON that does not describe a valid matrix document."""
