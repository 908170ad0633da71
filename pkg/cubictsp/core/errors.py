# File: cubictsp/core/errors.py
"""
ERROR HIERARCHY

Every failure the library can report is a CubicTspError. Each class carries the
process exit code the CLI uses for it, so the command layer only has to catch
the base class.

    0  success / pass
    1  verification fail, lemma premise violated, oracle disagreement
    2  usage, structural, format or I/O problem
    3  resource bound exceeded
"""

from typing import Optional


class CubicTspError(Exception):
    """Base class for all library errors."""

    exit_code: int = 2


class StructuralError(CubicTspError):
    """Malformed graph or pole: bad endpoint, loop, duplicate edge, bad stubs."""


class NotCubicError(StructuralError):
    """A vertex does not have degree three where a cubic graph is required."""


class MissingEdgeError(StructuralError):
    """The named edge is not present in the graph."""


class MultigraphError(StructuralError):
    """The requested construction would produce a loop or a parallel edge."""


class UnsupportedArityError(StructuralError):
    """The pole has the wrong number of dangling edges for this operation."""


class InvalidFactorError(CubicTspError):
    """An edge set is not an even factor of its host."""


class TourError(InvalidFactorError):
    """A walk violates one of the tour invariants."""


class NoTourError(CubicTspError):
    """The graph is disconnected, so no closed spanning walk exists."""


class DomainError(CubicTspError):
    """A family index or parameter is outside its domain."""


class PremiseError(CubicTspError):
    """A lemma was applied to a pole that does not satisfy its premise."""

    exit_code = 1


class ResourceBoundError(CubicTspError):
    """A configured budget would be exceeded."""

    exit_code = 3

    def __init__(self, budget_name: str, limit: int, required: Optional[int] = None, hint: str = ""):
        self.budget_name = budget_name
        self.limit = limit
        self.required = required
        self.hint = hint
        message = f"{budget_name} exceeded (limit {limit}"
        if required is not None:
            message += f", required {required}"
        message += ")"
        if hint:
            message += f"; {hint}"
        super().__init__(message)


class GraphFormatError(CubicTspError):
    """A graph or pole file could not be parsed."""

    def __init__(self, path: str, line_no: Optional[int], message: str):
        self.path = path
        self.line_no = line_no
        location = f"{path}:{line_no}" if line_no is not None else path
        super().__init__(f"{location}: {message}")
