"""Error taxonomy for the library.

Every exception carries a stable ``code`` string that the CLI emits in its
JSON error objects, so scripts can dispatch on codes rather than messages.
"""

from __future__ import annotations


class LeavittError(Exception):
    """Base class for all library errors."""

    code = "Error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details


# -- graph construction and validation ------------------------------------

class DanglingEndpointError(LeavittError):
    code = "DanglingEndpoint"


class DuplicateIdError(LeavittError):
    code = "DuplicateId"


class EmptyVertexSetError(LeavittError):
    code = "EmptyVertexSet"


class UnknownVertexError(LeavittError):
    code = "UnknownVertex"


# -- lattice / quotient machinery ------------------------------------------

class GraphTooLargeError(LeavittError):
    code = "GraphTooLarge"


class InvalidSubsetError(LeavittError):
    code = "InvalidSubset"


class NotABreakingVertexError(LeavittError):
    code = "NotABreakingVertex"


class InvalidAdmissiblePairError(LeavittError):
    code = "InvalidAdmissiblePair"


# -- reduction and witnesses -------------------------------------------------

class ZeroElementError(LeavittError):
    code = "ZeroElement"


class BoundExceededError(LeavittError):
    code = "BoundExceeded"


class ExitlessCycleObstructionError(LeavittError):
    code = "ExitlessCycleObstruction"

    def __init__(self, message: str, cycle=None, poly=None, **details):
        super().__init__(message, **details)
        self.cycle = cycle
        self.poly = poly


class NotExitlessCycleBaseError(LeavittError):
    code = "NotExitlessCycleBase"


class NotInCornerError(LeavittError):
    code = "NotInCorner"


class AllGeneratorsZeroError(LeavittError):
    code = "AllGeneratorsZero"


# -- parsing ------------------------------------------------------------------

class ExprSyntaxError(LeavittError):
    code = "SyntaxError"

    def __init__(self, message: str, line: int = 1, column: int = 0, **details):
        super().__init__(message, **details)
        self.line = line
        self.column = column


class UnknownIdentifierError(LeavittError):
    code = "UnknownIdentifier"


class GhostOnGroupError(LeavittError):
    code = "GhostOnGroup"


class ZeroDenominatorError(LeavittError):
    code = "ZeroDenominator"


class NonPrimeModulusError(LeavittError):
    code = "NonPrimeModulus"
