"""Exception types raised by the library.

Everything inherits from HosoyaError so callers (notably the CLI) can treat
any library-level failure as an input/validation problem with one handler.
"""


class HosoyaError(Exception):
    """Base class for all library errors."""


class SelfLoopError(HosoyaError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(HosoyaError):
    """The same unordered vertex pair appears as two edges."""


class DisconnectedError(HosoyaError):
    """The input graph is not connected."""


class EmptyEdgeSetError(HosoyaError):
    """An edge-based operation was asked of a graph with no edges."""


class EdgeListFormatError(HosoyaError):
    """An edge-list text file does not follow the expected format."""


class NonzeroConstantTermError(HosoyaError):
    """Division by x was attempted on a polynomial with a nonzero constant term."""


class OddSecondDerivativeError(HosoyaError):
    """Second derivative at 1 is odd, so the input was not a valid distance polynomial."""


class NotATreeError(HosoyaError):
    """A tree-only operation was asked of a graph with a cycle."""


class ConstantTermMismatchError(HosoyaError):
    """A polynomial's constant term disagrees with the stated vertex count."""


class NegativeResultError(HosoyaError):
    """A quantity that must be non-negative came out negative; inputs were inconsistent."""


class NonIntegralResultError(HosoyaError):
    """An exact integer division left a remainder; signals an implementation bug."""
