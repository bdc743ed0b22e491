"""Exception types raised when an input violates an operation's hypothesis."""


class CoxpolyError(ValueError):
    """Base class for all domain errors in this package."""


class NotPalindromic(CoxpolyError):
    pass


class NotUnimodular(CoxpolyError):
    pass


class SizeMismatch(CoxpolyError):
    pass


class NotSquareZero(CoxpolyError):
    pass


class NotAcyclic(CoxpolyError):
    pass


class NotSinkOrSource(CoxpolyError):
    pass


class NotSimple(CoxpolyError):
    pass


class NotBipartite(CoxpolyError):
    pass


class HasParallelArrows(CoxpolyError):
    pass


class TooSmall(CoxpolyError):
    pass


class NotATree(CoxpolyError):
    pass


class NotBipartiteGraph(CoxpolyError):
    pass


class BoundExceeded(CoxpolyError):
    pass


class UnknownCampaign(CoxpolyError):
    pass


class ParseError(CoxpolyError):
    """Malformed text input; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
