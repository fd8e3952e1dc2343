"""Exception hierarchy shared by every lialg module."""

from __future__ import annotations


class LialgError(Exception):
    """Base class for all library errors."""


class RankError(LialgError):
    """Weights of incompatible rank, or an operation undefined at this rank."""


class NotMaximalRank(LialgError):
    """The algebra fails the maximal-rank / generation precondition."""


class PreconditionFailed(LialgError):
    pass


class LengthMismatch(LialgError):
    pass


class BadParameter(LialgError):
    pass


class EmptyCohomology(LialgError):
    """Requested representatives of a cohomology space that is zero."""


class NotACocycle(LialgError):
    pass


class IsACoboundary(LialgError):
    pass


class ParseError(LialgError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateWeight(ParseError):
    pass


class DuplicateBracket(ParseError):
    pass


class UnknownWeight(ParseError):
    pass


class NonRational(ParseError):
    pass
