"""Exception types shared across the package."""

from __future__ import annotations


class GroupError(Exception):
    """Base class for every error raised by this package."""


class TableError(GroupError):
    """A raw multiplication table violates a group axiom."""


class NotClosed(TableError):
    """Table is not square, or an entry falls outside [0, n)."""


class NoIdentityAtZero(TableError):
    """No element acts as a two-sided identity."""


class NoInverse(TableError):
    """Some element has no two-sided inverse."""

    def __init__(self, message: str, element: int | None = None):
        super().__init__(message)
        self.element = element


class NotAssociative(TableError):
    """Associativity fails; carries the witness triple (a, b, c)."""

    def __init__(self, message: str, triple: tuple[int, int, int] | None = None):
        super().__init__(message)
        self.triple = triple


class NotCentral(GroupError):
    """A supposed central subgroup contains a non-central element."""


class NotASubgroup(GroupError):
    """A member set is not closed; carries a witness pair."""

    def __init__(self, message: str, witness: tuple[int, int] | None = None):
        super().__init__(message)
        self.witness = witness


class NotCentralInvolution(GroupError):
    """Central-product amalgamation point is not a central involution."""


class SizeLimitExceeded(GroupError):
    """Requested construction exceeds the configured size cap."""


class InvalidArgument(GroupError):
    """Parameter outside the domain of an operation or constructor."""


class ParseError(GroupError):
    """Malformed Cayley-table file; carries 1-based line and column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


class SpecSyntaxError(GroupError):
    """Malformed group-spec string; carries the 0-based position."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class UnknownFamily(GroupError):
    """Group-spec names a family this catalog does not provide."""


class BadParameter(GroupError):
    """Group-spec parameter has the wrong shape for its family."""
