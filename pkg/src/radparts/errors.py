"""Exception types raised across the package."""


class RadpartsError(Exception):
    """Base class for all library errors."""


class PreconditionViolation(RadpartsError):
    """An operation was called outside the range where its reduction applies."""


class VarCountMismatch(RadpartsError):
    """Two Weyl-algebra elements live in algebras with different numbers of variables."""


class BoundTooSmall(RadpartsError):
    """A membership search was requested below the degree of its target."""


class ProperSubsetRequired(RadpartsError):
    """A subset label must be a proper subset of the quiver vertices."""


class DataIntegrity(RadpartsError):
    """A data row is inconsistent with the values derived from it."""


class ParseError(RadpartsError, ValueError):
    """Malformed rational or operator expression."""
