"""Exception types shared across the package."""


class BasePhiError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BasePhiError, ValueError):
    """An argument is outside the domain of the requested operation."""


class MalformedWordError(DomainError):
    """A digit word does not satisfy the structural precondition of an operation."""


class PatternMismatchError(DomainError):
    """A rewrite window does not contain the digit pattern the rewrite requires."""


class UnknownSuiteError(DomainError):
    """The requested verification suite does not exist."""


class GuardBoundError(BasePhiError):
    """A deliberately bounded oracle was asked to exceed its guard bound."""


class InternalRewriteError(BasePhiError, RuntimeError):
    """An internal invariant failed (iteration cap hit or surgery mismatch)."""
