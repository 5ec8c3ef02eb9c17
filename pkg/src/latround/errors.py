"""Exception types shared across the package."""


class UsageError(ValueError):
    """Malformed input: shape mismatch, empty set, invalid certificate."""


class DomainError(Exception):
    """Structurally valid input outside an operation's mathematical domain.

    Carries an optional witness (a point, or a tuple of points) that
    demonstrates the violation.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BudgetError(RuntimeError):
    """An enumeration would exceed the configured budget."""

    def __init__(self, message, budget=None, required=None):
        super().__init__(message)
        self.budget = budget
        self.required = required


class InternalError(RuntimeError):
    """A guaranteed invariant failed; indicates a bug upstream, not bad input."""
