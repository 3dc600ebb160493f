"""Exception types shared across the package."""


class InvariantViolation(AssertionError):
    """A structural fact that must hold was observed to fail."""


class TheoremViolation(AssertionError):
    """A computed value contradicts a proven bound or count."""


class BudgetExceeded(RuntimeError):
    """An exhaustive sweep would exceed the configured work budget."""
