"""Exception types shared across the package."""


class DomainError(ValueError):
    """Arguments outside the mathematical domain (pole, excluded strip, a <= 0)."""


class ConvergenceError(RuntimeError):
    """A series could not reach its truncation target within the term cap."""


class PrecisionExhausted(RuntimeError):
    """A sign stayed indeterminate at the precision ceiling."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location
