"""Exception types shared across the package."""


class IndexCodingError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(IndexCodingError):
    """Malformed or invalid instance, scheme, or parameter set.

    ``violations`` holds one human-readable string per broken rule.
    """

    def __init__(self, message: str, violations=None):
        super().__init__(message)
        self.violations = list(violations or [])

    def __str__(self) -> str:
        base = super().__str__()
        if self.violations:
            return base + ": " + "; ".join(self.violations)
        return base


class CapExceeded(IndexCodingError):
    """An exact solver or oracle was asked to exceed its configured size cap."""
