"""Exception types shared across the package."""


class QctError(Exception):
    """Base class for all construction and verification failures."""


class FieldError(QctError):
    """Invalid field parameters or element/field mismatch."""


class CodeError(QctError):
    """Invalid linear-code construction or operation."""


class PreconditionError(QctError):
    """A construction precondition does not hold.

    Carries the individual violations so callers can report them all
    instead of only the first one.
    """

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class SearchCapExceeded(QctError):
    """A bounded exhaustive search ran out of budget."""
