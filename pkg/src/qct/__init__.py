"""Classical code constructions over finite fields and the symmetric /
asymmetric quantum code parameters they yield via CSS-type derivations."""

__version__ = "0.1.0"

from .errors import (CodeError, FieldError, PreconditionError, QctError,
                     SearchCapExceeded)

__all__ = ["CodeError", "FieldError", "PreconditionError", "QctError",
           "SearchCapExceeded", "__version__"]
