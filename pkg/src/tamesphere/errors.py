"""Exception types shared across the package."""


class TamesphereError(Exception):
    """Base class for all package errors."""


class InputError(TamesphereError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class DimensionError(InputError):
    """Vectors of mismatched or unsupported dimension."""


class UnsupportedDimensionError(InputError):
    """Operation not available in this ambient dimension."""


class ContractViolation(TamesphereError):
    """An operation was called outside its stated precondition."""


class InternalInvariantError(TamesphereError):
    """A re-checked invariant failed; indicates a bug, never swallowed."""


class NotTameError(TamesphereError):
    """Raised when a tameness precondition fails; carries the witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class EnlargementError(TamesphereError):
    """An enlargement (thickening, completion step) could not be certified."""

    def __init__(self, message, witness=None, trace=None):
        super().__init__(message)
        self.witness = witness
        self.trace = trace
