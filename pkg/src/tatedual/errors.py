class DomainError(ValueError):
    """An operation was called outside its domain (bad input or violated precondition)."""


class PrecisionError(DomainError):
    """The stored precision is too small for the requested computation.

    `required_precision`, when known, is an upper bound on the precision
    that would make the call succeed.
    """

    def __init__(self, message, required_precision=None):
        super().__init__(message)
        self.required_precision = required_precision
