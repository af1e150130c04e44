"""Shared exception types."""


class DomainError(ValueError):
    """Inputs outside an operation's domain: mixed fields, bad parameters."""


class DegenerateOperatorError(DomainError):
    """A differential operator with all-zero coefficients."""


class ResourceLimitError(RuntimeError):
    """A configured enumeration cap or factoring effort bound was exceeded.

    Raised instead of returning a possibly-wrong answer; callers decide
    whether to retry with a larger cap or report a skip.
    """
