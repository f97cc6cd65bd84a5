"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A constructor or operation received parameters outside its domain."""


class InvalidKindError(InvalidParameterError):
    """An operation was applied to a manifold kind it does not support."""


class NumericalFailureError(RuntimeError):
    """An iterative numerical procedure failed to converge.

    Carries a diagnostic report (residuals, iteration counts) in ``details``.
    """

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details


class SpecSyntaxError(ValueError):
    """A manifold spec string failed to parse; ``offset`` is the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
