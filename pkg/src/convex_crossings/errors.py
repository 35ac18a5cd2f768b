"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An argument is outside the domain where an operation is defined."""
