"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class UnsupportedError(NotImplementedError):
    """The requested family/order (or similar) combination has no implementation."""
