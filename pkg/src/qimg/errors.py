"""Exception types shared across the package."""


class DomainError(ValueError):
    """A value lies outside the carrier of the quantale in force."""


class ShapeError(ValueError):
    """Index sets, grid shapes or quantale families do not line up."""


class ParseError(ValueError):
    """A file does not conform to its declared format."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte {offset})"
        super().__init__(message)
        self.offset = offset
