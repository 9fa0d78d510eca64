class DomainError(ValueError):
    """Raised when an input violates a mathematical invariant of the construction."""


class RelationError(DomainError):
    """A quiver representation violates one of the bound-quiver relations."""

    def __init__(self, message, path=None):
        super().__init__(message)
        self.path = path
