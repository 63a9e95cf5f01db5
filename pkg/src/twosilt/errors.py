"""Shared exception types."""


class CapExceededError(RuntimeError):
    """An enumeration grew past its element cap.

    ``partial_count`` records how many elements had been found when the cap
    was hit.
    """

    def __init__(self, message: str, partial_count: int = 0):
        super().__init__(message)
        self.partial_count = partial_count


class OracleCapError(RuntimeError):
    """A module-level oracle computation was requested beyond its size guard."""


class InvariantError(RuntimeError):
    """A structural invariant that the theory guarantees failed to hold."""
