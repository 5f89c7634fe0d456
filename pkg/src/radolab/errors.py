"""Shared error types."""


class CapExceededError(ValueError):
    """An exhaustive enumeration would exceed its configured cap."""

    def __init__(self, cap: int, message: str = ""):
        self.cap = cap
        super().__init__(message or f"instance exceeds the enumeration cap ({cap})")
