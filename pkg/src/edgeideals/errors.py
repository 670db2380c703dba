"""Shared exception types."""


class UniverseMismatch(ValueError):
    """Operands live in polynomial rings with different variable counts."""


class LimitExceeded(RuntimeError):
    """An exhaustive search or table would exceed its configured desk-scale bound."""


class GraphFormatError(ValueError):
    """A graph text file failed to parse; carries the offending line number."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")
