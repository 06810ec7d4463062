"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed hypergraph text input."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class UnsupportedInstanceError(ValueError):
    """Input outside an engine's contract (rank too high, size guard exceeded)."""


class SearchInvariantError(RuntimeError):
    """An internal search invariant failed; indicates a bug, not bad input."""
