"""Exception types shared across the package.

The CLI maps these onto process exit codes, so user-facing failures
should be raised as one of the classes below rather than bare
ValueError/RuntimeError.
"""


class WordSyntaxError(ValueError):
    """Malformed word text. Carries the character position when known."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


class LetterBudgetExceeded(RuntimeError):
    """A computation produced more letters than the configured cap allows."""
