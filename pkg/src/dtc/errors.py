"""Exception types shared across the package.

``MalformedInput`` maps to CLI exit code 2, every other ``DtcError`` to 1.
"""


class DtcError(Exception):
    """Base class; ``kind`` is a short machine-readable tag."""

    kind = "error"

    def __init__(self, kind: str | None = None, message: str = ""):
        if kind is not None:
            self.kind = kind
        self.message = message
        super().__init__(f"{self.kind}: {message}" if message else self.kind)


class MalformedInput(DtcError, ValueError):
    kind = "malformed-input"


class DomainError(DtcError, ValueError):
    """Input is well formed but violates an operation's precondition."""
