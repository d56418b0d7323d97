"""Exception hierarchy shared by all facekit modules.

Every error carries a human-readable message; CLI maps them to exit codes
(parse -> 2, resource -> 3, precondition/domain -> 4).
"""


class FacekitError(Exception):
    """Base class for all facekit errors."""


class DimensionMismatchError(FacekitError):
    """Operands live in different ambient dimensions."""


class PreconditionError(FacekitError):
    """A documented precondition of an operation was violated."""


class ResourceLimitError(FacekitError):
    """An enumeration or search exceeded its configured bound."""


class ParseError(FacekitError):
    """Malformed textual input; carries an optional line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GenerationError(FacekitError):
    """Random generation failed to meet its contract within the retry budget."""


class UnsupportedInputError(FacekitError):
    """Input is well-formed but outside the decidable fragment of an operation."""
