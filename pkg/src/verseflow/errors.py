"""Exception types shared across the package."""


class VerseflowError(Exception):
    """Base class for every error raised by this package."""


class FormatError(VerseflowError, ValueError):
    """A transcription cell violates the syllable-cell grammar.

    Carries the first offending cell and its position (1-based line and
    cell numbers) when they are known.
    """

    def __init__(self, message: str, cell: str | None = None,
                 line: int | None = None, column: int | None = None):
        self.cell = cell
        self.line = line
        self.column = column
        if cell is not None:
            message = f"{message}: cell {cell!r} at line {line}, position {column}"
        super().__init__(message)


class MalformedContinuationError(VerseflowError, ValueError):
    """A continuation syllable has no open word to attach to, or a word
    is still open when the token sequence ends."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        super().__init__(message)


class LineIndexError(VerseflowError, IndexError):
    """A line index falls outside the loaded corpus."""


class InvalidConfigError(VerseflowError, ValueError):
    """A configuration field violates its contract; names the field."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class NonFiniteStateError(VerseflowError, ArithmeticError):
    """A simulated state overflowed to a non-finite value; reports the step."""

    def __init__(self, step: int):
        self.step = step
        super().__init__(f"state became non-finite at step {step}")


class EmptyLogError(VerseflowError, ValueError):
    """A sample log with no vectors was passed where one is required."""


class SinkError(VerseflowError, OSError):
    """Writing diagnostics to the requested sink failed."""


class PlanRangeError(VerseflowError, ValueError):
    """The requested corpus slice falls outside the loaded corpus."""


class NotArmedError(VerseflowError):
    """Generation was requested while the volume trigger is still zero."""


class NoPlanError(VerseflowError):
    """Streaming was requested before any plan had been generated."""


class UnknownSessionError(VerseflowError, KeyError):
    """No session with the requested id exists."""


class UnknownPlanError(VerseflowError, KeyError):
    """No persisted plan with the requested id exists."""
