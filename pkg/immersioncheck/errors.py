"""Custom exceptions for the immersion checker.

Every class carries a machine-readable ``code`` that the command line
interface prints as the prefix of its one-line error message.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:  # pragma: no cover - typing only
    from .checks.base import Diagnostic


class ImmersionCheckError(Exception):
    """Base error type for application specific failures."""

    code = "E_INTERNAL"


class MissingFileError(ImmersionCheckError):
    """Raised when a required input file could not be located."""

    code = "E_MISSING_FILE"


class InvalidConfigurationError(ImmersionCheckError):
    """Raised when the configuration file is malformed or invalid."""

    code = "E_CONFIG"


class InvalidInputError(ImmersionCheckError):
    """Raised when the provided input data does not meet application constraints."""

    code = "E_INPUT"


class WordSyntaxError(InvalidInputError):
    """Raised when a word token is malformed."""

    code = "E_SYNTAX"


class UnknownLetterError(InvalidInputError):
    """Raised when a word mentions a letter outside the alphabet."""

    code = "E_UNKNOWN_LETTER"


class InvalidAlphabetError(InvalidInputError):
    """Raised when letter names collide or a cell letter has dimension below two."""

    code = "E_ALPHABET"


class UnknownVertexError(ImmersionCheckError):
    """Raised when a vertex id is not part of the complex or automaton."""

    code = "E_UNKNOWN_VERTEX"


class IndexOutOfRangeError(ImmersionCheckError):
    """Raised when a simplex vertex index exceeds the cell dimension."""

    code = "E_INDEX"


class DimensionTooLowError(ImmersionCheckError):
    """Raised when an operation needs a cell of dimension at least two."""

    code = "E_DIMENSION"


class InvalidComplexError(ImmersionCheckError):
    """Raised when a complex fails validation.

    The code of the first diagnostic becomes the error code so the CLI can
    report ``E_FACE_IDENTITY`` and friends directly.
    """

    code = "E_INVALID_COMPLEX"

    def __init__(self, message: str, diagnostics: Sequence["Diagnostic"] = ()) -> None:
        super().__init__(message)
        self.diagnostics = tuple(diagnostics)
        if self.diagnostics:
            self.code = self.diagnostics[0].code


class IncompatibleBasesError(ImmersionCheckError):
    """Raised when two labelings disagree about the base complex."""

    code = "E_BASE_CONFLICT"


class PLetterPresentError(ImmersionCheckError):
    """Raised when a Munn tree is requested for a word containing cell letters."""

    code = "E_P_LETTER"


class ClosureBudgetExceededError(ImmersionCheckError):
    """Raised when the fold/expand closure does not stabilise within budget."""

    code = "E_BUDGET"


class NotFoldedError(ImmersionCheckError):
    """Raised when a run is attempted on a non-deterministic automaton."""

    code = "E_NOT_FOLDED"


class NoSuchMapError(ImmersionCheckError):
    """Raised when no label-preserving cell map extends the given vertex pair."""

    code = "E_NO_MAP"


class NotAnImmersionError(ImmersionCheckError):
    """Raised when a covering test receives a map that is not an immersion."""

    code = "E_NOT_IMMERSION"


class NotInLoopMonoidError(ImmersionCheckError):
    """Raised when a generator does not stabilise the base vertex."""

    code = "E_NOT_IN_LOOP_MONOID"


class LiftFailureError(ImmersionCheckError):
    """Raised when a face required by the lifting construction is absent."""

    code = "E_LIFT"


class AmbiguousCellError(LiftFailureError):
    """Raised when several ambient cells share a root and a label."""

    code = "E_AMBIGUOUS_CELL"
