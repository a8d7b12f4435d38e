"""Error types raised by the fuzzypettis kernel.

Every error carries a stable ``code`` string so the command-line front end can
map it to an exit code and print a message naming the offending field.
"""

from typing import Optional


class FuzzyPettisError(ValueError):
    """Base class for all validation and computation errors."""

    code = "ERROR"

    def __init__(self, message: str, field: Optional[str] = None):
        self.field = field
        super().__init__(message)

    def __str__(self) -> str:
        text = super().__str__()
        if self.field:
            return f"{self.code} [{self.field}]: {text}"
        return f"{self.code}: {text}"


class DimensionMismatchError(FuzzyPettisError):
    code = "DIMENSION_MISMATCH"


class LevelRangeError(FuzzyPettisError):
    code = "LEVEL_RANGE"


class NestingViolationError(FuzzyPettisError):
    """A level family is not nested; ``pair`` holds the offending indices (i, i+1)."""

    code = "NESTING_VIOLATION"

    def __init__(self, message: str, pair: tuple, field: Optional[str] = None):
        self.pair = pair
        super().__init__(message, field)


class ConvergenceError(FuzzyPettisError):
    code = "NON_CONVERGENCE"


class InvalidSetError(FuzzyPettisError):
    code = "INVALID_INDEX"


class NotASelectionError(FuzzyPettisError):
    code = "NOT_A_SELECTION"


class NotDominatedError(FuzzyPettisError):
    code = "NOT_DOMINATED"


class NullSetError(FuzzyPettisError):
    code = "NULL_SET"


class OracleLimitError(FuzzyPettisError):
    code = "INSTANCE_TOO_LARGE"


class CoverageError(OracleLimitError):
    code = "COVERAGE"


class UnsupportedDimensionError(FuzzyPettisError):
    code = "UNSUPPORTED_DIMENSION"


class ScenarioError(FuzzyPettisError):
    """Scenario documents that cannot be parsed or fail validation on load."""

    code = "VALIDATION"


class ScenarioParseError(ScenarioError):
    code = "PARSE"
