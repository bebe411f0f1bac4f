"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` (used by the CLI's
JSON error stream) and an ``exit_status``: 2 for bad input, 1 for
well-formed input on which the requested computation has no answer.
"""

from __future__ import annotations


class HankelInterpError(Exception):
    code = "Error"
    exit_status = 2

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.code)
        self.details = details

    @property
    def message(self) -> str:
        return str(self)


# -- input errors (exit status 2) ---------------------------------------------

class MalformedNumber(HankelInterpError, ValueError):
    code = "MalformedNumber"


class ZeroDenominator(HankelInterpError, ValueError):
    code = "ZeroDenominator"


class NonInvertibleDenominator(HankelInterpError, ValueError):
    code = "NonInvertibleDenominator"


class InvalidModulus(HankelInterpError, ValueError):
    code = "InvalidModulus"


class FieldMismatch(HankelInterpError, TypeError):
    code = "FieldMismatch"


class DivisionByZero(HankelInterpError, ZeroDivisionError):
    code = "DivisionByZero"


class BitLimitExceeded(HankelInterpError, ArithmeticError):
    code = "BitLimitExceeded"


class SequenceTooShort(HankelInterpError, ValueError):
    code = "SequenceTooShort"


class InvalidTable(HankelInterpError, ValueError):
    code = "InvalidTable"


class DuplicateNodes(InvalidTable):
    code = "DuplicateNodes"

    def __init__(self, message: str = "", rows=()):
        super().__init__(message, rows=list(rows))
        self.rows = list(rows)


class ZeroValueInTable(HankelInterpError, ValueError):
    code = "ZeroValueInTable"

    def __init__(self, message: str = "", indices=()):
        super().__init__(message, indices=list(indices))
        self.indices = list(indices)


class ZeroRatio(ZeroValueInTable):
    code = "ZeroRatio"


class DegreeOutOfRange(HankelInterpError, ValueError):
    code = "DegreeOutOfRange"


class TableTooLargeForOracle(HankelInterpError, ValueError):
    code = "TableTooLargeForOracle"


class DegenerateLeadingCoefficient(HankelInterpError, ValueError):
    code = "DegenerateLeadingCoefficient"


class IoFailure(HankelInterpError, OSError):
    code = "IoFailure"


class MalformedFile(HankelInterpError, ValueError):
    code = "MalformedFile"


class InsufficientRedundancy(HankelInterpError, ValueError):
    code = "InsufficientRedundancy"


# -- domain outcomes (exit status 1) ------------------------------------------

class NoConsistentLocator(HankelInterpError):
    code = "NoConsistentLocator"
    exit_status = 1


class NotInCommonZeroRegime(HankelInterpError):
    code = "NotInCommonZeroRegime"
    exit_status = 1


class AmbiguousCommonZero(HankelInterpError):
    code = "AmbiguousCommonZero"
    exit_status = 1
