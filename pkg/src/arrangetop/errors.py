"""Exception hierarchy.

Every error belongs to one of three families, which the CLI maps to exit codes:
validation problems (bad input) exit 1, precondition failures exit 2, and
failed internal audits exit 3.
"""

from __future__ import annotations


class ArrangetopError(Exception):
    exit_code = 1


class ValidationError(ArrangetopError):
    exit_code = 1


class PreconditionError(ArrangetopError):
    exit_code = 2


class AuditError(ArrangetopError):
    exit_code = 3


class DivisionByZero(ZeroDivisionError, ValidationError):
    pass


class NotReal(PreconditionError):
    pass


class InvalidForm(ValidationError):
    pass


class DuplicateLine(ValidationError):
    def __init__(self, i: int, j: int):
        super().__init__(f"lines {i} and {j} coincide")
        self.i = i
        self.j = j


class ParseError(ValidationError):
    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class UnknownBuiltin(ValidationError):
    pass


class NotInTorusLie(PreconditionError):
    pass


class NotAPencil(PreconditionError):
    pass


class PropositionHypothesesNotMet(PreconditionError):
    pass


class NonIsolatedSingularity(PreconditionError):
    pass


class NotAdmissible(PreconditionError):
    pass


class NotGeneralType(PreconditionError):
    pass


class InconsistentSpectrum(AuditError):
    pass


class GenericityFailure(AuditError):
    pass


class InternalError(AuditError):
    pass
