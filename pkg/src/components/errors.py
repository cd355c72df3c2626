"""Exception hierarchy shared by every component.

Each error carries a stable ``code`` so the CLI and the API can report it
without parsing messages.
"""
from __future__ import annotations

from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:  # pragma: no cover
    from .models import ValidationReport


class BlfError(Exception):
    code = "E"

    def __init__(self, message: str, element: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.element = element

    def diagnostic(self) -> str:
        return f"{self.code} {self.element or '-'} {self.message}"


# fiber-model
class NotApplicable(BlfError):
    code = "NotApplicable"


# mcg
class GenusMismatch(BlfError):
    code = "GenusMismatch"


# diagram
class MalformedArrangement(BlfError):
    code = "V1"


class NotSphere(BlfError):
    code = "V1"


class InconsistentLabels(BlfError):
    code = "V2"


class UnknownStratum(BlfError):
    code = "UnknownStratum"


class IsPencil(BlfError):
    code = "IsPencil"


# moves
class UnknownElement(BlfError):
    code = "UnknownElement"


class ArrowViolation(BlfError):
    code = "ArrowViolation"


class IndexViolation(BlfError):
    code = "IndexViolation"


class NotAdjacent(BlfError):
    code = "NotAdjacent"


class LiftMismatch(BlfError):
    code = "LiftMismatch"


class NotACusp(BlfError):
    code = "NotACusp"


class PreconditionViolated(BlfError):
    code = "PreconditionViolated"


class NotAPencil(BlfError):
    code = "NotAPencil"


class NoSections(BlfError):
    code = "NoSections"


class InvalidResult(BlfError):
    code = "InvalidResult"

    def __init__(self, message: str, report: "Optional[ValidationReport]" = None, element: Optional[str] = None):
        super().__init__(message, element)
        self.report = report

    def diagnostic(self) -> str:
        lines = [super().diagnostic()]
        if self.report is not None:
            lines.extend(issue.diagnostic() for issue in self.report.violations)
        return "\n".join(lines)


# parsing
class BlfParseError(BlfError):
    code = "ParseError"

    def __init__(self, message: str, line: int = 0, column: int = 0, element: Optional[str] = None):
        super().__init__(message, element)
        self.line = line
        self.column = column

    def diagnostic(self) -> str:
        return f"{self.code} {self.line}:{self.column} {self.message}"


class BlfSyntaxError(BlfParseError):
    code = "SyntaxError"


class DuplicateId(BlfParseError):
    code = "DuplicateId"


class UnknownReference(BlfParseError):
    code = "UnknownReference"
