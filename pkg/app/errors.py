"""Exception hierarchy shared by the library, the CLI and the HTTP API.

Every error carries the CLI exit code and the HTTP status it maps to, so the
two surfaces translate failures the same way.
"""

from __future__ import annotations

from typing import Any, Optional


class LeibnizLabError(Exception):
    """Base class for all domain errors."""

    exit_code: int = 1
    status_code: int = 422
    error_type: str = "leibniz_lab_error"

    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"detail": self.message, "type": self.error_type}
        if self.details:
            payload["context"] = {k: _plain(v) for k, v in self.details.items()}
        return payload


def _plain(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


# -------------------------
# Input errors (exit 2)
# -------------------------


class InputError(LeibnizLabError):
    exit_code = 2
    error_type = "input_error"


class ParseError(InputError):
    """Algebra file could not be parsed; carries a 1-based position."""

    status_code = 400
    error_type = "parse_error"

    def __init__(
        self, message: str, line: Optional[int] = None, column: Optional[int] = None
    ) -> None:
        super().__init__(message, line=line, column=column)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        return f"{self.message} (line {self.line}, column {self.column})"


class BadParamsError(InputError):
    error_type = "bad_params"


class CharacteristicClashError(InputError):
    error_type = "characteristic_clash"


class NotReducibleError(InputError):
    error_type = "not_reducible"


class DimensionMismatchError(InputError, ValueError):
    error_type = "dimension_mismatch"


class NonSquareError(DimensionMismatchError):
    error_type = "non_square"


class NotInvariantError(DimensionMismatchError):
    error_type = "not_invariant"


class NonCommutingError(InputError):
    error_type = "non_commuting"


class NotAnIdealError(InputError):
    error_type = "not_an_ideal"


class NotASubalgebraError(InputError):
    error_type = "not_a_subalgebra"


# -------------------------
# Mathematical refusals
# -------------------------


class LeibnizIdentityError(LeibnizLabError):
    """A checked construction received a table violating the identity."""

    error_type = "leibniz_identity_violation"

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message, witness=witness)
        self.witness = witness


class HypothesisViolatedError(LeibnizLabError):
    error_type = "hypothesis_violated"

    def __init__(self, hypothesis: str, message: Optional[str] = None) -> None:
        super().__init__(message or f"hypothesis violated: {hypothesis}", hypothesis=hypothesis)
        self.hypothesis = hypothesis


class UndecidableError(LeibnizLabError):
    status_code = 409
    error_type = "undecidable"


class WrongCharacteristicError(LeibnizLabError):
    exit_code = 3
    status_code = 409
    error_type = "wrong_characteristic"


class BudgetExceededError(LeibnizLabError):
    exit_code = 4
    status_code = 413
    error_type = "budget_exceeded"

    def __init__(self, message: str, count: Optional[int] = None) -> None:
        super().__init__(message, count=count)
        self.count = count


class NonSplitError(LeibnizLabError):
    """A characteristic polynomial has roots outside the ground field."""

    exit_code = 5
    status_code = 409
    error_type = "non_split"

    def __init__(self, message: str, operator: Any = None, label: str = "") -> None:
        super().__init__(message, label=label)
        self.operator = operator
        self.label = label

    def to_dict(self) -> dict[str, Any]:
        payload = super().to_dict()
        if self.operator is not None:
            f = self.operator.field
            payload["operator"] = [[f.format(a) for a in row] for row in self.operator.rows]
        return payload


class InvariantViolationError(LeibnizLabError):
    """An asserted post-condition failed; always a bug."""

    exit_code = 70
    status_code = 500
    error_type = "invariant_violation"


def ensure(condition: bool, message: str, **details: Any) -> None:
    """Raise InvariantViolationError unless ``condition`` holds."""
    if not condition:
        raise InvariantViolationError(message, **details)
