"""Precondition validation for fbplab inputs."""

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from utils.logger import get_logger

logger = get_logger(__name__)

_VARIABLE_RE = re.compile(r"^\S+$")


class PreconditionError(ValueError):
    """Raised when an operation is called outside its precondition."""


@dataclass(frozen=True)
class ValidationResult:
    """Outcome of a validator that reports instead of raising."""
    is_valid: bool
    message: Optional[str] = None

    def raise_if_invalid(self):
        if not self.is_valid:
            raise PreconditionError(self.message)


def validate_variable(token: str) -> ValidationResult:
    """Check that a token is a usable variable identifier."""
    if not isinstance(token, str) or not token:
        return ValidationResult(False, f"variable identifier must be a nonempty string, got {token!r}")
    if not _VARIABLE_RE.match(token) or token in ("~", "="):
        return ValidationResult(False, f"invalid variable identifier {token!r}")
    return ValidationResult(True)


def require(condition: bool, message: str):
    """Raise PreconditionError with ``message`` unless ``condition`` holds."""
    if not condition:
        logger.debug(f"Precondition failed: {message}")
        raise PreconditionError(message)


def require_variables(tokens: Iterable[str]):
    for token in tokens:
        validate_variable(token).raise_if_invalid()
