"""Guards and input validation for fbplab."""

from .limits import GuardExceeded, ensure_within
from .validation import PreconditionError, ValidationResult, require

__all__ = ['GuardExceeded', 'ensure_within', 'PreconditionError', 'ValidationResult', 'require']
