"""Size and explosion guards shared by every construction."""

from utils.logger import get_logger

logger = get_logger(__name__)


class GuardExceeded(ValueError):
    """Raised when a requested computation would exceed a configured cap."""

    def __init__(self, guard: str, requested: int, limit: int):
        self.guard = guard
        self.requested = requested
        self.limit = limit
        super().__init__(f"{guard}: requested {requested} exceeds cap {limit}")


def ensure_within(guard: str, requested: int, limit: int) -> int:
    """Raise GuardExceeded unless ``requested <= limit``.

    Args:
        guard: Name of the guard, used in the error message
        requested: Amount asked for
        limit: Configured cap

    Returns:
        ``requested`` unchanged, for inline use
    """
    if requested > limit:
        logger.warning(f"Guard '{guard}' tripped: {requested} > {limit}")
        raise GuardExceeded(guard, requested, limit)
    return requested
