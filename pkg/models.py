from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from config import DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_WORKERS, TOOL_VERSION


def plain_value(value: Any) -> Any:
    """JSON-shaped copy of ``value``: tuples become lists, sets become sorted lists."""
    if isinstance(value, dict):
        return {str(key): plain_value(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain_value(item) for item in value]
    if isinstance(value, (set, frozenset)):
        return sorted((plain_value(item) for item in value), key=repr)
    if isinstance(value, Enum):
        return value.value
    if hasattr(value, "item") and callable(value.item):
        # numpy scalars
        return value.item()
    return value


# Configuration Models
class SuiteConfig(BaseModel):
    """Configuration for a suite run, loaded from ``--config file.json``."""
    model_config = ConfigDict(extra="forbid")

    seed: int = Field(DEFAULT_SEED, description="Seed for every sampled check")
    workers: int = Field(DEFAULT_WORKERS, description="Threads running checks of one suite", ge=1)
    samples: int = Field(DEFAULT_SAMPLES, description="Substitutions drawn by sampled checks", ge=1)
    record_timing: bool = Field(False, description="Record wall time in the report (breaks byte equality)")
    run_stretch: bool = Field(False, description="Run stretch checks instead of skipping them")
    params: Dict[str, Dict[str, Any]] = Field(
        default_factory=dict, description="Per-suite bound overrides, keyed by suite name"
    )

    def suite_params(self, suite: str) -> Dict[str, Any]:
        return dict(self.params.get(suite, {}))


# Report Models
class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    BOUNDED_PASS = "bounded-pass"
    SKIPPED = "skipped"


class CheckResult(BaseModel):
    """One verified claim."""
    check_id: str = Field(..., description="Stable identifier, unique within the suite")
    anchor: str = Field(..., description="The claim this check reproduces")
    params: Dict[str, Any] = Field(default_factory=dict, description="Parameters the check ran with")
    expected: Any = Field(None, description="Expected value")
    actual: Any = Field(None, description="Computed value")
    status: CheckStatus = Field(..., description="pass, fail, bounded-pass or skipped")
    bound: Optional[Dict[str, Any]] = Field(None, description="Search bounds behind a bounded verdict")
    counterexample: Optional[Dict[str, Any]] = Field(None, description="Substitution refuting the claim")
    detail: Optional[str] = Field(None, description="Free-form note (skip reason, error message)")

    @field_validator("params", "expected", "actual", "bound", "counterexample", mode="before")
    @classmethod
    def _plain(cls, value: Any) -> Any:
        return plain_value(value)


class SuiteReport(BaseModel):
    """Report of a suite run; equal runs give byte-identical JSON."""
    suite: str = Field(..., description="Suite name")
    checks: List[CheckResult] = Field(default_factory=list, description="Checks in registry order")
    wall_time: Optional[float] = Field(None, description="Seconds, only when timing was requested")
    seed: int = Field(..., description="Seed the run used")
    tool_version: str = Field(TOOL_VERSION, description="fbplab version")

    @property
    def failed(self) -> List[CheckResult]:
        return [check for check in self.checks if check.status is CheckStatus.FAIL]

    def status_counts(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in CheckStatus}
        for check in self.checks:
            counts[check.status.value] += 1
        return counts
