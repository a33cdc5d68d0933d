"""Suite registry and runner.

A suite is a function from its context to a list of checks; each check is a
closure producing an :class:`Outcome`. Checks of one suite run on a thread pool
and their results are merged back in registry order.
"""

import time
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from models import CheckResult, CheckStatus, SuiteConfig, SuiteReport
from safety.validation import PreconditionError
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass
class Outcome:
    """What a check computed. ``passed`` defaults to ``expected == actual``."""
    expected: Any
    actual: Any
    passed: Optional[bool] = None
    bound: Optional[Dict[str, Any]] = None
    counterexample: Optional[Dict[str, Any]] = None
    detail: Optional[str] = None


@dataclass(frozen=True)
class Check:
    check_id: str
    anchor: str
    run: Callable[[], Outcome]
    params: Dict[str, Any] = field(default_factory=dict)
    stretch: bool = False


@dataclass(frozen=True)
class SuiteContext:
    """Everything a suite builder may read from the run configuration."""
    seed: int
    samples: int
    params: Dict[str, Any]

    def get(self, key: str, default: Any) -> Any:
        return self.params.get(key, default)

    def seed_for(self, check_id: str) -> int:
        """Per-check seed, stable across runs and independent of scheduling."""
        return (self.seed * 1_000_003 + zlib.crc32(check_id.encode())) % (2 ** 32)


SuiteBuilder = Callable[[SuiteContext], List[Check]]


@dataclass(frozen=True)
class SuiteEntry:
    name: str
    description: str
    build: SuiteBuilder


SUITES: Dict[str, SuiteEntry] = {}
ALL_SUITES = "all"


def register_suite(name: str, description: str):
    """Decorator adding a suite builder to the registry."""
    def decorator(build: SuiteBuilder) -> SuiteBuilder:
        if name in SUITES or name == ALL_SUITES:
            raise ValueError(f"suite {name!r} registered twice")
        SUITES[name] = SuiteEntry(name, description, build)
        return build
    return decorator


def list_suites() -> List[SuiteEntry]:
    return list(SUITES.values())


def _evaluate(check: Check, run_stretch: bool) -> CheckResult:
    base = dict(check_id=check.check_id, anchor=check.anchor, params=check.params)
    if check.stretch and not run_stretch:
        return CheckResult(**base, status=CheckStatus.SKIPPED, detail="stretch check, enable run_stretch")
    try:
        outcome = check.run()
    except (ValueError, RuntimeError) as e:
        logger.error(f"❌ {check.check_id} raised {type(e).__name__}: {e}")
        return CheckResult(**base, status=CheckStatus.FAIL, detail=f"{type(e).__name__}: {e}")
    passed = outcome.passed if outcome.passed is not None else outcome.expected == outcome.actual
    if not passed:
        status = CheckStatus.FAIL
    elif outcome.bound is not None:
        status = CheckStatus.BOUNDED_PASS
    else:
        status = CheckStatus.PASS
    logger.debug(f"{check.check_id}: {status.value}")
    return CheckResult(
        **base, expected=outcome.expected, actual=outcome.actual, status=status,
        bound=outcome.bound, counterexample=outcome.counterexample, detail=outcome.detail,
    )


def _suite_checks(name: str, config: SuiteConfig) -> List[Check]:
    entry = SUITES[name]
    context = SuiteContext(config.seed, config.samples, config.suite_params(name))
    return entry.build(context)


def run_suite(name: str, config: Optional[SuiteConfig] = None) -> SuiteReport:
    """Run a registered suite (or ``all``) and assemble its report.

    Args:
        name: Registered suite name or ``all``
        config: Run configuration; defaults to SuiteConfig()

    Returns:
        SuiteReport with checks in registry order

    Raises:
        PreconditionError: unknown suite name
    """
    config = config or SuiteConfig()
    if name != ALL_SUITES and name not in SUITES:
        raise PreconditionError(f"unknown suite {name!r}; expected one of {sorted(SUITES) + [ALL_SUITES]}")

    started = time.perf_counter()
    if name == ALL_SUITES:
        checks = []
        for suite in SUITES:
            for check in _suite_checks(suite, config):
                checks.append(Check(f"{suite}:{check.check_id}", check.anchor, check.run,
                                    check.params, check.stretch))
    else:
        checks = _suite_checks(name, config)

    logger.info(f"🚀 Running suite {name}: {len(checks)} checks on {config.workers} workers")
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        futures = [pool.submit(_evaluate, check, config.run_stretch) for check in checks]
        results = [future.result() for future in futures]

    report = SuiteReport(
        suite=name,
        checks=results,
        wall_time=round(time.perf_counter() - started, 3) if config.record_timing else None,
        seed=config.seed,
    )
    counts = report.status_counts()
    if report.failed:
        logger.warning(f"❌ Suite {name}: {counts}")
    else:
        logger.info(f"✅ Suite {name}: {counts}")
    return report
