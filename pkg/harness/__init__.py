"""Verification suites and their runner."""

from .registry import ALL_SUITES, SUITES, Check, Outcome, SuiteContext, list_suites, register_suite, run_suite
from . import structure_suites, word_suites  # noqa: F401  (registers the suites)

__all__ = [
    'ALL_SUITES', 'SUITES', 'Check', 'Outcome', 'SuiteContext', 'list_suites', 'register_suite', 'run_suite',
]
