"""Report formatting utilities for fbplab."""

import json
from typing import Any, Dict, List, Optional

from tabulate import tabulate

from models import CheckResult, CheckStatus, SuiteReport


class ReportFormatter:
    """Formats suite reports as JSON documents or human-readable tables."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """Initialize report formatter.

        Args:
            config: Configuration dictionary with formatting options
        """
        default_config = {
            'table_format': 'grid',
            'truncate_long_text': True,
            'max_text_length': 60,
            'json_indent': 2,
        }
        self.config = {**default_config, **(config or {})}

    def format_json(self, report: SuiteReport) -> str:
        """Stable JSON: keys in declaration order, no timestamps unless timing was requested."""
        return report.model_dump_json(indent=self.config['json_indent'])

    def format_text(self, report: SuiteReport) -> str:
        """Grid table of the checks followed by summary lines.

        Failing checks list their counterexample in full below the table, and
        bounded verdicts carry their bounds in the table itself.
        """
        response_parts = [f"Suite {report.suite} (seed {report.seed}, fbplab {report.tool_version})"]
        if report.checks:
            response_parts.append(self._format_checks_table(report.checks))
        else:
            response_parts.append("No checks registered.")

        failures = [self._format_failure(check) for check in report.failed]
        if failures:
            response_parts.append("\n".join(failures))

        counts = report.status_counts()
        summary = ", ".join(f"{counts[status.value]} {status.value}" for status in CheckStatus)
        response_parts.append(f"Summary: {summary}")
        if report.wall_time is not None:
            response_parts.append(f"Completed in {report.wall_time:.3f} seconds")
        return "\n\n".join(response_parts)

    def _format_checks_table(self, checks: List[CheckResult]) -> str:
        headers = ["check", "anchor", "expected", "actual", "status"]
        rows = []
        for check in checks:
            status = check.status.value
            if check.bound:
                status += " " + self._format_cell_value(check.bound)
            if check.status is CheckStatus.SKIPPED and check.detail:
                status += f" ({check.detail})"
            rows.append([
                check.check_id,
                self._truncate(check.anchor),
                self._truncate(self._format_cell_value(check.expected)),
                self._truncate(self._format_cell_value(check.actual)),
                status,
            ])
        return tabulate(rows, headers=headers, tablefmt=self.config['table_format'],
                        numalign='right', stralign='left')

    def _format_failure(self, check: CheckResult) -> str:
        lines = [f"FAILED {check.check_id}: {check.anchor}"]
        if check.params:
            lines.append(f"  params: {self._format_cell_value(check.params)}")
        lines.append(f"  expected: {self._format_cell_value(check.expected)}")
        lines.append(f"  actual: {self._format_cell_value(check.actual)}")
        if check.counterexample is not None:
            lines.append(f"  counterexample: {self._format_cell_value(check.counterexample)}")
        if check.detail:
            lines.append(f"  detail: {check.detail}")
        return "\n".join(lines)

    def _truncate(self, text: str) -> str:
        max_length = self.config['max_text_length']
        if self.config['truncate_long_text'] and len(text) > max_length:
            return text[:max_length] + "..."
        return text

    def _format_cell_value(self, value: Any) -> str:
        """Format individual cell value.

        Args:
            value: Cell value to format

        Returns:
            Formatted string value
        """
        if value is None:
            return "-"
        elif isinstance(value, bool):
            return "true" if value else "false"
        elif isinstance(value, (dict, list)):
            return json.dumps(value, default=str)
        else:
            return str(value)


def emit_report(report: SuiteReport, format: str = "json", formatter: Optional[ReportFormatter] = None) -> str:
    """Render ``report`` as ``json`` or ``text``."""
    formatter = formatter or ReportFormatter()
    if format == "json":
        return formatter.format_json(report)
    if format == "text":
        return formatter.format_text(report)
    raise ValueError(f"unknown report format {format!r}; expected json or text")


def parse_report(document: str) -> SuiteReport:
    """Inverse of the JSON rendering."""
    return SuiteReport.model_validate_json(document)
