"""Verification harness: reference tables and the exact cross-check matrix."""

from .checks import CheckResult, Report, SUITES, verify
from .tables import TABLE_IDS, Table, build_table, render_csv, render_text

__all__ = [
    "CheckResult",
    "Report",
    "SUITES",
    "TABLE_IDS",
    "Table",
    "build_table",
    "render_csv",
    "render_text",
    "verify",
]
