"""Test-suite plumbing: oracle import path and the acceptance summary."""

import sys
from pathlib import Path

_HERE = str(Path(__file__).resolve().parent)
if _HERE not in sys.path:
    sys.path.insert(0, _HERE)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion that ran."""
    results = getattr(
        sys.modules.get("test_acceptance"), "CRITERION_RESULTS", None
    )
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(f"[criterion {n}] {results[n]}")
