"""Shared test session hooks.

The acceptance gate registers one PASS/FAIL line per criterion here; the
lines are echoed after capture ends so they always appear in the report.
"""

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
