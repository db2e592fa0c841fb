"""Shared fixtures; collects acceptance verdict lines for the run summary."""

import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Recorder for one-line acceptance verdicts, echoed at session end."""
    def record(line):
        print(line)
        ACCEPTANCE_LINES.append(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
