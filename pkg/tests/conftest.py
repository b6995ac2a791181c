import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Recorder for acceptance verdicts: ``acceptance(number, name, ok, detail)``.

    Lines are printed immediately (visible with ``-s``) and repeated in the
    terminal summary so they always reach the test log.
    """

    def record(number, name, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name} ({detail})"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
