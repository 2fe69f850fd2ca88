import pytest

_ACCEPTANCE = []


@pytest.fixture
def record():
    """Print and collect one PASS/FAIL line for an acceptance criterion."""

    def _record(label, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} {label}: {detail}"
        print(line)
        _ACCEPTANCE.append(line)
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
