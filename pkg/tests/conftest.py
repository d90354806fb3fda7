import pytest

RESULTS = []


@pytest.fixture
def record():
    def _record(label, passed, detail=""):
        RESULTS.append((label, bool(passed), detail))
        return passed
    return _record


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in RESULTS:
        line = f"{'PASS' if passed else 'FAIL'}  {label}"
        terminalreporter.write_line(f"{line}  ({detail})" if detail else line)
