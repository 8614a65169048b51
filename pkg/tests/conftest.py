import pytest

_LINES = []


@pytest.fixture
def criterion(request):
    """Callable that prints and records one pass/fail line, then asserts the outcome."""

    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
        print(line)
        _LINES.append(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance")
        for line in sorted(_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
