import pytest

_acceptance_lines = []


@pytest.fixture(scope="session")
def verdict():
    def record(num: int, name: str, ok: bool, elapsed: float | None = None):
        tail = f" ({elapsed:.2f}s)" if elapsed is not None else ""
        _acceptance_lines.append(
            f"acceptance {num:02d} {name}: {'PASS' if ok else 'FAIL'}{tail}"
        )

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
