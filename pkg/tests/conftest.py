import pytest

from hyperqec.hypergraph import ring_code

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def ring():
    return ring_code()


@pytest.fixture
def record():
    def _record(criterion: str, ok: bool, detail: str):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
