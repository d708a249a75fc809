import time

import pytest

from bicirc.bicircular import BicircularMatroid
from bicirc.double_circuit import enumerate_oracle, enumerate_structural
from bicirc.generators import complete, dodecahedron, petersen

_BUILDERS = {
    "petersen": petersen,
    "dodecahedron": dodecahedron,
    "k4": lambda: complete(4),
}


class CensusStore:
    """Computes each heavy census once per session and keeps its wall time,
    so acceptance criteria can both inspect results and check budgets."""

    def __init__(self):
        self._census = {}
        self.seconds = {}
        self.graphs = {name: build() for name, build in _BUILDERS.items()}

    def census(self, name: str, enumerator: str):
        key = (name, enumerator)
        if key not in self._census:
            ctx = BicircularMatroid(self.graphs[name])
            run = enumerate_oracle if enumerator == "oracle" else enumerate_structural
            start = time.perf_counter()
            self._census[key] = run(ctx)
            self.seconds[key] = time.perf_counter() - start
        return self._census[key]


@pytest.fixture(scope="session")
def census_store():
    return CensusStore()


_CRITERION_LINES: list[str] = []


def record_criterion(number: int, ok: bool, description: str) -> None:
    status = "PASS" if ok else "FAIL"
    line = f"[criterion {number:2d}] {status} — {description}"
    _CRITERION_LINES.append(line)
    print(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter):
    if _CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERION_LINES):
            terminalreporter.write_line(line)
