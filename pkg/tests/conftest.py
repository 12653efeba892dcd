import time
from pathlib import Path

import pytest

from dihedral_noether.cli import TARGETS, replay

GOLDEN = Path(__file__).parent / "golden"
ACCEPTANCE: dict[int, str] = {}


@pytest.fixture(scope="session")
def transcripts():
    """Default-seed transcripts of every target, with wall times."""
    out, times = {}, {}
    for t in TARGETS:
        start = time.perf_counter()
        out[t] = replay(t)
        times[t] = time.perf_counter() - start
    return out, times


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
