import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from finbasis import validate_poset  # noqa: E402

SPECS = Path(__file__).parents[1] / "src" / "finbasis" / "specs"
GOLDEN = Path(__file__).parent / "golden"

FLAT_EDGES = {("bot", "tt"), ("bot", "ff")}
DIAMOND_EDGES = {("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")}


@pytest.fixture
def flat():
    return validate_poset({"bot", "tt", "ff"}, FLAT_EDGES, closure=True)


@pytest.fixture
def diamond():
    return validate_poset({"bot", "a", "b", "top"}, DIAMOND_EDGES, closure=True)


@pytest.fixture
def antichain():
    return validate_poset({"a", "b"}, {("a", "a"), ("b", "b")})


@pytest.fixture
def single():
    return validate_poset({"x"}, {("x", "x")})


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        status, line = RESULTS[key]
        terminalreporter.write_line(f"{status} {line}")
