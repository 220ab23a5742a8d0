from __future__ import annotations

import pytest

from quiverlab import Quiver


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of a run."""
    outcomes: dict[str, str] = {}
    for status, label in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py" not in nodeid:
                continue
            if getattr(report, "when", "call") != "call" and status == "passed":
                continue
            name = nodeid.split("::")[-1]
            if outcomes.get(name) != "FAIL":
                outcomes[name] = label
    if outcomes:
        terminalreporter.section("acceptance criteria")
        for name, label in outcomes.items():
            terminalreporter.write_line(f"{label} {name}")

# The three workhorse quivers: an oriented 3-cycle, and its 6- and
# 10-vertex triangular-grid extensions (rows 1 / 2 3 / 4 5 6 / ...,
# every small triangle oriented cyclically).

TRIANGLE_ARROWS = [[2, 1, 1], [1, 3, 1], [3, 2, 1]]

GRID6_ARROWS = [
    [2, 1, 1], [1, 3, 1], [3, 2, 1],
    [4, 2, 1], [2, 5, 1], [5, 3, 1], [3, 6, 1],
    [5, 4, 1], [6, 5, 1],
]

GRID10_ARROWS = [
    [2, 1, 1], [1, 3, 1], [3, 2, 1],
    [4, 2, 1], [2, 5, 1], [5, 3, 1], [3, 6, 1],
    [5, 4, 1], [7, 4, 1], [4, 8, 1], [6, 5, 1], [8, 5, 1], [5, 9, 1],
    [9, 6, 1], [6, 10, 1],
    [8, 7, 1], [9, 8, 1], [10, 9, 1],
]


def linear_a(n: int) -> Quiver:
    """The path orientation 1 -> 2 -> ... -> n."""
    return Quiver.from_arrows(n, [[i, i + 1, 1] for i in range(1, n)])


def star_d4_in() -> Quiver:
    """D4 with all outer vertices pointing at the center 2."""
    return Quiver.from_arrows(4, [[1, 2, 1], [3, 2, 1], [4, 2, 1]])


@pytest.fixture
def triangle() -> Quiver:
    return Quiver.from_arrows(3, TRIANGLE_ARROWS)


@pytest.fixture
def grid6() -> Quiver:
    return Quiver.from_arrows(6, GRID6_ARROWS)


@pytest.fixture
def grid10() -> Quiver:
    return Quiver.from_arrows(10, GRID10_ARROWS)


@pytest.fixture
def a2() -> Quiver:
    return linear_a(2)


@pytest.fixture
def a3() -> Quiver:
    return linear_a(3)


@pytest.fixture
def a3_sink() -> Quiver:
    """A3 with the middle vertex a sink: 1 -> 2 <- 3."""
    return Quiver.from_arrows(3, [[1, 2, 1], [3, 2, 1]])


@pytest.fixture
def a4() -> Quiver:
    return linear_a(4)


@pytest.fixture
def kronecker() -> Quiver:
    return Quiver.from_arrows(2, [[1, 2, 2]])
