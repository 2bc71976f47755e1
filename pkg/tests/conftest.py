import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gbshift import FactoredPoly, G0Config  # noqa: E402


@pytest.fixture
def cfg1():
    """P = 1 - z."""
    return G0Config(FactoredPoly([(1, 1)]))


@pytest.fixture
def cfg_sq():
    """P = (1 - z)^2."""
    return G0Config(FactoredPoly([(1, 2)]))


@pytest.fixture
def cfg12():
    """P = (1 - z)(1 - z/2)."""
    return G0Config(FactoredPoly([(1, 1), (2, 1)]))


STANDARD_ROOTS = [[(1, 1)], [(1, 2)], [(1, 1), (2, 1)]]


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[n])
