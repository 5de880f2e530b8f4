import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from idiff import LinePair, build_line_pair, build_sim_case, diff_fix, mismatch
from idiff.sim import SimCase

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS = Path(__file__).parent.parent / "corpus"


@pytest.fixture(scope="session")
def running_pair() -> LinePair:
    """A 12-line interface whose javadoc frames cross-match ambiguously."""
    old = (FIXTURES / "running_example" / "old.java").read_text()
    new = (FIXTURES / "running_example" / "new.java").read_text()
    return build_line_pair(old, new)


@pytest.fixture(scope="session")
def running_case(running_pair) -> SimCase:
    return build_sim_case("running", running_pair)


TWO_REGION_OLD = "alpha\nbeta\n// sep\ngamma\ndelta\n"
TWO_REGION_NEW = "beta\nalpha\n// sep\ndelta\ngamma\n"


@pytest.fixture(scope="session")
def two_region_case() -> SimCase:
    """Two independent swap regions separated by a fixed line.

    The target keeps the other side of each swap, so the initial and target
    paths diverge and reconverge twice.
    """
    pair = build_line_pair(TWO_REGION_OLD, TWO_REGION_NEW)
    target = diff_fix(pair, [mismatch(1, 2), mismatch(4, 5)])
    return build_sim_case("two-region", pair, target=target)
