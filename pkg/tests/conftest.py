import numpy as np
import pytest

from gplab import SyntaxTree, make_rng

# A 10-leaf worked example exercising duplicates, negations and
# blocked variables (n = 6).  Frozen expected values:
#   weighted order = 24, weighted majority = 39, complexity = 19.
SAMPLE_CODES = [1, -4, 2, -1, -3, -6, 4, 3, -5, 3]
SAMPLE_WEIGHTS = np.array([13.0, 11.0, 8.0, 7.0, 5.0, 3.0])


@pytest.fixture
def sample_tree():
    return SyntaxTree.from_codes(SAMPLE_CODES)


@pytest.fixture
def rng():
    return make_rng(20240817)


@pytest.fixture
def announce(capsys):
    """Print a line that survives pytest's capture (acceptance verdicts)."""

    def _print(line):
        with capsys.disabled():
            print(line)

    return _print
