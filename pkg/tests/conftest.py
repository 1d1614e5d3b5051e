import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from wallkit.chern import ChernVector  # noqa: E402


def rationals(max_num=50, max_den=12):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


def chern_vectors(max_num=50, max_den=12):
    return st.builds(ChernVector, *(rationals(max_num, max_den) for _ in range(4)))


@pytest.fixture
def F():
    return Fraction
