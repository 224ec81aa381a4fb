import random
from collections import Counter

import pytest
from hypothesis import strategies as st

from quivertex.scalars import SymbolicField, default_field, random_field


@pytest.fixture
def fld():
    return default_field()


@pytest.fixture
def sym():
    return SymbolicField()


@pytest.fixture
def fields():
    """Three distinct generic rational points, fixed seed."""
    rng = random.Random(20240811)
    return [random_field(rng) for _ in range(3)]


@st.composite
def partition_strategy(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return ()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1),
                         min_size=n, max_size=n))
    counts = Counter(bins)
    return tuple(sorted(counts.values(), reverse=True))
