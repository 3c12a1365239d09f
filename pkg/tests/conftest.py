import numpy as np
import pytest
from hypothesis import strategies as st

from rortho import PAIR_R42, complete_rectangle, empty_rectangle, validate
from rortho.textio import read_grids

SQUARE5 = [
    [4, 3, 2, 5, 1],
    [5, 1, 3, 2, 4],
    [3, 4, 5, 1, 2],
    [1, 2, 4, 3, 5],
    [2, 5, 1, 4, 3],
]
RECT4X5 = SQUARE5[:4]


@pytest.fixture
def pair_r42():
    _, (A, B) = read_grids(PAIR_R42)
    return A, B


@pytest.fixture
def square5():
    return validate(SQUARE5)


@pytest.fixture
def rect4x5():
    return validate(RECT4X5, order=5)


def isotope_of_cyclic(n, rng):
    """Cyclic square with rows, columns and symbols permuted at random."""
    L = (np.add.outer(np.arange(n), np.arange(n)) % n)
    L = L[rng.permutation(n)][:, rng.permutation(n)]
    return validate(rng.permutation(n)[L] + 1)


@st.composite
def latin_squares(draw, min_n=2, max_n=12):
    """Random squares: either an isotope of the cyclic square or a random completion."""
    n = draw(st.integers(min_n, max_n))
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    if draw(st.booleans()):
        return isotope_of_cyclic(n, rng)
    return complete_rectangle(empty_rectangle(n), rng)


@st.composite
def latin_rectangles(draw, min_n=2, max_n=12, proper=True):
    """k x n rectangle cut from a random square; ``proper`` keeps 1 <= k < n."""
    A = draw(latin_squares(min_n, max_n))
    n = A.order
    k = draw(st.integers(1, n - 1) if proper else st.integers(0, n))
    return validate(A.cells[:k], order=n)
