from itertools import permutations

import pytest
from hypothesis import strategies as st

from altgroup.perm import Permutation, sign


@st.composite
def perms(draw, min_n=1, max_n=10, n=None):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def even_perms(draw, min_n=3, max_n=10):
    v = draw(perms(min_n=min_n, max_n=max_n))
    if sign(v) == -1:
        # swap the last two images to flip parity
        im = list(v.images)
        im[-1], im[-2] = im[-2], im[-1]
        v = Permutation(tuple(im))
    return v


def all_perms(n):
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def even(n):
    return [v for v in all_perms(n) if sign(v) == 1]


@pytest.fixture(scope="session")
def a_censuses():
    from altgroup.oracle import bfs_census
    return {n: bfs_census("A", n, "a-transpositions") for n in range(3, 9)}
