from itertools import product as cartesian
from math import factorial

import pytest
from hypothesis import assume, given, strategies as st

from altgroup.canon import (CanonicalPresentation, canonicalize, hat_length, reconstruct,
                            rewrite_rightmost, transposition_product)
from altgroup.gensets import a_transposition, build
from altgroup.lengths import length_TA
from altgroup.perm import Permutation, compose, parse

from conftest import even, even_perms


def test_identity():
    p = canonicalize(Permutation.identity(6))
    assert p.factors == (0, 0, 0, 0)
    assert hat_length(p) == 0
    assert reconstruct(p) == Permutation.identity(6)


def test_three_cycle():
    v = parse("(1 2 3)", 3)
    assert compose(parse("(1 2)", 3), parse("(2 3)", 3)) == v
    p = canonicalize(v)
    assert p.factors == (2,)
    assert p.factor(3) == a_transposition(3, 2, 3)


def test_double_transposition_a4():
    v = parse("(1 3)(2 4)", 4)
    # hand check: (1 2)(2 3) * (1 2)(2 4) == (1 3)(2 4)
    assert compose(a_transposition(4, 2, 3), a_transposition(4, 2, 4)) == v
    p = canonicalize(v)
    assert p.factors == (2, 2)
    assert hat_length(p) == 2
    assert str(p) == "v3=(1 2)(2 3), v4=(1 2)(2 4)"
    assert p.to_json() == {"n": 4, "factors": [2, 2]}
    assert reconstruct(p) == v


@pytest.mark.parametrize("n", range(3, 8))
def test_single_top_factor(n):
    p = CanonicalPresentation(n, (0,) * (n - 3) + (1,))
    assert reconstruct(p) == a_transposition(n, 1, n)


def test_errors():
    with pytest.raises(ValueError, match="not in A_n"):
        canonicalize(parse("(1 2)", 4))
    with pytest.raises(ValueError):
        canonicalize(Permutation.identity(2))
    with pytest.raises(ValueError):
        CanonicalPresentation(4, (3, 0))
    with pytest.raises(ValueError):
        CanonicalPresentation(4, (0,))


@pytest.mark.parametrize("n", range(3, 8))
def test_products_are_a_bijection(n):
    sizes = [len(build("layer-r", i)) for i in range(3, n + 1)]
    images = [reconstruct(CanonicalPresentation(n, f))
              for f in cartesian(*(range(i) for i in range(3, n + 1)))]
    assert len(images) == factorial(n) // 2
    assert len(set(images)) == len(images)
    prod = 1
    for s in sizes:
        prod *= s
    assert prod == factorial(n) // 2


@pytest.mark.parametrize("n", range(3, 8))
def test_round_trip_exhaustive(n):
    for v in even(n):
        p = canonicalize(v)
        assert reconstruct(p) == v
        assert canonicalize(reconstruct(p)) == p
        assert p.hat_length == length_TA(v)


def test_hat_length_matches_bfs_a8(a_censuses):
    census = a_censuses[8]
    for v, d in census.items():
        assert canonicalize(v).hat_length == d


@given(even_perms(min_n=3, max_n=12))
def test_round_trip_random(v):
    assert reconstruct(canonicalize(v)) == v


# rewrite_rightmost

def test_rewrite_disjoint_swap():
    assert rewrite_rightmost([(5, 1), (3, 4)], 5) == [(3, 4), (5, 1)]


def test_rewrite_shared_letter():
    assert rewrite_rightmost([(1, 2), (2, 4)], 1) == [(2, 4), (4, 1)]
    assert transposition_product([(1, 2), (2, 4)], 4) == transposition_product([(2, 4), (4, 1)], 4)


def test_rewrite_same_first_letter():
    # (m a)(m b) = (b a)(a m)
    out = rewrite_rightmost([(1, 2), (1, 4)], 1)
    assert out == [(4, 2), (2, 1)]
    assert transposition_product(out, 4) == transposition_product([(1, 2), (1, 4)], 4)


def test_rewrite_cancelling_pair():
    seq = [(1, 2), (1, 2), (1, 3)]
    out = rewrite_rightmost(seq, 1)
    assert [1 in t for t in out] == [False, False, True]
    assert transposition_product(out, 3) == transposition_product(seq, 3)


def test_rewrite_errors():
    with pytest.raises(ValueError, match="not a transposition"):
        rewrite_rightmost([(1, 1)], 1)
    with pytest.raises(ValueError, match="fixes"):
        rewrite_rightmost([(1, 2), (1, 2)], 1)
    with pytest.raises(ValueError, match="does not occur"):
        rewrite_rightmost([(2, 3)], 1)
    with pytest.raises(ValueError, match="spare"):
        rewrite_rightmost([(1, 2), (1, 2), (1, 2)], 1)


transpositions8 = st.tuples(st.integers(1, 8), st.integers(1, 8)).filter(lambda t: t[0] != t[1])


@given(st.lists(transpositions8, min_size=1, max_size=6), st.data())
def test_rewrite_property(seq, data):
    moved = [x for x in range(1, 9) if transposition_product(seq, 8)(x) != x]
    assume(moved)
    m = data.draw(st.sampled_from(moved))
    out = rewrite_rightmost(seq, m, 8)
    assert len(out) == len(seq)
    assert transposition_product(out, 8) == transposition_product(seq, 8)
    assert m in out[-1]
    assert all(m not in t for t in out[:-1])
