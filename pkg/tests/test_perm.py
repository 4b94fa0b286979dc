import json

import pytest
from hypothesis import given

from altgroup.perm import (Permutation, compose, cyc, cycle_decomposition, format_perm, inverse,
                           parse, same_cycle, sign, transposition)
from altgroup.gensets import a_transposition

from conftest import perms


def P(text, n):
    return parse(text, n)


def test_identity_is_neutral():
    v = P("(1 3 2)(4 5)", 5)
    e = Permutation.identity(5)
    assert compose(e, v) == v == compose(v, e)


def test_compose_right_to_left():
    # apply (2 3) first, then (1 2)
    assert compose(P("(1 2)", 3), P("(2 3)", 3)) == P("(1 2 3)", 3)
    assert compose(P("(1 2)", 3), P("(2 3)", 3)).images == (2, 3, 1)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError, match="degree mismatch"):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_inverse_examples():
    assert inverse(Permutation.identity(4)) == Permutation.identity(4)
    assert inverse(P("(1 2 3)", 3)) == P("(1 3 2)", 3)
    for j in range(3, 8):
        assert inverse(a_transposition(7, 1, j)) == a_transposition(7, 2, j)


def test_sign_examples():
    assert sign(Permutation.identity(4)) == 1
    assert sign(P("(1 2)", 4)) == -1
    assert sign(P("(1 2)(3 4)", 4)) == 1


def test_cycle_decomposition_examples():
    e = cycle_decomposition(Permutation.identity(4))
    assert e.cycles == ((1,), (2,), (3,), (4,))
    assert cyc(P("(1 2)(3 4)", 4)) == 2
    assert cycle_decomposition(P("(3 1)(4 2)", 5)).cycles == ((1, 3), (2, 4), (5,))
    for n in range(3, 8):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if (i, j) != (1, 2):
                    assert cyc(a_transposition(n, i, j)) == n - 2


def test_same_cycle_examples():
    assert not same_cycle(Permutation.identity(3), 1, 2)
    assert same_cycle(P("(1 2 3)", 3), 1, 2)
    assert not same_cycle(P("(1 3)(2 4)", 4), 1, 2)
    with pytest.raises(ValueError):
        same_cycle(Permutation.identity(3), 1, 4)


def test_parse_examples():
    assert P("(1 2)(3 4)", 4).images == (2, 1, 4, 3)
    assert parse("3 4 1 2").images == (3, 4, 1, 2)
    assert parse("3,4,1,2").images == (3, 4, 1, 2)
    assert parse("(1 3)(2 4)").n == 4


@pytest.mark.parametrize("text", ["(1 1)", "(1 2)(2 3)", "(1 2", "1 2 2", "(1 x)", "(1 2) 3", "3 4 5"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse(text)


def test_parse_letter_exceeds_degree():
    with pytest.raises(ValueError, match="exceeds degree"):
        parse("(1 5)", 4)


def test_format():
    v = P("(1 3)(2 4)", 5)
    assert format_perm(v) == "(1 3)(2 4)"
    assert format_perm(v, "oneline") == "3 4 1 2 5"
    assert format_perm(Permutation.identity(3)) == "e"


def test_json_shape():
    v = P("(1 3)(2 4)", 4)
    assert json.loads(json.dumps(v.to_json())) == {"n": 4, "images": [3, 4, 1, 2]}
    assert Permutation.from_json(v.to_json()) == v


def test_invalid_images():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation(tuple(range(1, 66)))


@given(perms(max_n=10))
def test_round_trip(v):
    assert parse(format_perm(v), v.n) == v
    assert parse(format_perm(v, "oneline")) == v


@given(perms(n=7), perms(n=7), perms(n=7))
def test_associative(u, v, w):
    assert compose(u, compose(v, w)) == compose(compose(u, v), w)


@given(perms(n=8), perms(n=8))
def test_sign_homomorphism(u, v):
    assert sign(compose(u, v)) == sign(u) * sign(v)


@given(perms(max_n=10))
def test_inverse_and_cycle_sizes(v):
    assert compose(v, inverse(v)) == Permutation.identity(v.n)
    d = cycle_decomposition(v)
    assert sum(map(len, d.cycles)) == v.n
    assert sorted(x for c in d.cycles for x in c) == list(range(1, v.n + 1))
    assert all(c[0] == min(c) for c in d.cycles)
    assert [c[0] for c in d.cycles] == sorted(c[0] for c in d.cycles)
    assert sign(v) == (-1) ** (v.n - cyc(v))


@given(perms(min_n=2, max_n=9))
def test_same_cycle_matches_decomposition(v):
    d = cycle_decomposition(v)
    assert same_cycle(v, 1, 2) == (2 in d.cycle_of(1))


def test_transposition_rejects_fixed():
    with pytest.raises(ValueError):
        transposition(3, 2, 2)
