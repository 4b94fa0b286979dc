"""Canonical presentation v = v_3 v_4 ... v_n with v_i in R_i.

A factor of level ``i`` is stored as a letter ``j`` meaning ``(1 2)(j i)``,
or ``0`` for the identity.  ``v_3`` is the leftmost factor and ``v_n`` the
rightmost, i.e. ``v_n`` acts first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .gensets import layer_element
from .perm import Permutation, compose, inverse, product, sign, transposition

IDENTITY = 0

Transposition = tuple[int, int]


@dataclass(frozen=True)
class CanonicalPresentation:
    n: int
    factors: tuple[int, ...]  # factors[i - 3] encodes v_i

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("canonical presentation needs n >= 3")
        if len(self.factors) != self.n - 2:
            raise ValueError(f"expected {self.n - 2} factors, got {len(self.factors)}")
        for i, j in enumerate(self.factors, start=3):
            if not 0 <= j < i:
                raise ValueError(f"factor v_{i} = {j} is not in R_{i}")

    def factor(self, i: int) -> Permutation:
        return layer_element(self.n, i, self.factors[i - 3])

    @property
    def hat_length(self) -> int:
        return sum(1 for j in self.factors if j != IDENTITY)

    def to_json(self) -> dict:
        return {"n": self.n, "factors": list(self.factors)}

    def __str__(self) -> str:
        parts = []
        for i, j in enumerate(self.factors, start=3):
            parts.append(f"v{i}=" + ("e" if j == IDENTITY else f"(1 2)({j} {i})"))
        return ", ".join(parts)


@lru_cache(maxsize=4096)
def _layer_inverse(n: int, i: int, j: int) -> Permutation:
    return inverse(layer_element(n, i, j))


def canonicalize(v: Permutation) -> CanonicalPresentation:
    """Peel factors off the right, from level n down to 3.

    At level i every candidate r in R_i is tried; exactly one must leave a
    remainder ``v * r^-1`` that fixes the letter i.
    """
    n = v.n
    if n < 3:
        raise ValueError("canonical presentation needs n >= 3")
    if sign(v) != 1:
        raise ValueError("not in A_n")
    factors = [IDENTITY] * (n - 2)
    rest = v
    for i in range(n, 3, -1):
        # rest * r^-1 fixes i  <=>  rest(r^-1(i)) == i
        hits = [j for j in range(i) if rest(_layer_inverse(n, i, j)(i)) == i]
        if len(hits) != 1:
            raise AssertionError(f"level {i}: {len(hits)} admissible factors, expected 1")
        factors[i - 3] = hits[0]
        rest = compose(rest, _layer_inverse(n, i, hits[0]))
    hits = [j for j in range(3) if layer_element(n, 3, j) == rest]
    if len(hits) != 1:
        raise AssertionError(f"level 3: {len(hits)} admissible factors, expected 1")
    factors[0] = hits[0]
    return CanonicalPresentation(n, tuple(factors))


def reconstruct(p: CanonicalPresentation) -> Permutation:
    return product((p.factor(i) for i in range(3, p.n + 1)), p.n)


def hat_length(p: CanonicalPresentation) -> int:
    return p.hat_length


def transposition_product(factors: Sequence[Transposition], n: int) -> Permutation:
    return product((transposition(n, a, b) for a, b in factors), n)


def _swap_pair(left: Transposition, right: Transposition, m: int) -> tuple[Transposition, Transposition]:
    """Rewrite ``left*right`` (``m`` in ``left``) so that ``m`` sits in the right factor only."""
    m1, m2 = left if left[0] == m else (left[1], left[0])
    if m not in right and m2 not in right:
        return right, left
    if m not in right:
        # (m1 m2)(m2 m4) = (m2 m4)(m4 m1)
        m4 = right[1] if right[0] == m2 else right[0]
        return (m2, m4), (m4, m1)
    # (m1 m2)(m1 m4) = (m4 m2)(m2 m1)
    m4 = right[1] if right[0] == m else right[0]
    return (m4, m2), (m2, m1)


def rewrite_rightmost(factors: Sequence[Transposition], m: int, n: int | None = None) -> list[Transposition]:
    """Rewrite a product of transpositions so that ``m`` occurs only in the last factor.

    The product and the number of factors are preserved.  The leftmost factor
    containing ``m`` is pushed right one pair at a time with the disjoint swap
    and the two 3-cycle identities.  An adjacent cancelling pair ``(m a)(m a)``
    is replaced by ``(a b)(a b)`` for a spare letter ``b`` from 1..n (``n``
    defaults to the largest letter present).  ``m`` must be moved by the
    product, else no such presentation exists.
    """
    seq = []
    for t in factors:
        a, b = t
        if a == b or a < 1 or b < 1:
            raise ValueError(f"{t} is not a transposition")
        seq.append((a, b))
    letters = {x for t in seq for x in t}
    if m not in letters:
        raise ValueError(f"letter {m} does not occur")
    n = max(letters) if n is None else n
    if transposition_product(seq, n)(m) == m:
        raise ValueError(f"the product fixes {m}; it cannot be isolated in one factor")

    while True:
        hits = [k for k, t in enumerate(seq) if m in t]
        p = hits[0]
        if p == len(seq) - 1:
            return seq
        left, right = seq[p], seq[p + 1]
        if set(left) == set(right):
            a = left[1] if left[0] == m else left[0]
            spare = next((x for x in range(1, n + 1) if x not in (m, a)), None)
            if spare is None:
                raise ValueError("no spare letter to absorb a cancelling pair; pass a larger n")
            seq[p], seq[p + 1] = (a, spare), (a, spare)
        else:
            seq[p], seq[p + 1] = _swap_pair(left, right, m)
