"""Closed-form length statistics.

None of these search: word lengths by breadth-first search live in
:mod:`altgroup.oracle`, which is used to check them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import Permutation, cyc, same_cycle, sign


def inv_count(v: Permutation) -> int:
    """Number of inversions, which is the Coxeter length."""
    im = v.images
    return sum(1 for i in range(v.n) for j in range(i + 1, v.n) if im[i] > im[j])


def length_T(v: Permutation) -> int:
    """Length over all transpositions: n - cyc(v)."""
    return v.n - cyc(v)


def length_TA(v: Permutation) -> int:
    """Length of an even permutation over the A-transpositions (1 2)(i j)."""
    if sign(v) != 1:
        raise ValueError("not in A_n: odd permutation")
    if v.n < 2:
        return 0
    k = v.n - cyc(v)
    return k - 1 if same_cycle(v, 1, 2) else k


def m_of(n: int, k: int) -> int:
    """Cycle count shared by all elements of A_n with A-transposition length k."""
    hi = max(n - 2, 0)
    if not 0 <= k <= hi:
        raise ValueError(f"k={k} outside the length support 0..{hi} of A_{n}")
    return n - k if k % 2 == 0 else n - k - 1


def length_parity_consistent(v: Permutation) -> bool:
    if v.n < 2:
        return length_TA(v) == 0
    return same_cycle(v, 1, 2) == (length_TA(v) % 2 == 1)


@dataclass(frozen=True)
class LengthReport:
    v: Permutation
    inv: int
    len_T: int
    len_TA: int | None
    parity_same_cycle: bool


def report(v: Permutation) -> LengthReport:
    even = sign(v) == 1
    return LengthReport(
        v=v,
        inv=inv_count(v),
        len_T=length_T(v),
        len_TA=length_TA(v) if even else None,
        parity_same_cycle=same_cycle(v, 1, 2) if v.n >= 2 else False,
    )
