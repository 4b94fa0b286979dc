"""The length classes A(n, k), the sets P(n, k) and the map f: A(n, k) -> P(n, n-k).

P(n, k) holds the permutations of S_n with k cycles in which 1 and 2 lie in
different cycles; it has [n k]_2 elements.  f leaves even-length elements
alone and multiplies odd-length ones by (1 2) on the left.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lengths import length_T, length_TA
from .oracle import enumerate_group
from .perm import Permutation, compose, cyc, same_cycle, sign, transposition
from .report import Report
from .tables import rstirling1


@dataclass(frozen=True)
class LengthClass:
    name: str  # "A" or "P"
    n: int
    k: int
    elements: tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, v: Permutation) -> bool:
        return v in self.elements


def _in_P(v: Permutation, k: int) -> bool:
    return cyc(v) == k and not same_cycle(v, 1, 2)


def enumerate_A(n: int, k: int, cap: int | None = None) -> LengthClass:
    elems = tuple(v for v in enumerate_group("A", n, cap) if length_TA(v) == k)
    return LengthClass("A", n, k, elems)


def enumerate_P(n: int, k: int, cap: int | None = None) -> LengthClass:
    if n < 2:
        raise ValueError("P(n, k) needs the letters 1 and 2")
    elems = tuple(v for v in enumerate_group("S", n, cap) if _in_P(v, k))
    return LengthClass("P", n, k, elems)


def f_map(v: Permutation) -> Permutation:
    if sign(v) != 1:
        raise ValueError("not in A_n: odd permutation")
    if length_TA(v) % 2 == 0:
        return v
    return compose(transposition(v.n, 1, 2), v)


def f_inverse(w: Permutation) -> Permutation:
    """Inverse of f on P(n, n-k), with the parity read from the transposition length."""
    if length_T(w) % 2 == 0:
        return w
    return compose(transposition(w.n, 1, 2), w)


def verify_bijection(n: int, cap: int | None = None) -> Report:
    """Check that f maps A(n, k) one-to-one onto P(n, n-k) for every 0 <= k <= n-2."""
    if n < 2:
        raise ValueError("need n >= 2")
    rep = Report(f"bijection A(n,k) -> P(n,n-k), n={n}")
    r2 = rstirling1(n, 2)
    # one pass over each group, binned by class
    a_classes: dict[int, list[Permutation]] = {}
    for v in enumerate_group("A", n, cap):
        a_classes.setdefault(length_TA(v), []).append(v)
    p_classes: dict[int, set[Permutation]] = {}
    for v in enumerate_group("S", n, cap):
        if not same_cycle(v, 1, 2):
            p_classes.setdefault(cyc(v), set()).add(v)

    counts, p_counts = [], []
    for k in range(n - 1):
        src = a_classes.get(k, [])
        target = p_classes.get(n - k, set())
        image = [f_map(v) for v in src]
        counts.append(len(src))
        p_counts.append(len(target))
        rep.check(len(set(image)) == len(src), lambda: f"k={k}: f is not injective")
        rep.check(set(image) == target, lambda: f"k={k}: image differs from P({n},{n - k})")
        rep.check(len(target) == r2[n, n - k],
                  lambda: f"|P({n},{n - k})|={len(target)} != [{n} {n - k}]_2={r2[n, n - k]}")
        rep.check(all(f_inverse(f_map(v)) == v for v in src), lambda: f"k={k}: f_inverse(f(v)) != v")
    stray = sorted(set(a_classes) - set(range(n - 1)))
    rep.check(not stray, lambda: f"lengths outside 0..{n - 2}: {stray}")
    rep.details["counts"] = counts
    rep.details["p_counts"] = p_counts
    return rep
