"""Brute-force ground truth: group enumeration and Cayley-graph BFS.

Permutations are indexed by their Lehmer rank among all n! one-line arrays,
so a census is a flat distance array.  Rank order equals lexicographic order
of one-line forms, which makes every listing here deterministic.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterator

import numpy as np

from .gensets import Kind, build
from .perm import Permutation, sign
from .report import Report

log = logging.getLogger(__name__)

DEFAULT_CAPS = {"A": 9, "S": 8}


def _check_cap(which: str, n: int, cap: int | None) -> None:
    if which not in DEFAULT_CAPS:
        raise ValueError(f"group must be 'S' or 'A', got {which!r}")
    limit = DEFAULT_CAPS[which] if cap is None else cap
    if n > limit:
        raise ValueError(f"{which}_{n} exceeds the enumeration cap {limit}; pass a larger cap")
    if n > DEFAULT_CAPS[which]:
        order = factorial(n) // (2 if which == "A" else 1)
        log.warning("enumerating %s_%d: %d elements, roughly %.0f MB of distance data",
                    which, n, order, factorial(n) * 2 / 2**20)


def lehmer_rank(v: Permutation | tuple[int, ...]) -> int:
    """Rank of a one-line form (1-based letters) among all n! in lexicographic order."""
    images = v.images if isinstance(v, Permutation) else tuple(v)
    n = len(images)
    rank = 0
    for i, x in enumerate(images):
        smaller = sum(1 for y in images[i + 1:] if y < x)
        rank += smaller * factorial(n - 1 - i)
    return rank


def lehmer_unrank(rank: int, n: int) -> Permutation:
    if not 0 <= rank < factorial(n):
        raise ValueError(f"rank {rank} out of range for degree {n}")
    pool = list(range(1, n + 1))
    out = []
    for i in range(n - 1, -1, -1):
        d, rank = divmod(rank, factorial(i))
        out.append(pool.pop(d))
    return Permutation(tuple(out))


def rank_array(perms: np.ndarray) -> np.ndarray:
    """Vectorised Lehmer rank of rows of 0-based one-line arrays."""
    n = perms.shape[1]
    ranks = np.zeros(perms.shape[0], dtype=np.int64)
    for i in range(n - 1):
        digit = (perms[:, i + 1:] < perms[:, i:i + 1]).sum(axis=1)
        ranks += digit.astype(np.int64) * factorial(n - 1 - i)
    return ranks


def enumerate_group(which: str, n: int, cap: int | None = None) -> list[Permutation]:
    """All elements of S_n or A_n in lexicographic one-line order."""
    _check_cap(which, n, cap)
    elems = (Permutation(p) for p in permutations(range(1, n + 1)))
    if which == "A":
        return [v for v in elems if sign(v) == 1]
    return list(elems)


@dataclass(frozen=True)
class Census:
    group: str
    n: int
    kind: Kind
    symmetric_closure: bool
    distances: np.ndarray  # by Lehmer rank; -1 outside the group
    histogram: tuple[int, ...]

    @property
    def order(self) -> int:
        return sum(self.histogram)

    @property
    def max_distance(self) -> int:
        return len(self.histogram) - 1

    def distance(self, v: Permutation) -> int:
        if v.n != self.n:
            raise ValueError("degree mismatch")
        d = int(self.distances[lehmer_rank(v)])
        if d < 0:
            raise KeyError(f"{v} is not in {self.group}_{self.n}")
        return d

    def items(self) -> Iterator[tuple[Permutation, int]]:
        for r in np.flatnonzero(self.distances >= 0):
            yield lehmer_unrank(int(r), self.n), int(self.distances[r])


def bfs_census(which: str, n: int, kind: Kind | str, symmetric_closure: bool | None = None,
               cap: int | None = None) -> Census:
    """Exact word lengths from e over the Cayley graph of ``kind`` (right multiplication)."""
    kind = Kind(kind)
    _check_cap(which, n, cap)
    if kind.group != which:
        raise ValueError(f"{kind.value} is a generating set for {kind.group}_n, not {which}_n")
    if kind is Kind.MITSUHASHI_CA and symmetric_closure is False:
        log.warning("mitsuhashi generators are always closed under inverses for BFS; closure forced on")
        symmetric_closure = True
    gens = build(kind, n, symmetric_closure)
    g = np.array([[x - 1 for x in s.images] for s in gens], dtype=np.int8).reshape(len(gens), n)

    dist = np.full(factorial(n), -1, dtype=np.int16)
    frontier = np.arange(n, dtype=np.int8)[None, :]
    dist[rank_array(frontier)] = 0
    counts = [1]
    d = 0
    while frontier.size:
        d += 1
        if not len(g):
            break
        # v*s has one-line form v[s[i]]
        cand = frontier[:, g].reshape(-1, n)
        ranks = rank_array(cand)
        fresh = dist[ranks] < 0
        ranks, pos = np.unique(ranks[fresh], return_index=True)
        if not ranks.size:
            break
        dist[ranks] = d
        frontier = cand[fresh][pos]
        counts.append(int(ranks.size))

    order = factorial(n) // (2 if which == "A" else 1)
    if sum(counts) != order:
        missing = next(v for v in enumerate_group(which, n, cap) if dist[lehmer_rank(v)] < 0)
        raise ValueError(f"{kind.value} does not generate {which}_{n}: {missing} is unreached")
    return Census(which, n, kind, gens.symmetric_closure, dist, tuple(counts))


def cross_check(n_max_small: int = 8, s_max: int = 6) -> list[Report]:
    """Closed-form lengths against BFS distances, element by element.

    A_n for 3 <= n <= n_max_small (A-transposition length, canonical length,
    histogram against the a(n, m) table); S_n for 2 <= n <= s_max
    (inversions against Coxeter BFS, n - cyc against transposition BFS).
    """
    from .canon import canonicalize
    from .lengths import inv_count, length_T, length_TA
    from .tables import a_table

    a = a_table(max(n_max_small, 3))
    ta = Report("length_TA == BFS over a-transpositions")
    hat = Report("hat_length == BFS over a-transpositions")
    hist = Report("A_n a-transposition histogram == a(n, .)")
    for n in range(3, n_max_small + 1):
        census = bfs_census("A", n, Kind.ATRANSPOSITIONS_TA)
        for v, d in census.items():
            got = length_TA(v)
            ta.check(got == d, lambda: f"{v} in A_{n}: closed form {got}, BFS {d}")
            h = canonicalize(v).hat_length
            hat.check(h == d, lambda: f"{v} in A_{n}: hat length {h}, BFS {d}")
        row = a.row(n)[:n - 1]
        hist.check(list(census.histogram) == row, lambda: f"n={n}: {census.histogram} != {row}")

    cox = Report("inv_count == BFS over coxeter")
    trn = Report("n - cyc == BFS over transpositions")
    for n in range(2, s_max + 1):
        for v, d in bfs_census("S", n, Kind.COXETER_C).items():
            got = inv_count(v)
            cox.check(got == d, lambda: f"{v} in S_{n}: inv {got}, BFS {d}")
        for v, d in bfs_census("S", n, Kind.TRANSPOSITIONS_T).items():
            got = length_T(v)
            trn.check(got == d, lambda: f"{v} in S_{n}: n-cyc {got}, BFS {d}")
    return [ta, hat, hist, cox, trn]
