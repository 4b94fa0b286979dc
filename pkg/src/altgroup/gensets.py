"""Generating sets for S_n and A_n, plus the layer sets R_n.

Element order is fixed so that everything downstream is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .perm import Permutation, compose, inverse, transposition


class Kind(str, Enum):
    COXETER_C = "coxeter"
    TRANSPOSITIONS_T = "transpositions"
    MITSUHASHI_CA = "mitsuhashi"
    ATRANSPOSITIONS_TA = "a-transpositions"
    LAYER_R = "layer-r"

    @property
    def group(self) -> str:
        """``"S"`` or ``"A"``: the group this set generates."""
        return "S" if self in (Kind.COXETER_C, Kind.TRANSPOSITIONS_T) else "A"

    @property
    def min_degree(self) -> int:
        return 3 if self in (Kind.MITSUHASHI_CA, Kind.LAYER_R) else 2


@dataclass(frozen=True)
class GeneratorSet:
    kind: Kind
    n: int
    elements: tuple[Permutation, ...]
    symmetric_closure: bool

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, v: Permutation) -> bool:
        return v in self.elements


def a_transposition(n: int, i: int, j: int) -> Permutation:
    """``(1 2)(i j)`` in degree ``n``; ``i == j`` gives ``(1 2)``."""
    s1 = transposition(n, 1, 2)
    if i == j:
        return s1
    return compose(s1, transposition(n, i, j))


def layer_element(n: int, i: int, j: int) -> Permutation:
    """The element ``(1 2)(j i)`` of R_i, or ``e`` when ``j == 0``; degree ``n``."""
    if j == 0:
        return Permutation.identity(n)
    if not 1 <= j < i <= n:
        raise ValueError(f"need 1 <= j < i <= n, got i={i}, j={j}, n={n}")
    return a_transposition(n, j, i)


def _base_elements(kind: Kind, n: int) -> list[Permutation]:
    if kind is Kind.COXETER_C:
        return [transposition(n, i, i + 1) for i in range(1, n)]
    if kind is Kind.TRANSPOSITIONS_T:
        return [transposition(n, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if kind is Kind.MITSUHASHI_CA:
        return [a_transposition(n, i, i + 1) for i in range(2, n)]
    if kind is Kind.ATRANSPOSITIONS_TA:
        # (1 2)(1 2) = e is not a generator
        return [a_transposition(n, i, j)
                for i in range(1, n + 1) for j in range(i + 1, n + 1) if (i, j) != (1, 2)]
    if kind is Kind.LAYER_R:
        return [layer_element(n, n, j) for j in range(n)]
    raise ValueError(f"unknown kind {kind!r}")


@lru_cache(maxsize=None)
def _build(kind: Kind, n: int, closure: bool) -> GeneratorSet:
    elems = _base_elements(kind, n)
    if closure:
        elems = elems + [inverse(g) for g in elems]
    elems = list(dict.fromkeys(elems))
    return GeneratorSet(kind, n, tuple(elems), closure)


def build(kind: Kind | str, n: int, symmetric_closure: bool | None = None) -> GeneratorSet:
    """Build a generating set of degree ``n``.

    ``symmetric_closure`` adjoins inverses; it defaults to True for the
    Mitsuhashi set (whose 3-cycle generator is not an involution) and False
    for the others, which are already inverse-closed.
    """
    kind = Kind(kind)
    if n < kind.min_degree:
        raise ValueError(f"{kind.value} needs n >= {kind.min_degree}, got {n}")
    if symmetric_closure is None:
        symmetric_closure = kind is Kind.MITSUHASHI_CA
    return _build(kind, n, bool(symmetric_closure))


def is_member(kind: Kind | str, n: int, v: Permutation) -> bool:
    return v.n == n and v in build(kind, n)
