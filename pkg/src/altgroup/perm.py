"""Permutations on the letters 1..n.

Products are read right to left: ``compose(u, w)`` applies ``w`` first and
then ``u``, so ``compose(u, w)(i) == u(w(i))``.  Every public function uses
1-based letters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_DEGREE = 64


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} stored in one-line form (``images[i-1] == v(i)``)."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        n = len(images)
        if n < 1:
            raise ValueError("degree must be positive")
        if n > MAX_DEGREE:
            raise ValueError(f"degree {n} exceeds cap {MAX_DEGREE}")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {list(images)}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Permutation:
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for x in cycle:
                if not 1 <= x <= n:
                    raise ValueError(f"letter {x} exceeds degree {n}")
                if x in seen:
                    raise ValueError(f"repeated letter {x}")
                seen.add(x)
            for a, b in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
                images[a - 1] = b
        return cls(tuple(images))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __str__(self) -> str:
        return format_perm(self)

    def to_json(self) -> dict:
        return {"n": self.n, "images": list(self.images)}

    @classmethod
    def from_json(cls, data: dict) -> Permutation:
        v = cls(tuple(data["images"]))
        if v.n != data["n"]:
            raise ValueError("degree mismatch")
        return v


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles of a permutation, fixed points included as 1-cycles.

    Each cycle starts at its smallest letter; cycles are sorted by that letter.
    """

    cycles: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def cycle_of(self, letter: int) -> tuple[int, ...]:
        for c in self.cycles:
            if letter in c:
                return c
        raise ValueError(f"letter {letter} not present")


def transposition(n: int, a: int, b: int) -> Permutation:
    if a == b:
        raise ValueError(f"({a} {b}) is not a transposition")
    return Permutation.from_cycles([(a, b)], n)


def compose(u: Permutation, w: Permutation) -> Permutation:
    """Return ``u*w``: apply ``w`` first, then ``u``."""
    if u.n != w.n:
        raise ValueError("degree mismatch")
    ui = u.images
    return Permutation(tuple(ui[x - 1] for x in w.images))


def product(factors: Iterable[Permutation], n: int) -> Permutation:
    """Right-to-left product of ``factors`` (the last one acts first)."""
    result = Permutation.identity(n)
    for f in factors:
        result = compose(result, f)
    return result


def inverse(v: Permutation) -> Permutation:
    out = [0] * v.n
    for i, x in enumerate(v.images, start=1):
        out[x - 1] = i
    return Permutation(tuple(out))


def cycle_decomposition(v: Permutation) -> CycleDecomposition:
    seen = [False] * (v.n + 1)
    cycles = []
    for start in range(1, v.n + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = v(x)
        cycles.append(tuple(cycle))
    return CycleDecomposition(tuple(cycles))


def cyc(v: Permutation) -> int:
    """Number of cycles of ``v``, counting fixed points."""
    return len(cycle_decomposition(v))


def sign(v: Permutation) -> int:
    return 1 if (v.n - cyc(v)) % 2 == 0 else -1


def same_cycle(v: Permutation, a: int, b: int) -> bool:
    for x in (a, b):
        if not 1 <= x <= v.n:
            raise ValueError(f"letter {x} out of range 1..{v.n}")
    x = v(a)
    while x != a:
        if x == b:
            return True
        x = v(x)
    return a == b


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse(text: str, n: int | None = None) -> Permutation:
    """Read cycle notation ``"(1 3)(2 4)"`` or one-line notation ``"3 4 1 2"``.

    For cycle notation the degree defaults to the largest letter mentioned.
    ``"e"`` and ``"()"`` denote the identity (degree ``n``, default 1).
    """
    s = text.strip()
    if s in ("e", "id", ""):
        return Permutation.identity(n or 1)
    if "(" in s or ")" in s:
        if _CYCLE_RE.sub("", s).strip():
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(s):
            tokens = body.replace(",", " ").split()
            try:
                cycles.append(tuple(int(t) for t in tokens))
            except ValueError:
                raise ValueError(f"malformed cycle notation: {text!r}") from None
        letters = [x for c in cycles for x in c]
        if any(x < 1 for x in letters):
            raise ValueError(f"letters must be positive: {text!r}")
        degree = n if n is not None else max(letters, default=1)
        return Permutation.from_cycles([c for c in cycles if c], degree)
    try:
        images = tuple(int(t) for t in s.replace(",", " ").split())
    except ValueError:
        raise ValueError(f"malformed one-line notation: {text!r}") from None
    if len(set(images)) != len(images):
        raise ValueError(f"repeated letter in {text!r}")
    v = Permutation(images)
    if n is not None and n != v.n:
        raise ValueError(f"one-line form has degree {v.n}, expected {n}")
    return v


def format_perm(v: Permutation, style: str = "cycle") -> str:
    """Render ``v`` as ``"cycle"`` (fixed points omitted, identity ``"e"``) or ``"oneline"``."""
    if style == "oneline":
        return " ".join(map(str, v.images))
    if style != "cycle":
        raise ValueError(f"unknown style {style!r}")
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycle_decomposition(v).cycles if len(c) > 1]
    return "".join(parts) or "e"
