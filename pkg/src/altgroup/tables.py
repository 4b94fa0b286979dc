"""Exact integer triangles and the generating-function products behind them.

Triangles cover a(n, m) (A_n elements by A-transposition length), unsigned
Stirling numbers of both kinds and their r-restricted versions.  Lookups
outside a row's support return 0, which keeps identities uniform at the
boundaries (a(n, -1) == 0 and so on).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from math import factorial
from typing import Callable, Iterable, Sequence

from .report import Report


@dataclass(frozen=True)
class Triangle:
    name: str
    rows: tuple[tuple[int, ...], ...]  # rows[n][k] for 0 <= k <= n

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if not 0 <= n <= self.n_max:
            raise IndexError(f"row {n} not in {self.name} table (n_max={self.n_max})")
        row = self.rows[n]
        return row[k] if 0 <= k < len(row) else 0

    def row(self, n: int) -> list[int]:
        return list(self.rows[n])

    def support(self, n: int) -> tuple[int, int] | None:
        nz = [k for k, x in enumerate(self.rows[n]) if x]
        return (nz[0], nz[-1]) if nz else None

    def entries(self) -> Iterable[tuple[int, int, int]]:
        """(n, k, value) over the support of each row, in lexicographic order."""
        for n in range(self.n_max + 1):
            span = self.support(n)
            if span is not None:
                for k in range(span[0], span[1] + 1):
                    yield n, k, self.rows[n][k]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k", "value"])
        w.writerows(self.entries())
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"name": self.name, "rows": [list(r) for r in self.rows]})

    def to_text(self) -> str:
        return "\n".join(f"{n}: " + " ".join(map(str, r)) for n, r in enumerate(self.rows))


def _triangle(name: str, n_max: int, entry: Callable[[int, int, list[list[int]]], int]) -> Triangle:
    rows: list[list[int]] = []
    for n in range(n_max + 1):
        rows.append([entry(n, k, rows) for k in range(n + 1)])
    return Triangle(name, tuple(tuple(r) for r in rows))


def _get(rows: list[list[int]], n: int, k: int) -> int:
    if n < 0 or k < 0 or k >= len(rows[n]):
        return 0
    return rows[n][k]


def a_table(n_max: int) -> Triangle:
    """a(n, m): elements of A_n of A-transposition length m."""
    def entry(n, m, rows):
        if m == 0:
            return 1
        if n >= 2 and m <= n - 2:
            return (n - 1) * _get(rows, n - 1, m - 1) + _get(rows, n - 1, m)
        return 0
    return _triangle("a", n_max, entry)


def stirling1_unsigned(n_max: int) -> Triangle:
    """c(n, k): permutations of n letters with k cycles."""
    def entry(n, k, rows):
        if n == 0:
            return 1 if k == 0 else 0
        return (n - 1) * _get(rows, n - 1, k) + _get(rows, n - 1, k - 1)
    return _triangle("stirling1", n_max, entry)


def stirling2(n_max: int) -> Triangle:
    """S(n, k): partitions of n letters into k blocks."""
    def entry(n, k, rows):
        if n == 0:
            return 1 if k == 0 else 0
        return k * _get(rows, n - 1, k) + _get(rows, n - 1, k - 1)
    return _triangle("stirling2", n_max, entry)


def rstirling1(n_max: int, r: int) -> Triangle:
    """Permutations of n letters with k cycles, letters 1..r in distinct cycles."""
    if r < 1:
        raise ValueError("r must be >= 1")

    def entry(n, k, rows):
        if k < r or n < k:
            return 0
        if k == n:
            return 1
        if k == r:
            return factorial(n - 1) // factorial(r - 1)
        return (n - 1) * _get(rows, n - 1, k) + _get(rows, n - 1, k - 1)
    return _triangle(f"rstirling1_r{r}", n_max, entry)


def rstirling2(n_max: int, r: int) -> Triangle:
    """Partitions of n letters into k blocks, letters 1..r in distinct blocks."""
    if r < 1:
        raise ValueError("r must be >= 1")

    def entry(n, k, rows):
        if k < r or n < k:
            return 0
        if k == n:
            return 1
        if k == r:
            return r ** (n - r)
        return k * _get(rows, n - 1, k) + _get(rows, n - 1, k - 1)
    return _triangle(f"rstirling2_r{r}", n_max, entry)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coefficients[d]`` is the coefficient of x^d."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Sequence[int] = ()):
        c = [int(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def product(cls, factors: Iterable[Sequence[int]]) -> IntPolynomial:
        p = cls([1])
        for f in factors:
            p = p * cls(f)
        return p

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, d: int) -> int:
        return self.coefficients[d] if 0 <= d < len(self.coefficients) else 0

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        m = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial([self[d] + other[d] for d in range(m)])

    def derivative(self) -> IntPolynomial:
        return IntPolynomial([d * c for d, c in enumerate(self.coefficients)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def padded(self, length: int) -> list[int]:
        return [self[d] for d in range(length)]


def genfunc_a(n: int) -> IntPolynomial:
    """(1+2x)(1+3x)...(1+(n-1)x): length generating function of A_n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return IntPolynomial.product([1, t] for t in range(2, n))


def genfunc_rstirling1(n: int, r: int) -> IntPolynomial:
    """x^r (x+r)(x+r+1)...(x+n-1), or 0 unless 1 <= r <= n."""
    if not 1 <= r <= n:
        return IntPolynomial()
    return IntPolynomial([0] * r + [1]) * IntPolynomial.product([t, 1] for t in range(r, n))


def genfunc_rstirling2_check(k: int, r: int, n_terms: int) -> list[int]:
    """First ``n_terms`` coefficients of x^k / ((1-rx)(1-(r+1)x)...(1-kx))."""
    coeffs = [0] * n_terms
    if not 1 <= r <= k:
        return coeffs
    if k < n_terms:
        coeffs[k] = 1
    for j in range(r, k + 1):
        # dividing by (1 - jx): b_m = a_m + j b_{m-1}
        for m in range(1, n_terms):
            coeffs[m] += j * coeffs[m - 1]
    return coeffs


def genfunc_rr(n_plus_1: int) -> IntPolynomial:
    """Mitsuhashi length generating function of A_{n+1}.

    Product over j = 1..n-1 of (1 + q + ... + q^(j-1) + 2q^j).
    """
    if n_plus_1 < 3:
        raise ValueError("need n+1 >= 3")
    n = n_plus_1 - 1
    return IntPolynomial.product([1] * j + [2] for j in range(1, n))


def identity_eq4(n_max: int) -> Report:
    """c(n, n-k) == a(n, k) + a(n, k-1) for 2 <= n <= n_max, 0 <= k <= n."""
    a, c = a_table(n_max), stirling1_unsigned(n_max)
    rep = Report("eq4: c(n,n-k) = a(n,k) + a(n,k-1)")
    for n in range(2, n_max + 1):
        for k in range(n + 1):
            lhs, rhs = c[n, n - k], a[n, k] + a[n, k - 1]
            rep.check(lhs == rhs, lambda: f"n={n} k={k}: {lhs} != {rhs}")
    return rep


def identity_thm9(n_max: int) -> Report:
    """a(n,k) == [n, n-k]_2 (0 <= k <= n-2) and c(n,k) == [n,k]_2 + [n,k+1]_2, 2 <= n <= n_max."""
    a, c, r2 = a_table(n_max), stirling1_unsigned(n_max), rstirling1(n_max + 1, 2)
    rep = Report("thm9: a(n,k) = [n n-k]_2 and c(n,k) = [n k]_2 + [n k+1]_2")
    for n in range(2, n_max + 1):
        for k in range(n - 1):
            lhs, rhs = a[n, k], r2[n, n - k]
            rep.check(lhs == rhs, lambda: f"a({n},{k})={lhs} != [{n} {n - k}]_2={rhs}")
        for k in range(n + 1):
            lhs, rhs = c[n, k], r2[n, k] + r2[n, k + 1]
            rep.check(lhs == rhs, lambda: f"c({n},{k})={lhs} != {rhs}")
    return rep


def orthogonality(n_max: int, r: int) -> Report:
    """sum_k [n k]_r {k m}_r (-1)^k == (-1)^n delta(m, n) when r <= m <= n, else 0."""
    s1, s2 = rstirling1(n_max, r), rstirling2(n_max, r)
    rep = Report(f"orthogonality r={r}")
    for n in range(n_max + 1):
        for m in range(n_max + 1):
            total = sum(s1[n, k] * s2[k, m] * (-1) ** k for k in range(n + 1))
            expected = (-1) ** n if (r <= m <= n and m == n) else 0
            rep.check(total == expected, lambda: f"n={n} m={m}: {total} != {expected}")
    return rep
