"""Expectation and variance of the A-transposition length on A_n.

All arithmetic is exact (:class:`fractions.Fraction`).  Variance uses the
population convention E[s^2] - E[s]^2.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Mapping, Sequence

from .tables import a_table, genfunc_a

ExactRational = Fraction


def harmonic(n: int) -> Fraction:
    return harmonic_gen(n, 1)


def harmonic_gen(n: int, m: int) -> Fraction:
    """1 + 1/2^m + ... + 1/n^m; the empty sum (n = 0) is 0."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    return sum((Fraction(1, k**m) for k in range(1, n + 1)), Fraction(0))


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError("need n >= 2")


def expectation_closed(n: int) -> Fraction:
    _check_n(n)
    return n - harmonic(n) - Fraction(1, 2)


def variance_closed(n: int) -> Fraction:
    _check_n(n)
    return harmonic(n) - harmonic_gen(n, 2) - Fraction(1, 4)


def moments_from_genfunc(n: int) -> tuple[Fraction, Fraction]:
    """(E, Var) from F'(1) and F''(1), with F read off the a(n, k) recurrence table."""
    _check_n(n)
    row = a_table(n).row(n)
    size = sum(row)
    d1 = sum(k * c for k, c in enumerate(row))
    d2 = sum(k * (k - 1) * c for k, c in enumerate(row))
    mean = Fraction(d1, size)
    var = (d2 + d1 - Fraction(d1 * d1, size)) / size
    return mean, var


def moments_from_product(n: int) -> tuple[Fraction, Fraction]:
    """Same quantities, differentiating the product polynomial instead of the table."""
    _check_n(n)
    f = genfunc_a(n)
    size = factorial(n) // 2
    d1, d2 = f.derivative()(1), f.derivative().derivative()(1)
    return Fraction(d1, size), (d2 + d1 - Fraction(d1 * d1, size)) / size


def empirical_moments(histogram: Sequence[int] | Mapping[int, int]) -> tuple[Fraction, Fraction]:
    """Population mean and variance of a length histogram (length -> count)."""
    items = histogram.items() if isinstance(histogram, Mapping) else enumerate(histogram)
    items = list(items)
    size = sum(c for _, c in items)
    mean = Fraction(sum(k * c for k, c in items), size)
    second = Fraction(sum(k * k * c for k, c in items), size)
    return mean, second - mean * mean
