"""Verification suites run by ``altgroup verify``."""

from __future__ import annotations

from itertools import product as cartesian
from math import factorial

from . import tables
from .bijection import verify_bijection
from .canon import canonicalize, reconstruct, CanonicalPresentation
from .gensets import Kind
from .lengths import length_T, length_TA, length_parity_consistent, m_of
from .oracle import bfs_census, cross_check, enumerate_group
from .perm import cyc
from .report import Report
from .stats import empirical_moments, expectation_closed, moments_from_genfunc, variance_closed

SUITES = ("lengths", "tables", "canon", "bijection", "rr")


def lengths_suite(max_n: int) -> list[Report]:
    reports = cross_check(max_n, min(max_n, 6))
    parity = Report("parity: 1,2 share a cycle <=> length_TA odd")
    bridge = Report("length_T == length_TA + (length_TA mod 2), cyc == m(n, k)")
    moments = Report("closed-form moments == BFS census moments")
    for n in range(3, max_n + 1):
        for v in enumerate_group("A", n):
            parity.check(length_parity_consistent(v), lambda: f"{v} in A_{n}")
            k = length_TA(v)
            ok = length_T(v) == k + k % 2 and cyc(v) == m_of(n, k)
            bridge.check(ok, lambda: f"{v} in A_{n}")
        census = bfs_census("A", n, Kind.ATRANSPOSITIONS_TA)
        got = empirical_moments(census.histogram)
        want = (expectation_closed(n), variance_closed(n))
        moments.check(got == want, lambda: f"n={n}: {got} != {want}")
    return reports + [parity, bridge, moments]


def tables_suite(table_n: int = 30) -> list[Report]:
    a = tables.a_table(table_n)
    gf = Report("a(n, .) == coefficients of prod (1 + t x)")
    sums = Report("row sums of a(n, .) == n!/2")
    for n in range(2, table_n + 1):
        coeffs = tables.genfunc_a(n).padded(n + 1)
        gf.check(coeffs == a.row(n), lambda: f"n={n}")
        sums.check(sum(a.row(n)) == factorial(n) // 2, lambda: f"n={n}")

    r1 = Report("[n k]_r == coefficients of x^r (x+r)...(x+n-1)")
    r2 = Report("{n k}_r == series coefficients of x^k / prod (1 - j x)")
    for r in (1, 2, 3):
        s1, s2 = tables.rstirling1(table_n, r), tables.rstirling2(table_n, r)
        for n in range(1, table_n + 1):
            coeffs = tables.genfunc_rstirling1(n, r).padded(n + 1)
            r1.check(coeffs == s1.row(n), lambda: f"r={r} n={n}")
        for k in range(table_n + 1):
            series = tables.genfunc_rstirling2_check(k, r, table_n + 1)
            column = [s2[n, k] for n in range(table_n + 1)]
            r2.check(series == column, lambda: f"r={r} k={k}")

    mom = Report("closed-form moments == moments of the generating function")
    for n in range(2, table_n + 1):
        got = moments_from_genfunc(n)
        want = (expectation_closed(n), variance_closed(n))
        mom.check(got == want, lambda: f"n={n}: {got} != {want}")

    ortho = [tables.orthogonality(min(table_n, 15), r) for r in (1, 2, 3)]
    return [gf, sums, r1, r2, tables.identity_eq4(table_n), tables.identity_thm9(table_n), mom] + ortho


def canon_suite(max_n: int) -> list[Report]:
    rt = Report("canonical presentation: reconstruct(canonicalize(v)) == v, hat == length_TA")
    distinct = Report("products over R_3 x ... x R_n are distinct and cover A_n")
    for n in range(3, max_n + 1):
        for v in enumerate_group("A", n):
            p = canonicalize(v)
            ok = reconstruct(p) == v and p.hat_length == length_TA(v)
            rt.check(ok, lambda: f"{v} in A_{n}: {p}")
        images = {reconstruct(CanonicalPresentation(n, f))
                  for f in cartesian(*(range(i) for i in range(3, n + 1)))}
        distinct.check(len(images) == factorial(n) // 2, lambda: f"n={n}: {len(images)} distinct")
    return [rt, distinct]


def rr_suite(max_n: int) -> list[Report]:
    rep = Report("mitsuhashi BFS histogram on A_{n+1} == RR product")
    for n1 in range(3, max_n + 1):
        hist = list(bfs_census("A", n1, Kind.MITSUHASHI_CA, True).histogram)
        want = list(tables.genfunc_rr(n1).coefficients)
        rep.check(hist == want, lambda: f"A_{n1}: {hist} != {want}")
    return [rep]


def bijection_suite(max_n: int) -> list[Report]:
    return [verify_bijection(n) for n in range(2, max_n + 1)]


def run_suite(name: str, max_n: int, table_n: int = 30) -> list[Report]:
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, max_n, table_n)]
    if name == "lengths":
        return lengths_suite(max_n)
    if name == "tables":
        return tables_suite(table_n)
    if name == "canon":
        return canon_suite(max_n)
    if name == "bijection":
        return bijection_suite(max_n)
    if name == "rr":
        return rr_suite(max_n)
    raise ValueError(f"unknown suite {name!r}")
