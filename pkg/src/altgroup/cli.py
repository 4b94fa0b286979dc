"""Command-line entry point: ``altgroup <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on a usage
error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import tables
from .bijection import verify_bijection
from .canon import canonicalize
from .gensets import Kind
from .lengths import inv_count, length_T, length_TA
from .oracle import bfs_census
from .perm import parse
from .stats import expectation_closed, variance_closed
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    subcommand: str
    n: int | None = None
    n_max: int | None = None
    r: int = 1
    k: int | None = None
    terms: int = 12
    kind: str | None = None
    perm: str | None = None
    set: str = "a-transpositions"
    suite: str = "all"
    format: str = "text"
    table_n: int = 30
    as_float: bool = False

    def validate(self) -> None:
        if self.n is not None and self.n < 0:
            raise UsageError("--n must be nonnegative")
        if self.r < 1:
            raise UsageError("--r must be >= 1")
        if self.terms < 0:
            raise UsageError("--terms must be nonnegative")
        if self.subcommand in ("table", "stirling", "stats", "bijection") and self.n is None:
            raise UsageError(f"{self.subcommand} needs --n")
        if self.subcommand == "verify" and self.n_max is None:
            raise UsageError("verify needs --max-n")


def _poly_text(p: tables.IntPolynomial, var: str = "x") -> str:
    terms = []
    for d, c in enumerate(p.coefficients):
        if not c:
            continue
        mono = "" if d == 0 else var if d == 1 else f"{var}^{d}"
        terms.append(str(c) if not mono else mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) or "0"


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _render_triangle(t: tables.Triangle, fmt: str) -> str:
    if fmt == "csv":
        return t.to_csv().rstrip("\n")
    if fmt == "json":
        return t.to_json()
    return t.to_text()


def _triangle(kind: str, n: int, r: int) -> tables.Triangle:
    if kind == "a":
        return tables.a_table(n)
    if kind == "stirling1":
        return tables.stirling1_unsigned(n) if r == 1 else tables.rstirling1(n, r)
    if kind == "stirling2":
        return tables.stirling2(n) if r == 1 else tables.rstirling2(n, r)
    if kind == "rstirling1":
        return tables.rstirling1(n, r)
    if kind == "rstirling2":
        return tables.rstirling2(n, r)
    raise UsageError(f"unknown table {kind!r}")


def cmd_table(cfg: Config) -> tuple[str, int]:
    return _render_triangle(_triangle(cfg.kind, cfg.n, cfg.r), cfg.format), 0


def cmd_stirling(cfg: Config) -> tuple[str, int]:
    name = {"1": "rstirling1", "2": "rstirling2"}[cfg.kind]
    return _render_triangle(_triangle(name, cfg.n, cfg.r), cfg.format), 0


def cmd_genfunc(cfg: Config) -> tuple[str, int]:
    if cfg.n is None and cfg.kind != "rstirling2":
        raise UsageError("genfunc needs --n")
    if cfg.kind == "a":
        coeffs = list(tables.genfunc_a(cfg.n).coefficients)
    elif cfg.kind == "rstirling1":
        coeffs = list(tables.genfunc_rstirling1(cfg.n, cfg.r).coefficients)
    elif cfg.kind == "rr":
        coeffs = list(tables.genfunc_rr(cfg.n).coefficients)
    else:
        if cfg.k is None:
            raise UsageError("genfunc rstirling2 needs --k")
        coeffs = tables.genfunc_rstirling2_check(cfg.k, cfg.r, cfg.terms)
    if cfg.format == "json":
        return json.dumps({"kind": cfg.kind, "coefficients": coeffs}), 0
    if cfg.format == "csv":
        return _csv(["degree", "coefficient"], enumerate(coeffs)), 0
    if cfg.kind == "rstirling2":
        return " ".join(map(str, coeffs)), 0
    return _poly_text(tables.IntPolynomial(coeffs), "q" if cfg.kind == "rr" else "x"), 0


def cmd_length(cfg: Config) -> tuple[str, int]:
    v = parse(cfg.perm, cfg.n)
    kind = Kind(cfg.set)
    if kind is Kind.COXETER_C:
        value = inv_count(v)
    elif kind is Kind.TRANSPOSITIONS_T:
        value = length_T(v)
    elif kind is Kind.ATRANSPOSITIONS_TA:
        value = length_TA(v)
    elif kind is Kind.MITSUHASHI_CA:
        value = bfs_census("A", v.n, kind).distance(v)
    else:
        raise UsageError("layer-r does not generate A_n; choose another --set")
    return str(value), 0


def cmd_canon(cfg: Config) -> tuple[str, int]:
    p = canonicalize(parse(cfg.perm, cfg.n))
    if cfg.format == "json":
        return json.dumps(p.to_json()), 0
    return str(p), 0


def _num(x: Fraction, as_float: bool) -> str:
    return f"{x} ({float(x):.12g})" if as_float else str(x)


def cmd_stats(cfg: Config) -> tuple[str, int]:
    last = cfg.n if cfg.n_max is None else cfg.n_max
    rows = [(n, expectation_closed(n), variance_closed(n)) for n in range(cfg.n, last + 1)]
    if cfg.format == "csv":
        if cfg.as_float:
            out = [(n, e, float(e), v, float(v)) for n, e, v in rows]
            return _csv(["n", "E", "E_float", "Var", "Var_float"], out), 0
        return _csv(["n", "E", "Var"], rows), 0
    if cfg.format == "json":
        return json.dumps([{"n": n, "E": str(e), "Var": str(v)} for n, e, v in rows]), 0
    return "\n".join(f"n={n} E={_num(e, cfg.as_float)} Var={_num(v, cfg.as_float)}"
                     for n, e, v in rows), 0


def cmd_bijection(cfg: Config) -> tuple[str, int]:
    rep = verify_bijection(cfg.n)
    counts, p_counts = rep.details["counts"], rep.details["p_counts"]
    if cfg.format == "json":
        return json.dumps(rep.to_json()), 0 if rep.passed else 1
    lines = ["k,|A(n,k)|,|P(n,n-k)|"] + [
        f"{k},{c},{p}" for k, (c, p) in enumerate(zip(counts, p_counts))]
    lines.append("PASS" if rep.passed else "FAIL: " + "; ".join(rep.failures[:3]))
    return "\n".join(lines), 0 if rep.passed else 1


def cmd_verify(cfg: Config) -> tuple[str, int]:
    reports = run_suite(cfg.suite, cfg.n_max, cfg.table_n)
    ok = all(r.passed for r in reports)
    if cfg.format == "json":
        text = json.dumps({"passed": ok, "reports": [r.to_json() for r in reports]}, indent=1)
    else:
        text = "\n".join(r.summary() for r in reports)
        text += "\nALL PASS" if ok else "\nFAILURES PRESENT"
    return text, 0 if ok else 1


COMMANDS = {
    "table": cmd_table,
    "stirling": cmd_stirling,
    "genfunc": cmd_genfunc,
    "length": cmd_length,
    "canon": cmd_canon,
    "stats": cmd_stats,
    "bijection": cmd_bijection,
    "verify": cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="altgroup", description="Generator sets for the alternating group.")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    fmt = dict(choices=["text", "csv", "json"], default="text")

    s = sub.add_parser("table", help="a(n,m) and Stirling triangles")
    s.add_argument("kind", choices=["a", "stirling1", "stirling2", "rstirling1", "rstirling2"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--format", **fmt)

    s = sub.add_parser("stirling", help="r-restricted Stirling triangle")
    s.add_argument("--kind", choices=["1", "2"], default="1")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--format", **fmt)

    s = sub.add_parser("genfunc", help="generating-function coefficients")
    s.add_argument("kind", choices=["a", "rstirling1", "rstirling2", "rr"])
    s.add_argument("--n", type=int, help="degree (for rr: n+1, the degree of A_{n+1})")
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--k", type=int)
    s.add_argument("--terms", type=int, default=12)
    s.add_argument("--format", **fmt)

    s = sub.add_parser("length", help="length of a permutation")
    s.add_argument("perm", help='cycle "(1 3)(2 4)" or one-line "3 4 1 2"')
    s.add_argument("--set", default="a-transpositions",
                   choices=["coxeter", "transpositions", "a-transpositions", "mitsuhashi"])
    s.add_argument("--n", type=int)

    s = sub.add_parser("canon", help="canonical presentation over R_3 ... R_n")
    s.add_argument("perm")
    s.add_argument("--n", type=int)
    s.add_argument("--format", choices=["text", "json"], default="text")

    s = sub.add_parser("stats", help="exact expectation and variance of the length")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--n-max", type=int, help="print the range n..n-max")
    s.add_argument("--float", dest="as_float", action="store_true")
    s.add_argument("--format", **fmt)

    s = sub.add_parser("bijection", help="check f: A(n,k) -> P(n,n-k)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=["text", "json"], default="text")

    s = sub.add_parser("verify", help="run verification suites")
    s.add_argument("--max-n", dest="n_max", type=int, default=7)
    s.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    s.add_argument("--table-n", type=int, default=30)
    s.add_argument("--format", choices=["text", "json"], default="text")
    return p


def run(argv: list[str]) -> tuple[str, int]:
    """Parse ``argv`` and return (output text, exit code)."""
    try:
        ns = make_parser().parse_args(argv)
        cfg = Config(**vars(ns))
        cfg.validate()
        return COMMANDS[cfg.subcommand](cfg)
    except UsageError as e:
        return f"error: {e} (see 'altgroup --help')", 2
    except (ValueError, KeyError) as e:
        return f"error: {e}", 2


def main(argv: list[str] | None = None) -> int:
    text, code = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == 2 else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
