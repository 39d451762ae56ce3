"""Command-line interface.

Subcommands construct the ideal families, evaluate the closed forms,
run the exact depth/sdepth engines, tabulate grids, verify the claim
registry, and export ideals to computer-algebra systems.

Exit codes: 0 success, 1 verification failure, 2 usage error (argparse),
3 budget or cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys

from . import claims
from .depth import PolarizationCapError, depth_quotient, depth_via_polarization
from .families import cycle_ideal, path_ideal, phi, t0_alpha
from .monomials import Monomial, MonomialIdeal, parse_ideal
from .sdepth import (
    PosetCapError,
    SearchBudgetError,
    build_poset,
    partition_to_decomposition,
    sdepth_quotient,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

DEFAULT_BUDGET = 2_000_000
BUDGET_ENV = "PATHDEPTH_NODE_BUDGET"


def _env_budget():
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
        if value <= 0:
            raise ValueError
    except ValueError:
        raise SystemExit("%s must be a positive integer, got %r" % (BUDGET_ENV, raw))
    return value


# ---------------------------------------------------------------------
# deterministic renderers


def render_rows(rows, fmt, out):
    """Rows of {column: scalar} as json, csv, or a markdown table."""
    if fmt == "json":
        out.write(json.dumps(rows, sort_keys=True, indent=2))
        out.write("\n")
        return
    columns = []
    for row in rows:
        for c in row:
            if c not in columns:
                columns.append(c)
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row.get(c, "") for c in columns])
        return
    if fmt == "md":
        out.write("| " + " | ".join(columns) + " |\n")
        out.write("|" + "|".join([" --- "] * len(columns)) + "|\n")
        for row in rows:
            out.write("| " + " | ".join(str(row.get(c, "")) for c in columns) + " |\n")
        return
    raise ValueError("unknown format %r" % fmt)


# ---------------------------------------------------------------------
# ideal input


def _ideal_from_args(args):
    if args.family is not None:
        if args.n is None or args.m is None:
            raise SystemExit("--family requires --n and --m")
        base = path_ideal(args.n, args.m) if args.family == "ipath" else cycle_ideal(args.n, args.m)
        return base.power(args.power)
    if args.ideal is None or args.nvars is None:
        raise SystemExit("provide either --family with --n/--m, or --ideal with --nvars")
    return parse_ideal(args.ideal, args.nvars).power(args.power)


def _add_ideal_args(sub):
    sub.add_argument("--family", choices=("ipath", "jcycle"))
    sub.add_argument("--n", type=int)
    sub.add_argument("--m", type=int)
    sub.add_argument("--ideal", help="comma-separated monomials, e.g. 'x1^2*x2, x3'")
    sub.add_argument("--nvars", type=int, help="ambient variable count for --ideal")
    sub.add_argument("--power", type=int, default=1)


# ---------------------------------------------------------------------
# export and its round-trip parser

EXPORT_DIALECTS = ("cocoa", "macaulay2")


def export_ideal(ideal, dialect):
    n = ideal.n_vars
    if dialect == "cocoa":
        var = lambda i: "x[%d]" % i
        ring = "use S ::= QQ[x[1..%d]];" % n
        assign = "I := ideal(%s);"
    elif dialect == "macaulay2":
        var = lambda i: "x_%d" % i
        ring = "S = QQ[x_1..x_%d];" % n
        assign = "I = ideal(%s);"
    else:
        raise ValueError("unknown dialect %r" % dialect)

    def fmt(mono):
        parts = []
        for i, e in enumerate(mono.exponents, start=1):
            if e == 1:
                parts.append(var(i))
            elif e > 1:
                parts.append("%s^%d" % (var(i), e))
        return "*".join(parts) if parts else "1"

    body = ", ".join(fmt(g) for g in ideal.gens) if ideal.gens else "0"
    return ring + "\n" + assign % body + "\n"


_VAR_RE = re.compile(r"x[\[_](\d+)\]?(?:\^(\d+))?")


def parse_exported(text):
    """Re-parse a script produced by export_ideal; returns the ideal."""
    ring = re.search(r"x[\[_]1(?:\.\.|\]..x[\[_])(?:x_)?(\d+)", text)
    if not ring:
        raise ValueError("cannot find ring declaration")
    n = int(ring.group(1))
    body = re.search(r"ideal\((.*)\)", text, re.S)
    if not body:
        raise ValueError("cannot find ideal(...)")
    inner = body.group(1).strip()
    if inner == "0":
        return MonomialIdeal.zero(n)
    gens = []
    for term in inner.split(","):
        exps = [0] * n
        matched = False
        for mv in _VAR_RE.finditer(term):
            matched = True
            exps[int(mv.group(1)) - 1] += int(mv.group(2) or 1)
        if not matched and term.strip() != "1":
            raise ValueError("cannot parse term %r" % term)
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal(n, gens)


# ---------------------------------------------------------------------
# subcommand handlers


def _cmd_ipath(args, out):
    ideal = path_ideal(args.n, args.m).power(args.power)
    _print_ideal(ideal, args.format, out)
    return EXIT_OK


def _cmd_jcycle(args, out):
    ideal = cycle_ideal(args.n, args.m).power(args.power)
    _print_ideal(ideal, args.format, out)
    return EXIT_OK


def _print_ideal(ideal, fmt, out):
    rows = [
        {"generator": str(g), "degree": g.degree()} for g in ideal.gens
    ]
    if fmt == "text":
        out.write(str(ideal) + "\n")
    else:
        render_rows(rows, fmt, out)


def _cmd_phi(args, out):
    out.write("%d\n" % phi(args.n, args.m, args.t))
    return EXIT_OK


def _cmd_t0(args, out):
    data = t0_alpha(args.n, args.m)
    render_rows(
        [
            {
                "n": data.n,
                "m": data.m,
                "d": data.d,
                "t0": data.t0,
                "alpha": data.alpha,
                "r": data.r,
                "s": data.s,
            }
        ],
        args.format,
        out,
    )
    return EXIT_OK


def _cmd_depth(args, out):
    ideal = _ideal_from_args(args)
    try:
        if args.method == "polarization":
            result = depth_via_polarization(ideal, cap=args.polarization_cap)
        else:
            result = depth_quotient(ideal)
    except PolarizationCapError as e:
        sys.stderr.write("budget: %s\n" % e)
        return EXIT_BUDGET
    render_rows([result.as_dict()], args.format, out)
    return EXIT_OK


def _cmd_sdepth(args, out):
    ideal = _ideal_from_args(args)
    try:
        result = sdepth_quotient(
            ideal, cap=args.poset_cap, node_budget=args.budget
        )
    except (PosetCapError, SearchBudgetError) as e:
        sys.stderr.write("budget: %s\n" % e)
        return EXIT_BUDGET
    row = {"sdepth": result.sdepth, "poset_size": result.poset_size}
    render_rows([row], args.format, out)
    if args.certificate:
        g = ideal.lcm_of_gens()
        for mono, zs in partition_to_decomposition(result.partition, g):
            out.write(
                "%s * K[%s]\n"
                % (mono, ", ".join("x%d" % i for i in zs) if zs else "")
            )
    return EXIT_OK


def _cmd_table(args, out):
    rows = []
    budget_hit = False
    for n in range(2, args.n_max + 1):
        m_lo = 1 if args.family == "ipath" else 2
        m_hi = n if args.family == "ipath" else n - 1
        for m in range(m_lo, m_hi + 1):
            for t in range(1, args.t_max + 1):
                base = path_ideal(n, m) if args.family == "ipath" else cycle_ideal(n, m)
                ideal = base.power(t)
                row = {"n": n, "m": m, "t": t, "phi": phi(n, m, t)}
                if ideal.is_whole_ring():
                    continue
                row["depth"] = depth_quotient(ideal).depth
                if args.sdepth:
                    try:
                        row["sdepth"] = sdepth_quotient(
                            ideal, cap=args.poset_cap, node_budget=args.budget
                        ).sdepth
                    except (PosetCapError, SearchBudgetError) as e:
                        row["sdepth"] = "budget"
                        budget_hit = True
                rows.append(row)
    render_rows(rows, args.format, out)
    return EXIT_BUDGET if budget_hit else EXIT_OK


def _cmd_verify(args, out):
    if args.all or "all" in args.claims:
        ids = sorted(claims.CLAIM_IDS)
    else:
        ids = sorted(set(args.claims))
    if not ids:
        sys.stderr.write("no claims selected; use --all or list claim ids\n")
        return EXIT_USAGE
    config = {
        "seed": args.seed,
        "node_budget": args.budget,
        "n_max": args.n_max,
        "t_max": args.t_max,
        "sdepth_n_max": args.sdepth_n_max,
    }
    reports = claims.run_claims(ids, config=config, jobs=args.jobs)
    rows = [
        {
            "claim_id": r.claim_id,
            "params": json.dumps(r.params, sort_keys=True),
            "verdict": r.verdict,
            "reason": r.reason,
        }
        for r in reports
    ]
    header = {
        "seed": args.seed,
        "node_budget": args.budget,
        "claims": ids,
        "reports": len(rows),
        "failed": sum(r.verdict == "fail" for r in reports),
        "skipped": sum(r.verdict == "skipped" for r in reports),
    }
    if args.format == "json":
        out.write(
            json.dumps(
                {"run": header, "reports": [r.as_dict() for r in reports]},
                sort_keys=True,
                indent=2,
                default=str,
            )
        )
        out.write("\n")
    else:
        out.write("seed=%d node_budget=%d\n" % (args.seed, args.budget))
        render_rows(rows, args.format, out)
    return EXIT_FAIL if header["failed"] else EXIT_OK


def _cmd_export(args, out):
    ideal = _ideal_from_args(args)
    script = export_ideal(ideal, args.dialect)
    if parse_exported(script) != ideal:
        sys.stderr.write("internal error: exported script does not round-trip\n")
        return EXIT_FAIL
    out.write(script)
    return EXIT_OK


# ---------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pathdepth",
        description="exact depth and Stanley depth of powers of path ideals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt_arg(p, default="json", extra=()):
        p.add_argument("--format", choices=("json", "csv", "md") + tuple(extra), default=default)

    p = sub.add_parser("ipath", help="m-path ideal of the path graph")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--power", type=int, default=1)
    fmt_arg(p, default="text", extra=("text",))
    p.set_defaults(func=_cmd_ipath)

    p = sub.add_parser("jcycle", help="m-path ideal of the cycle graph")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--power", type=int, default=1)
    fmt_arg(p, default="text", extra=("text",))
    p.set_defaults(func=_cmd_jcycle)

    p = sub.add_parser("phi", help="closed-form depth value")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("t", type=int)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("t0", help="cycle witness constants d, t0, alpha")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    fmt_arg(p)
    p.set_defaults(func=_cmd_t0)

    p = sub.add_parser("depth", help="exact depth of S/I")
    _add_ideal_args(p)
    p.add_argument("--method", choices=("lattice", "polarization"), default="lattice")
    p.add_argument("--polarization-cap", type=int, default=14)
    fmt_arg(p)
    p.set_defaults(func=_cmd_depth)

    p = sub.add_parser("sdepth", help="exact Stanley depth of S/I")
    _add_ideal_args(p)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--poset-cap", type=int, default=100000)
    p.add_argument("--certificate", action="store_true")
    fmt_arg(p)
    p.set_defaults(func=_cmd_sdepth)

    p = sub.add_parser("table", help="grid of depth/phi (optionally sdepth)")
    p.add_argument("--family", choices=("ipath", "jcycle"), required=True)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--t-max", type=int, default=2)
    p.add_argument("--sdepth", action="store_true")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--poset-cap", type=int, default=100000)
    fmt_arg(p, default="csv")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run the claim registry")
    p.add_argument("claims", nargs="*", metavar="CLAIM_ID")
    p.add_argument("--all", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--t-max", type=int, default=3)
    p.add_argument("--sdepth-n-max", type=int, default=5)
    fmt_arg(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export", help="emit a computer-algebra script")
    _add_ideal_args(p)
    p.add_argument("--dialect", choices=EXPORT_DIALECTS, required=True)
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv=None, out=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget", None) is None and hasattr(args, "budget"):
        args.budget = _env_budget()
    try:
        return args.func(args, out or sys.stdout)
    except (ValueError, KeyError) as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
