"""Command-line entry point: ``fgc <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
limit.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import recurrence as rec
from .errors import InputError, InvariantViolation, ResourceLimitError
from .generators import FAMILIES, generate
from .graph_core import to_edgelist, to_json
from .growth import growth_table
from .oracle import count_perfect_matchings, max_matching_search, min_domination_search
from .structures import (
    build_apollonian_mds,
    build_code_class,
    build_perfect_matching_ext_hanoi,
    build_pm_hanoi_minus_extremes,
)
from .verification import FAULTS, run_checks

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

TABLE1_LABELS = {
    "V": "V",
    "all_vacant": "varphi",
    "one_covered": "theta",
    "two_covered": "phi",
    "maximum": "tau",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise InputError(message)


def parse_constraints(text: str | None) -> dict[str, str]:
    """Parse ``X=cover,Y=vacate`` into a role -> constraint mapping."""
    out: dict[str, str] = {}
    if not text:
        return out
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise InputError(f"bad constraint {item!r}; expected role=value")
        role, value = (s.strip() for s in item.split("=", 1))
        out[role] = value
    return out


def _write(text: str, out: str | None) -> None:
    if out and out != "-":
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows: list[list[object]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _aligned(rows: list[list[object]]) -> str:
    cells = [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
    return "".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in cells)


def cmd_generate(args) -> int:
    g = generate(args.family, args.n, args.method)
    _write(to_json(g) if args.format == "json" else to_edgelist(g), args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    g = generate(args.family, args.n, args.method)
    constraints = parse_constraints(args.constraints)
    if args.problem == "matching":
        r = max_matching_search(g, constraints, args.budget)
        size, count = r.max_size, r.count_at_max
    elif args.problem == "domination":
        r = min_domination_search(g, constraints, args.budget)
        size, count = r.min_size, r.count_at_min
    else:
        if constraints:
            raise InputError("perfect-count takes no constraints")
        count = count_perfect_matchings(g, args.budget)
        size = g.vertex_count // 2 if count else None
    payload = {
        "family": args.family,
        "n": args.n,
        "mode": args.problem,
        "constraints": constraints,
        "size": size,
        "count": str(count),
    }
    sys.stdout.write(json.dumps(payload) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    failed = 0
    for check in run_checks(args.max_oracle_n, args.inject_fault):
        status = "PASS" if check.passed else "FAIL"
        line = f"[{status}] {check.name}"
        if check.detail and not check.passed:
            line += f" -- {check.detail}"
        print(line, flush=True)
        failed += not check.passed
    print(f"{failed} failing check(s)" if failed else "all checks passed")
    return EXIT_VERIFY if failed else EXIT_OK


def table1_rows(max_n: int = 5) -> list[list[object]]:
    table = rec.table1(max_n)
    rows: list[list[object]] = [["n", *range(1, max_n + 1)]]
    rows.extend([TABLE1_LABELS[key], *values] for key, values in table.items())
    return rows


def cmd_table1(args) -> int:
    rows = table1_rows(args.max_n)
    _write(_csv(rows) if args.format == "csv" else _aligned(rows), None)
    return EXIT_OK


def cmd_growth(args) -> int:
    table = growth_table(args.max_m)
    rows = [["m", "lower", "upper", "gap"]]
    rows.extend([b.m, f"{b.lower:.10f}", f"{b.upper:.10f}", f"{b.gap:.10f}"] for b in table)
    last = table[-1]
    if args.format == "csv":
        text = _csv(rows) + _csv([["z_estimate", f"{last.z_estimate:.10f}"]])
    else:
        text = _aligned(rows) + f"z_estimate(n={last.m}) = {last.z_estimate:.10f}\n"
    _write(text, None)
    return EXIT_OK


RECUR_QUANTITIES = {
    "matching-sizes": (rec.matching_sizes, ["beta0", "beta1", "beta2", "beta3", "matching_number"]),
    "matching-counts": (rec.matching_counts, ["varphi", "theta", "phi", "tau"]),
    "domination-sizes": (rec.domination_sizes, ["gamma0", "gamma1", "gamma2", "gamma3", "domination_number"]),
    "domination-counts": (rec.domination_counts, ["w", "x", "y", "z"]),
    "hanoi-matchings": (
        lambda n: (lambda h: (h.minus_three, h.minus_one, h.beta0, h.perfect_ext))(rec.hanoi_matching_counts(n)),
        ["varphi", "phi", "beta0", "perfect_matchings_ext"],
    ),
    "ext-hanoi-domination": (rec.ext_hanoi_domination_number, ["gamma", "mds_count"]),
}


def cmd_recur(args) -> int:
    fn, names = RECUR_QUANTITIES[args.quantity]
    values = fn(args.n)
    rendered = {k: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v) for k, v in zip(names, values)}
    if args.format == "json":
        _write(json.dumps({"quantity": args.quantity, "n": args.n, **rendered}) + "\n", None)
    elif args.format == "csv":
        _write(_csv([["n", *names], [args.n, *rendered.values()]]), None)
    else:
        _write("".join(f"{k} = {v}\n" for k, v in rendered.items()), None)
    return EXIT_OK


def cmd_witness(args) -> int:
    what, fam, n = args.what, args.family, args.n
    if what == "pm" and fam == "ext-hanoi":
        data = sorted(build_perfect_matching_ext_hanoi(n))
    elif what == "pm" and fam == "hanoi":
        data = sorted(build_pm_hanoi_minus_extremes(n))
    elif what == "mds" and fam == "ext-hanoi":
        if args.k is None:
            raise InputError("--k 1..4 is required for the extended Hanoi MDS")
        data = sorted(build_code_class(n, args.k))
    elif what == "mds" and fam == "apollonian":
        data = sorted(build_apollonian_mds(n))
    else:
        raise InputError(f"no {what!r} witness for family {fam!r}")
    payload = [list(e) for e in data] if what == "pm" else data
    _write(json.dumps(payload) + "\n", None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fgc", description="Matchings and dominating sets on Apollonian and Hanoi graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def family_args(sp):
        sp.add_argument("--family", required=True, choices=FAMILIES)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--method", default=None, help="iterative|self-similar|move-rule")

    g = sub.add_parser("generate", help="write a graph as an edge list or JSON")
    family_args(g)
    g.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    g.add_argument("--out", default=None)
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", help="run the exhaustive solver")
    family_args(s)
    s.add_argument("--problem", choices=("matching", "domination", "perfect-count"), required=True)
    s.add_argument("--constraints", default="", help="e.g. X=cover,Y=vacate,Z=vacate")
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="cross-check search, recursions and constructions")
    v.add_argument("--max-oracle-n", type=int, default=4)
    v.add_argument("--inject-fault", choices=FAULTS, default=None, help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table1", help="maximum-matching counts of A_n for n = 1..5")
    t.add_argument("--format", choices=("text", "csv"), default="text")
    t.add_argument("--max-n", type=int, default=5)
    t.set_defaults(func=cmd_table1)

    gr = sub.add_parser("growth", help="bounds on the matching growth constant")
    gr.add_argument("--max-m", type=int, default=10)
    gr.add_argument("--format", choices=("text", "csv"), default="text")
    gr.set_defaults(func=cmd_growth)

    r = sub.add_parser("recur", help="evaluate a recursion at n")
    r.add_argument("--quantity", choices=sorted(RECUR_QUANTITIES), required=True)
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--format", choices=("text", "json", "csv"), default="text")
    r.set_defaults(func=cmd_recur)

    w = sub.add_parser("witness", help="print a constructed matching or dominating set")
    w.add_argument("--family", required=True, choices=FAMILIES)
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--what", choices=("pm", "mds"), required=True)
    w.add_argument("--k", type=int, default=None)
    w.set_defaults(func=cmd_witness)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(f"fgc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"fgc: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvariantViolation as exc:
        print(f"fgc: invariant violated: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
