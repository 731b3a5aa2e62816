"""Command-line front end.

Exit status: 0 on success or a passing verification, 1 when a verification
or audit fails, 2 on usage and input errors.  All reports are deterministic
for fixed inputs.
"""

from __future__ import annotations

import argparse
import math
import sys

from .enumeration import enumerate_population, rank_by_index
from .errors import SomborError
from .families import (
    THEOREMS,
    audit_tables,
    classify,
    closed_form_value,
    theorem31_32_support,
    verify_theorem,
)
from .graph import load_graph, write_graph
from .indices import IndexKind, index_value, reduced_sombor, sombor
from .regression import load_dataset, reproduce_paper_models
from .transforms import LEMMAS, apply_site, find_sites

KIND_CHOICES = [kind.value for kind in IndexKind]


def _fmt(value: float, precision: int) -> str:
    """Truncate (never round) to `precision` decimals, matching the reference tables."""
    if not math.isfinite(value):
        return str(value)
    nudged = value + math.copysign(1e-10, value)
    scale = 10 ** precision
    return f"{math.trunc(nudged * scale) / scale:.{precision}f}"


def _cmd_index(args) -> int:
    g = load_graph(args.file)
    if args.all:
        for kind in IndexKind:
            print(f"{kind.value} {_fmt(index_value(g, kind), args.precision)}")
    else:
        kind = IndexKind.from_name(args.kind)
        print(_fmt(index_value(g, kind), args.precision))
    return 0


def _cmd_enum(args) -> int:
    population = enumerate_population(args.n, args.c)
    if args.count_only:
        print(f"{args.n} {args.c} {len(population)}")
        return 0
    chunks = []
    for i, g in enumerate(population, start=1):
        chunks.append(write_graph(g, comment=f"graph {i}/{len(population)}"))
    text = "".join(chunks)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"{args.n} {args.c} {len(population)}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_rank(args) -> int:
    population = enumerate_population(args.n, args.c)
    ranking = rank_by_index(population, IndexKind.from_name(args.kind), args.tolerance)
    groups = ranking.groups[: args.top] if args.top else ranking.groups
    if args.format == "csv":
        print("group,value,count")
        for i, (value, members) in enumerate(groups, start=1):
            print(f"{i},{_fmt(value, args.precision)},{len(members)}")
    else:
        print(f"rank n={args.n} c={args.c} kind={args.kind} "
              f"groups={len(ranking.groups)} graphs={len(population)}")
        for i, (value, members) in enumerate(groups, start=1):
            print(f"{i:4d} {_fmt(value, args.precision):>14s} {len(members):5d}")
    return 0


def _cmd_classify(args) -> int:
    g = load_graph(args.file, chemical=True, connected=True)
    print(classify(g))
    return 0


def _cmd_transform(args) -> int:
    g = load_graph(args.file)
    sites = find_sites(g, args.lemma)
    if args.list:
        print(f"{len(sites)} site(s) for {args.lemma}")
        for site in sites:
            print(" ".join(str(v) for v in site.anchor_ids()))
        return 0
    if not args.anchors:
        print("error: --anchors required unless --list is given", file=sys.stderr)
        return 2
    wanted = tuple(int(a) for a in args.anchors.split(","))
    matches = [site for site in sites if site.anchor_ids() == wanted]
    if not matches:
        print(f"error: no {args.lemma} site with anchors {wanted}", file=sys.stderr)
        return 2
    site = matches[0]
    out = apply_site(g, site)
    so_delta = sombor(out) - sombor(g)
    sored_delta = reduced_sombor(out) - reduced_sombor(g)
    comment = (
        f"{args.lemma} at anchors {','.join(map(str, wanted))}\n"
        f"so_delta {_fmt(so_delta, args.precision)}\n"
        f"so_red_delta {_fmt(sored_delta, args.precision)}"
    )
    text = write_graph(out, comment=comment)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"so_delta {_fmt(so_delta, args.precision)}")
        print(f"so_red_delta {_fmt(sored_delta, args.precision)}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    kind = IndexKind.from_name(args.kind) if args.kind else None
    if args.theorem in ("3.1", "3.2"):
        if kind is None:
            kind = IndexKind.SO if args.theorem == "3.1" else IndexKind.SO_RED
        report = theorem31_32_support(args.n, kind)
        print(f"verify theorem {args.theorem} n={args.n} kind={kind.value}")
        print(f"  max-degree-4 trees: {report.delta4_count}, "
              f"family Phi members: {report.phi_count}, "
              f"minimum {'attained only by Phi' if report.phi_ok else 'NOT exclusive to Phi'}")
        if report.omega_checked:
            print(f"  degree-3 trees with >=3 branch vertices: {report.delta3_count}, "
                  f"family Omega members: {report.omega_count}, "
                  f"minimum {'attained only by Omega' if report.omega_ok else 'NOT exclusive to Omega'}")
        else:
            print("  Omega check skipped (needs n >= 13)")
        print(f"RESULT: {'PASS' if report.passed else 'FAIL'}")
        return 0 if report.passed else 1
    report = verify_theorem(args.theorem, args.n, kind)
    print(f"verify theorem {args.theorem} n={args.n} kind={report.kind.value} "
          f"population={report.population_size}")
    for check in report.checks:
        labels = ",".join(check.observed_labels) or "(missing)"
        print(f"  group {check.position:2d} expect {check.expected_family:8s} "
              f"got {labels:10s} value={_fmt(check.group_value, args.precision)} "
              f"size={check.group_size} {'ok' if check.ok else 'MISMATCH'}")
    print(f"  remaining graphs strictly above group {len(report.checks)}: "
          f"{'yes' if report.tail_strict else 'NO'}")
    print(f"RESULT: {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


def _cmd_audit(args) -> int:
    report = audit_tables()
    if args.format == "csv":
        print("label,kind,printed,recomputed,difference,ok")
        for e in report.entries:
            print(f"{e.label},{e.kind.value},{e.printed},{e.computed:.9f},"
                  f"{e.difference:.9f},{int(e.ok)}")
    else:
        print(f"audit: {len(report.entries)} printed constants checked")
        for e in report.entries:
            if not e.ok:
                print(f"  MISMATCH {e.label} {e.kind.value}: printed {e.printed} "
                      f"recomputed {e.computed:.6f}")
        for finding in report.findings:
            print(f"  finding: {finding}")
        for issue in report.unexpected:
            print(f"  UNEXPECTED: {issue}")
    print(f"RESULT: {'PASS' if report.ok else 'FAIL'}")
    return 0 if report.ok else 1


def _cmd_regress(args) -> int:
    records = load_dataset(args.data)
    comparison = reproduce_paper_models(records)
    p = args.precision
    if args.format == "csv":
        print("property,slope,intercept,r2")
        for prop, model in comparison.models.items():
            print(f"{prop},{model.slope:.6f},{model.intercept:.6f},{model.r_squared:.6f}")
        kinds = list(next(iter(comparison.r2_grid.values())))
        print("property," + ",".join(kinds))
        for prop, row in comparison.r2_grid.items():
            print(prop + "," + ",".join(f"{row[k]:.4f}" for k in kinds))
    else:
        print("reduced-Sombor property models (18 octane isomers):")
        for prop, model in comparison.models.items():
            sign = "-" if model.slope < 0 else "+"
            print(f"  {prop:8s} = {_fmt(model.intercept, p)} {sign} "
                  f"{_fmt(abs(model.slope), p)} * SO_red   R2={_fmt(model.r_squared, p)}")
        kinds = list(next(iter(comparison.r2_grid.values())))
        print("R2 grid: property " + " ".join(f"{k:>7s}" for k in kinds))
        for prop, row in comparison.r2_grid.items():
            print(f"  {prop:8s} " + " ".join(f"{row[k]:7.4f}" for k in kinds))
        for prop, kind, ref, got in comparison.suspect_cells:
            print(f"  suspect cell {prop}/{kind}: reference {ref} vs computed {got:.4f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="somborcg",
        description="Sombor-type indices, chemical-graph enumeration, "
                    "extremal families and octane regressions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_precision(p):
        p.add_argument("--precision", type=int, default=4,
                       help="decimal places for printed numbers (default 4)")

    p = sub.add_parser("index", help="compute an index of a .graph file")
    p.add_argument("--file", required=True)
    p.add_argument("--kind", choices=KIND_CHOICES, default="so")
    p.add_argument("--all", action="store_true", help="print every index kind")
    add_precision(p)
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("enum", help="enumerate chemical graphs with n vertices, c cycles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out", help="write .graph records to a file")
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("rank", help="rank a population by an index")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--kind", choices=KIND_CHOICES, default="so")
    p.add_argument("--top", type=int, default=0, help="print only the first T groups")
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--format", choices=["text", "csv"], default="text")
    add_precision(p)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("classify", help="extremal-family label of a .graph file")
    p.add_argument("--file", required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("transform", help="apply an index-decreasing rewrite")
    p.add_argument("--file", required=True)
    p.add_argument("--lemma", choices=list(LEMMAS), required=True)
    p.add_argument("--anchors", help="comma-separated anchor vertex ids")
    p.add_argument("--list", action="store_true", help="list available sites")
    p.add_argument("--out", help="write the transformed .graph to a file")
    add_precision(p)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("verify", help="verify a minimum-ordering claim by enumeration")
    p.add_argument("--theorem", required=True,
                   choices=sorted(THEOREMS) + ["3.1", "3.2"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=["so", "so_red"])
    add_precision(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("audit", help="recompute all published family constants")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("regress", help="reproduce the octane property models")
    p.add_argument("--data", help="path to an octane_properties.csv (default: bundled)")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    add_precision(p)
    p.set_defaults(func=_cmd_regress)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SomborError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
