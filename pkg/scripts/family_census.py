#!/usr/bin/env python3
"""Census of family occupancy across enumerable orders.

For every catalog family, reports the smallest order n at which an actual
graph of the family appears, against the catalog's min_n column.  Families
whose m22 offset pushes them past the enumeration desk limits are reported
as unobservable.

Usage: python scripts/family_census.py [--max-tree-n 15] [--max-cyclic-n 11]
"""

import argparse
from collections import defaultdict

from somborcg.enumeration import DESK_LIMITS, enumerate_population
from somborcg.families import catalog, classify


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-tree-n", type=int, default=15)
    ap.add_argument("--max-cyclic-n", type=int, default=11)
    args = ap.parse_args()

    first_seen: dict[str, int] = {}
    counts: dict[tuple[str, int], int] = defaultdict(int)
    limits = {0: args.max_tree_n, 1: args.max_cyclic_n, 2: args.max_cyclic_n, 3: args.max_cyclic_n}
    for c in range(4):
        top = min(limits[c], DESK_LIMITS[c])
        for n in range(1, top + 1):
            if n - 1 + c > n * (n - 1) // 2:
                continue
            for g in enumerate_population(n, c):
                label = classify(g)
                if label == "Other":
                    continue
                counts[(label, n)] += 1
                first_seen.setdefault(label, n)

    mismatches = 0
    unobserved = 0
    for label, template in catalog().items():
        limit = min(limits[template.c], DESK_LIMITS[template.c])
        seen = first_seen.get(label)
        if seen is None:
            status = f"UNOBSERVED up to n={limit} (catalog min_n={template.min_n})"
            unobserved += 1
        elif seen == template.min_n:
            status = f"min_n={seen} confirmed ({counts[(label, seen)]} graph(s))"
        else:
            status = f"MISMATCH: observed {seen}, catalog says {template.min_n}"
            mismatches += 1
        print(f"{label:10s} c={template.c} k={template.k:2d}  {status}")
    print(f"\n{len(first_seen)} families observed, {unobserved} beyond desk limits, "
          f"{mismatches} catalog mismatches")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
