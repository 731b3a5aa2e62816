"""Exhaustive generation of connected chemical graphs with c in {0,1,2,3}.

The main generator grows chemical trees by leaf augmentation and then adds
chord edges one cyclomatic level at a time, deduplicating every level by
canonical code.  Both steps are complete: every tree on k vertices arises
from a tree on k-1 by deleting a leaf, and every connected graph with c
cycles arises from one with c-1 by deleting a cycle edge.  A naive oracle
enumerates labeled edge subsets outright for independent cross-checking.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import InfeasibleClassError, SizeLimitExceededError
from .graph import MolGraph, _canon_general, _canon_tree, edge_type_vector
from .indices import IndexKind, index_from_edge_vector

DESK_LIMITS = {0: 18, 1: 13, 2: 12, 3: 11}
ORACLE_MAX_N = 9

GROUP_TOLERANCE = 1e-9


@dataclass(frozen=True)
class GraphPopulation:
    """All pairwise non-isomorphic members of a class, in canonical-code order."""

    n: int
    c: int
    graphs: tuple[MolGraph, ...]
    codes: tuple[bytes, ...]

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)


@dataclass(frozen=True)
class RankedOrdering:
    """Value-grouped ascending ranking of a population under one index."""

    kind: IndexKind
    tolerance: float
    groups: tuple[tuple[float, tuple[MolGraph, ...]], ...]

    def group_values(self) -> list[float]:
        return [value for value, _ in self.groups]


def _check_class(n: int, c: int) -> int:
    """Validate (n, c) and return the edge count; raises on impossible classes."""
    if not 0 <= c <= 3:
        raise InfeasibleClassError(f"cyclomatic number {c} outside 0..3")
    if n < 1:
        raise InfeasibleClassError(f"vertex count {n} must be >= 1")
    m = n - 1 + c
    if m > n * (n - 1) // 2:
        raise InfeasibleClassError(f"no simple graph with n={n} and {m} edges")
    return m


def _degrees_of(n: int, edges) -> list[int]:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def _adjacency_of(n: int, edges) -> list[list[int]]:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _code_primitive(n: int, edges) -> bytes:
    """canonical_code() on raw (n, edges); trees must be connected by construction."""
    adj = _adjacency_of(n, edges)
    header = b"%d %d " % (n, len(edges))
    if len(edges) == n - 1:
        return header + b"T" + _canon_tree(n, adj)
    bits, _ = _canon_general(n, edges, adj)
    return header + b"G" + bits.to_bytes((n * n + 7) // 8, "big")


def _chemical_trees(n: int) -> dict[bytes, tuple]:
    """Leaf augmentation with per-level canonical deduplication."""
    level: dict[bytes, tuple] = {_code_primitive(1, ()): ()}
    for k in range(2, n + 1):
        nxt: dict[bytes, tuple] = {}
        for edges in level.values():
            deg = _degrees_of(k - 1, edges)
            for v in range(k - 1):
                if deg[v] >= 4:
                    continue
                cand = edges + ((v, k - 1),)
                code = _code_primitive(k, cand)
                if code not in nxt:
                    nxt[code] = cand
        level = nxt
    return level


def _add_chord_level(n: int, level: dict[bytes, tuple]) -> dict[bytes, tuple]:
    """All one-chord extensions of a level, deduplicated by canonical code."""
    nxt: dict[bytes, tuple] = {}
    for edges in level.values():
        deg = _degrees_of(n, edges)
        present = set(edges)
        free = [v for v in range(n) if deg[v] <= 3]
        for i, u in enumerate(free):
            for v in free[i + 1:]:
                if (u, v) in present:
                    continue
                cand = tuple(sorted(present | {(u, v)}))
                code = _code_primitive(n, cand)
                if code not in nxt:
                    nxt[code] = cand
    return nxt


@functools.lru_cache(maxsize=32)
def enumerate_population(n: int, c: int) -> GraphPopulation:
    """All non-isomorphic connected chemical graphs with n vertices, c cycles.

    Results are immutable and cached; repeated verification passes over the
    same class reuse the population.
    """
    _check_class(n, c)
    limit = DESK_LIMITS[c]
    if n > limit:
        raise SizeLimitExceededError(f"c={c} enumeration supports n <= {limit}")
    level = _chemical_trees(n)
    for _ in range(c):
        level = _add_chord_level(n, level)
    items = sorted(level.items())
    graphs = tuple(MolGraph(n, edges) for _, edges in items)
    codes = tuple(code for code, _ in items)
    for g in graphs:
        assert g.m == n - 1 + c and g.is_chemical() and g.is_connected()
    return GraphPopulation(n, c, graphs, codes)


# ---------------------------------------------------------------------------
# Naive oracle: recurse over labeled edge subsets in lexicographic order,
# pruning only on the degree bound, then keep connected graphs and collapse
# to isomorphism classes.  A cheap deterministic relabeling ("normal form")
# collapses most labeled duplicates before the full canonical code runs.
# ---------------------------------------------------------------------------

def _connected(n: int, adj_masks: list[int]) -> bool:
    reached = 1
    frontier = 1
    while frontier:
        nxt = 0
        v = 0
        while frontier:
            if frontier & 1:
                nxt |= adj_masks[v]
            frontier >>= 1
            v += 1
        frontier = nxt & ~reached
        reached |= frontier
    return reached == (1 << n) - 1


def _normal_form(n: int, edges, deg: list[int]) -> tuple:
    """Deterministic relabeling; equal results imply isomorphic graphs."""
    nbr = [[] for _ in range(n)]
    for u, v in edges:
        nbr[u].append(deg[v])
        nbr[v].append(deg[u])
    order = sorted(range(n), key=lambda v: (deg[v], sorted(nbr[v]), v))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = []
    for u, v in edges:
        i, j = pos[u], pos[v]
        out.append((i, j) if i < j else (j, i))
    out.sort()
    return tuple(out)


def enumerate_naive_oracle(n: int, c: int) -> GraphPopulation:
    """Brute force over all labeled edge subsets; independent of the generator."""
    m = _check_class(n, c)
    if n > ORACLE_MAX_N:
        raise SizeLimitExceededError(f"naive oracle supports n <= {ORACLE_MAX_N}")
    pairs = list(itertools.combinations(range(n), 2))
    npairs = len(pairs)
    found: dict[bytes, tuple] = {}
    seen_nf: set[tuple] = set()
    deg = [0] * n
    chosen: list = []

    def process():
        adj_masks = [0] * n
        for u, v in chosen:
            adj_masks[u] |= 1 << v
            adj_masks[v] |= 1 << u
        if not _connected(n, adj_masks):
            return
        edges = tuple(chosen)
        nf = _normal_form(n, edges, deg)
        if nf in seen_nf:
            return
        seen_nf.add(nf)
        code = _code_primitive(n, nf)
        if code not in found:
            found[code] = nf

    def rec(start: int, need: int):
        if need == 0:
            process()
            return
        for e in range(start, npairs - need + 1):
            u, v = pairs[e]
            if deg[u] < 4 and deg[v] < 4:
                deg[u] += 1
                deg[v] += 1
                chosen.append((u, v))
                rec(e + 1, need - 1)
                chosen.pop()
                deg[u] -= 1
                deg[v] -= 1

    if n == 1:
        if c == 0:
            k1 = ()
            found[_code_primitive(1, k1)] = k1
    else:
        rec(0, m)
    items = sorted(found.items())
    graphs = tuple(MolGraph(n, edges) for _, edges in items)
    codes = tuple(code for code, _ in items)
    return GraphPopulation(n, c, graphs, codes)


def rank_by_index(
    population: GraphPopulation,
    kind: IndexKind,
    tolerance: float = GROUP_TOLERANCE,
) -> RankedOrdering:
    """Ascending value groups; ties within `tolerance` share a group."""
    scored = []
    for g, code in zip(population.graphs, population.codes):
        value = index_from_edge_vector(edge_type_vector(g), kind)
        scored.append((value, code, g))
    scored.sort(key=lambda t: (t[0], t[1]))
    groups: list[tuple[float, tuple]] = []
    members: list = []
    first = None
    for value, code, g in scored:
        if first is not None and value - first > tolerance:
            groups.append((first, tuple(members)))
            members = []
            first = None
        if first is None:
            first = value
        members.append(g)
    if first is not None:
        groups.append((first, tuple(members)))
    return RankedOrdering(kind, tolerance, tuple(groups))


def random_chemical_graph(rng, n: int, c: int) -> MolGraph:
    """Random connected chemical graph; used by the property-test suites."""
    m = _check_class(n, c)
    while True:
        deg = [0] * n
        edges = []
        ok = True
        for v in range(1, n):
            anchors = [u for u in range(v) if deg[u] < 4]
            if not anchors:
                ok = False
                break
            u = rng.choice(anchors)
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
        if not ok:
            continue
        present = set(edges)
        for _ in range(200):
            if len(present) == m:
                break
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v:
                continue
            if u > v:
                u, v = v, u
            if (u, v) in present or deg[u] >= 4 or deg[v] >= 4:
                continue
            present.add((u, v))
            deg[u] += 1
            deg[v] += 1
        if len(present) == m:
            return MolGraph(n, tuple(sorted(present)))
