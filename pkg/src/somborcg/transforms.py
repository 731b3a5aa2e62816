"""Executable index-decreasing rewrites T1..T4 with exhaustive site detection.

Each rewrite moves a pendant path (or bridge path) to a new attachment
point so that both Sombor-type indices strictly decrease.  Sites carry the
anchor vertices exactly as read off the host graph; applying a rewrite
re-validates every precondition and returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionViolatedError
from .graph import MolGraph

LEMMAS = ("T1", "T2", "T3", "T4")


@dataclass(frozen=True)
class TransformSite:
    """Anchors for one rewrite; path1 is the piece that gets re-attached."""

    lemma: str
    u1: int | None = None
    u2: int | None = None
    u3: int | None = None
    u4: int | None = None
    x: int | None = None
    y: int | None = None
    path1: tuple[int, ...] = ()
    path2: tuple[int, ...] = ()

    def anchor_ids(self) -> tuple[int, ...]:
        """Vertex ids that identify the site on the CLI."""
        if self.lemma == "T1":
            return (self.u1, self.path1[0], self.u3, self.u4)
        if self.lemma == "T3":
            return (self.x, self.path1[0], self.path2[0])
        return (self.x, self.y, self.path1[0], self.path2[0])


def _fail(msg: str):
    raise PreconditionViolatedError(msg)


def _require(cond: bool, msg: str):
    if not cond:
        raise PreconditionViolatedError(msg)


def _pendant_chain(g: MolGraph, adj, deg, leaf: int) -> tuple[int, tuple[int, ...]]:
    """Walk from a leaf through degree-2 vertices; return (anchor, path v1..vl).

    The anchor is the first vertex of degree >= 3; a bare path graph has no
    anchor and returns (-1, ()).  Path order: v1 adjacent to the anchor,
    vl = leaf.
    """
    chain = [leaf]
    prev, cur = leaf, adj[leaf][0]
    while deg[cur] == 2:
        chain.append(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    if deg[cur] < 3:
        return -1, ()
    return cur, tuple(reversed(chain))


def _pendant_paths(g: MolGraph, adj, deg) -> dict[int, list[tuple[int, ...]]]:
    """All maximal pendant paths, grouped by their anchor vertex."""
    out: dict[int, list[tuple[int, ...]]] = {}
    for leaf in range(g.n):
        if deg[leaf] != 1:
            continue
        anchor, path = _pendant_chain(g, adj, deg, leaf)
        if anchor >= 0:
            out.setdefault(anchor, []).append(path)
    return out


def _validate_pendant(g: MolGraph, adj, deg, anchor: int, path: tuple[int, ...]):
    _require(len(path) >= 1, "pendant path must be non-empty")
    seen = set(path)
    _require(len(seen) == len(path) and anchor not in seen, "path vertices must be distinct")
    _require(path[0] in adj[anchor], "path start must be adjacent to its anchor")
    for i, v in enumerate(path):
        expected = 1 if i == len(path) - 1 else 2
        _require(deg[v] == expected, f"path vertex {v} must have degree {expected}")
        if i + 1 < len(path):
            _require(path[i + 1] in adj[v], "path vertices must form a chain")


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _rewire(g: MolGraph, remove, add) -> MolGraph:
    edges = set(g.edges)
    for e in remove:
        edges.remove(_edge(*e))
    for e in add:
        eo = _edge(*e)
        _require(eo not in edges, f"edge {eo} already present")
        edges.add(eo)
    return MolGraph(g.n, tuple(sorted(edges)))


# -- T1: move a pendant path from a degree-2 stem onto a pendant leaf --------

def apply_T1(g: MolGraph, site: TransformSite) -> MolGraph:
    """Detach the path at u1 (leaving u1-u2 as a new pendant tail) and hang it on u4."""
    adj, deg = g.adjacency(), g.degrees()
    u1, u2, u3, u4, path = site.u1, site.u2, site.u3, site.u4, site.path1
    _require(site.lemma == "T1", "site lemma mismatch")
    for v in (u1, u2, u3, u4):
        _require(v is not None and 0 <= v < g.n, "anchor out of range")
    _require(len({u1, u2, u3, u4} | set(path)) == 4 + len(path), "anchors must be distinct")
    _require(deg[u1] == 2 and u2 in adj[u1], "u1 must have degree 2 and neighbour u2")
    _require(deg[u2] == 2, "u2 must have degree 2")
    _require(deg[u3] in (3, 4), "u3 must have degree 3 or 4")
    _require(deg[u4] == 1 and u4 in adj[u3], "u4 must be a pendant neighbour of u3")
    _validate_pendant(g, adj, deg, u1, path)
    _require(path[0] != u2, "the moved path must be the non-u2 side of u1")
    return _rewire(g, [(u1, path[0])], [(u4, path[0])])


# -- T2: contract a bridge path to a direct edge, appending it to a pendant --

def apply_T2(g: MolGraph, site: TransformSite) -> MolGraph:
    """Replace bridge x..y by edge xy; re-attach the bridge at the pendant's end."""
    adj, deg = g.adjacency(), g.degrees()
    x, y, bridge, pend = site.x, site.y, site.path1, site.path2
    _require(site.lemma == "T2", "site lemma mismatch")
    for v in (x, y):
        _require(v is not None and 0 <= v < g.n, "anchor out of range")
    _require(x != y, "x and y must be distinct")
    _require(deg[x] in (3, 4), "x must have base degree 1 or 2 plus two attachments")
    _require(deg[y] in (3, 4), "y must have base degree 2 or 3 plus one attachment")
    _require(y not in adj[x], "x and y must not be adjacent")
    _require(len(bridge) >= 1, "bridge path must be non-empty")
    allv = set(bridge) | set(pend) | {x, y}
    _require(len(allv) == len(bridge) + len(pend) + 2, "bridge and pendant must be disjoint")
    _require(bridge[0] in adj[x] and bridge[-1] in adj[y], "bridge must join x to y")
    for i, v in enumerate(bridge):
        _require(deg[v] == 2, f"bridge vertex {v} must have degree 2")
        if i + 1 < len(bridge):
            _require(bridge[i + 1] in adj[v], "bridge vertices must form a chain")
    _validate_pendant(g, adj, deg, x, pend)
    return _rewire(
        g,
        [(bridge[0], x), (bridge[-1], y)],
        [(x, y), (bridge[0], pend[-1])],
    )


# -- T3: merge two pendant paths at one vertex into a single longer one ------

def apply_T3(g: MolGraph, site: TransformSite) -> MolGraph:
    """Re-attach pendant path1 of x onto the free end of pendant path2."""
    adj, deg = g.adjacency(), g.degrees()
    x, p1, p2 = site.x, site.path1, site.path2
    _require(site.lemma == "T3", "site lemma mismatch")
    _require(x is not None and 0 <= x < g.n, "anchor out of range")
    _require(deg[x] in (3, 4), "x must have base degree 1 or 2 plus two paths")
    allv = set(p1) | set(p2) | {x}
    _require(len(allv) == len(p1) + len(p2) + 1, "paths must be disjoint")
    _validate_pendant(g, adj, deg, x, p1)
    _validate_pendant(g, adj, deg, x, p2)
    return _rewire(g, [(p1[0], x)], [(p1[0], p2[-1])])


# -- T4: move a pendant path from x onto the end of a pendant path at y ------

def apply_T4(g: MolGraph, site: TransformSite) -> MolGraph:
    """Re-attach pendant path1 of x onto the free end of y's pendant path2."""
    adj, deg = g.adjacency(), g.degrees()
    x, y, p1, p2 = site.x, site.y, site.path1, site.path2
    _require(site.lemma == "T4", "site lemma mismatch")
    for v in (x, y):
        _require(v is not None and 0 <= v < g.n, "anchor out of range")
    _require(x != y, "x and y must be distinct")
    _require(deg[x] in (3, 4), "x must have base degree 2 or 3 plus one path")
    _require(deg[y] in (3, 4), "y must have base degree 2 or 3 plus one path")
    allv = set(p1) | set(p2) | {x, y}
    _require(len(allv) == len(p1) + len(p2) + 2, "paths must be disjoint")
    _validate_pendant(g, adj, deg, x, p1)
    _validate_pendant(g, adj, deg, y, p2)
    return _rewire(g, [(p1[0], x)], [(p1[0], p2[-1])])


_APPLY = {"T1": apply_T1, "T2": apply_T2, "T3": apply_T3, "T4": apply_T4}


def apply_site(g: MolGraph, site: TransformSite) -> MolGraph:
    return _APPLY[site.lemma](g, site)


def _sites_T1(g: MolGraph, adj, deg) -> list[TransformSite]:
    pendants = []  # (u3, u4) pairs
    for u4 in range(g.n):
        if deg[u4] == 1 and deg[adj[u4][0]] in (3, 4):
            pendants.append((adj[u4][0], u4))
    if not pendants:
        return []
    sites = []
    for leaf in range(g.n):
        if deg[leaf] != 1:
            continue
        # walk the degree-2 chain above the leaf; u1 = chain[j], u2 = chain[j+1]
        chain = [leaf]
        prev, cur = leaf, adj[leaf][0]
        while deg[cur] == 2:
            chain.append(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        for j in range(1, len(chain) - 1):
            u1, u2 = chain[j], chain[j + 1]
            path = tuple(reversed(chain[:j]))
            for u3, u4 in pendants:
                if u4 == leaf:
                    continue
                sites.append(TransformSite("T1", u1=u1, u2=u2, u3=u3, u4=u4, path1=path))
    return sites


def _sites_T2(g: MolGraph, adj, deg) -> list[TransformSite]:
    paths = _pendant_paths(g, adj, deg)
    sites = []
    for x in sorted(paths):
        if deg[x] not in (3, 4):
            continue
        for pend in paths[x]:
            in_pend = set(pend)
            for u1 in adj[x]:
                if deg[u1] != 2 or u1 in in_pend:
                    continue
                bridge = [u1]
                prev, cur = x, u1
                while deg[cur] == 2:
                    a, b = adj[cur]
                    nxt = b if a == prev else a
                    prev, cur = cur, nxt
                    if deg[cur] == 2:
                        bridge.append(cur)
                y = cur
                if y == x or deg[y] not in (3, 4) or y in adj[x]:
                    continue
                sites.append(
                    TransformSite("T2", x=x, y=y, path1=tuple(bridge), path2=pend)
                )
    return sites


def _sites_T3(g: MolGraph, adj, deg) -> list[TransformSite]:
    paths = _pendant_paths(g, adj, deg)
    sites = []
    for x in sorted(paths):
        plist = paths[x]
        if deg[x] not in (3, 4) or len(plist) < 2:
            continue
        if deg[x] - 2 not in (1, 2):
            continue
        for p1 in plist:
            for p2 in plist:
                if p1 is not p2:
                    sites.append(TransformSite("T3", x=x, path1=p1, path2=p2))
    return sites


def _sites_T4(g: MolGraph, adj, deg) -> list[TransformSite]:
    paths = _pendant_paths(g, adj, deg)
    anchors = [x for x in sorted(paths) if deg[x] in (3, 4)]
    sites = []
    for x in anchors:
        for y in anchors:
            if x == y:
                continue
            for p1 in paths[x]:
                for p2 in paths[y]:
                    sites.append(TransformSite("T4", x=x, y=y, path1=p1, path2=p2))
    return sites


def find_sites(g: MolGraph, lemma: str) -> list[TransformSite]:
    """Every anchor choice in g satisfying the lemma's preconditions."""
    if lemma not in LEMMAS:
        raise ValueError(f"unknown lemma {lemma!r}; expected one of {LEMMAS}")
    adj, deg = g.adjacency(), g.degrees()
    finder = {"T1": _sites_T1, "T2": _sites_T2, "T3": _sites_T3, "T4": _sites_T4}[lemma]
    return finder(g, adj, deg)
