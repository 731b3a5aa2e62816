"""Chemical-graph representation, text I/O, degree statistics and canonical codes.

Graphs are simple, undirected, 0-indexed, and tiny (n <= ~20); everything
is kept immutable and recomputed on demand rather than cached on the
instance, so millions of short-lived graphs stay cheap to hold.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    MalformedInputError,
    MaxDegreeExceededError,
    SelfLoopError,
    SizeLimitExceededError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int]

CANON_MAX_VERTICES = 32

EDGE_SLOTS: tuple[Edge, ...] = (
    (1, 1), (1, 2), (1, 3), (1, 4), (2, 2),
    (2, 3), (2, 4), (3, 3), (3, 4), (4, 4),
)
_SLOT_INDEX = {pair: i for i, pair in enumerate(EDGE_SLOTS)}


def _normalize_edges(edges) -> tuple[Edge, ...]:
    out = []
    for u, v in edges:
        if u > v:
            u, v = v, u
        out.append((u, v))
    out.sort()
    return tuple(out)


@dataclass(frozen=True, slots=True)
class MolGraph:
    """Undirected simple graph on vertices 0..n-1 with a sorted edge tuple."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 1:
            raise MalformedInputError(f"vertex count must be >= 1, got {self.n}")
        norm = _normalize_edges(self.edges)
        object.__setattr__(self, "edges", norm)
        seen = set()
        for u, v in norm:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexOutOfRangeError(f"edge ({u}, {v}) outside [0, {self.n})")
            if (u, v) in seen:
                raise DuplicateEdgeError(f"edge ({u}, {v}) repeated")
            seen.add((u, v))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees()) if self.n else 0

    def is_chemical(self) -> bool:
        return self.max_degree() <= 4

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        adj = self.adjacency()
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()

    def with_edge(self, u: int, v: int) -> "MolGraph":
        return MolGraph(self.n, self.edges + ((u, v),))

    def relabeled(self, perm: list[int]) -> "MolGraph":
        """Image under vertex map v -> perm[v]."""
        return MolGraph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))


def cyclomatic_number(g: MolGraph) -> int:
    """|E| - n + 1 of a connected graph: 0 trees, 1 unicyclic, 2 bicyclic, 3 tricyclic."""
    if not g.is_connected():
        raise DisconnectedError("cyclomatic number requires a connected graph")
    return g.m - g.n + 1


@dataclass(frozen=True, slots=True)
class DegreeDistribution:
    """Counts of vertices of degree 1..4 (degree 0 only occurs for n=1)."""

    n1: int
    n2: int
    n3: int
    n4: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n1, self.n2, self.n3, self.n4)


def degree_distribution(g: MolGraph) -> DegreeDistribution:
    """Exact degree counts; raises if any vertex exceeds degree 4."""
    counts = [0] * 5
    for d in g.degrees():
        if d > 4:
            raise MaxDegreeExceededError(f"vertex of degree {d} > 4")
        counts[d] += 1
    if counts[0] and g.n >= 2:
        raise DisconnectedError("isolated vertex in a graph with n >= 2")
    return DegreeDistribution(counts[1], counts[2], counts[3], counts[4])


@dataclass(frozen=True, slots=True)
class EdgeTypeVector:
    """The ten edge counts m[i][j] for 1 <= i <= j <= 4, in EDGE_SLOTS order."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != 10:
            raise ValueError("edge-type vector needs exactly 10 slots")

    def m(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self.counts[_SLOT_INDEX[(i, j)]]

    def total(self) -> int:
        return sum(self.counts)

    def as_dict(self) -> dict[Edge, int]:
        return {pair: c for pair, c in zip(EDGE_SLOTS, self.counts) if c}


def edge_type_vector(g: MolGraph) -> EdgeTypeVector:
    """Count edges by the sorted degree pair of their endpoints."""
    deg = g.degrees()
    counts = [0] * 10
    for u, v in g.edges:
        i, j = deg[u], deg[v]
        if i > j:
            i, j = j, i
        if j > 4:
            raise MaxDegreeExceededError(f"vertex of degree {j} > 4")
        counts[_SLOT_INDEX[(i, j)]] += 1
    return EdgeTypeVector(tuple(counts))


# ---------------------------------------------------------------------------
# .graph text format
#
# First non-comment line "n m", then exactly m lines "u v" with
# 0 <= u < v < n.  Lines starting with '#' and blank lines are ignored.
# Writers emit edges sorted lexicographically.
# ---------------------------------------------------------------------------

def parse_graph(text: str, *, chemical: bool = False, connected: bool = False) -> MolGraph:
    """Parse the .graph edge-list format, optionally enforcing extra checks."""
    lines = []
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append(stripped)
    if not lines:
        raise MalformedInputError("empty graph text")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedInputError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise MalformedInputError(f"non-integer header {lines[0]!r}") from None
    if n < 1 or m < 0:
        raise MalformedInputError(f"bad header values n={n} m={m}")
    if len(lines) - 1 != m:
        raise MalformedInputError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise MalformedInputError(f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedInputError(f"non-integer edge line {line!r}") from None
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if u > v:
            raise MalformedInputError(f"edge line {line!r} must satisfy u < v")
        edges.append((u, v))
    g = MolGraph(n, tuple(edges))
    if chemical and not g.is_chemical():
        raise MaxDegreeExceededError(f"max degree {g.max_degree()} > 4")
    if connected and not g.is_connected():
        raise DisconnectedError("graph is not connected")
    return g


def write_graph(g: MolGraph, comment: str | None = None) -> str:
    """Serialize to the .graph format (edges sorted lexicographically)."""
    out = []
    if comment:
        for line in comment.splitlines():
            out.append(f"# {line}")
    out.append(f"{g.n} {g.m}")
    for u, v in g.edges:
        out.append(f"{u} {v}")
    return "\n".join(out) + "\n"


def load_graph(path, **kwargs) -> MolGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read(), **kwargs)


# ---------------------------------------------------------------------------
# Canonical codes.
#
# Trees use the classic center-rooted subtree encoding; every other graph
# goes through colour refinement with individualization backtracking.  Both
# emit bytes prefixed with (n, m), so codes from the two routes can never
# collide (a connected graph has m = n-1 iff it is a tree) and equal codes
# mean isomorphic graphs.
# ---------------------------------------------------------------------------

def _refine(n: int, adj: list[list[int]], colors: list[int]) -> list[int]:
    """Stable colour refinement; new colour ids follow sorted signatures."""
    ncol = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[w] for w in adj[v])
            nb.insert(0, colors[v])
            sigs.append(tuple(nb))
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        k = len(table)
        colors = [table[s] for s in sigs]
        if k == ncol:
            return colors
        ncol = k


def _emit_bits(n: int, edges, pos: list[int]) -> int:
    bits = 0
    for u, v in edges:
        i, j = pos[u], pos[v]
        if i > j:
            i, j = j, i
        bits |= 1 << (i * n + j)
    return bits


def _canon_general(n: int, edges, adj: list[list[int]]) -> tuple[int, list[int]]:
    """Minimum adjacency bit-code over the individualization-refinement tree.

    Returns (bits, labeling) where labeling[v] is the canonical position of v.
    """
    best: list = [None, None]

    def descend(colors: list[int]):
        colors = _refine(n, adj, colors)
        counts = [0] * (n + 1)
        for c in colors:
            counts[c] += 1
        target = -1
        for c in range(n):
            if counts[c] >= 2:
                target = c
                break
        if target < 0:
            bits = _emit_bits(n, edges, colors)
            if best[0] is None or bits < best[0]:
                best[0] = bits
                best[1] = colors
            return
        for v in range(n):
            if colors[v] == target:
                child = colors.copy()
                child[v] = n
                descend(child)

    descend([len(a) for a in adj])
    return best[0], best[1]


def _tree_center(n: int, adj: list[list[int]]) -> list[int]:
    if n == 1:
        return [0]
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in adj[v]:
                if deg[w] > 0:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(root: int, parent: int, adj: list[list[int]]) -> bytes:
    subs = sorted(_rooted_code(w, root, adj) for w in adj[root] if w != parent)
    return b"(" + b"".join(subs) + b")"


def _canon_tree(n: int, adj: list[list[int]]) -> bytes:
    center = _tree_center(n, adj)
    if len(center) == 1:
        return b"1" + _rooted_code(center[0], -1, adj)
    a, b = center
    ca = _rooted_code(a, b, adj)
    cb = _rooted_code(b, a, adj)
    if cb < ca:
        ca, cb = cb, ca
    return b"2" + ca + cb


def canonical_code(g: MolGraph) -> bytes:
    """Isomorphism-invariant byte code: equal codes iff isomorphic graphs."""
    if g.n > CANON_MAX_VERTICES:
        raise SizeLimitExceededError(f"canonical code supports n <= {CANON_MAX_VERTICES}")
    header = b"%d %d " % (g.n, g.m)
    adj = g.adjacency()
    if g.m == g.n - 1 and g.is_connected():
        return header + b"T" + _canon_tree(g.n, adj)
    bits, _ = _canon_general(g.n, g.edges, adj)
    return header + b"G" + bits.to_bytes((g.n * g.n + 7) // 8, "big")


def canonical_form(g: MolGraph) -> tuple[bytes, MolGraph]:
    """Code plus a canonically relabeled copy (labels follow the bit code)."""
    code = canonical_code(g)
    _, labeling = _canon_general(g.n, g.edges, g.adjacency())
    return code, g.relabeled(labeling)
