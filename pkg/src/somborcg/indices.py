"""Degree-pair-additive topological indices.

Every index in scope factors through the edge-type vector: the value is
sum over edges of a weight depending only on the endpoint degrees, so it
can be computed either per edge or as a dot product with the m-vector.
"""

from __future__ import annotations

import enum
import math

from .graph import EDGE_SLOTS, EdgeTypeVector, MolGraph


class IndexKind(enum.Enum):
    SO = "so"
    SO_RED = "so_red"
    M1 = "m1"
    M2 = "m2"
    F = "f"
    RANDIC = "randic"
    SCI = "sci"
    SDD = "sdd"

    def edge_weight(self, i: int, j: int) -> float:
        """Contribution of one edge whose endpoints have degrees i and j."""
        if self is IndexKind.SO:
            return math.hypot(i, j)
        if self is IndexKind.SO_RED:
            return math.hypot(i - 1, j - 1)
        if self is IndexKind.M1:
            return float(i + j)
        if self is IndexKind.M2:
            return float(i * j)
        if self is IndexKind.F:
            return float(i * i + j * j)
        if self is IndexKind.RANDIC:
            return 1.0 / math.sqrt(i * j)
        if self is IndexKind.SCI:
            return 1.0 / math.sqrt(i + j)
        return i / j + j / i  # SDD

    @classmethod
    def from_name(cls, name: str) -> "IndexKind":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown index kind {name!r}") from None


COMPARISON_KINDS = (
    IndexKind.M1, IndexKind.M2, IndexKind.F,
    IndexKind.RANDIC, IndexKind.SCI, IndexKind.SDD,
)

# weight vectors over EDGE_SLOTS, one per kind (chemical degree range only)
_WEIGHTS: dict[IndexKind, tuple[float, ...]] = {
    kind: tuple(kind.edge_weight(i, j) for i, j in EDGE_SLOTS) for kind in IndexKind
}


def index_value(g: MolGraph, kind: IndexKind) -> float:
    """Evaluate an index per edge; works for any simple graph."""
    deg = g.degrees()
    weight = kind.edge_weight
    return math.fsum(weight(deg[u], deg[v]) for u, v in g.edges)


def sombor(g: MolGraph) -> float:
    """Sum over edges of sqrt(d(u)^2 + d(v)^2)."""
    return index_value(g, IndexKind.SO)


def reduced_sombor(g: MolGraph) -> float:
    """Sum over edges of sqrt((d(u)-1)^2 + (d(v)-1)^2)."""
    return index_value(g, IndexKind.SO_RED)


def index_from_edge_vector(etv: EdgeTypeVector, kind: IndexKind) -> float:
    """Dot product of the ten edge-type counts with the kind's weights."""
    w = _WEIGHTS[kind]
    return math.fsum(c * w[i] for i, c in enumerate(etv.counts) if c)


def comparison_indices(g: MolGraph) -> dict[IndexKind, float]:
    """The six comparison indices (M1, M2, F, Randic, SCI, SDD)."""
    return {kind: index_value(g, kind) for kind in COMPARISON_KINDS}
