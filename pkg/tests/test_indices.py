import math
import random

from hypothesis import given, settings, strategies as st

from somborcg.enumeration import random_chemical_graph
from somborcg.graph import EdgeTypeVector, MolGraph, edge_type_vector
from somborcg.indices import (
    COMPARISON_KINDS,
    IndexKind,
    comparison_indices,
    index_from_edge_vector,
    index_value,
    reduced_sombor,
    sombor,
)

from _oracles import brute_index

K2 = MolGraph(2, ((0, 1),))


def path(n):
    return MolGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n):
    return MolGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def test_sombor_examples():
    assert math.isclose(sombor(K2), math.sqrt(2), abs_tol=1e-12)
    for n in (5, 9, 14):
        assert math.isclose(sombor(cycle(n)), 2 * math.sqrt(2) * n, abs_tol=1e-9)
    for n in (9, 12):
        assert abs(sombor(path(n)) - (2 * math.sqrt(2) * n - 4.013145419)) < 1e-6


def test_reduced_sombor_examples():
    assert reduced_sombor(K2) == 0.0
    assert abs(reduced_sombor(path(8)) - 9.0710) < 5e-4
    # two adjacent degree-4 vertices carrying six pendants
    g = MolGraph(8, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)))
    assert abs(reduced_sombor(g) - 22.2426) < 5e-4


def test_index_from_vector_closed_forms():
    # four (1,2) edges, four (2,4) edges, rest (2,2)
    for n in (9, 15, 40):
        counts = [0] * 10
        counts[1], counts[6], counts[4] = 4, 4, n - 9
        value = index_from_edge_vector(EdgeTypeVector(tuple(counts)), IndexKind.SO)
        expected = 2 * math.sqrt(2) * n + 12 * math.sqrt(5) - 18 * math.sqrt(2)
        assert abs(value - expected) < 1e-9
        assert abs(expected - (2 * math.sqrt(2) * n + 1.376971607)) < 1e-6
    # five (1,2), five (2,3), two (3,3), rest (2,2)
    for n in (13, 21):
        counts = [0] * 10
        counts[1], counts[5], counts[7], counts[4] = 5, 5, 2, n - 13
        value = index_from_edge_vector(EdgeTypeVector(tuple(counts)), IndexKind.SO_RED)
        expected = math.sqrt(2) * n + 5 + 5 * math.sqrt(5) - 9 * math.sqrt(2)
        assert abs(value - expected) < 1e-9


def test_all_zero_vector_is_zero():
    zero = EdgeTypeVector((0,) * 10)
    for kind in IndexKind:
        assert index_from_edge_vector(zero, kind) == 0.0


def test_comparison_indices_k2():
    values = comparison_indices(K2)
    assert values[IndexKind.M1] == 2
    assert values[IndexKind.M2] == 1
    assert values[IndexKind.F] == 2
    assert math.isclose(values[IndexKind.RANDIC], 1.0)
    assert math.isclose(values[IndexKind.SCI], 1 / math.sqrt(2))
    assert values[IndexKind.SDD] == 2


def test_comparison_indices_cycle():
    n = 9
    values = comparison_indices(cycle(n))
    assert values[IndexKind.M1] == 4 * n
    assert values[IndexKind.M2] == 4 * n
    assert math.isclose(values[IndexKind.RANDIC], n / 2)
    assert values[IndexKind.SDD] == 2 * n


def test_p4_first_and_second_zagreb_against_definitions():
    # oracle: evaluate the vertex/edge definitions directly
    g = path(4)
    deg = g.degrees()
    m1 = sum(d * d for d in deg)
    m2 = sum(deg[u] * deg[v] for u, v in g.edges)
    assert m1 == 10 and m2 == 8
    values = comparison_indices(g)
    assert values[IndexKind.M1] == m1
    assert values[IndexKind.M2] == m2


def test_forgotten_index_matches_cubed_degrees():
    rng = random.Random(3)
    for _ in range(20):
        g = random_chemical_graph(rng, rng.randint(4, 12), rng.randint(0, 3))
        f_vertex = sum(d ** 3 for d in g.degrees())
        assert math.isclose(index_value(g, IndexKind.F), f_vertex, abs_tol=1e-9)


@given(st.integers(0, 100_000), st.integers(4, 12), st.integers(0, 3))
@settings(max_examples=200, deadline=None)
def test_edge_vector_route_equals_per_edge_route(seed, n, c):
    g = random_chemical_graph(random.Random(seed), n, c)
    etv = edge_type_vector(g)
    for kind in (IndexKind.SO, IndexKind.SO_RED) + COMPARISON_KINDS:
        direct = index_value(g, kind)
        via_vector = index_from_edge_vector(etv, kind)
        assert abs(direct - via_vector) < 1e-9
        assert abs(direct - brute_index(g, kind.edge_weight)) < 1e-9


@given(st.integers(0, 100_000), st.integers(4, 12), st.integers(0, 3))
@settings(max_examples=100, deadline=None)
def test_sombor_dominates_reduced(seed, n, c):
    g = random_chemical_graph(random.Random(seed), n, c)
    assert sombor(g) > reduced_sombor(g)  # strict whenever there is an edge


@given(st.integers(0, 100_000), st.integers(4, 12))
@settings(max_examples=100, deadline=None)
def test_isomorphism_invariance(seed, n):
    rng = random.Random(seed)
    g = random_chemical_graph(rng, n, rng.randint(0, 3))
    perm = list(range(n))
    rng.shuffle(perm)
    h = g.relabeled(perm)
    assert abs(sombor(g) - sombor(h)) < 1e-9
    assert abs(reduced_sombor(g) - reduced_sombor(h)) < 1e-9


@given(st.integers(0, 100_000), st.integers(4, 12))
@settings(max_examples=100, deadline=None)
def test_monotone_edge_addition(seed, n):
    rng = random.Random(seed)
    g = random_chemical_graph(rng, n, rng.randint(0, 2))
    present = set(g.edges)
    candidates = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in present
    ]
    if not candidates:
        return
    u, v = rng.choice(candidates)
    assert sombor(g.with_edge(u, v)) > sombor(g)
