import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from somborcg.enumeration import enumerate_population, random_chemical_graph
from somborcg.errors import (
    DisconnectedError,
    DuplicateEdgeError,
    MalformedInputError,
    MaxDegreeExceededError,
    SelfLoopError,
    VertexOutOfRangeError,
)
from somborcg.graph import (
    MolGraph,
    canonical_code,
    cyclomatic_number,
    degree_distribution,
    edge_type_vector,
    parse_graph,
    write_graph,
)

from _oracles import isomorphic


def path(n):
    return MolGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n):
    return MolGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(n):
    return MolGraph(n, tuple((0, i) for i in range(1, n)))


# -- parsing ---------------------------------------------------------------

def test_parse_k2():
    g = parse_graph("2 1\n0 1")
    assert g.n == 2 and g.edges == ((0, 1),)


def test_parse_p8_with_comments():
    text = "# a path\n8 7\n" + "\n".join(f"{i} {i+1}" for i in range(7))
    g = parse_graph(text)
    assert g == path(8)


def test_parse_chemical_flag_rejects_degree_5():
    text = "6 5\n0 1\n0 2\n0 3\n0 4\n0 5"
    assert parse_graph(text).max_degree() == 5
    with pytest.raises(MaxDegreeExceededError):
        parse_graph(text, chemical=True)


@pytest.mark.parametrize(
    "text,err",
    [
        ("", MalformedInputError),
        ("2", MalformedInputError),
        ("x y\n", MalformedInputError),
        ("2 2\n0 1", MalformedInputError),
        ("2 1\n0 1\n0 1", MalformedInputError),
        ("2 1\n1 0", MalformedInputError),       # u < v required
        ("2 1\n0 0", SelfLoopError),
        ("3 2\n0 1\n0 1", DuplicateEdgeError),
        ("2 1\n0 2", VertexOutOfRangeError),
    ],
)
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_graph(text)


def test_write_then_parse_roundtrip():
    g = MolGraph(5, ((3, 4), (0, 2), (1, 2), (2, 3)))
    assert parse_graph(write_graph(g)) == g
    assert write_graph(g).splitlines()[0] == "5 4"


def test_parse_disconnected_flag():
    with pytest.raises(DisconnectedError):
        parse_graph("4 2\n0 1\n2 3", connected=True)


# -- degree statistics ------------------------------------------------------

def test_degree_distribution_examples():
    assert degree_distribution(cycle(7)).as_tuple() == (0, 7, 0, 0)
    assert degree_distribution(path(8)).as_tuple() == (2, 6, 0, 0)
    assert degree_distribution(star(5)).as_tuple() == (4, 0, 0, 1)


def test_edge_type_vector_examples():
    etv = edge_type_vector(path(10))
    assert etv.m(1, 2) == 2 and etv.m(2, 2) == 7 and etv.total() == 9
    etv = edge_type_vector(cycle(6))
    assert etv.m(2, 2) == 6 and etv.total() == 6
    etv = edge_type_vector(star(5))
    assert etv.m(1, 4) == 4 and etv.total() == 4


def test_edge_type_vector_rejects_degree_5():
    with pytest.raises(MaxDegreeExceededError):
        edge_type_vector(star(6))


def test_cyclomatic_examples():
    assert cyclomatic_number(path(8)) == 0
    assert cyclomatic_number(cycle(5)) == 1
    k4 = MolGraph(4, tuple(itertools.combinations(range(4), 2)))
    assert cyclomatic_number(k4) == 3
    with pytest.raises(DisconnectedError):
        cyclomatic_number(MolGraph(4, ((0, 1), (2, 3))))


@given(st.integers(0, 10_000), st.integers(4, 12), st.integers(0, 3))
@settings(max_examples=150, deadline=None)
def test_counting_identities_random(seed, n, c):
    g = random_chemical_graph(random.Random(seed), n, c)
    deg = g.degrees()
    dd = degree_distribution(g)
    assert sum(dd.as_tuple()) == g.n
    assert dd.n1 + 2 * dd.n2 + 3 * dd.n3 + 4 * dd.n4 == 2 * g.m
    etv = edge_type_vector(g)
    assert etv.total() == g.m
    for k in range(1, 5):
        incident = sum(
            etv.m(k, j) for j in range(1, 5) if j != k
        ) + 2 * etv.m(k, k)
        assert incident == k * dd.as_tuple()[k - 1]
    if c == 0:
        assert dd.n1 == dd.n3 + 2 * dd.n4 + 2
        assert dd.n2 == g.n - 2 * dd.n3 - 3 * dd.n4 - 2


# -- canonical codes ---------------------------------------------------------

@given(st.integers(0, 10_000), st.integers(4, 10), st.integers(0, 3))
@settings(max_examples=120, deadline=None)
def test_canonical_code_relabeling_invariant(seed, n, c):
    rng = random.Random(seed)
    g = random_chemical_graph(rng, n, c)
    perm = list(range(n))
    rng.shuffle(perm)
    assert canonical_code(g) == canonical_code(g.relabeled(perm))


def test_p4_vs_star_distinct():
    assert canonical_code(path(4)) != canonical_code(star(4))


def test_octane_trees_all_distinct():
    pop = enumerate_population(8, 0)
    assert len(set(pop.codes)) == 18


def test_code_agrees_with_isomorphism_oracle_small():
    # exhaustive pairwise comparison across whole populations
    for n, c in [(5, 0), (6, 0), (6, 1), (6, 2), (6, 3), (7, 1), (7, 2)]:
        pop = enumerate_population(n, c)
        for g1, c1 in zip(pop.graphs, pop.codes):
            for g2, c2 in zip(pop.graphs, pop.codes):
                assert (c1 == c2) == isomorphic(g1, g2)


def test_code_agrees_with_oracle_on_relabelings_n8():
    rng = random.Random(7)
    pop = enumerate_population(8, 2)
    sample = rng.sample(list(pop.graphs), 12)
    for g in sample:
        perm = list(range(8))
        rng.shuffle(perm)
        h = g.relabeled(perm)
        assert isomorphic(g, h)
        assert canonical_code(g) == canonical_code(h)


def test_tree_and_cyclic_code_routes_are_consistent():
    # the dedicated tree encoding must induce the same equivalence classes
    # as the general refinement/backtracking route
    from somborcg.graph import _canon_general

    pop = enumerate_population(8, 0)
    general = [
        _canon_general(g.n, g.edges, g.adjacency())[0] for g in pop.graphs
    ]
    assert len(set(general)) == len(set(pop.codes)) == 18


def test_molgraph_validation():
    with pytest.raises(SelfLoopError):
        MolGraph(3, ((0, 0),))
    with pytest.raises(DuplicateEdgeError):
        MolGraph(3, ((0, 1), (1, 0)))
    with pytest.raises(VertexOutOfRangeError):
        MolGraph(3, ((0, 3),))
