import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from pendant_trees import (
    Graph,
    GraphError,
    cartesian_product,
    copy_subgraph,
    label,
    min_degree,
    vertex_connectivity,
)
from pendant_trees.families import (
    complete,
    cycle,
    family,
    family_names,
    grid,
    hyper_petersen,
    hypercube,
    parse_family,
    path,
    petersen,
    wheel,
)
from pendant_trees.flow import disjoint_paths, fan, local_connectivity
from pendant_trees.graph import swap_product


def test_graph_rejects_loops_and_foreign_endpoints():
    with pytest.raises(GraphError):
        Graph([1, 2], [(1, 1)])
    with pytest.raises(GraphError):
        Graph([1, 2], [(1, 3)])


def test_multi_edges_collapse():
    g = Graph([0, 1], [(0, 1), (1, 0)])
    assert g.num_edges == 1


def test_p2_square_is_c4():
    g = cartesian_product(path(2), path(2))
    assert len(g) == 4 and g.num_edges == 4
    assert all(g.degree(v) == 2 for v in g)


@pytest.mark.parametrize("n", range(1, 6))
def test_hypercube_edge_count(n):
    q = hypercube(n)
    assert len(q) == 2**n
    assert q.num_edges == n * 2 ** (n - 1)


def test_product_edge_count_k3_p3():
    g = cartesian_product(complete(3), path(3))
    assert g.num_edges == 3 * 2 + 3 * 3 == 15


def test_empty_factor_rejected():
    with pytest.raises(GraphError):
        cartesian_product(Graph([]), path(2))


def test_named_families():
    p = petersen()
    assert (len(p), p.num_edges) == (10, 15)
    assert all(p.degree(v) == 3 for v in p)
    hp4 = hyper_petersen(4)
    assert len(hp4) == 20 and all(hp4.degree(v) == 4 for v in hp4)
    g = grid(3, 3)
    assert (len(g), g.num_edges) == (9, 12)
    assert hyper_petersen(3).edge_set == petersen().edge_set


def test_family_specs():
    assert len(parse_family("torus:4,5")) == 20
    assert parse_family("petersen").num_edges == 15
    assert len(family("mesh", 2, 3, 2)) == 12
    assert len(parse_family("generalized_hypercube:3,3")) == 9
    for bad in ("cycle:2", "hyper_petersen:2", "nosuch", "grid:3", "cycle:x"):
        with pytest.raises(GraphError):
            parse_family(bad)
    assert "torus" in family_names()


def test_min_degree_examples():
    assert min_degree(wheel(5)) == 3
    assert min_degree(cartesian_product(cycle(3), cycle(3))) == 4
    assert min_degree(path(7)) == 1
    assert min_degree(Graph([1, 2, 3])) == 0


def test_connectivity_examples():
    assert vertex_connectivity(petersen()) == 3
    assert vertex_connectivity(cycle(5)) == 2
    assert vertex_connectivity(complete(5)) == 4
    assert vertex_connectivity(Graph([0])) == 0
    assert vertex_connectivity(Graph([0, 1, 2], [(0, 1)])) == 0


def test_copy_subgraphs():
    prod = cartesian_product(path(3), cycle(4))
    h0 = copy_subgraph(prod, "G", 0)
    assert nx.is_isomorphic(h0.graph.to_networkx(), cycle(4).to_networkx())
    assert all(h0.graph.has_edge(h0.vertex_map[a], h0.vertex_map[b]) for a, b in cycle(4).edges())
    assert h0.corresponding((1, 2)) == (0, 2)
    g1 = copy_subgraph(prod, "H", 1)
    assert len(g1.graph) == 3 and g1.graph.num_edges == 2
    with pytest.raises(GraphError):
        copy_subgraph(prod, "G", 7)
    with pytest.raises(GraphError):
        copy_subgraph(prod, "X", 0)


def test_labels_flatten():
    assert label(((0, 1), 2)) == "(0,1,2)"
    assert label(5) == "5"


SMALL = [path(2), path(3), path(4), cycle(3), cycle(4), cycle(5), complete(4), wheel(4), complete(2)]


@pytest.mark.parametrize("g,h", list(itertools.product(SMALL, SMALL))[::3])
def test_product_commutes_up_to_swap(g, h):
    p = cartesian_product(g, h)
    q, swap = swap_product(p)
    assert len(p) == len(q) and p.num_edges == q.num_edges
    assert {frozenset(swap[v] for v in e) for e in p.edge_set} == set(q.edge_set)


def test_copies_are_isomorphic_to_factor():
    g, h = wheel(4), cycle(5)
    p = cartesian_product(g, h)
    for u in g:
        c = copy_subgraph(p, "G", u)
        mapped = {frozenset(c.vertex_map[x] for x in e) for e in h.edge_set}
        assert mapped == set(c.graph.edge_set)


@st.composite
def connected_graphs(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    edges = [(i, draw(st.integers(0, i - 1))) for i in range(1, n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12))
    edges += [(a, b) for a, b in extra if a != b]
    return Graph(range(n), edges)


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_connectivity_matches_networkx(g):
    assert vertex_connectivity(g) == nx.node_connectivity(g.to_networkx())
    assert vertex_connectivity(g) <= min_degree(g)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(), st.data())
def test_disjoint_paths_are_valid(g, data):
    x = data.draw(st.sampled_from(g.vertices))
    y = data.draw(st.sampled_from([v for v in g.vertices if v != x]))
    paths = disjoint_paths(g, x, y)
    assert len(paths) == local_connectivity(g, x, y)
    if not g.has_edge(x, y):
        assert len(paths) == nx.node_connectivity(g.to_networkx(), x, y)
    inner = [set(p[1:-1]) for p in paths]
    for p in paths:
        assert p[0] == x and p[-1] == y
        assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
    for a, b in itertools.combinations(inner, 2):
        assert not a & b


def test_fan_shares_only_source():
    g = petersen()
    paths = fan(g, 0, [3, 6, 9])
    assert len(paths) == 3
    assert {p[-1] for p in paths} == {3, 6, 9}
    rest = [set(p[1:]) for p in paths]
    for a, b in itertools.combinations(rest, 2):
        assert not a & b
