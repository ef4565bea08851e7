import itertools
import random

import pytest
from hypothesis import given

from conftest import graphs
from polarkoszul.errors import PreconditionError
from polarkoszul.graphs import (
    SimpleGraph,
    complete_graph,
    connected_components,
    cycle_graph,
    edge_ideal,
    enumerate_trees,
    format_graph,
    friendly_independent_set,
    gamma_graph,
    graph_id,
    graph_predicates,
    is_connected,
    is_independent,
    is_leaf_order,
    is_maximal_independent,
    iter_connected_graphs,
    maximal_cliques,
    maximal_independent_sets,
    parse_graph,
    path_graph,
    random_tree,
    spanning_tree_leaf_order,
    whisker,
    whisker_ideal,
)
from polarkoszul.monomials import parse_monomial

FIG1 = SimpleGraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 2)])
TWO_K2 = SimpleGraph.from_edges(4, [(1, 2), (3, 4)])


def brute_mis(G):
    out = []
    for r in range(1, G.n + 1):
        for S in itertools.combinations(G.vertices, r):
            if is_independent(G, S) and all(not is_independent(G, S + (v,)) for v in G.vertices if v not in S):
                out.append(S)
    return sorted(out)


# -- whisker and edge ideals -----------------------------------------------------


def test_whisker_of_edge():
    W = whisker(path_graph(2)).graph
    assert W.n == 4 and set(W.edges) == {(1, 2), (1, 3), (2, 4)}


def test_whisker_of_figure_one_graph():
    W = whisker(FIG1).graph
    assert W.n == 8 and len(W.edges) == 8


def test_whisker_of_single_vertex():
    assert set(whisker(SimpleGraph(1)).graph.edges) == {(1, 2)}


@given(graphs())
def test_whisker_shape(G):
    W = whisker(G).graph
    assert W.n == 2 * G.n
    assert len(W.edges) == len(G.edges) + G.n
    assert all(W.degree(G.n + i) == 1 for i in G.vertices)


def test_edge_ideal_k3():
    I = edge_ideal(complete_graph(3))
    sp = I.space
    assert set(I.generators) == {parse_monomial(t, sp) for t in ["x1*x2", "x1*x3", "x2*x3"]}


def test_whisker_ideal_p2():
    I = whisker_ideal(path_graph(2))
    assert I.space.labels == ("x1", "x2", "y1", "y2")
    assert set(I.generators) == {parse_monomial(t, I.space) for t in ["x1*x2", "x1*y1", "x2*y2"]}


def test_edge_ideal_of_edgeless_graph_is_zero():
    assert edge_ideal(SimpleGraph(3)).is_zero()


# -- predicates ------------------------------------------------------------------


def test_predicates():
    assert graph_predicates(complete_graph(3)) == {"connected": True, "bipartite": False}
    assert graph_predicates(cycle_graph(4)) == {"connected": True, "bipartite": True}
    assert graph_predicates(TWO_K2) == {"connected": False, "bipartite": True}


# -- independent sets and cliques ------------------------------------------------


def test_maximal_independent_sets_examples():
    assert maximal_independent_sets(complete_graph(3)) == [(1,), (2,), (3,)]
    assert maximal_independent_sets(path_graph(3)) == [(1, 3), (2,)]
    assert maximal_independent_sets(path_graph(4)) == [(1, 3), (1, 4), (2, 4)]


@given(graphs(max_n=6))
def test_maximal_independent_sets_match_brute_force(G):
    assert sorted(maximal_independent_sets(G)) == brute_mis(G)


@given(graphs(max_n=6))
def test_maximal_independent_sets_dominate(G):
    for S in maximal_independent_sets(G):
        closed = set(S) | {w for v in S for w in G.neighbors(v)}
        assert closed == set(G.vertices)


def test_maximal_cliques_examples():
    assert maximal_cliques(complete_graph(3)) == [(1, 2, 3)]
    assert maximal_cliques(path_graph(3)) == [(1, 2), (2, 3)]
    assert maximal_cliques(FIG1) == [(1, 2), (2, 3, 4)]


@given(graphs(max_n=6))
def test_maximal_cliques_are_independent_sets_of_complement(G):
    comp = SimpleGraph.from_edges(G.n, [e for e in itertools.combinations(G.vertices, 2) if e not in G.edges])
    assert sorted(maximal_cliques(G)) == sorted(maximal_independent_sets(comp))


# -- Gamma and friendly sets -----------------------------------------------------


def test_gamma_on_path():
    L = path_graph(4)
    g = gamma_graph(L, (1, 3))
    assert set(g.edges) == {(1, 3)} and g.is_connected()
    g = gamma_graph(L, (1, 4))
    assert not g.edges and not g.is_connected()


def test_gamma_singleton():
    g = gamma_graph(complete_graph(3), (1,))
    assert g.vertices == (1,) and not g.edges and g.is_connected()


def test_gamma_requires_independent_set():
    with pytest.raises(PreconditionError):
        gamma_graph(path_graph(3), (1, 2))


@given(graphs(max_n=6, connected=True))
def test_gamma_edges_within_s(G):
    for S in maximal_independent_sets(G):
        g = gamma_graph(G, S)
        assert all(a in S and b in S for a, b in g.edges)


def test_friendly_examples():
    assert friendly_independent_set(path_graph(4)) == (1, 3)
    assert friendly_independent_set(complete_graph(3)) == (1,)
    S = friendly_independent_set(FIG1)
    assert S == (1, 3)
    assert is_maximal_independent(FIG1, S) and gamma_graph(FIG1, S).is_connected()


def test_friendly_needs_connected_graph():
    with pytest.raises(PreconditionError):
        friendly_independent_set(TWO_K2)


@given(graphs(max_n=7, connected=True))
def test_friendly_set_is_verified(G):
    S = friendly_independent_set(G)
    assert is_independent(G, S)
    assert is_maximal_independent(G, S)
    assert gamma_graph(G, S).is_connected()


def test_friendly_exhaustive_n5():
    for G in iter_connected_graphs(5):
        S = friendly_independent_set(G)
        assert is_maximal_independent(G, S) and gamma_graph(G, S).is_connected()


# -- leaf orders -----------------------------------------------------------------


def test_leaf_order_p3():
    T = spanning_tree_leaf_order(path_graph(3), (1, 3))
    assert T.vertices == (1, 3)
    assert T.edges == ((1, 2),)
    assert T.witnesses == (2,)
    assert T.original_edges() == [(1, 3)]


def _subdivided(tree_edges, s):
    """Graph whose Gamma on {1..s} is the given tree: one private witness per edge."""
    edges = []
    for t, (a, b) in enumerate(tree_edges):
        v = s + 1 + t
        edges += [(a, v), (b, v)]
    return SimpleGraph.from_edges(s + len(tree_edges), edges)


def test_leaf_order_six_vertex_tree():
    tree = [(1, 2), (2, 3), (2, 4), (4, 5), (4, 6)]
    G = _subdivided(tree, 6)
    T = spanning_tree_leaf_order(G, range(1, 7))
    assert T.vertices == (1, 2, 3, 4, 5, 6)
    assert list(T.edges) == [(1, 2), (2, 3), (2, 4), (4, 5), (4, 6)]
    assert T.witnesses == (7, 8, 9, 10, 11)
    assert is_leaf_order(T.edges)


def test_leaf_order_singleton():
    T = spanning_tree_leaf_order(complete_graph(3), (1,))
    assert T.edges == () and T.vertices == (1,)


def test_leaf_order_needs_connected_gamma():
    with pytest.raises(PreconditionError):
        spanning_tree_leaf_order(path_graph(4), (1, 4))


@given(graphs(max_n=7, connected=True))
def test_leaf_order_properties(G):
    S = friendly_independent_set(G)
    T = spanning_tree_leaf_order(G, S)
    assert sorted(T.vertices) == list(S)
    assert len(T.edges) == len(S) - 1
    assert is_leaf_order(T.edges)
    for (a, b), v in zip(T.original_edges(), T.witnesses):
        assert v not in S and a in G.neighbors(v) and b in G.neighbors(v)


# -- enumeration -----------------------------------------------------------------


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125), (6, 1296)])
def test_cayley_counts(n, count):
    trees = enumerate_trees(n)
    assert len(trees) == count
    assert len({frozenset(T.edges) for T in trees}) == count
    assert all(is_connected(T) and len(T.edges) == n - 1 for T in trees)


def test_enumerate_trees_range():
    with pytest.raises(PreconditionError):
        enumerate_trees(0)


def test_connected_graph_counts():
    # labelled connected graphs on n vertices (OEIS A001187)
    assert [sum(1 for _ in iter_connected_graphs(n)) for n in range(1, 6)] == [1, 1, 4, 38, 728]


def test_random_tree_is_tree():
    rng = random.Random(3)
    for n in range(1, 9):
        T = random_tree(n, rng)
        assert is_connected(T) and len(T.edges) == n - 1


def test_components():
    assert connected_components(TWO_K2) == [[1, 2], [3, 4]]


@given(graphs())
def test_graph_text_roundtrip(G):
    assert parse_graph(format_graph(G)) == G
    assert graph_id(parse_graph(format_graph(G))) == graph_id(G)
