import json

import pytest
from hypothesis import given, settings

from conftest import graphs
from polarkoszul.errors import PreconditionError
from polarkoszul.graphs import SimpleGraph, complete_graph, cycle_graph, iter_connected_graphs, path_graph, whisker_ideal
from polarkoszul.koszul import (
    QUOTIENT,
    boundary,
    connecting_boundary,
    depth,
    homology_class_nonzero,
    is_cycle,
    quotient_homology_at,
)
from polarkoszul.monomials import ideal_power
from polarkoszul.whisker import (
    build_certificate_cycles,
    certificate,
    distinguished_coefficient,
    verify_certificate,
)

TWO_K2 = SimpleGraph.from_edges(4, [(1, 2), (3, 4)])


def mono(n, **exps):
    """Exponent vector over x1..xn, y1..yn from keywords like x1=1, y2=1."""
    u = [0] * (2 * n)
    for name, e in exps.items():
        i = int(name[1:])
        u[i - 1 if name[0] == "x" else n + i - 1] = e
    return tuple(u)


# -- the cycles ----------------------------------------------------------------------


def test_p3_cycles():
    cyc = build_certificate_cycles(path_graph(3))
    assert cyc.S == (1, 3)
    (z1,) = cyc.edge_cycles
    # x1x2 e3 - x3x2 e1
    assert z1.terms == {(mono(3, x1=1, x2=1), (2,)): 1, (mono(3, x2=1, x3=1), (0,)): -1}
    (zw,) = cyc.whisker_cycles
    # x2x1 f2 - x2y2 e1
    assert zw.terms == {(mono(3, x1=1, x2=1), (4,)): 1, (mono(3, x2=1, y2=1), (0,)): -1}
    # x1x3 e2 ^ f1 ^ f3
    assert cyc.top_cycle.module.kind == QUOTIENT
    assert cyc.top_cycle.terms == {(mono(3, x1=1, x3=1), (1, 3, 5)): 1}


def test_k3_cycles():
    cyc = build_certificate_cycles(complete_graph(3))
    assert cyc.S == (1,) and cyc.edge_cycles == []
    assert cyc.anchors == (1, 1)
    assert cyc.top_cycle.terms == {(mono(3, x1=1), (1, 2, 3)): 1}


def test_single_vertex_cycles():
    cyc = build_certificate_cycles(SimpleGraph(1))
    assert cyc.primed == []
    assert cyc.top_cycle.terms == {((1, 0), (1,)): 1}


@given(graphs(max_n=5, connected=True))
def test_cycles_are_cycles_with_coefficients_in_the_ideal(G):
    cyc = build_certificate_cycles(G)
    I = whisker_ideal(G)
    assert len(cyc.edge_cycles) == len(cyc.S) - 1
    assert len(cyc.whisker_cycles) == G.n - len(cyc.S)
    for z in cyc.primed:
        assert z.homological_degree() == 1
        assert boundary(z).is_zero()
        assert all(I.contains(u) for (u, _) in z.terms)
    assert is_cycle(cyc.top_cycle)
    assert homology_class_nonzero(cyc.top_cycle)


@given(graphs(max_n=5, connected=True))
def test_distinguished_term_present(G):
    assert distinguished_coefficient(build_certificate_cycles(G)) != 0


def test_disconnected_graph_rejected():
    with pytest.raises(PreconditionError):
        build_certificate_cycles(TWO_K2)
    for k in (1, 4):
        with pytest.raises(PreconditionError):
            certificate(TWO_K2, k)


def test_power_out_of_range():
    for k in (0, 4):
        with pytest.raises(PreconditionError):
            certificate(path_graph(3), k)


# -- certificates ----------------------------------------------------------------------


def test_p3_first_power_is_connecting_image():
    G = path_graph(3)
    cert = certificate(G, 1)
    top = build_certificate_cycles(G).top_cycle
    assert cert.element.terms == connecting_boundary(top).terms
    assert verify_certificate(cert) and cert.implied_bound == 3


def test_k3_square():
    cert = certificate(complete_graph(3), 2)
    assert verify_certificate(cert)
    assert cert.implied_bound == 2
    assert depth(ideal_power(whisker_ideal(complete_graph(3)), 2)).depth == 0


def test_c3_first_power():
    cert = certificate(cycle_graph(3), 1)
    assert verify_certificate(cert) and cert.implied_bound == 3
    assert depth(whisker_ideal(cycle_graph(3))).depth == 3


@given(graphs(max_n=4, connected=True))
@settings(max_examples=25)
def test_certificate_is_cycle_in_the_power(G):
    for k in range(1, G.n + 1):
        cert = certificate(G, k)
        z = cert.element
        assert z.homological_degree() == G.n + k - 2
        assert boundary(z).is_zero()
        Ik = ideal_power(whisker_ideal(G), k)
        assert all(Ik.contains(u) for (u, _) in z.terms)


@given(graphs(max_n=5, connected=True))
def test_first_power_certificate_always_verifies(G):
    assert verify_certificate(certificate(G, 1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_verified_certificates_bound_the_depth(n):
    for G in iter_connected_graphs(n):
        for k in range(1, n + 1):
            cert = certificate(G, k)
            d = depth(ideal_power(whisker_ideal(G), k)).depth
            assert d <= n - k + 1
            if verify_certificate(cert):
                assert d <= cert.implied_bound


@pytest.mark.parametrize("G,k", [(path_graph(3), 2), (path_graph(3), 3), (cycle_graph(4), 2)])
def test_certificate_is_a_boundary_in_known_cases(G, k):
    # the element is a boundary; the strand at its multidegree carries no homology at all
    cert = certificate(G, k)
    assert not verify_certificate(cert)
    a = cert.element.multidegree()
    Ik = ideal_power(whisker_ideal(G), k)
    assert quotient_homology_at(a, Ik.generators) == {}
    # the depth bound itself still holds
    assert depth(Ik).depth <= G.n - k + 1


def test_certificate_json():
    cert = certificate(complete_graph(3), 2)
    verify_certificate(cert)
    d = json.loads(cert.to_json())
    assert set(d) == {"graph", "S", "tree_edges", "witnesses", "k", "element", "verified", "implied_bound"}
    assert d["S"] == [1] and d["k"] == 2 and d["verified"] is True and d["implied_bound"] == 2
    assert "e[" in d["element"]
