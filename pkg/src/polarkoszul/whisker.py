"""Explicit Koszul cycles certifying depth(S*/I(G*)^k) <= n - k + 1.

For a connected G pick a friendly maximal independent set S, a leaf-ordered
spanning tree of Gamma_S(G) and

    z_j = x_{i_j} x_{v_j} e_{j+1} - x_{j+1} x_{v_j} e_{i_j}   (tree edges)
    z_k = x_k x_{j_k} f_k - x_k y_k e_{j_k}                   (k outside S)
    c   = prod_{i in S} x_i  e_{s+1} ^ ... ^ e_n ^ f_1 ^ ... ^ f_s

with vertices relabelled so that S comes first in tree-label order.  The
candidate for the k-th power is d(c) ^ z'_1 ^ ... ^ z'_{k-1}; a nonzero class
in H_{n+k-2}(x, y; I(G*)^k) gives H_{n+k-1}(S*/I(G*)^k) != 0.

The construction is not always successful: for P3 with k = 2 or C4 with
k = 2 the element is a boundary (verify_certificate reports False).  The
depth bound itself is checked separately by direct computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .errors import PreconditionError
from .graphs import (
    LeafOrderedTree,
    SimpleGraph,
    friendly_independent_set,
    graph_id,
    is_connected,
    spanning_tree_leaf_order,
    whisker_ideal,
)
from .koszul import (
    DEFAULT_FIELD,
    CoefficientModule,
    FieldConfig,
    KoszulElement,
    boundary,
    connecting_boundary,
    format_element,
    homology_class_nonzero,
    is_cycle,
    lift_to_free,
    wedge_all,
)
from .monomials import ideal_power


@dataclass
class CertificateCycles:
    graph: SimpleGraph
    tree: LeafOrderedTree
    outside: tuple  # vertices not in S, ascending (relabelled s+1..n)
    anchors: tuple  # j_k for each vertex in ``outside``
    edge_cycles: list
    whisker_cycles: list
    top_cycle: KoszulElement

    @property
    def S(self) -> tuple:
        return self.tree.vertices

    @property
    def primed(self) -> list:
        """z'_1, ..., z'_{n-1}: edge cycles first, then whisker cycles."""
        return self.edge_cycles + self.whisker_cycles


@dataclass
class WhiskerCertificate:
    cycles: CertificateCycles
    k: int
    element: KoszulElement
    field: FieldConfig = DEFAULT_FIELD
    verified: Optional[bool] = None

    @property
    def graph(self) -> SimpleGraph:
        return self.cycles.graph

    @property
    def implied_bound(self) -> int:
        n = self.graph.n
        return 2 * n - (n + self.k - 1)

    def as_dict(self) -> dict:
        return {
            "graph": graph_id(self.graph),
            "S": list(self.cycles.S),
            "tree_edges": [list(e) for e in self.cycles.tree.original_edges()],
            "witnesses": list(self.cycles.tree.witnesses),
            "k": self.k,
            "element": format_element(self.element),
            "verified": self.verified,
            "implied_bound": self.implied_bound if self.verified else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)


def _x(n, v):
    return v - 1


def _y(n, v):
    return n + v - 1


def _mono(N, *indices):
    u = [0] * N
    for t in indices:
        u[t] += 1
    return tuple(u)


def build_certificate_cycles(G: SimpleGraph) -> CertificateCycles:
    if G.n < 1 or not is_connected(G):
        raise PreconditionError("whisker certificates need a connected graph with n >= 1")
    n, N = G.n, 2 * G.n
    I = whisker_ideal(G)
    ideal_mod = CoefficientModule.of_ideal(I)
    S = friendly_independent_set(G)
    tree = spanning_tree_leaf_order(G, S)
    order = tree.vertices  # order[t - 1] carries tree label t

    edge_cycles = []
    for (a, b), v in zip(tree.edges, tree.witnesses):
        A, B = order[a - 1], order[b - 1]
        z = KoszulElement.term(ideal_mod, _mono(N, _x(n, A), _x(n, v)), [_x(n, B)])
        z = z - KoszulElement.term(ideal_mod, _mono(N, _x(n, B), _x(n, v)), [_x(n, A)])
        edge_cycles.append(z)

    in_s = set(S)
    outside = tuple(v for v in G.vertices if v not in in_s)
    anchors = []
    whisker_cycles = []
    for k in outside:
        jk = min(v for v in G.neighbors(k) if v in in_s)
        anchors.append(jk)
        z = KoszulElement.term(ideal_mod, _mono(N, _x(n, k), _x(n, jk)), [_y(n, k)])
        z = z - KoszulElement.term(ideal_mod, _mono(N, _x(n, k), _y(n, k)), [_x(n, jk)])
        whisker_cycles.append(z)

    word = [_x(n, v) for v in outside] + [_y(n, v) for v in order]
    top = KoszulElement.term(
        CoefficientModule.quotient(I), _mono(N, *[_x(n, v) for v in order]), word
    )
    return CertificateCycles(G, tree, outside, tuple(anchors), edge_cycles, whisker_cycles, top)


def distinguished_coefficient(cycles: CertificateCycles) -> int:
    """Coefficient in c ^ z'_1 ^ ... ^ z'_{n-1} of the word with every letter but e_1.

    Here e_1 is the letter of the vertex with tree label 1.
    """
    G = cycles.graph
    n = G.n
    a = wedge_all([lift_to_free(cycles.top_cycle)] + [lift_to_free(z) for z in cycles.primed])
    first = _x(n, cycles.S[0])
    word = tuple(j for j in range(2 * n) if j != first)
    vals = [c for (u, J), c in a.terms.items() if J == word]
    return sum(vals)


def certificate(G: SimpleGraph, k: int, field: FieldConfig = DEFAULT_FIELD) -> WhiskerCertificate:
    """Build z_(k) = d(c) ^ z'_1 ^ ... ^ z'_{k-1} over I(G*)^k.

    The coefficient module is I(G*)^k truncated to the generators dividing
    the multidegree of z_(k); on that strand it agrees with I(G*)^k.
    """
    if not is_connected(G):
        raise PreconditionError("whisker certificates need a connected graph")
    if not 1 <= k <= G.n:
        raise PreconditionError(f"power k = {k} outside 1..{G.n}")
    cycles = build_certificate_cycles(G)
    factors = [lift_to_free(connecting_boundary(cycles.top_cycle))]
    factors += [lift_to_free(z) for z in cycles.primed[: k - 1]]
    prod = wedge_all(factors)
    a = prod.multidegree()
    Ik = ideal_power(whisker_ideal(G), k, bound=a)
    element = prod.with_module(CoefficientModule.of_ideal(Ik))
    if not is_cycle(element, field):
        raise RuntimeError(f"certificate element for {graph_id(G)}, k={k} is not a cycle")
    return WhiskerCertificate(cycles, k, element, field)


def verify_certificate(cert: WhiskerCertificate) -> bool:
    """True iff the certificate's class in H_{n+k-2}(I(G*)^k) is nonzero."""
    ok = (
        cert.element.homological_degree() == cert.graph.n + cert.k - 2
        and boundary(cert.element).is_zero(cert.field.p)
        and homology_class_nonzero(cert.element, cert.field)
    )
    cert.verified = bool(ok)
    return cert.verified
