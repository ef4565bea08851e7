"""Finite simple graphs, whisker graphs and friendly independent sets.

Vertices are 1..n.  Internally neighbourhoods are int bitmasks (bit v set
for vertex v), which keeps the exhaustive sweeps over all labelled graphs
on seven vertices affordable.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional

from .errors import PreconditionError
from .monomials import MonomialIdeal, VariableSpace, minimalize, zero_ideal


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset = field(default=frozenset())

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {e} has an endpoint outside 1..{self.n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "SimpleGraph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adj(self) -> tuple:
        """adj[v] is the neighbourhood bitmask of v (index 0 unused)."""
        a = [0] * (self.n + 1)
        for i, j in self.edges:
            a[i] |= 1 << j
            a[j] |= 1 << i
        return tuple(a)

    @property
    def all_mask(self) -> int:
        return ((1 << (self.n + 1)) - 1) ^ 1

    def neighbors(self, v: int) -> list:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def __str__(self):
        return graph_id(self)


@dataclass(frozen=True)
class WhiskerGraph:
    """G* : the base graph plus a pendant edge {i, n + i} at every vertex i."""

    base: SimpleGraph
    graph: SimpleGraph

    @property
    def n(self) -> int:
        return self.base.n


@dataclass(frozen=True)
class GammaGraph:
    """Gamma_S(G): vertices S, i ~ j when they share a neighbour outside S."""

    vertices: tuple
    edges: frozenset

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        adj = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for w in adj[v] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == len(self.vertices)


@dataclass(frozen=True)
class LeafOrderedTree:
    """Spanning tree of Gamma_S(G) with edges in a leaf order.

    ``vertices[t - 1]`` is the vertex of G carrying tree label t, ``edges``
    lists alpha_1..alpha_{s-1} as tree-label pairs (i_j, j + 1) and
    ``witnesses[j - 1]`` is the vertex v_j outside S adjacent to both ends
    of alpha_j.
    """

    vertices: tuple
    edges: tuple
    witnesses: tuple

    @property
    def s(self) -> int:
        return len(self.vertices)

    def original_edges(self) -> list:
        return [(self.vertices[a - 1], self.vertices[b - 1]) for a, b in self.edges]


# ---------------------------------------------------------------------------
# constructions


def whisker(G: SimpleGraph) -> WhiskerGraph:
    if G.n < 1:
        raise PreconditionError("whisker graph needs at least one vertex")
    edges = set(G.edges) | {(i, G.n + i) for i in G.vertices}
    return WhiskerGraph(G, SimpleGraph(2 * G.n, frozenset(edges)))


def edge_ideal(G: SimpleGraph, space: Optional[VariableSpace] = None) -> MonomialIdeal:
    """I(G) = (x_i x_j : {i, j} in E(G)), vertex v mapped to variable v - 1."""
    if space is None:
        space = VariableSpace.standard(G.n)
    if space.count < G.n:
        raise PreconditionError(f"space has {space.count} variables, graph has {G.n} vertices")
    if not G.edges:
        return zero_ideal(space)
    gens = []
    for i, j in G.edges:
        u = [0] * space.count
        u[i - 1] += 1
        u[j - 1] += 1
        gens.append(tuple(u))
    return minimalize(gens, space)


def whisker_ideal(G: SimpleGraph) -> MonomialIdeal:
    """I(G*) in K[x_1..x_n, y_1..y_n]."""
    return edge_ideal(whisker(G).graph, VariableSpace.whisker(G.n))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise PreconditionError("cycles need at least 3 vertices")
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, itertools.combinations(range(1, n + 1), 2))


# ---------------------------------------------------------------------------
# predicates


def _component_mask(G: SimpleGraph, start: int, within: Optional[int] = None) -> int:
    within = G.all_mask if within is None else within
    seen = 1 << start
    frontier = seen
    adj = G.adj
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(G: SimpleGraph) -> bool:
    if G.n == 0:
        return False
    return _component_mask(G, 1) == G.all_mask


def connected_components(G: SimpleGraph) -> list:
    remaining = G.all_mask
    comps = []
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        comp = _component_mask(G, v)
        comps.append(sorted(_bits(comp)))
        remaining &= ~comp
    return comps


def is_bipartite(G: SimpleGraph) -> bool:
    color = {}
    for v in G.vertices:
        if v in color:
            continue
        color[v] = 0
        stack = [v]
        while stack:
            u = stack.pop()
            for w in _bits(G.adj[u]):
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def graph_predicates(G: SimpleGraph) -> dict:
    return {"connected": is_connected(G), "bipartite": is_bipartite(G)}


def is_independent(G: SimpleGraph, S: Iterable[int]) -> bool:
    m = _mask(S)
    return all(not (G.adj[v] & m) for v in _bits(m))


def is_maximal_independent(G: SimpleGraph, S: Iterable[int]) -> bool:
    m = _mask(S)
    if not is_independent(G, S):
        return False
    dominated = m
    for v in _bits(m):
        dominated |= G.adj[v]
    return dominated == G.all_mask


# ---------------------------------------------------------------------------
# cliques and independent sets


def _bron_kerbosch(adj, R, P, X, out):
    if not P and not X:
        out.append(R)
        return
    pivot_set = P | X
    best, best_count = 0, -1
    for u in _bits(pivot_set):
        c = bin(P & adj[u]).count("1")
        if c > best_count:
            best, best_count = u, c
    for v in _bits(P & ~adj[best]):
        bit = 1 << v
        _bron_kerbosch(adj, R | bit, P & adj[v], X & adj[v], out)
        P &= ~bit
        X |= bit


def _clique_masks(adj, vertex_mask) -> list:
    out: list = []
    if vertex_mask:
        _bron_kerbosch(adj, 0, vertex_mask, 0, out)
    return out


def maximal_cliques(G: SimpleGraph) -> list:
    """All maximal cliques, each a sorted tuple, in lexicographic order."""
    return sorted(tuple(_bits(m)) for m in _clique_masks(G.adj, G.all_mask))


def maximal_independent_sets(G: SimpleGraph) -> list:
    full = G.all_mask
    comp = tuple(0 if v == 0 else (full & ~G.adj[v] & ~(1 << v)) for v in range(G.n + 1))
    return sorted(tuple(_bits(m)) for m in _clique_masks(comp, full))


def gamma_graph(G: SimpleGraph, S: Iterable[int]) -> GammaGraph:
    S = tuple(sorted(set(S)))
    if not is_independent(G, S):
        raise PreconditionError(f"{list(S)} is not an independent set")
    edges = _gamma_edge_masks(G, _mask(S))
    pairs = frozenset((i, j) for i in S for j in _bits(edges[i]) if i < j)
    return GammaGraph(S, pairs)


def _gamma_edge_masks(G: SimpleGraph, smask: int) -> dict:
    adj = G.adj
    out = {}
    for i in _bits(smask):
        reach = 0
        for k in _bits(adj[i] & ~smask):
            reach |= adj[k]
        out[i] = reach & smask & ~(1 << i)
    return out


def _gamma_connected(G: SimpleGraph, smask: int) -> bool:
    if not smask:
        return False
    edges = _gamma_edge_masks(G, smask)
    start = (smask & -smask).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= edges[v]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == smask


def is_friendly(G: SimpleGraph, S: Iterable[int]) -> bool:
    S = list(S)
    return is_independent(G, S) and _gamma_connected(G, _mask(S))


def _greedy_friendly(G: SimpleGraph) -> int:
    # Walk the maximal cliques in lexicographic order; each new vertex lies in
    # the first unfinished clique touching the closed neighbourhood U of S.
    adj = G.adj
    cliques = [_mask(c) for c in maximal_cliques(G)]
    first = min(_bits(cliques[0]))
    smask = 1 << first
    covered = smask | adj[first]
    while True:
        pending = [c for c in cliques if c & ~covered]
        if not pending:
            break
        touching = next((c for c in pending if c & covered), None)
        if touching is None:
            break
        v = min(_bits(touching & ~covered))
        smask |= 1 << v
        covered |= (1 << v) | adj[v]
    # extend greedily to a maximal independent set
    for v in G.vertices:
        if not (covered >> v) & 1:
            smask |= 1 << v
            covered |= (1 << v) | adj[v]
    return smask


def friendly_independent_set(G: SimpleGraph) -> tuple:
    """A maximal independent set S of a connected G with Gamma_S(G) connected.

    Follows the clique-covering construction with lowest-index choices; if
    that ever fails verification, all maximal independent sets are tried in
    lexicographic order.
    """
    if not is_connected(G):
        raise PreconditionError("friendly independent sets need a connected graph")
    smask = _greedy_friendly(G)
    S = tuple(_bits(smask))
    if is_maximal_independent(G, S) and _gamma_connected(G, smask):
        return S
    for cand in maximal_independent_sets(G):
        if _gamma_connected(G, _mask(cand)):
            return cand
    raise RuntimeError(f"no friendly maximal independent set found for {graph_id(G)}")


def spanning_tree_leaf_order(G: SimpleGraph, S: Iterable[int]) -> LeafOrderedTree:
    """BFS spanning tree of Gamma_S(G) from min(S), labelled in leaf order."""
    S = tuple(sorted(set(S)))
    if not S:
        raise PreconditionError("S must be nonempty")
    if not is_independent(G, S):
        raise PreconditionError(f"{list(S)} is not an independent set")
    smask = _mask(S)
    if not _gamma_connected(G, smask):
        raise PreconditionError(f"Gamma_S(G) is disconnected for S = {list(S)}")
    gedges = _gamma_edge_masks(G, smask)
    label = {S[0]: 1}
    order = [S[0]]
    tree_edges = []
    witnesses = []
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        for w in _bits(gedges[u]):
            if w in label:
                continue
            label[w] = len(order) + 1
            order.append(w)
            tree_edges.append((label[u], label[w]))
            common = G.adj[u] & G.adj[w] & ~smask
            witnesses.append((common & -common).bit_length() - 1)
    return LeafOrderedTree(tuple(order), tuple(tree_edges), tuple(witnesses))


def is_leaf_order(edges) -> bool:
    """Check the leaf-order labelling alpha_1 = {1,2}, alpha_j = {i_j, j+1}, i_j <= j."""
    for j, (a, b) in enumerate(edges, start=1):
        if j == 1:
            if (a, b) != (1, 2):
                return False
        elif b != j + 1 or not 1 <= a <= j:
            return False
    return True


# ---------------------------------------------------------------------------
# enumeration


def prufer_decode(seq, n: int) -> SimpleGraph:
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return SimpleGraph.from_edges(n, edges)


def enumerate_trees(n: int) -> list:
    """All n^(n-2) labelled trees on 1..n via Pruefer sequences."""
    if not 1 <= n <= 8:
        raise PreconditionError(f"tree enumeration supports 1 <= n <= 8, got {n}")
    if n == 1:
        return [SimpleGraph(1)]
    return [prufer_decode(seq, n) for seq in itertools.product(range(1, n + 1), repeat=n - 2)]


def random_tree(n: int, rng: random.Random) -> SimpleGraph:
    if n == 1:
        return SimpleGraph(1)
    return prufer_decode([rng.randint(1, n) for _ in range(n - 2)], n)


def iter_graphs(n: int) -> Iterator[SimpleGraph]:
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        yield SimpleGraph(n, frozenset(p for t, p in enumerate(pairs) if bits >> t & 1))


def iter_connected_graphs(n: int) -> Iterator[SimpleGraph]:
    """All connected labelled graphs on 1..n."""
    if n == 1:
        yield SimpleGraph(1)
        return
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    full = ((1 << (n + 1)) - 1) ^ 1
    for bits in range(1 << len(pairs)):
        adj = [0] * (n + 1)
        chosen = []
        for t, (i, j) in enumerate(pairs):
            if bits >> t & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                chosen.append((i, j))
        if len(chosen) < n - 1:
            continue
        seen = frontier = 2
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        if seen == full:
            yield SimpleGraph(n, frozenset(chosen))


# ---------------------------------------------------------------------------
# text format


def graph_id(G: SimpleGraph) -> str:
    return f"n{G.n}:" + ",".join(f"{i}-{j}" for i, j in G.sorted_edges())


def format_graph(G: SimpleGraph) -> str:
    return "\n".join([str(G.n)] + [f"{i} {j}" for i, j in G.sorted_edges()]) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty graph file")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return SimpleGraph.from_edges(n, edges)
