"""Independent reference implementations used only to check the package.

Everything here goes through networkx so that a bug in the package's own
graph code cannot silently agree with itself.
"""

import math
from itertools import combinations

import networkx as nx


def to_nx(graph) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_nodes_from(range(graph.vertex_count))
    for index, (u, v) in enumerate(graph.edges):
        g.add_edge(u, v, index=index)
    return g


def nx_rank(graph, subset) -> int:
    """Bicircular rank: per spanned component, min(edges, vertices)."""
    g = nx.MultiGraph()
    for i in subset:
        u, v = graph.edges[i]
        g.add_edge(u, v)
    total = 0
    for comp in nx.connected_components(g):
        sub = g.subgraph(comp)
        total += min(sub.number_of_edges(), len(comp))
    return total


def nx_is_independent(graph, subset) -> bool:
    """Independent iff every spanned component has at most |V| edges."""
    g = nx.MultiGraph()
    for i in subset:
        u, v = graph.edges[i]
        g.add_edge(u, v)
    for comp in nx.connected_components(g):
        sub = g.subgraph(comp)
        if sub.number_of_edges() > len(comp):
            return False
    return True


def nx_girth(graph) -> float:
    if any(u == v for u, v in graph.edges):
        return 1
    if len(set(graph.edges)) < len(graph.edges):
        return 2
    g = nx.Graph()
    g.add_nodes_from(range(graph.vertex_count))
    g.add_edges_from(graph.edges)
    return nx.girth(g)


def brute_force_double_circuits(graph) -> set[frozenset[int]]:
    """Definition applied literally, with the networkx rank."""
    m = graph.edge_count
    found = set()
    for size in range(2, m + 1):
        for subset in combinations(range(m), size):
            r = nx_rank(graph, subset)
            if r != size - 2:
                continue
            if all(nx_rank(graph, [e for e in subset if e != d]) == r for d in subset):
                found.add(frozenset(subset))
    return found


def brute_force_circuits(graph, subset) -> set[frozenset[int]]:
    """All minimal dependent sets inside ``subset``, by the networkx rank."""
    subset = sorted(subset)
    found: set[frozenset[int]] = set()
    for size in range(1, len(subset) + 1):
        for candidate in combinations(subset, size):
            if nx_rank(graph, candidate) != size:
                cset = frozenset(candidate)
                if not any(c < cset for c in found):
                    found.add(cset)
    return found


def is_inf(value) -> bool:
    return value == math.inf
