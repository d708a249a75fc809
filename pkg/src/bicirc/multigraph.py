"""Labeled multigraphs with loops and parallel edges.

Vertices are 0..n-1.  Edges are unordered vertex pairs identified by their
position in the construction list; every subset-valued argument or result
refers to these edge indices.  Instances are immutable after construction,
so they are safe to share between workers.

Conventions used throughout the package:

* a loop contributes 2 to the degree of its vertex;
* a loop is a cycle of length 1, a parallel pair a cycle of length 2;
* the girth of an acyclic graph is ``math.inf`` (comparisons stay total).
"""

import math
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .bitset import bits, mask_of, set_of
from .errors import GraphFormatError

EdgeSet = Iterable[int]

INFINITE = math.inf


@dataclass(frozen=True)
class SubgraphView:
    """The subgraph induced by an edge subset: no isolated vertices."""

    edges: frozenset[int]
    touched: frozenset[int]
    degrees: dict[int, int]

    def degree(self, v: int) -> int:
        return self.degrees.get(v, 0)


class Multigraph:
    """A multigraph with stable edge indices."""

    __slots__ = ("vertex_count", "edges", "name", "_adjacency")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]], name: str = ""):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        normalized = []
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(
                    f"edge {i} = ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}"
                )
            normalized.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_adjacency", None)

    # -- basics ---------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_edge_set(self) -> frozenset[int]:
        return frozenset(range(self.edge_count))

    def endpoints(self, i: int) -> tuple[int, int]:
        return self.edges[i]

    def is_loop(self, i: int) -> bool:
        u, v = self.edges[i]
        return u == v

    def __setattr__(self, *_):
        raise AttributeError("Multigraph is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"Multigraph(n={self.vertex_count}, m={self.edge_count}{label})"

    @property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex: (edge index, other endpoint) pairs; loops appear twice."""
        adj = self._adjacency
        if adj is None:
            lists: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
            for i, (u, v) in enumerate(self.edges):
                lists[u].append((i, v))
                if u != v:
                    lists[v].append((i, u))
                else:
                    lists[u].append((i, v))
            adj = tuple(tuple(l) for l in lists)
            object.__setattr__(self, "_adjacency", adj)
        return adj

    def _validate(self, subset: EdgeSet) -> frozenset[int]:
        s = frozenset(subset)
        for i in s:
            if not (0 <= i < self.edge_count):
                raise ValueError(f"edge index {i} out of range 0..{self.edge_count - 1}")
        return s

    # -- subgraph queries -------------------------------------------------

    def induced(self, subset: EdgeSet) -> SubgraphView:
        """View of the subgraph with edge set ``subset`` and no isolated vertices."""
        s = self._validate(subset)
        degrees: dict[int, int] = {}
        for i in s:
            u, v = self.edges[i]
            degrees[u] = degrees.get(u, 0) + 1
            degrees[v] = degrees.get(v, 0) + 1
        return SubgraphView(edges=s, touched=frozenset(degrees), degrees=degrees)

    def components(self, subset: EdgeSet) -> list[tuple[frozenset[int], frozenset[int]]]:
        """Connected components of the induced subgraph.

        Returns (vertex set, edge set) pairs, ordered by the smallest edge
        index each component contains.
        """
        s = self._validate(subset)
        edge_at: dict[int, list[int]] = {}
        for i in s:
            u, v = self.edges[i]
            edge_at.setdefault(u, []).append(i)
            if v != u:
                edge_at.setdefault(v, []).append(i)
        seen_vertices: set[int] = set()
        out = []
        for start in sorted(s):
            u0, _ = self.edges[start]
            if u0 in seen_vertices:
                continue
            comp_vertices = {u0}
            comp_edges = set()
            queue = deque([u0])
            while queue:
                x = queue.popleft()
                for i in edge_at[x]:
                    comp_edges.add(i)
                    a, b = self.edges[i]
                    for y in (a, b):
                        if y not in comp_vertices:
                            comp_vertices.add(y)
                            queue.append(y)
            seen_vertices |= comp_vertices
            out.append((frozenset(comp_vertices), frozenset(comp_edges)))
        return out

    def has_leaves(self, subset: EdgeSet) -> bool:
        """True iff some vertex has degree exactly 1 in the induced subgraph."""
        return any(d == 1 for d in self.induced(subset).degrees.values())

    def branch_vertices(self, subset: EdgeSet) -> frozenset[int]:
        """Vertices of degree >= 3 in the induced subgraph."""
        view = self.induced(subset)
        return frozenset(v for v, d in view.degrees.items() if d >= 3)

    # -- girth ------------------------------------------------------------

    def girth(self) -> int | float:
        """Length of a shortest cycle; ``math.inf`` if the graph is acyclic.

        A loop counts as a cycle of length 1 and a parallel pair as one of
        length 2, matching the degree convention above.
        """
        best: int | float = INFINITE
        seen_pairs: set[tuple[int, int]] = set()
        for u, v in self.edges:
            if u == v:
                return 1
            if (u, v) in seen_pairs:
                best = 2
            seen_pairs.add((u, v))
        if best == 2:
            return 2
        # Simple graph from here: girth = min over edges e=(u,v) of
        # 1 + (shortest u-v path avoiding e).
        adj = self.adjacency
        for i, (u, v) in enumerate(self.edges):
            dist = {u: 0}
            queue = deque([u])
            limit = best - 1  # paths at least this long cannot improve
            found = None
            while queue:
                x = queue.popleft()
                dx = dist[x]
                if dx + 1 >= limit:
                    continue
                for j, y in adj[x]:
                    if j == i or y in dist:
                        continue
                    dist[y] = dx + 1
                    if y == v:
                        found = dx + 1
                        queue.clear()
                        break
                    queue.append(y)
            if found is not None:
                best = min(best, found + 1)
                if best == 3:
                    break
        return best

    # -- subdivision structure ---------------------------------------------

    def subdivision_classes(self, subset: EdgeSet) -> tuple[frozenset[int], ...]:
        """Partition of ``subset`` into maximal degree-2 chains.

        Each class is the edge set of a path (or of a cycle through a single
        branch vertex) whose internal vertices have degree exactly 2 in the
        induced subgraph, and whose endpoints have degree >= 3.  Contracting
        every class to one edge recovers a multigraph of minimum degree 3.

        Requires the induced subgraph to have no leaves and at least one
        branch vertex per component; a pure cycle component has no such
        representation and raises ValueError.
        """
        view = self.induced(subset)
        degrees = view.degrees
        if any(d == 1 for d in degrees.values()):
            raise ValueError("subdivision classes are undefined when leaves are present")
        branch = {v for v, d in degrees.items() if d >= 3}
        for comp_vertices, _ in self.components(subset):
            if not comp_vertices & branch:
                raise ValueError(
                    "subdivision classes are undefined for a component with no "
                    "vertex of degree >= 3"
                )
        adj = self.adjacency
        in_subset = view.edges
        assigned: set[int] = set()
        classes: list[frozenset[int]] = []
        for b in sorted(branch):
            for i, w in adj[b]:
                if i not in in_subset or i in assigned:
                    continue
                chain = [i]
                assigned.add(i)
                prev, cur = b, w
                while cur not in branch:
                    # degree-2 interior vertex: leave along the other edge
                    nxt = next(
                        (j, y)
                        for j, y in adj[cur]
                        if j in in_subset and j not in assigned
                    )
                    chain.append(nxt[0])
                    assigned.add(nxt[0])
                    prev, cur = cur, nxt[1]
                classes.append(frozenset(chain))
        classes.sort(key=min)
        return tuple(classes)

    # -- bitmask bridge -----------------------------------------------------

    def edge_mask(self, subset: EdgeSet) -> int:
        return mask_of(self._validate(subset))

    def edge_set(self, mask: int) -> frozenset[int]:
        return set_of(mask)

    def touched_mask(self, edge_mask: int) -> int:
        """Vertex bitmask of endpoints of the edges in ``edge_mask``."""
        out = 0
        for i in bits(edge_mask):
            u, v = self.edges[i]
            out |= (1 << u) | (1 << v)
        return out


# -- text format -----------------------------------------------------------
#
#   p <vertex_count> <edge_count>
#   e <u> <v>          (one line per edge, 0-based, loops as "e u u")
#   # comment          (ignored, as are blank lines)


def parse_graph_text(text: str, name: str = "") -> Multigraph:
    """Parse the ``p``/``e`` graph format; raises GraphFormatError with a line number."""
    vertex_count = None
    declared_edges = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if vertex_count is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(fields) != 3:
                raise GraphFormatError("header must be 'p <vertices> <edges>'", lineno)
            try:
                vertex_count, declared_edges = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError("header counts must be integers", lineno) from None
            if vertex_count < 0 or declared_edges < 0:
                raise GraphFormatError("header counts must be non-negative", lineno)
        elif fields[0] == "e":
            if vertex_count is None:
                raise GraphFormatError("edge line before header", lineno)
            if len(fields) != 3:
                raise GraphFormatError("edge line must be 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError("edge endpoints must be integers", lineno) from None
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphFormatError(
                    f"vertex out of range: edge ({u}, {v}) with {vertex_count} vertices",
                    lineno,
                )
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unknown record {fields[0]!r}", lineno)
    if vertex_count is None:
        raise GraphFormatError("missing 'p' header")
    if declared_edges != len(edges):
        raise GraphFormatError(
            f"header declares {declared_edges} edges but {len(edges)} were given"
        )
    return Multigraph(vertex_count, edges, name=name)


def format_graph_text(graph: Multigraph) -> str:
    lines = [f"p {graph.vertex_count} {graph.edge_count}"]
    lines.extend(f"e {u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"
