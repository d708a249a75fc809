"""Double-circuit enumeration for bicircular matroids.

A double circuit is a set D with rank |D| - 2 whose one-element deletions
all keep the rank.  Two independent enumerators produce the census:

* ``enumerate_oracle`` applies that definition to every subset (rank-table
  scan, exponential, ground truth);
* ``enumerate_structural`` uses the graph shape.  A connected double circuit
  is exactly a connected edge set with minimum degree 2 and two more edges
  than vertices; a disconnected one is exactly a union of two vertex-disjoint
  circuits (a nullity-0 component would contain a coloop).  Connected
  candidates come out of a growth search that only ever extends the
  lowest-labeled leaf, which keeps the state space to paths, tadpoles and
  near-final shapes instead of all connected subgraphs.

Each census entry carries its circuit partition: the blocks D_i such that the
circuits contained in D are exactly the complements D - D_i.  The partition
is computed per element by peeling leaves off D - d down to its unique
circuit, and is re-verified to partition D (a failure would falsify the
partition law and raises the bug-trap error).
"""

from collections.abc import Callable
from dataclasses import dataclass

from .bicircular import BicircularMatroid
from .bitset import bits, set_of
from .errors import InternalInvariantError, ResourceLimitError
from .matroid import DoubleCircuitReport, _sorted_classes
from .multigraph import EdgeSet, Multigraph

Progress = Callable[[str], None] | None


@dataclass(frozen=True)
class DoubleCircuitCensus:
    """Every double circuit of one bicircular matroid, with reports."""

    graph_label: str
    vertex_count: int
    edge_count: int
    enumerator: str  # "oracle" | "structural"
    reports: tuple[DoubleCircuitReport, ...]
    degree_histogram: dict[int, int]
    positive_count: int

    @property
    def total(self) -> int:
        return len(self.reports)

    def to_json(self) -> dict:
        return {
            "graph": self.graph_label,
            "vertices": self.vertex_count,
            "edges": self.edge_count,
            "enumerator": self.enumerator,
            "total": self.total,
            "degree_histogram": {str(k): v for k, v in sorted(self.degree_histogram.items())},
            "positive_count": self.positive_count,
        }


def max_degree(census: DoubleCircuitCensus) -> int:
    """Largest double-circuit degree in the census; 0 when empty."""
    return max(census.degree_histogram, default=0)


# -- structural pieces ---------------------------------------------------------


def _circuit_component(edges, incident, live: int) -> int:
    """The unique excess-1 component of a leaf-free edge set, as a mask.

    ``live`` is a disjoint union of cycles plus exactly one component
    carrying two cycles worth of edges; that component is the circuit.
    Returns 0 when no such component exists (the caller raises).
    """
    remaining = live
    while remaining:
        root = edges[(remaining & -remaining).bit_length() - 1][0]
        comp = 0
        vcount = 0
        seen = {root}
        vstack = [root]
        while vstack:
            x = vstack.pop()
            vcount += 1
            for i in incident[x]:
                if (remaining >> i) & 1 and not (comp >> i) & 1:
                    comp |= 1 << i
                    a, b = edges[i]
                    y = b if a == x else a
                    if y not in seen:
                        seen.add(y)
                        vstack.append(y)
        if comp.bit_count() == vcount + 1:
            return comp
        remaining &= ~comp
    return 0


def _partition_masks(graph, dmask, edges, degree, incident) -> set[int]:
    """Circuit-partition blocks of a double circuit, as masks.

    For each d the set D - d has nullity 1; peeling leaves off it (they can
    only start at d's endpoints, since D itself has minimum degree 2) exposes
    its unique circuit C(d), and d's block is D - C(d).  Verifies the blocks
    partition D.
    """
    class_masks: set[int] = set()
    seen = 0
    for d in bits(dmask):
        if (seen >> d) & 1:
            continue  # d's whole block is already known
        live = dmask ^ (1 << d)
        deg = dict(degree)
        du, dv = edges[d]
        deg[du] -= 1
        deg[dv] -= 1
        stack = [w for w in (du, dv) if deg[w] == 1]
        while stack:
            x = stack.pop()
            if deg[x] != 1:
                continue
            e = next(i for i in incident[x] if (live >> i) & 1)
            live ^= 1 << e
            a, b = edges[e]
            deg[a] -= 1
            deg[b] -= 1
            w = b if a == x else a
            if deg[w] == 1:
                stack.append(w)
        circuit = _circuit_component(edges, incident, live)
        block = dmask & ~circuit
        if circuit == 0 or not (block >> d) & 1:
            raise InternalInvariantError(
                f"element {d} missing from its own partition block in "
                f"{sorted(set_of(dmask))} of {graph!r}"
            )
        class_masks.add(block)
        seen |= block
    union = 0
    total = 0
    for c in class_masks:
        union |= c
        total += c.bit_count()
    if union != dmask or total != dmask.bit_count() or len(class_masks) < 2:
        raise InternalInvariantError(
            f"partition blocks do not partition double circuit "
            f"{sorted(set_of(dmask))} of {graph!r}"
        )
    return class_masks


def _chain_masks(graph, dmask, edges, degree, incident) -> list[int]:
    """Subdivision classes of the edge set, as masks.

    Walks maximal chains through degree-2 vertices starting from each vertex
    of degree >= 3.  Every component of a double circuit has such a vertex
    (a pure cycle has nullity 0), so every edge lands in exactly one chain.
    """
    visited = 0
    out = []
    for b, deg_b in degree.items():
        if deg_b < 3:
            continue
        for i in incident[b]:
            if (visited >> i) & 1:
                continue
            visited |= 1 << i
            cmask = 1 << i
            u, v = edges[i]
            cur = v if u == b else u
            prev = i
            while degree[cur] == 2:
                nxt = incident[cur][0]
                if nxt == prev:
                    nxt = incident[cur][1]
                visited |= 1 << nxt
                cmask |= 1 << nxt
                a, c = edges[nxt]
                cur = c if a == cur else a
                prev = nxt
            out.append(cmask)
    if visited != dmask:
        raise InternalInvariantError(
            f"double circuit {sorted(set_of(dmask))} of {graph!r} has a "
            f"component without a degree->=3 vertex"
        )
    return out


def analyze(ctx: BicircularMatroid, subset: EdgeSet) -> DoubleCircuitReport:
    """Full report for one double circuit: partition, positivity, vertices
    of degree >= 3, and whether every subdivision class of G[D] sits inside
    a single partition block."""
    graph = ctx.graph
    dmask = graph.edge_mask(subset)
    return _analyze_mask(ctx, dmask, check=True)


def _analyze_mask(
    ctx: BicircularMatroid, dmask: int, check: bool = False
) -> DoubleCircuitReport:
    graph = ctx.graph
    if check:
        r = ctx.rank_mask(dmask)
        if r != dmask.bit_count() - 2 or any(
            ctx.rank_mask(dmask ^ (1 << d)) != r for d in bits(dmask)
        ):
            raise ValueError("analyze requires a double circuit")
    edges = graph.edges
    degree: dict[int, int] = {}
    incident: dict[int, list[int]] = {}
    for i in bits(dmask):
        u, v = edges[i]
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
        incident.setdefault(u, []).append(i)
        if v != u:
            incident.setdefault(v, []).append(i)
    if any(d < 2 for d in degree.values()):
        raise InternalInvariantError(
            f"double circuit {sorted(set_of(dmask))} of {graph!r} has a leaf"
        )
    class_masks = _partition_masks(graph, dmask, edges, degree, incident)
    chains = _chain_masks(graph, dmask, edges, degree, incident)
    containment = all(
        any(chain & ~block == 0 for block in class_masks) for chain in chains
    )
    classes = _sorted_classes(class_masks)
    singular = sum(1 for c in classes if len(c) == 1)
    multiple = len(classes) - singular
    return DoubleCircuitReport(
        edges=set_of(dmask),
        classes=classes,
        degree=len(classes),
        singular_count=singular,
        multiple_count=multiple,
        positive=singular > multiple,
        distinguished_vertices=frozenset(v for v, d in degree.items() if d >= 3),
        subdivision_containment=containment,
    )


def _scan_connected(
    graph: Multigraph,
    within: int | None = None,
    progress: Progress = None,
) -> tuple[list[int], list[int]]:
    """(circuit masks, connected double-circuit masks) by growth search.

    States are connected edge sets containing their smallest edge as seed.
    A state with leaf vertices may only extend at the lowest-labeled leaf
    (a leafy state with excess |S| - |touched| = 2 can never become
    leaf-free and is dropped); a leaf-free state extends anywhere.  A proper
    connected subset of a leaf-free excess-2 set always has excess <= 1, so
    every target is reached and emitted states need no further growth.
    """
    edges = graph.edges
    adjacency = graph.adjacency
    inc_mask = [0] * graph.vertex_count  # edges touching v (each loop once)
    loop_mask = [0] * graph.vertex_count  # loops at v (counted twice in degree)
    vertex_mask = [0] * graph.edge_count
    for i, (u, v) in enumerate(edges):
        inc_mask[u] |= 1 << i
        inc_mask[v] |= 1 << i
        if u == v:
            loop_mask[u] |= 1 << i
        vertex_mask[i] = (1 << u) | (1 << v)
    if within is None:
        seeds = range(graph.edge_count)
        allowed = (1 << graph.edge_count) - 1
    else:
        seeds = list(bits(within))
        allowed = within
    circuits: list[int] = []
    doubles: list[int] = []
    for seed in seeds:
        if progress is not None:
            progress(f"growth search: seed edge {seed}")
        first = 1 << seed
        visited = {first}
        stack = [(first, vertex_mask[seed])]
        while stack:
            mask, touched = stack.pop()
            excess = mask.bit_count() - touched.bit_count()
            min_leaf = -1
            t = touched
            while t:
                low = t & -t
                t ^= low
                v = low.bit_length() - 1
                if (mask & inc_mask[v]).bit_count() + (mask & loop_mask[v]).bit_count() == 1:
                    min_leaf = v
                    break  # touched iterates ascending: first hit is the minimum
            if min_leaf >= 0:
                if excess >= 2:
                    continue  # the leaf could only be repaired at excess 3
                grow_at = (min_leaf,)
            else:
                if excess == 2:
                    doubles.append(mask)
                    continue  # no proper superset can stay at excess 2
                if excess == 1:
                    circuits.append(mask)
                grow_at = bits(touched)
            for vertex in grow_at:
                for i, _ in adjacency[vertex]:
                    if i <= seed or (mask >> i) & 1 or not (allowed >> i) & 1:
                        continue
                    extended = mask | (1 << i)
                    if extended not in visited:
                        visited.add(extended)
                        stack.append((extended, touched | vertex_mask[i]))
    return circuits, doubles


def structural_circuits_within(ctx: BicircularMatroid, subset: EdgeSet) -> list[frozenset[int]]:
    """Circuits contained in the subset, via the growth search restricted to
    it — an independent route to the same answer as the subset scan."""
    within = ctx.graph.edge_mask(subset)
    circuits, _ = _scan_connected(ctx.graph, within=within)
    return sorted((set_of(c) for c in circuits), key=lambda c: tuple(sorted(c)))


def _disconnected_doubles(graph: Multigraph, circuit_masks: list[int]) -> list[int]:
    """Unions of two vertex-disjoint circuits."""
    if len(circuit_masks) < 2:
        return []
    n = graph.vertex_count
    items = sorted(
        ((graph.touched_mask(c).bit_count(), graph.touched_mask(c), c) for c in circuit_masks)
    )
    out = []
    for a in range(len(items)):
        size_a, touched_a, mask_a = items[a]
        budget = n - size_a
        for b in range(a + 1, len(items)):
            size_b, touched_b, mask_b = items[b]
            if size_b > budget:
                break  # sorted by touched size: nothing later fits either
            if touched_a & touched_b == 0:
                out.append(mask_a | mask_b)
    return out


def _build_census(
    ctx: BicircularMatroid, dc_masks: list[int], enumerator: str
) -> DoubleCircuitCensus:
    graph = ctx.graph
    order = sorted(dc_masks, key=lambda mask: tuple(bits(mask)))
    reports = tuple(_analyze_mask(ctx, mask) for mask in order)
    histogram: dict[int, int] = {}
    for report in reports:
        histogram[report.degree] = histogram.get(report.degree, 0) + 1
    return DoubleCircuitCensus(
        graph_label=graph.name or f"graph(n={graph.vertex_count},m={graph.edge_count})",
        vertex_count=graph.vertex_count,
        edge_count=graph.edge_count,
        enumerator=enumerator,
        reports=reports,
        degree_histogram=histogram,
        positive_count=sum(1 for r in reports if r.positive),
    )


def enumerate_oracle(
    ctx: BicircularMatroid, limit: int = 20, progress: Progress = None
) -> DoubleCircuitCensus:
    """Definitional enumerator: test every subset against the rank table."""
    m = ctx.size
    if m > limit:
        raise ResourceLimitError(
            f"oracle enumeration scans 2^{m} subsets (limit 2^{limit}); "
            f"use enumerate_structural for graphs this large"
        )
    if progress is not None:
        progress(f"oracle: building rank table for 2^{m} subsets")
    table = ctx.rank_table(limit=limit)
    found = []
    for mask in range(1, 1 << m):
        r = table[mask]
        if mask.bit_count() - r != 2:
            continue
        rest = mask
        ok = True
        while rest:
            low = rest & -rest
            rest ^= low
            if table[mask ^ low] != r:
                ok = False
                break
        if ok:
            found.append(mask)
    if progress is not None:
        progress(f"oracle: {len(found)} double circuits")
    return _build_census(ctx, found, "oracle")


def enumerate_structural(
    ctx: BicircularMatroid, progress: Progress = None
) -> DoubleCircuitCensus:
    """Shape-based enumerator; same census as the oracle, any graph size."""
    graph = ctx.graph
    circuits, doubles = _scan_connected(graph, progress=progress)
    doubles = set(doubles)
    doubles.update(_disconnected_doubles(graph, circuits))
    if progress is not None:
        progress(f"structural: {len(doubles)} double circuits")
    return _build_census(ctx, list(doubles), "structural")
