"""The bicircular matroid of a multigraph.

Independent sets are the edge sets inducing at most one cycle per connected
component.  The rank of an edge set is (number of touched vertices) minus
(number of acyclic components), computed here incrementally: an edge raises
the rank unless it lands inside, or merges, components that already carry a
cycle.

Rank queries run a stamped union-find over preallocated scratch arrays, so
a query is O(|S| alpha) with no per-call allocation; the enumerators lean
on this heavily.
"""

from itertools import combinations

from .bitset import bits, mask_of
from .errors import ResourceLimitError
from .multigraph import EdgeSet, Multigraph


class BicircularMatroid:
    """Rank / independence oracle for B(G) on the edge indices of G.

    Stateless apart from scratch space, but the scratch space makes a single
    instance unsafe to share across threads; build one per worker.
    """

    def __init__(self, graph: Multigraph):
        self.graph = graph
        self.size = graph.edge_count
        n = graph.vertex_count
        self._parent = [0] * n
        self._cyclic = [False] * n
        self._stamp = [0] * n
        self._query = 0

    @property
    def ground_mask(self) -> int:
        return (1 << self.size) - 1

    def __repr__(self) -> str:
        return f"BicircularMatroid({self.graph!r})"

    # -- rank ---------------------------------------------------------------

    def rank_mask(self, mask: int) -> int:
        """Rank of the edge subset given as a bitmask."""
        edges = self.graph.edges
        parent = self._parent
        cyclic = self._cyclic
        stamp = self._stamp
        self._query += 1
        q = self._query
        rank = 0
        m = mask
        while m:
            low = m & -m
            m ^= low
            u, v = edges[low.bit_length() - 1]
            if stamp[u] != q:
                stamp[u] = q
                parent[u] = u
                cyclic[u] = False
                ru = u
            else:
                ru = u
                while parent[ru] != ru:
                    parent[ru] = parent[parent[ru]]
                    ru = parent[ru]
            if stamp[v] != q:
                stamp[v] = q
                parent[v] = v
                cyclic[v] = False
                rv = v
            else:
                rv = v
                while parent[rv] != rv:
                    parent[rv] = parent[parent[rv]]
                    rv = parent[rv]
            if ru == rv:
                # edge closes a cycle (loops always land here)
                if not cyclic[ru]:
                    cyclic[ru] = True
                    rank += 1
            else:
                parent[rv] = ru
                if cyclic[ru] and cyclic[rv]:
                    cyclic[ru] = True  # second cycle: the edge is wasted
                else:
                    cyclic[ru] = cyclic[ru] or cyclic[rv]
                    rank += 1
        return rank

    def rank(self, subset: EdgeSet) -> int:
        return self.rank_mask(self.graph.edge_mask(subset))

    def nullity_mask(self, mask: int) -> int:
        return mask.bit_count() - self.rank_mask(mask)

    @property
    def full_rank(self) -> int:
        return self.rank_mask(self.ground_mask)

    @property
    def corank(self) -> int:
        return self.size - self.full_rank

    # -- independence and circuits -------------------------------------------

    def is_independent_mask(self, mask: int) -> bool:
        """True iff rank(mask) == |mask|; same scan as rank but exits early."""
        edges = self.graph.edges
        parent = self._parent
        cyclic = self._cyclic
        stamp = self._stamp
        self._query += 1
        q = self._query
        m = mask
        while m:
            low = m & -m
            m ^= low
            u, v = edges[low.bit_length() - 1]
            if stamp[u] != q:
                stamp[u] = q
                parent[u] = u
                cyclic[u] = False
                ru = u
            else:
                ru = u
                while parent[ru] != ru:
                    parent[ru] = parent[parent[ru]]
                    ru = parent[ru]
            if stamp[v] != q:
                stamp[v] = q
                parent[v] = v
                cyclic[v] = False
                rv = v
            else:
                rv = v
                while parent[rv] != rv:
                    parent[rv] = parent[parent[rv]]
                    rv = parent[rv]
            if ru == rv:
                if cyclic[ru]:
                    return False
                cyclic[ru] = True
            else:
                if cyclic[ru] and cyclic[rv]:
                    return False
                parent[rv] = ru
                cyclic[ru] = cyclic[ru] or cyclic[rv]
        return True

    def is_independent(self, subset: EdgeSet) -> bool:
        return self.is_independent_mask(self.graph.edge_mask(subset))

    def is_circuit_mask(self, mask: int) -> bool:
        """Minimal dependent set: dependent, all one-element deletions independent."""
        if mask == 0 or self.is_independent_mask(mask):
            return False
        for i in bits(mask):
            if not self.is_independent_mask(mask ^ (1 << i)):
                return False
        return True

    def is_circuit(self, subset: EdgeSet) -> bool:
        return self.is_circuit_mask(self.graph.edge_mask(subset))

    def circuits_within(self, subset: EdgeSet, limit: int = 24) -> list[frozenset[int]]:
        """All circuits contained in ``subset``, sorted lexicographically.

        Exhaustive scan in increasing subset size; a set containing an
        already-found circuit is skipped without a rank query, so each
        surviving candidate is a circuit exactly when it is dependent.
        """
        indices = sorted(frozenset(subset))
        for i in indices:
            if not (0 <= i < self.size):
                raise ValueError(f"edge index {i} out of range 0..{self.size - 1}")
        if len(indices) > limit:
            raise ResourceLimitError(
                f"circuits_within scans 2^{len(indices)} subsets; limit is 2^{limit}"
            )
        found: list[int] = []
        for size in range(1, len(indices) + 1):
            for combo in combinations(indices, size):
                mask = mask_of(combo)
                if any(c & mask == c for c in found):
                    continue
                if self.rank_mask(mask) < size:
                    found.append(mask)
        return sorted(
            (frozenset(bits(c)) for c in found), key=lambda c: tuple(sorted(c))
        )

    # -- bulk rank table ------------------------------------------------------

    def rank_table(self, limit: int = 20) -> bytearray:
        """Rank of every subset, indexed by bitmask; 2^m bytes.

        The definitional enumerator and the exhaustive duality checks read
        this table instead of re-running union-find per query.
        """
        m = self.size
        if m > limit:
            raise ResourceLimitError(
                f"rank table needs 2^{m} entries; limit is 2^{limit}"
            )
        table = bytearray(1 << m)
        rank_mask = self.rank_mask
        for mask in range(1, 1 << m):
            table[mask] = rank_mask(mask)
        return table
