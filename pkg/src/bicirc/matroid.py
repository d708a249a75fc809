"""Generic matroid machinery over a rank oracle.

Everything here is backend-agnostic: a Matroid is a ground-set size plus a
rank function on bitmasks.  Duals and minors compose oracles lazily, so they
cost nothing to build and inherit memoization from the parent.

Rank values are memoized per instance keyed by the subset bitmask.  The
cache is a plain dict, so instances are cheap but not thread-safe; build
one per worker when parallelizing.
"""

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from itertools import combinations

from .bitset import bits, mask_of, set_of
from .errors import InternalInvariantError, ResourceLimitError


@dataclass(frozen=True)
class DoubleCircuitReport:
    """A double circuit with its circuit partition.

    ``classes`` are the blocks (D_1, ..., D_k) such that the circuits
    contained in ``edges`` are exactly the complements edges - D_i; sorted
    by smallest member.  ``positive`` iff singleton blocks outnumber the
    larger ones.  ``distinguished_vertices`` (vertices of degree >= 3 in the
    induced subgraph) and ``subdivision_containment`` are filled only for
    graph-backed matroids.
    """

    edges: frozenset[int]
    classes: tuple[frozenset[int], ...]
    degree: int
    singular_count: int
    multiple_count: int
    positive: bool
    distinguished_vertices: frozenset[int] | None = None
    subdivision_containment: bool | None = None

    def to_json(self) -> dict:
        out = {
            "edges": sorted(self.edges),
            "classes": [sorted(c) for c in self.classes],
            "degree": self.degree,
            "singular_count": self.singular_count,
            "multiple_count": self.multiple_count,
            "positive": self.positive,
        }
        if self.distinguished_vertices is not None:
            out["distinguished_vertices"] = sorted(self.distinguished_vertices)
        if self.subdivision_containment is not None:
            out["subdivision_containment"] = self.subdivision_containment
        return out


@dataclass(frozen=True)
class ColineReport:
    """A coline with its copoint partition.

    ``classes`` partition the complement of ``flat``: elements e, f share a
    block iff closure(flat + e) == closure(flat + f).  A block of size 1 is
    a simple copoint; ``positive`` iff simple blocks outnumber the rest.
    """

    flat: frozenset[int]
    classes: tuple[frozenset[int], ...]
    degree: int
    simple_count: int
    multiple_count: int
    positive: bool

    def to_json(self) -> dict:
        return {
            "flat": sorted(self.flat),
            "classes": [sorted(c) for c in self.classes],
            "degree": self.degree,
            "simple_count": self.simple_count,
            "multiple_count": self.multiple_count,
            "positive": self.positive,
        }


def _sorted_classes(class_masks: Iterable[int]) -> tuple[frozenset[int], ...]:
    return tuple(
        set_of(c) for c in sorted(class_masks, key=lambda c: (c & -c).bit_length())
    )


class Matroid:
    """A matroid given by its rank function on bitmask-encoded subsets."""

    def __init__(self, size: int, rank_fn: Callable[[int], int], tag: str = "matroid"):
        self.size = size
        self.tag = tag
        self._rank_fn = rank_fn
        self._cache: dict[int, int] = {0: 0}
        self.graph = None  # set by from_bicircular for graph-backed reporting

    @property
    def ground_mask(self) -> int:
        return (1 << self.size) - 1

    def __repr__(self) -> str:
        return f"Matroid(size={self.size}, tag={self.tag!r})"

    def _validate(self, subset: Iterable[int]) -> int:
        s = frozenset(subset)
        for i in s:
            if not (0 <= i < self.size):
                raise ValueError(f"element {i} out of range 0..{self.size - 1}")
        return mask_of(s)

    # -- rank ------------------------------------------------------------

    def rank_mask(self, mask: int) -> int:
        r = self._cache.get(mask)
        if r is None:
            r = self._rank_fn(mask)
            self._cache[mask] = r
        return r

    def rank(self, subset: Iterable[int]) -> int:
        return self.rank_mask(self._validate(subset))

    @property
    def full_rank(self) -> int:
        return self.rank_mask(self.ground_mask)

    @property
    def corank(self) -> int:
        return self.size - self.full_rank

    def is_independent_mask(self, mask: int) -> bool:
        return self.rank_mask(mask) == mask.bit_count()

    def is_independent(self, subset: Iterable[int]) -> bool:
        return self.is_independent_mask(self._validate(subset))

    # -- dual and minors ----------------------------------------------------

    def dual(self) -> "Matroid":
        """Dual via r*(A) = |A| + r(E - A) - r(E)."""
        ground = self.ground_mask
        full = self.full_rank
        parent_rank = self.rank_mask

        def rank_fn(mask: int) -> int:
            return mask.bit_count() + parent_rank(ground & ~mask) - full

        return Matroid(self.size, rank_fn, tag=f"dual({self.tag})")

    def _embedding(self, keep_mask: int) -> list[int]:
        return [1 << i for i in bits(keep_mask)]

    def delete(self, subset: Iterable[int]) -> "Matroid":
        """Restriction to the complement, elements relabeled densely."""
        gone = self._validate(subset)
        keep = self.ground_mask & ~gone
        embed = self._embedding(keep)
        parent_rank = self.rank_mask

        def rank_fn(mask: int) -> int:
            old = 0
            m = mask
            while m:
                low = m & -m
                m ^= low
                old |= embed[low.bit_length() - 1]
            return parent_rank(old)

        return Matroid(len(embed), rank_fn, tag=f"{self.tag} \\ {sorted(set_of(gone))}")

    def contract(self, subset: Iterable[int]) -> "Matroid":
        """Contraction: rank(A) = r(A + T) - r(T), relabeled densely."""
        gone = self._validate(subset)
        keep = self.ground_mask & ~gone
        embed = self._embedding(keep)
        parent_rank = self.rank_mask
        base = parent_rank(gone)

        def rank_fn(mask: int) -> int:
            old = gone
            m = mask
            while m:
                low = m & -m
                m ^= low
                old |= embed[low.bit_length() - 1]
            return parent_rank(old) - base

        return Matroid(len(embed), rank_fn, tag=f"{self.tag} / {sorted(set_of(gone))}")

    # -- closure and flats ----------------------------------------------------

    def closure_mask(self, mask: int) -> int:
        r = self.rank_mask(mask)
        out = mask
        rest = self.ground_mask & ~mask
        while rest:
            low = rest & -rest
            rest ^= low
            if self.rank_mask(mask | low) == r:
                out |= low
        return out

    def closure(self, subset: Iterable[int]) -> frozenset[int]:
        return set_of(self.closure_mask(self._validate(subset)))

    def is_flat_mask(self, mask: int) -> bool:
        return self.closure_mask(mask) == mask

    def is_coline_mask(self, mask: int) -> bool:
        """Flat of corank exactly 2."""
        return self.rank_mask(mask) == self.full_rank - 2 and self.is_flat_mask(mask)

    def is_coline(self, subset: Iterable[int]) -> bool:
        return self.is_coline_mask(self._validate(subset))

    def copoint_partition_mask(self, lmask: int) -> ColineReport:
        """Group E - L by the copoint closure(L + e); requires L a coline."""
        if not self.is_coline_mask(lmask):
            raise ValueError("copoint_partition requires a coline (corank-2 flat)")
        groups: dict[int, int] = {}
        rest = self.ground_mask & ~lmask
        while rest:
            low = rest & -rest
            rest ^= low
            copoint = self.closure_mask(lmask | low)
            groups[copoint] = groups.get(copoint, 0) | low
        classes = _sorted_classes(groups.values())
        simple = sum(1 for c in classes if len(c) == 1)
        multiple = len(classes) - simple
        return ColineReport(
            flat=set_of(lmask),
            classes=classes,
            degree=len(classes),
            simple_count=simple,
            multiple_count=multiple,
            positive=simple > multiple,
        )

    def copoint_partition(self, subset: Iterable[int]) -> ColineReport:
        return self.copoint_partition_mask(self._validate(subset))

    # -- double circuits --------------------------------------------------------

    def is_double_circuit_mask(self, mask: int) -> bool:
        """r(D) = |D| - 2 and removing any element keeps the rank."""
        r = self.rank_mask(mask)
        if r != mask.bit_count() - 2:
            return False
        m = mask
        while m:
            low = m & -m
            m ^= low
            if self.rank_mask(mask ^ low) != r:
                return False
        return True

    def is_double_circuit(self, subset: Iterable[int]) -> bool:
        return self.is_double_circuit_mask(self._validate(subset))

    def circuit_partition_mask(self, dmask: int) -> DoubleCircuitReport:
        """Partition D so that the circuits inside D are the block complements.

        For each d, D - d has nullity 1 and hence a unique circuit, read off
        as the elements whose removal keeps the rank; the block of d is the
        complement of that circuit.  Every circuit inside D misses some
        element, so this finds them all.  A failure to partition would
        falsify the partition law and raises the bug-trap error.
        """
        if not self.is_double_circuit_mask(dmask):
            raise ValueError("circuit_partition requires a double circuit")
        circuits: set[int] = set()
        m = dmask
        while m:
            low = m & -m
            m ^= low
            sub = dmask ^ low
            r_sub = self.rank_mask(sub)
            c = 0
            s = sub
            while s:
                el = s & -s
                s ^= el
                if self.rank_mask(sub ^ el) == r_sub:
                    c |= el
            circuits.add(c)
        class_masks = {dmask & ~c for c in circuits}
        union = 0
        total = 0
        for c in class_masks:
            union |= c
            total += c.bit_count()
        if union != dmask or total != dmask.bit_count() or len(class_masks) < 2:
            raise InternalInvariantError(
                f"circuit-partition blocks do not partition the double circuit "
                f"{sorted(set_of(dmask))} (tag {self.tag!r})"
            )
        classes = _sorted_classes(class_masks)
        singular = sum(1 for c in classes if len(c) == 1)
        multiple = len(classes) - singular
        distinguished = None
        if self.graph is not None:
            distinguished = self.graph.branch_vertices(set_of(dmask))
        return DoubleCircuitReport(
            edges=set_of(dmask),
            classes=classes,
            degree=len(classes),
            singular_count=singular,
            multiple_count=multiple,
            positive=singular > multiple,
            distinguished_vertices=distinguished,
        )

    def circuit_partition(self, subset: Iterable[int]) -> DoubleCircuitReport:
        return self.circuit_partition_mask(self._validate(subset))

    # -- uniformity and simplicity -------------------------------------------

    def uniform_signature(self, limit: int = 20) -> tuple[int, int] | None:
        """(r, n) if this matroid is U_{r,n}, else None.

        With r the full rank, larger subsets are dependent by counting, so
        uniformity reduces to every r-subset being independent.
        """
        n = self.size
        if n > limit:
            raise ResourceLimitError(f"uniformity scan is exhaustive; limit n <= {limit}")
        r = self.full_rank
        for combo in combinations(range(n), r):
            if self.rank_mask(mask_of(combo)) < r:
                return None
        return (r, n)

    def _is_simple(self) -> bool:
        """No circuit of size <= 2: all singletons rank 1, all pairs rank 2."""
        for i in range(self.size):
            if self.rank_mask(1 << i) == 0:
                return False
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if self.rank_mask((1 << i) | (1 << j)) < 2:
                    return False
        return True

    def simplicity(self) -> tuple[bool, bool]:
        """(simple, cosimple); cosimplicity is simplicity of the dual."""
        return self._is_simple(), self.dual()._is_simple()


def from_bicircular(ctx) -> Matroid:
    """Wrap a BicircularMatroid as a generic rank oracle."""
    name = ctx.graph.name or f"graph(n={ctx.graph.vertex_count}, m={ctx.size})"
    matroid = Matroid(ctx.size, ctx.rank_mask, tag=f"bicircular({name})")
    matroid.graph = ctx.graph
    return matroid


def from_rank_table(size: int, table, tag: str = "table") -> Matroid:
    """Matroid reading ranks from a precomputed 2^size table."""
    return Matroid(size, table.__getitem__, tag=tag)
