"""Named graph families and seeded random multigraphs.

Random generation uses Python's ``random.Random`` (the Mersenne Twister with
the documented seeding algorithm), so a spec (n, m, seed, ...) pins the exact
edge list across platforms; regression fixtures rely on that.
"""

import random
from dataclasses import dataclass

from .errors import GenerationError
from .multigraph import Multigraph

NAMED = ("petersen", "dodecahedron", "complete", "cycle", "bouquet", "banana",
         "theta", "handcuff")


def petersen() -> Multigraph:
    """Outer 5-cycle on 0-4, spokes to 5-9, inner pentagram skipping by 2."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, edges, name="petersen")


# LCF code of the dodecahedral graph: chords over a 20-vertex Hamilton cycle,
# the 10-step pattern applied twice.
_DODECAHEDRON_LCF = (10, 7, 4, -4, -7, 10, -4, 7, -7, 4)


def dodecahedron() -> Multigraph:
    n = 20
    edges = [(i, (i + 1) % n) for i in range(n)]
    chords = set()
    for i in range(n):
        j = (i + _DODECAHEDRON_LCF[i % 10]) % n
        chords.add((min(i, j), max(i, j)))
    edges += sorted(chords)
    return Multigraph(n, edges, name="dodecahedron")


def complete(n: int) -> Multigraph:
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Multigraph(n, edges, name=f"K{n}")


def cycle(n: int) -> Multigraph:
    """n-cycle; cycle(1) is a loop, cycle(2) a parallel pair."""
    if n < 1:
        raise ValueError("cycle(n) needs n >= 1")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Multigraph(n, edges, name=f"C{n}")


def bouquet(n: int) -> Multigraph:
    """n loops on a single vertex."""
    if n < 0:
        raise ValueError("bouquet(n) needs n >= 0")
    return Multigraph(1, [(0, 0)] * n, name=f"bouquet({n})")


def banana(n: int) -> Multigraph:
    """n parallel edges between two vertices."""
    if n < 0:
        raise ValueError("banana(n) needs n >= 0")
    return Multigraph(2, [(0, 1)] * n, name=f"banana({n})")


def _path_edges(u: int, v: int, length: int, next_vertex: int):
    """Edges of a u-v path with `length` edges through fresh interior vertices."""
    if length == 1:
        return [(u, v)], next_vertex
    edges = []
    prev = u
    for _ in range(length - 1):
        edges.append((prev, next_vertex))
        prev = next_vertex
        next_vertex += 1
    edges.append((prev, v))
    return edges, next_vertex


def theta(a: int, b: int, c: int) -> Multigraph:
    """Two hub vertices joined by three internally disjoint paths of the
    given edge lengths; theta(1,1,1) is three parallel edges."""
    if min(a, b, c) < 1:
        raise ValueError("theta path lengths must be >= 1")
    edges = []
    next_vertex = 2
    for length in (a, b, c):
        part, next_vertex = _path_edges(0, 1, length, next_vertex)
        edges += part
    return Multigraph(next_vertex, edges, name=f"theta({a},{b},{c})")


def _cycle_edges(anchor: int, length: int, next_vertex: int):
    """Edges of a cycle of the given length through `anchor`; length 1 is a
    loop, length 2 a parallel pair."""
    if length == 1:
        return [(anchor, anchor)], next_vertex
    edges = []
    prev = anchor
    for _ in range(length - 1):
        edges.append((prev, next_vertex))
        prev = next_vertex
        next_vertex += 1
    edges.append((prev, anchor))
    return edges, next_vertex


def handcuff(p: int, q: int, r: int) -> Multigraph:
    """Two cycles of lengths p and q joined by a path of r edges; r = 0 means
    the cycles share a single vertex (a figure-eight)."""
    if p < 1 or q < 1:
        raise ValueError("handcuff cycle lengths must be >= 1")
    if r < 0:
        raise ValueError("handcuff path length must be >= 0")
    edges, next_vertex = _cycle_edges(0, p, 1)
    if r == 0:
        anchor = 0
    else:
        anchor = next_vertex + r - 1
        part, _ = _path_edges(0, anchor, r, next_vertex)
        edges += part
        next_vertex = anchor + 1
    part, next_vertex = _cycle_edges(anchor, q, next_vertex)
    edges += part
    return Multigraph(next_vertex, edges, name=f"handcuff({p},{q},{r})")


def disjoint_union(a: Multigraph, b: Multigraph, name: str = "") -> Multigraph:
    """Vertex-disjoint union; b's vertices are shifted past a's."""
    offset = a.vertex_count
    edges = list(a.edges) + [(u + offset, v + offset) for u, v in b.edges]
    label = name or f"{a.name or 'g1'}+{b.name or 'g2'}"
    return Multigraph(offset + b.vertex_count, edges, name=label)


def random_multigraph(n: int, m: int, seed: int) -> Multigraph:
    """m edges drawn uniformly with replacement over unordered pairs,
    loops included; deterministic in seed."""
    if n < 1:
        raise ValueError("random_multigraph needs n >= 1")
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    rng = random.Random(seed)
    edges = [pairs[rng.randrange(len(pairs))] for _ in range(m)]
    return Multigraph(n, edges, name=f"random(n={n},m={m},seed={seed})")


def random_with_min_girth(
    n: int, m: int, g: int, seed: int, max_tries: int = 20000
) -> Multigraph:
    """Rejection-sample simple graphs until girth(G) >= g (infinite girth
    qualifies); deterministic in seed."""
    if n < 1:
        raise ValueError("random_with_min_girth needs n >= 1")
    if g < 1:
        raise ValueError("min girth must be >= 1")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if m > len(pairs):
        raise GenerationError(
            f"no simple graph with n={n} has {m} edges (max {len(pairs)})"
        )
    rng = random.Random(seed)
    name = f"random(n={n},m={m},girth>={g},seed={seed})"
    for _ in range(max_tries):
        edges = sorted(rng.sample(pairs, m))
        graph = Multigraph(n, edges, name=name)
        if graph.girth() >= g:
            return graph
    raise GenerationError(
        f"no simple graph with girth >= {g} found in {max_tries} tries "
        f"(n={n}, m={m}, seed={seed})"
    )


@dataclass(frozen=True)
class GeneratorSpec:
    """A reproducible graph request: a named family with integer parameters,
    or name='random' with (n, m, seed) and an optional girth bound."""

    name: str
    params: tuple[int, ...] = ()
    n: int | None = None
    m: int | None = None
    seed: int = 0
    min_girth: int | None = None
    max_tries: int = 20000


def _one_param(spec: GeneratorSpec) -> int:
    if spec.params:
        if len(spec.params) != 1:
            raise ValueError(f"{spec.name} takes one parameter")
        return spec.params[0]
    if spec.n is None:
        raise ValueError(f"{spec.name} needs a size (-n or params)")
    return spec.n


def named(spec: GeneratorSpec) -> Multigraph:
    """Build one of the named families from a spec."""
    name = spec.name
    if name in ("petersen", "dodecahedron"):
        if spec.params:
            raise ValueError(f"{name} takes no parameters")
        return petersen() if name == "petersen" else dodecahedron()
    if name == "complete":
        return complete(_one_param(spec))
    if name == "cycle":
        return cycle(_one_param(spec))
    if name == "bouquet":
        return bouquet(_one_param(spec))
    if name == "banana":
        return banana(_one_param(spec))
    if name == "theta":
        if len(spec.params) != 3:
            raise ValueError("theta needs three path lengths, e.g. --params 2,3,3")
        return theta(*spec.params)
    if name == "handcuff":
        if len(spec.params) != 3:
            raise ValueError(
                "handcuff needs two cycle lengths and a path length, e.g. --params 5,5,2"
            )
        return handcuff(*spec.params)
    raise ValueError(f"unknown generator {name!r}; known: {', '.join(NAMED)}, random")


def build(spec: GeneratorSpec) -> Multigraph:
    """Dispatch a spec to the named families or the random generators."""
    if spec.name == "random":
        if spec.n is None or spec.m is None:
            raise ValueError("random needs -n and -m")
        if spec.min_girth is not None:
            return random_with_min_girth(
                spec.n, spec.m, spec.min_girth, spec.seed, spec.max_tries
            )
        return random_multigraph(spec.n, spec.m, spec.seed)
    return named(spec)
