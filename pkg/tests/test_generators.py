import math

import networkx as nx
import pytest

from bicirc.errors import GenerationError
from bicirc.generators import (
    GeneratorSpec,
    banana,
    bouquet,
    build,
    complete,
    cycle,
    disjoint_union,
    dodecahedron,
    handcuff,
    petersen,
    random_multigraph,
    random_with_min_girth,
    theta,
)

from .oracles import to_nx


def test_petersen_is_the_petersen_graph():
    g = petersen()
    assert (g.vertex_count, g.edge_count) == (10, 15)
    assert all(len(g.adjacency[v]) == 3 for v in range(10))
    assert g.girth() == 5
    assert nx.is_isomorphic(to_nx(g), nx.petersen_graph())


def test_dodecahedron_is_the_dodecahedral_graph():
    g = dodecahedron()
    assert (g.vertex_count, g.edge_count) == (20, 30)
    assert all(len(g.adjacency[v]) == 3 for v in range(20))
    assert g.girth() == 5
    assert nx.is_isomorphic(to_nx(g), nx.dodecahedral_graph())


def test_complete_graph():
    g = complete(5)
    assert (g.vertex_count, g.edge_count) == (5, 10)
    assert len(set(g.edges)) == 10


@pytest.mark.parametrize(
    "graph,n,m,girth",
    [
        (cycle(1), 1, 1, 1),
        (cycle(2), 2, 2, 2),
        (cycle(6), 6, 6, 6),
        (bouquet(0), 1, 0, math.inf),
        (bouquet(3), 1, 3, 1),
        (banana(0), 2, 0, math.inf),
        (banana(4), 2, 4, 2),
        (theta(1, 1, 1), 2, 3, 2),
        (theta(2, 3, 4), 8, 9, 5),
        (handcuff(1, 1, 0), 1, 2, 1),
        (handcuff(3, 4, 0), 6, 7, 3),
        (handcuff(2, 2, 5), 8, 9, 2),
    ],
)
def test_small_family_shapes(graph, n, m, girth):
    assert (graph.vertex_count, graph.edge_count) == (n, m)
    assert graph.girth() == girth


def test_theta_is_two_branch_vertices_three_paths():
    g = theta(2, 3, 4)
    assert g.branch_vertices(range(g.edge_count)) == frozenset({0, 1})
    assert len(g.subdivision_classes(range(g.edge_count))) == 3


def test_handcuff_is_two_cycles_joined_by_a_path():
    g = handcuff(3, 4, 2)
    assert (g.vertex_count, g.edge_count) == (8, 9)
    comps = g.components(range(9))
    assert len(comps) == 1
    assert len(g.branch_vertices(range(9))) == 2


def test_handcuff_sharing_a_vertex_when_path_is_empty():
    g = handcuff(3, 3, 0)
    assert (g.vertex_count, g.edge_count) == (5, 6)
    assert g.branch_vertices(range(6)) == frozenset({0})


def test_disjoint_union_shifts_indices():
    g = disjoint_union(bouquet(2), banana(2), name="both")
    assert g.vertex_count == 3
    assert g.edges == ((0, 0), (0, 0), (1, 2), (1, 2))
    assert g.name == "both"


def test_generator_param_validation():
    with pytest.raises(ValueError):
        cycle(0)
    with pytest.raises(ValueError):
        bouquet(-1)
    with pytest.raises(ValueError):
        theta(0, 1, 1)
    with pytest.raises(ValueError):
        handcuff(0, 1, 0)
    with pytest.raises(ValueError):
        complete(-2)


def test_random_multigraph_is_deterministic_per_seed():
    a = random_multigraph(5, 9, seed=123)
    b = random_multigraph(5, 9, seed=123)
    c = random_multigraph(5, 9, seed=124)
    assert a == b
    assert a != c
    assert a.vertex_count == 5 and a.edge_count == 9
    assert all(0 <= u <= v < 5 for u, v in a.edges)


def test_random_multigraph_hits_loops_and_parallels():
    seen_loop = seen_parallel = False
    for seed in range(40):
        g = random_multigraph(3, 6, seed=seed)
        seen_loop = seen_loop or any(u == v for u, v in g.edges)
        seen_parallel = seen_parallel or len(set(g.edges)) < g.edge_count
    assert seen_loop and seen_parallel


def test_random_with_min_girth_respects_floor():
    for seed in (0, 1, 2, 3, 4):
        g = random_with_min_girth(12, 14, 5, seed=seed)
        assert g.girth() >= 5
        assert g.edge_count == 14
        # simple: no loops, no parallels
        assert len(set(g.edges)) == 14 and all(u != v for u, v in g.edges)


def test_random_with_min_girth_impossible_raises():
    with pytest.raises(GenerationError, match="max 6"):
        random_with_min_girth(4, 50, 5, seed=0)
    with pytest.raises(GenerationError, match="tries"):
        random_with_min_girth(12, 16, 5, seed=1537810351, max_tries=200)


def test_build_dispatch():
    assert build(GeneratorSpec(name="petersen")) == petersen()
    assert build(GeneratorSpec(name="theta", params=(2, 3, 4))) == theta(2, 3, 4)
    assert build(GeneratorSpec(name="complete", params=(4,))) == complete(4)
    got = build(GeneratorSpec(name="random", n=4, m=7, seed=9))
    assert got == random_multigraph(4, 7, seed=9)
    girthy = build(GeneratorSpec(name="random", n=12, m=13, seed=2, min_girth=5))
    assert girthy.girth() >= 5


def test_build_rejects_bad_specs():
    with pytest.raises(ValueError, match="unknown generator"):
        build(GeneratorSpec(name="mystery"))
    with pytest.raises(ValueError):
        build(GeneratorSpec(name="theta", params=(1,)))
    with pytest.raises(ValueError, match="no parameters"):
        build(GeneratorSpec(name="petersen", params=(3,)))
    with pytest.raises(ValueError, match="needs -n and -m"):
        build(GeneratorSpec(name="random"))
