"""Bicircular matroids, their double circuits, and coline duality.

The bicircular matroid B(G) of a multigraph G has the edges of G as ground
set; a set is independent when every connected component it spans contains
at most one cycle.  This package enumerates double circuits of B(G), splits
them into their circuit-partition classes, classifies them as positive or
not, and checks the dual picture (colines and their copoint partitions).
"""

from .analysis import (
    analyze_graph,
    census_for,
    duality_exhaustive,
    search_sweep,
    verify_claims,
)
from .bicircular import BicircularMatroid
from .double_circuit import (
    DoubleCircuitCensus,
    analyze,
    enumerate_oracle,
    enumerate_structural,
    max_degree,
    structural_circuits_within,
)
from .errors import (
    GenerationError,
    GraphFormatError,
    InternalInvariantError,
    ResourceLimitError,
)
from .generators import (
    NAMED,
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
from .matroid import (
    ColineReport,
    DoubleCircuitReport,
    Matroid,
    from_bicircular,
    from_rank_table,
)
from .multigraph import Multigraph, format_graph_text, parse_graph_text

__version__ = "1.0.0"

__all__ = [
    "BicircularMatroid",
    "ColineReport",
    "DoubleCircuitCensus",
    "DoubleCircuitReport",
    "GenerationError",
    "GeneratorSpec",
    "GraphFormatError",
    "InternalInvariantError",
    "Matroid",
    "Multigraph",
    "NAMED",
    "ResourceLimitError",
    "analyze",
    "analyze_graph",
    "banana",
    "bouquet",
    "build",
    "census_for",
    "complete",
    "cycle",
    "disjoint_union",
    "dodecahedron",
    "duality_exhaustive",
    "enumerate_oracle",
    "enumerate_structural",
    "format_graph_text",
    "from_bicircular",
    "from_rank_table",
    "handcuff",
    "max_degree",
    "parse_graph_text",
    "petersen",
    "random_multigraph",
    "random_with_min_girth",
    "search_sweep",
    "structural_circuits_within",
    "theta",
    "verify_claims",
    "__version__",
]
