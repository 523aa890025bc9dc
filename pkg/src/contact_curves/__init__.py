"""Exact counts of rational contact curves in odd-dimensional projective space."""

__version__ = "0.1.0"

from .bott import (
    CountResult,
    IncidenceSpec,
    RunConfig,
    all_specs,
    count,
    count_many,
    draw_weights,
    full_table,
    graph_contribution,
    validate_spec,
)
from .cache import cached_graphs, load_census, save_census
from .census import ColoredTree, GraphClass, automorphism_order, enumerate_graphs
from .classes import (
    DegenerateWeightsError,
    WeightAssignment,
    incidence_class,
    normal_bundle_euler,
    obstruction_euler,
)
from .tables import KNOWN_COUNTS

__all__ = [
    "KNOWN_COUNTS",
    "ColoredTree",
    "CountResult",
    "DegenerateWeightsError",
    "GraphClass",
    "IncidenceSpec",
    "RunConfig",
    "WeightAssignment",
    "all_specs",
    "automorphism_order",
    "cached_graphs",
    "count",
    "count_many",
    "draw_weights",
    "enumerate_graphs",
    "full_table",
    "graph_contribution",
    "incidence_class",
    "load_census",
    "normal_bundle_euler",
    "obstruction_euler",
    "save_census",
    "validate_spec",
]
