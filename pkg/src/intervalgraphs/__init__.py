"""Interval graphs: recognition with certificates, exact unlabeled counting,
a certified colored lower-bound family, and log-domain bound evaluation."""

from .bounds import (
    BoundReport,
    ChainReport,
    best_k,
    bounds_table,
    chain_report,
    default_k,
    factorial_lower_bound,
    family_lower_bound,
    feasible_anchor_counts,
    log_binomial,
    log_double_factorial,
)
from .canonical import (
    CanonicalSizeError,
    canonical_form,
    code_hex,
    colored_canonical_form,
    decode_canonical,
)
from .construction import (
    AnchorSet,
    ColoredIntervalGraph,
    ConstructionParams,
    InfeasibleParametersError,
    WhiteFamily,
    anchor_set,
    build_colored_graph,
    decode_white_vertex,
    enumerate_family,
    family_size,
    recover_white_indices,
    white_family,
)
from .enumeration import (
    CountResult,
    EndpointMatching,
    EnumerationCapError,
    count_interval_graphs,
    enumerate_interval_graphs,
    enumerate_matchings,
    realization_from_matching,
)
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .graphs import Color, ColoredGraph, Graph, IntervalRealization, intersection_graph
from .recognition import (
    RecognitionResult,
    is_chordal,
    maximal_cliques,
    recognize,
    verify_realization,
)

__version__ = "0.1.0"

__all__ = [
    "AnchorSet",
    "BoundReport",
    "CanonicalSizeError",
    "ChainReport",
    "Color",
    "ColoredGraph",
    "ColoredIntervalGraph",
    "ConstructionParams",
    "CountResult",
    "EndpointMatching",
    "EnumerationCapError",
    "Graph",
    "Graph6Error",
    "InfeasibleParametersError",
    "IntervalRealization",
    "RecognitionResult",
    "WhiteFamily",
    "anchor_set",
    "best_k",
    "bounds_table",
    "build_colored_graph",
    "canonical_form",
    "chain_report",
    "code_hex",
    "colored_canonical_form",
    "count_interval_graphs",
    "decode_canonical",
    "decode_white_vertex",
    "default_k",
    "emit_graph6",
    "enumerate_family",
    "enumerate_interval_graphs",
    "enumerate_matchings",
    "factorial_lower_bound",
    "family_lower_bound",
    "family_size",
    "feasible_anchor_counts",
    "intersection_graph",
    "is_chordal",
    "log_binomial",
    "log_double_factorial",
    "maximal_cliques",
    "parse_graph6",
    "realization_from_matching",
    "recognize",
    "recover_white_indices",
    "verify_realization",
    "white_family",
]
