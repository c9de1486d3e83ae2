"""Exact graph resilience metrics: vertex attack tolerance, conductance,
spectral gap, and mechanical verification of the inequalities tying them
together on regular graphs."""

from .errors import (
    BadParameter,
    BadVertexId,
    DisconnectedInput,
    DuplicateEdge,
    EmptyRemainder,
    EmptySet,
    FullSet,
    IsolatedVertex,
    NoConvergence,
    NonPositiveWeight,
    NotRegular,
    RetryLimitExceeded,
    SelfLoop,
    TooLarge,
    TrivialGraph,
    VattolError,
    VolumeTooLarge,
)
from .generators import (
    FamilySpec,
    build_family,
    circulant,
    complete,
    complete_bipartite,
    connected_random_regular,
    cycle,
    enumerate_small_regular,
    hypercube,
    parse_family_spec,
    path,
    petersen,
    random_regular,
    star,
)
from .graph import (
    Graph,
    VertexMask,
    build_graph,
    components,
    cut_size,
    full_mask,
    is_connected,
    largest_component,
    mask_from_vertices,
    read_edge_list,
    read_edge_list_path,
    regularity,
    restrict_to_largest_component,
    vertices_from_mask,
    volume,
    write_edge_list,
    write_edge_list_path,
)
from .metrics import (
    MetricResult,
    WeightedValue,
    alpha_beta_vat_exact,
    alpha_beta_weighted_vat_exact,
    conductance_exact,
    conductance_minimizers,
    enumeration_limit,
    set_conductance,
    set_vat,
    vat_exact,
    vat_witness_components,
    weighted_vat_exact,
)
from .spectral import (
    SpectralResult,
    SweepResult,
    lambda2,
    normalized_adjacency,
    spectral_gap,
    sweep_conductance,
)
from .verify import (
    CHECK_GROUPS,
    MetricCache,
    SuiteResult,
    TheoremReport,
    check_cheeger,
    check_connected_minimizer,
    check_fragment_bounds,
    check_spectral_vat,
    check_value_ranges,
    check_vat_lower,
    check_vat_upper,
    evaluate_graph,
    iter_suite,
    mediant_between,
    run_suite,
    series_lower_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BadParameter",
    "BadVertexId",
    "DisconnectedInput",
    "DuplicateEdge",
    "EmptyRemainder",
    "EmptySet",
    "FullSet",
    "IsolatedVertex",
    "NoConvergence",
    "NonPositiveWeight",
    "NotRegular",
    "RetryLimitExceeded",
    "SelfLoop",
    "TooLarge",
    "TrivialGraph",
    "VattolError",
    "VolumeTooLarge",
    "FamilySpec",
    "build_family",
    "circulant",
    "complete",
    "complete_bipartite",
    "connected_random_regular",
    "cycle",
    "enumerate_small_regular",
    "hypercube",
    "parse_family_spec",
    "path",
    "petersen",
    "random_regular",
    "star",
    "Graph",
    "VertexMask",
    "build_graph",
    "components",
    "cut_size",
    "full_mask",
    "is_connected",
    "largest_component",
    "mask_from_vertices",
    "read_edge_list",
    "read_edge_list_path",
    "regularity",
    "restrict_to_largest_component",
    "vertices_from_mask",
    "volume",
    "write_edge_list",
    "write_edge_list_path",
    "MetricResult",
    "WeightedValue",
    "alpha_beta_vat_exact",
    "alpha_beta_weighted_vat_exact",
    "conductance_exact",
    "conductance_minimizers",
    "enumeration_limit",
    "set_conductance",
    "set_vat",
    "vat_exact",
    "vat_witness_components",
    "weighted_vat_exact",
    "SpectralResult",
    "SweepResult",
    "lambda2",
    "normalized_adjacency",
    "spectral_gap",
    "sweep_conductance",
    "CHECK_GROUPS",
    "MetricCache",
    "SuiteResult",
    "TheoremReport",
    "check_cheeger",
    "check_connected_minimizer",
    "check_fragment_bounds",
    "check_spectral_vat",
    "check_value_ranges",
    "check_vat_lower",
    "check_vat_upper",
    "evaluate_graph",
    "iter_suite",
    "mediant_between",
    "run_suite",
    "series_lower_bound",
    "standard_corpus",
    "theorem_corpus",
]

from .corpus import standard_corpus, theorem_corpus  # noqa: E402
