"""Exact domination versus independent domination toolkit for regular graphs."""

from .bitset import bit, full_mask, iter_bits, mask_of, popcount, vertex_list
from .errors import (
    CapExceeded,
    CaseMismatch,
    DegreeTooSmall,
    DomratioError,
    EmptySet,
    InfeasibleSpec,
    IsolatedVertex,
    MalformedGraph6,
    NotConnected,
    NotDominating,
    NotRegular,
    RetriesExhausted,
    SeedNotIndependent,
    SolveTimeout,
    TooLarge,
)
from .generate import (
    EnumSpec,
    RNG_ALGORITHM,
    SampleSpec,
    default_cap,
    enumerate_all_graphs,
    enumerate_connected_regular,
    sample_random_regular,
)
from .graph import (
    Graph,
    induced_subgraph,
    is_connected,
    is_kkk,
    lift_mask,
    regularity,
)
from .graph6 import encode, parse, read_lines, write_lines
from .proofs import (
    DENSE_COUNTING,
    SPARSE_CONSTRUCTION,
    ExtremalAudit,
    ProofTrace,
    construct_independent_dominating,
    dense_counting_trace,
    extremal_audit,
    furuya_check,
    induced_edge_count,
    ratio_compare,
    rosenberg_witness,
    southey_henning_check,
    sparse_construction_trace,
)
from .solvers import (
    SolveCertificate,
    greedy_maximal_independent,
    is_dominating,
    is_independent,
    max_independent_set,
    min_dominating_set,
    min_independent_dominating_set,
    validate_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "CaseMismatch",
    "DENSE_COUNTING",
    "DegreeTooSmall",
    "DomratioError",
    "EmptySet",
    "EnumSpec",
    "ExtremalAudit",
    "Graph",
    "InfeasibleSpec",
    "IsolatedVertex",
    "MalformedGraph6",
    "NotConnected",
    "NotDominating",
    "NotRegular",
    "ProofTrace",
    "RNG_ALGORITHM",
    "RetriesExhausted",
    "SPARSE_CONSTRUCTION",
    "SampleSpec",
    "SeedNotIndependent",
    "SolveCertificate",
    "SolveTimeout",
    "TooLarge",
    "bit",
    "construct_independent_dominating",
    "default_cap",
    "dense_counting_trace",
    "encode",
    "enumerate_all_graphs",
    "enumerate_connected_regular",
    "extremal_audit",
    "full_mask",
    "furuya_check",
    "greedy_maximal_independent",
    "induced_edge_count",
    "induced_subgraph",
    "is_connected",
    "is_dominating",
    "is_independent",
    "is_kkk",
    "iter_bits",
    "lift_mask",
    "mask_of",
    "max_independent_set",
    "min_dominating_set",
    "min_independent_dominating_set",
    "parse",
    "popcount",
    "ratio_compare",
    "read_lines",
    "regularity",
    "rosenberg_witness",
    "sample_random_regular",
    "southey_henning_check",
    "sparse_construction_trace",
    "validate_certificate",
    "vertex_list",
    "write_lines",
]
