"""Verification of error-detection properties for hypergraph-state quantum codes."""

from .detection import (
    DetectionVerdict,
    KernelBasis,
    LinearSystem,
    build_detection_system,
    build_homomorphism,
    detection_radius,
    enumerate_detected,
    is_detected,
    kernel_mod_d,
)
from .gatecost import CostReport, clique_cost, compare, hyper_cost
from .group import GroupElement, GroupTuple, Modulus, bicharacter, check_nondegeneracy
from .hypergraph import (
    ErrorConfiguration,
    GraphError,
    Hypergraph,
    edge_indicator,
    neighbor_indicator,
    neighbors,
    parse_graph,
    ring_code,
    serialize_graph,
)
from .statesim import (
    FactorizationReport,
    IsometryMatrix,
    StateVector,
    apply_ckz,
    encode,
    hypergraph_state,
    isometry_matrix,
    kl_factorization_check,
    verify_stabilizer,
)

__version__ = "0.1.0"
