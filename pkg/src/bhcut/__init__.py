"""Balanced-hypercube conditional-connectivity toolkit."""

from .analysis import (
    ComponentReport,
    CutVerdict,
    components,
    is_g_extra_cut,
    is_restricted_h_cut,
    partner_closure_check,
)
from .constructions import (
    anomaly_common_neighbors,
    build_cut,
    build_T,
    verify_upper_bound,
)
from .solver import (
    SolverResult,
    brute_force_min_cut,
    build_quotient,
    g_extra_min_cut,
    quotient_min_restricted_cut,
    verify_lift_equivalence,
)
from .topology import (
    CubeGraph,
    bipartition,
    build_direct,
    build_recursive,
    neighbors_direct,
    partner,
    split_subcubes,
)

__version__ = "0.1.0"

__all__ = [
    "ComponentReport", "CutVerdict", "components", "is_g_extra_cut",
    "is_restricted_h_cut", "partner_closure_check",
    "anomaly_common_neighbors", "build_cut", "build_T", "verify_upper_bound",
    "SolverResult", "brute_force_min_cut", "build_quotient",
    "g_extra_min_cut", "quotient_min_restricted_cut",
    "verify_lift_equivalence",
    "CubeGraph", "bipartition", "build_direct", "build_recursive",
    "neighbors_direct", "partner", "split_subcubes",
]
