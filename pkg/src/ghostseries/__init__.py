"""Exact ghost-series slope data at arithmetic weights.

The package computes dimension sequences, valuations of ghost coefficients,
Newton polygons with certified truncation, near-Steinberg ranges, and runs a
harness that checks the local constancy of slope multisets on explicit
weight pairs.
"""

from ghostseries.params import (
    DerivedConstants,
    GhostParams,
    ParameterError,
    derive,
    validate,
)
from ghostseries.dims import DimTriple, Weight, d_iw, d_new, d_ur, dims, multiplicity, support
from ghostseries.valuation import INF, max_vp_interval, sum_vp, vp, vp_weight_diff
from ghostseries.ghost import (
    DeltaProfile,
    coefficient_valuations,
    delta_prime,
    delta_profile,
    gn_hat_valuation,
    gn_valuation,
)
from ghostseries.hull import lower_hull
from ghostseries.newton import (
    CertificationError,
    NewtonPolygon,
    SlopeMultiset,
    certified_slopes,
    ghost_np,
    tail_lower_bound,
)
from ghostseries.steinberg import (
    NSRange,
    all_ns_ranges,
    exclusion_check,
    l_value,
    maximal_ns_ranges,
    ns_range,
    vertex_correspondence,
)
from ghostseries.verify import (
    CheckResult,
    VerificationReport,
    WeightFamily,
    check_local_constancy,
    check_main_proposition,
    figure_constants,
    halfint_refinement_check,
    lemma_suite,
    slope_multisets_equal,
)

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "VerificationReport",
    "WeightFamily",
    "check_local_constancy",
    "check_main_proposition",
    "figure_constants",
    "halfint_refinement_check",
    "lemma_suite",
    "slope_multisets_equal",
    "INF",
    "CertificationError",
    "DeltaProfile",
    "DerivedConstants",
    "DimTriple",
    "GhostParams",
    "NSRange",
    "NewtonPolygon",
    "ParameterError",
    "SlopeMultiset",
    "Weight",
    "all_ns_ranges",
    "certified_slopes",
    "coefficient_valuations",
    "d_iw",
    "d_new",
    "d_ur",
    "delta_prime",
    "delta_profile",
    "derive",
    "dims",
    "exclusion_check",
    "ghost_np",
    "gn_hat_valuation",
    "gn_valuation",
    "l_value",
    "lower_hull",
    "max_vp_interval",
    "maximal_ns_ranges",
    "multiplicity",
    "ns_range",
    "sum_vp",
    "support",
    "tail_lower_bound",
    "validate",
    "vertex_correspondence",
    "vp",
    "vp_weight_diff",
]
