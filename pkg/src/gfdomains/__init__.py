"""Generalised Fishburn Condorcet domains, built from never-condition schemes and from
necklaces of black and white beads, with exhaustive property checks."""

from .analysis import (
    CircularArrangement,
    PropertyReport,
    full_report,
    has_maximal_width,
    is_condorcet,
    is_copious,
    is_directly_connected,
    is_maximal_condorcet,
    is_peak_pit,
    is_semi_connected,
    is_spoc,
    is_spoc_on,
)
from .cardinality import census, extremality_report, fishburn_formula
from .necklace import Necklace, classical_single_peaked, enumerate_w_convex, flags_to_domain, gf_necklace, is_arc, is_w_convex
from .never import (
    CompleteNeverSet,
    KSubset,
    NeverCondition,
    domain_of_scheme,
    fishburn_K,
    gf_scheme,
    infer_satisfied_conditions,
    satisfies,
)
from .orders import (
    Domain,
    LinearOrder,
    Triple,
    are_adjacent,
    geodesic_connected,
    kendall_distance,
    make_order,
    prefix_set,
    restrict,
    restrict_domain,
    reverse,
    upper_contour,
)
from .single_crossing import SwapSequence, chain_to_domain, enumerate_maximal_chains, relay_chain, verify_thm7

__version__ = "0.1.0"
