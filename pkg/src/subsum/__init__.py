"""Subgroup sum graphs of finite abelian groups.

Build the graphs on (G, H), predict their invariants from the coset census,
and check every prediction against brute force.
"""

from .closed_form import (
    predict_clique_independence,
    predict_components,
    predict_connectivity_diameter,
    predict_domination,
    predict_girth,
    predict_invariants,
    predict_prime_sum,
    predict_spectrum,
)
from .errors import SubsumError
from .graphs import (
    ComponentProfile,
    Graph,
    Kind,
    build_extended,
    build_generalized,
    build_subgroup_sum,
    complement,
    components_with_profiles,
)
from .groups import (
    CosetStats,
    Group,
    Subgroup,
    abelian_groups,
    classify_cosets,
    involution_count,
    make_group,
    subgroup_generated,
    subgroup_nG,
)
from .oracle import (
    oracle_clique,
    oracle_domination,
    oracle_girth_diameter,
    oracle_independence_chromatic,
    oracle_invariants,
    oracle_perfectness,
    oracle_spectrum,
)
from .reconstruct import RecoveredParams, analyze_extended, analyze_subgroup_sum
from .spectrum import QuadraticRoot, SpectrumSpec

__version__ = "0.1.0"
