"""Dominant monomial ideals: decision, enumeration, counting, and sampling.

A monomial ideal is dominant when each minimal generator is the strict
winner in some variable: its exponent there exceeds that of every other
generator.  The package decides dominance, enumerates all dominant ideals
with a prescribed lcm, evaluates and regenerates closed-form counts,
certifies associated-prime heights with dominating witnesses, and samples
random monomial ideals for dominance-frequency sweeps.
"""

from .dominance import (
    dominant_variables,
    footprint,
    footprint_profile,
    is_dominant_ideal,
    is_dominant_set,
    low_or_max_signature,
    max_dominant_subset,
)
from .enumeration import (
    axis_candidates,
    count_dominant_with_lcm,
    enumerate_dominant_with_lcm,
    footprint_histogram,
    iter_dominant_with_lcm,
    low_or_max_histogram,
)
from .formulas import (
    CountPolynomial,
    closed_count,
    compare_formula_vs_enumeration,
    symbolic_formula,
    theorem_polynomial,
)
from .models import (
    ModelSpec,
    SeedSpec,
    probability_grid_basic,
    probability_grid_graded,
    sample,
    sample_basic,
    sample_fixed_count,
    sample_graded,
)
from .monomials import (
    lcm_set,
    minimalize,
    parse_ideal,
    parse_monomial,
    render_ideal,
    render_monomial,
)
from .primes import (
    DominatingWitness,
    associated_prime_heights,
    associated_primes_oracle,
    dominating_witness,
    has_associated_prime_of_height,
    localization_pdim_bound,
    pdim_is_max,
)

__version__ = "0.1.0"

__all__ = [
    "CountPolynomial",
    "DominatingWitness",
    "ModelSpec",
    "SeedSpec",
    "associated_prime_heights",
    "associated_primes_oracle",
    "axis_candidates",
    "closed_count",
    "compare_formula_vs_enumeration",
    "count_dominant_with_lcm",
    "dominant_variables",
    "dominating_witness",
    "enumerate_dominant_with_lcm",
    "footprint",
    "footprint_histogram",
    "footprint_profile",
    "has_associated_prime_of_height",
    "is_dominant_ideal",
    "is_dominant_set",
    "iter_dominant_with_lcm",
    "lcm_set",
    "localization_pdim_bound",
    "low_or_max_histogram",
    "low_or_max_signature",
    "max_dominant_subset",
    "minimalize",
    "parse_ideal",
    "parse_monomial",
    "pdim_is_max",
    "probability_grid_basic",
    "probability_grid_graded",
    "render_ideal",
    "render_monomial",
    "sample",
    "sample_basic",
    "sample_fixed_count",
    "sample_graded",
    "symbolic_formula",
    "theorem_polynomial",
]
