"""Exact invariants of spatial polygon spaces N(l).

Genetic codes of generic length vectors, integral cohomology and complex
K-theory ring presentations, Gamma-class 2-adic nonimmersion bounds, and the
mod-4 obstruction deciding immersions in R^(4m-2) -- all in exact rational
arithmetic.
"""

from .exact import INFINITY, TruncatedSeries, alpha, binom, nu2, series_pow
from .genetics import (
    GenericityError,
    GeneticCode,
    LengthVector,
    SubgeeLattice,
    Unrealizable,
    enumerate_codes,
    format_code,
    genetic_code,
    is_short,
    leq_sets,
    parse_code,
    realize,
    subgee_lattice,
)
from .cohomology import (
    CohContext,
    CohElement,
    build_context,
    chern_normal,
    chern_tangent,
    coh_mul,
    relation_check_family,
    sq2,
    sw_classes,
)
from .ktheory import (
    FAMILY_NK,
    FAMILY_NK1,
    GENERAL,
    KContext,
    KElement,
    chern_character,
    integrality_gap,
    k_context,
    k_mul,
    pure_beta_part,
)
from .immersion import (
    DOES_NOT_IMMERSE,
    IMMERSES,
    ImmersionReport,
    M_formula,
    build_report,
    gamma_normal,
    gamma_tangent,
    immerses_in_4m_minus_2,
    nonimmersion_dim,
    refined_nk1_certificate,
    sw_nonimmersion_dim,
    table1,
)

__version__ = "0.1.0"
