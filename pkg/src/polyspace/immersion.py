"""Immersion and nonimmersion dimensions for spatial polygon spaces.

The nonimmersion side divides powers of 2 out of the Gamma class of the
stable normal bundle: Gamma is multiplicative with Gamma(L) = 1 + (L-1)/2 on
line bundles, and 2^s Gamma(theta) is integral whenever theta is stably a
bundle of real dimension 2s+1.  A coordinate of Gamma(eta) with 2-adic
valuation -t therefore forbids an immersion in R^(2m+2t-1).  The immersion
side is the mod-4 obstruction criterion in codimension 2m-2, decided exactly
from c_m(eta), Sq^2, and w_2(eta).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cohomology import CohContext, chern_normal, sq2, w2_normal
from .exact import INFINITY, alpha, binom, format_rational, nu2, series_pow, TruncatedSeries
from .genetics import GeneticCode, LengthVector, SubgeeLattice, genetic_code, mask_of
from .ktheory import (
    FAMILY_NK,
    FAMILY_NK1,
    GENERAL,
    KContext,
    KElement,
    _classify_family,
    integrality_gap,
    k_inverse,
    pure_beta_part,
)

IMMERSES = "Immerses"
DOES_NOT_IMMERSE = "DoesNotImmerse"


def gamma_normal(kctx: KContext) -> KElement:
    """Gamma class of the stable normal bundle, reduced to basis coordinates:
    product over singleton subgees i of (1+alpha_i)^-1, times (1+beta/2)^-(m+1).

    The tangent bundle is stably a sum of line bundles L_i^2 L_R (one per
    singleton subgee) and copies of L_R, and each Gamma(L_i^2 L_R) factors as
    (1+alpha_i)(1+beta/2)."""
    total = _beta_half_power(kctx, -(kctx.m + 1))
    for i in range(1, kctx.k + 1):
        total = total * k_inverse(kctx.one() + kctx.gen_alpha(i))
    return total


def gamma_tangent(kctx: KContext) -> KElement:
    """Gamma class of the tangent bundle (the multiplicative inverse)."""
    total = _beta_half_power(kctx, kctx.m + 1)
    for i in range(1, kctx.k + 1):
        total = total * (kctx.one() + kctx.gen_alpha(i))
    return total


def _beta_half_power(kctx: KContext, e: int) -> KElement:
    """(1 + beta/2)^e expanded exactly and reduced in the context."""
    deg = kctx.truncation
    series = series_pow(TruncatedSeries(deg, [1, Fraction(1, 2)]), e)
    raw = {(j, ()): series[j] for j in range(deg + 1)}
    return kctx.from_raw(raw)


def strongest_mode(code: GeneticCode) -> str:
    fam = _classify_family(code)
    if fam is not None:
        return fam[0]
    return GENERAL


def gamma_gap(code: GeneticCode, kctx: KContext | None = None) -> tuple[int, str]:
    """The certified power of 2 dividing out of Gamma(eta), and the mode used.

    Family presentations are complete, so every basis coordinate counts; the
    general quotient only certifies pure beta-power coordinates (coordinates
    involving alphas live in degrees where the truncated presentation is not
    known to be faithful)."""
    mode = kctx.mode if kctx is not None else strongest_mode(code)
    if kctx is None:
        kctx = KContext(code, mode)
    g = gamma_normal(kctx)
    if mode == GENERAL:
        return integrality_gap(pure_beta_part(g)), mode
    return integrality_gap(g), mode


def nonimmersion_dim(code: GeneticCode) -> int:
    """Best nonimmersion dimension 2m+2t-1 from the Gamma class.

    2^(t-1) Gamma(eta) non-integral rules out stable bundles of real
    dimension 2(t-1)+1, and with them normal bundles of immersions in any
    smaller codimension, so one dimension summarizes the obstruction."""
    t, _ = gamma_gap(code)
    return 2 * (code.n - 3) + 2 * t - 1


def M_formula(m: int, s: int) -> int:
    """max(i - nu2(binom(m+i, i))) over 0 <= i <= m-s."""
    if not 0 <= s <= m:
        raise ValueError(f"need 0 <= s <= m, got s={s}, m={m}")
    return max(i - nu2(binom(m + i, i)) for i in range(m - s + 1))


def M_formula_dim(m: int, s: int) -> int:
    return 2 * m + 2 * M_formula(m, s) - 1


def table1(m_range, s_range) -> list[list[int]]:
    """Grid of nonimmersion dimensions 2m+2M-1; rows follow m_range, columns
    s_range."""
    return [[M_formula_dim(m, s) for s in s_range] for m in m_range]


def sw_nonimmersion_dim(m: int, s: int) -> int:
    """Largest nonimmersion dimension visible to Stiefel-Whitney classes:
    2m+2i-1 for the top i <= m-s with binom(m+i, i) odd, i.e. the largest
    nonvanishing dual class of (1+R)^-(m+1)."""
    if not 0 <= s <= m:
        raise ValueError(f"need 0 <= s <= m, got s={s}, m={m}")
    best = max(i for i in range(m - s + 1) if binom(m + i, i) % 2 == 1)
    return 2 * m + 2 * best - 1


@dataclass
class Nk1Certificate:
    """Valuation trace for the refined {{n,k,1}} analysis: the coordinate of
    alpha_k^(m-1) in Gamma(eta), into which beta^(m-1) collapses."""

    n: int
    k: int
    m: int
    coordinate: Fraction
    valuation: object  # int, or INFINITY when the coordinate vanishes
    expected: int  # alpha(m) - m
    certified: bool  # valuation equals the expected value exactly


def refined_nk1_certificate(n: int, k: int) -> Nk1Certificate:
    if not 1 < k < n:
        raise ValueError(f"the {{n,k,1}} family needs 1 < k < n, got k={k}")
    m = n - 3
    code = GeneticCode(n, [mask_of([n, k, 1])])
    kctx = KContext(code, FAMILY_NK1)
    g = gamma_normal(kctx)
    coord = g.coefficient((0, ((k, m - 1),)))
    val = nu2(coord)
    expected = alpha(m) - m
    return Nk1Certificate(n, k, m, coord, val, expected, val == expected)


def immerses_in_4m_minus_2(code: GeneticCode, cctx: CohContext | None = None) -> str:
    """Decide the immersion in R^(4m-2), n >= 5.

    For odd m the class c_m(eta) mod 2 is the whole obstruction.  For even m
    the obstruction is c_m(eta) mod 4 up to the indeterminacy
    {Sq^2 y + w_2(eta) y}, computed as an exact linear image in the one-
    dimensional top mod-2 cohomology."""
    if code.n < 5:
        raise ValueError(f"the codimension 2m-2 criterion needs n >= 5, got n={code.n}")
    if cctx is None:
        cctx = CohContext(code)
    m = cctx.m
    c_eta = chern_normal(cctx)
    top = c_eta.grading_component(m).coordinate_vector(m)
    assert len(top) == 1
    c = top[0]
    c = c.numerator if isinstance(c, Fraction) else int(c)
    if m % 2 == 1:
        return IMMERSES if c % 2 == 0 else DOES_NOT_IMMERSE
    if c % 2 != 0:
        return DOES_NOT_IMMERSE
    z = (c // 2) % 2
    if z == 0:
        return IMMERSES
    w2 = w2_normal(cctx)
    for mono in cctx.basis_monomials(m - 1):
        y = cctx.from_raw({mono: 1}).reduce_mod(2)
        image = (sq2(y) + w2 * y).reduce_mod(2)
        if not image.is_zero():
            return IMMERSES
    return DOES_NOT_IMMERSE


@dataclass
class ImmersionReport:
    """Everything the catalog records about one polygon space."""

    code: GeneticCode
    n: int
    m: int
    s: int
    k: int
    betti: list[int]
    gamma_gap: int
    nonimmersion_dim: int
    m_formula_dim: int
    sw_dim: int
    immerses_4m_minus_2: str | None
    mode: str
    truncation_degree: int
    lengths: LengthVector | None = None

    def to_json_dict(self) -> dict:
        return {
            "code": self.code.to_json_dict(),
            "n": self.n,
            "m": self.m,
            "s": self.s,
            "k": self.k,
            "betti": list(self.betti),
            "gamma_gap": self.gamma_gap,
            "nonimmersion_dim": self.nonimmersion_dim,
            "m_formula_dim": self.m_formula_dim,
            "sw_dim": self.sw_dim,
            "immerses_4m_minus_2": self.immerses_4m_minus_2,
            "provenance": {
                "mode": self.mode,
                "truncation_degree": self.truncation_degree,
            },
            "lengths": (
                [format_rational(x) for x in self.lengths.lengths]
                if self.lengths is not None
                else None
            ),
        }


def build_report(code: GeneticCode, lengths: LengthVector | None = None) -> ImmersionReport:
    """Full per-space record: Betti numbers, Gamma valuation data, the three
    nonimmersion dimensions, and the R^(4m-2) verdict (n >= 5)."""
    lattice = SubgeeLattice(code)
    cctx = CohContext(code, lattice)
    mode = strongest_mode(code)
    kctx = KContext(code, mode)
    gap, _ = gamma_gap(code, kctx)
    m = cctx.m
    verdict = immerses_in_4m_minus_2(code, cctx) if code.n >= 5 else None
    if lengths is not None and genetic_code(lengths) != code:
        raise ValueError("provided lengths do not realize the code")
    return ImmersionReport(
        code=code,
        n=code.n,
        m=m,
        s=lattice.s,
        k=lattice.k,
        betti=cctx.betti_numbers(),
        gamma_gap=gap,
        nonimmersion_dim=2 * m + 2 * gap - 1,
        m_formula_dim=M_formula_dim(m, lattice.s),
        sw_dim=sw_nonimmersion_dim(m, lattice.s),
        immerses_4m_minus_2=verdict,
        mode=mode,
        truncation_degree=kctx.truncation,
        lengths=lengths,
    )
