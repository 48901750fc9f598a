"""The regression suite behind the `verify` CLI command.

Each check returns (ok, detail).  The acceptance tests call the same
functions, so `polyspace verify` and the test suite certify the same facts:
the published table of nonimmersion dimensions, the family formulas for
genetic codes, the enumeration count for n=7, the ring oracles, and the
immersion verdicts.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from . import cohomology as coh
from . import immersion as imm
from . import ktheory as kt
from .exact import INFINITY, TruncatedSeries, alpha, binom, nu2, series_pow
from .genetics import (
    GeneticCode,
    LengthVector,
    Unrealizable,
    enumerate_codes,
    genetic_code,
    is_short,
    leq_sets,
    mask_of,
    indices_desc,
    realize,
)

#: Published nonimmersion dimensions 2m+2M-1 for m = 16..31 (rows) and
#: largest-gee-size s = 1..8 (columns).
TABLE1_EXPECTED = [
    [61, 59, 57, 55, 53, 51, 49, 47],
    [63, 61, 61, 57, 57, 53, 53, 49],
    [67, 65, 61, 61, 61, 59, 55, 53],
    [69, 67, 67, 61, 61, 61, 61, 55],
    [75, 73, 71, 69, 63, 61, 61, 61],
    [77, 75, 75, 71, 71, 63, 63, 61],
    [81, 79, 75, 75, 75, 73, 65, 63],
    [83, 81, 81, 75, 75, 75, 75, 65],
    [91, 89, 87, 85, 83, 81, 79, 77],
    [93, 91, 91, 87, 87, 83, 83, 79],
    [97, 95, 91, 91, 91, 89, 85, 83],
    [99, 97, 97, 91, 91, 91, 91, 85],
    [105, 103, 101, 99, 95, 93, 91, 89],
    [107, 105, 105, 101, 101, 95, 95, 91],
    [111, 109, 105, 105, 105, 103, 97, 95],
    [113, 111, 111, 105, 105, 105, 105, 97],
]

#: K-theoretic s=1 nonimmersion dimensions for m = 16..31.
KDIMS_16_31 = [61, 63, 67, 69, 75, 77, 81, 83, 91, 93, 97, 99, 105, 107, 111, 113]

ENUMERATION_COUNT_N7 = 134


def family_nk_vector(n: int, k: int) -> LengthVector:
    """k ones, n-k-1 twos, and 2n-k-5; its genetic code is {{n,k}}."""
    return LengthVector([1] * k + [2] * (n - k - 1) + [2 * n - k - 5])


def family_nk1_vector(n: int, k: int) -> LengthVector:
    """1/2, then k-1 ones, n-k-1 twos, and 2n-k-6; its code is {{n,k,1}}."""
    return LengthVector(
        [Fraction(1, 2)] + [1] * (k - 1) + [2] * (n - k - 1) + [2 * n - k - 6]
    )


def nk_code(n: int, k: int) -> GeneticCode:
    return GeneticCode(n, [mask_of([n, k])])


def nk1_code(n: int, k: int) -> GeneticCode:
    return GeneticCode(n, [mask_of([n, k, 1])])


def valid_nk_range(n: int) -> range:
    return range(1, n)


def valid_nk1_range(n: int) -> range:
    return range(2, min(n - 1, 2 * n - 7) + 1)


@lru_cache(maxsize=None)
def cached_enumerate(n: int):
    return tuple(enumerate_codes(n))


def kummer_carries(a: int, b: int) -> int:
    """Number of carries when adding a and b in base 2; equals nu2 of the
    binomial coefficient binom(a+b, a).  Independent oracle for nu2/binom."""
    carries = 0
    carry = 0
    while a or b or carry:
        s = (a & 1) + (b & 1) + carry
        carry = 1 if s >= 2 else 0
        carries += carry
        a >>= 1
        b >>= 1
    return carries


# -- acceptance criteria -----------------------------------------------------


def crit_family_codes(n_hi: int = 12):
    """Genetic codes of the two parametric length-vector families."""
    for n in range(5, n_hi + 1):
        for k in valid_nk_range(n):
            got = genetic_code(family_nk_vector(n, k))
            if got != nk_code(n, k):
                return False, f"nk family n={n} k={k}: got {got!r}"
        for k in valid_nk1_range(n):
            got = genetic_code(family_nk1_vector(n, k))
            if got != nk1_code(n, k):
                return False, f"nk1 family n={n} k={k}: got {got!r}"
    return True, f"family formulas hold for 5 <= n <= {n_hi}"


def crit_enumeration_count():
    codes = cached_enumerate(7)
    if len(codes) != ENUMERATION_COUNT_N7:
        return False, f"enumerate(7) returned {len(codes)} codes, expected 134"
    return True, "enumerate(7) yields exactly 134 realizable nonempty codes"


def crit_table1():
    got = imm.table1(range(16, 32), range(1, 9))
    if got != TABLE1_EXPECTED:
        bad = [
            (16 + i, 1 + j, got[i][j], TABLE1_EXPECTED[i][j])
            for i in range(16)
            for j in range(8)
            if got[i][j] != TABLE1_EXPECTED[i][j]
        ]
        return False, f"table mismatches (m, s, got, want): {bad[:5]}"
    return True, "all 128 table entries for m=16..31, s=1..8 match"


def crit_thm_nk_dims(n_hi: int = 20):
    """Exact-Gamma nonimmersion dimension for {{n,k}} codes equals
    4m-2*alpha(m)-1, and the closed formula at s=1 agrees."""
    for n in range(5, n_hi + 1):
        m = n - 3
        want = 4 * m - 2 * alpha(m) - 1
        if imm.M_formula_dim(m, 1) != want:
            return False, f"M formula at (m={m}, s=1) is not {want}"
        for k in valid_nk_range(n):
            got = imm.nonimmersion_dim(nk_code(n, k))
            if got != want:
                return False, f"{{n,k}}=({n},{k}): dim {got}, expected {want}"
    return True, f"Gamma dimension = 4m-2a(m)-1 for all {{n,k}}, 5 <= n <= {n_hi}"


def crit_thm_nk1_dims(n_hi: int = 16):
    for n in range(5, n_hi + 1):
        m = n - 3
        best = 4 * m - 2 * alpha(m) - 1
        for k in valid_nk1_range(n):
            got = imm.nonimmersion_dim(nk1_code(n, k))
            if k % 2 == 1:
                if got != best:
                    return False, f"{{n,k,1}}=({n},{k}): dim {got}, expected {best}"
            else:
                if got < best - 2:
                    return False, f"{{n,k,1}}=({n},{k}): dim {got} below {best - 2}"
            cert = imm.refined_nk1_certificate(n, k)
            if cert.certified != (k % 2 == 1):
                return False, (
                    f"refined certificate at ({n},{k}): valuation {cert.valuation}, "
                    f"expected {'=' if k % 2 else '>'} {cert.expected}"
                )
    return True, f"{{n,k,1}} dimensions and refined certificates agree, 5 <= n <= {n_hi}"


def crit_coefficient_bound(m_hi: int = 40):
    """Series bound nu2 of [x^i]((1+2x)/(1+x))^(m+1) >= i + alpha(m) - m for
    i <= m-1, plus the Gould convolution identity on the stated box."""
    for m in range(2, m_hi + 1):
        deg = m - 1
        series = series_pow(TruncatedSeries(deg, [1, 2]), m + 1) * series_pow(
            TruncatedSeries(deg, [1, 1]), -(m + 1)
        )
        for i in range(deg + 1):
            v = nu2(series[i])
            if v is not INFINITY and v < i + alpha(m) - m:
                return False, f"coefficient bound fails at m={m}, i={i}: nu2={v}"
    for x in range(-20, 21):
        for y in range(-20, 21):
            for i in range(0, 13):
                lhs = sum(2**j * binom(x, j) * binom(y, i - j) for j in range(i + 1))
                rhs = sum(binom(x, j) * binom(x + y - j, i - j) for j in range(i + 1))
                if lhs != rhs:
                    return False, f"Gould identity fails at x={x}, y={y}, i={i}"
    return True, f"coefficient bound holds for m <= {m_hi}; Gould identity on the box"


def crit_immersion_verdicts(n_hi: int = 12):
    for n in range(5, n_hi + 1):
        m = n - 3
        two_power = m & (m - 1) == 0
        for k in valid_nk_range(n):
            verdict = imm.immerses_in_4m_minus_2(nk_code(n, k))
            want = imm.DOES_NOT_IMMERSE if (two_power and k % 2 == 0) else imm.IMMERSES
            if verdict != want:
                return False, f"{{n,k}}=({n},{k}): verdict {verdict}, expected {want}"
        for k in valid_nk1_range(n):
            verdict = imm.immerses_in_4m_minus_2(nk1_code(n, k))
            if verdict != imm.IMMERSES:
                return False, f"{{n,k,1}}=({n},{k}): verdict {verdict}, expected Immerses"
    return True, f"R^(4m-2) verdicts match the family classification, 5 <= n <= {n_hi}"


def crit_ring_oracles(n_hi: int = 7):
    """For every enumerated code: Poincare-symmetric Betti numbers with top
    rank 1, torsion-free gradings (enforced at construction via the SNF
    oracle), total Chern classes multiplying to 1, and the Chern character
    sending every family K-relation to zero."""
    for n in range(3, n_hi + 1):
        for code in cached_enumerate(n):
            cctx = coh.CohContext(code)
            betti = cctx.betti_numbers()
            m = cctx.m
            if betti[m] != 1 or any(betti[d] != betti[m - d] for d in range(m + 1)):
                return False, f"{code!r}: Betti numbers {betti} not a Poincare sequence"
            c_tau = coh.chern_tangent(cctx)
            if c_tau * coh.chern_normal(cctx) != cctx.one():
                return False, f"{code!r}: c(tau) * c(eta) != 1"
            mode = imm.strongest_mode(code)
            kctx = kt.KContext(code, mode)
            ch = kt.ChernCharacter(kctx, cctx)
            for rel in kt.context_relations(kctx):
                image = ch.of_raw(rel.raw)
                if not image.is_zero():
                    return False, f"{code!r}: ch({rel.name}) = {image!r} != 0"
    return True, f"ring oracles pass for every enumerated code with n <= {n_hi}"


def crit_sw_comparison():
    sw = [imm.sw_nonimmersion_dim(m, 1) for m in range(16, 32)]
    if max(sw) != 61 or any(d > 61 for d in sw):
        return False, f"SW dimensions for m=16..31: {sw}"
    kdims = [imm.M_formula_dim(m, 1) for m in range(16, 32)]
    if kdims != KDIMS_16_31:
        return False, f"K dimensions for m=16..31: {kdims}"
    return True, "SW caps at 61 on m=16..31 while K-theory reaches 61..113"


# -- property checks ---------------------------------------------------------


def check_valuation_properties(trials: int = 1000, seed: int = 20190113):
    rng = random.Random(seed)

    def rand_rational():
        num = rng.randint(-(2**20), 2**20)
        den = rng.randint(1, 2**20)
        return Fraction(num if num else 1, den)

    for _ in range(trials):
        x, y = rand_rational(), rand_rational()
        if nu2(x * y) != nu2(x) + nu2(y):
            return False, f"multiplicativity fails at {x}, {y}"
        if x + y != 0 and nu2(x + y) < min(nu2(x), nu2(y)):
            return False, f"ultrametric inequality fails at {x}, {y}"
    if nu2(0) is not INFINITY or nu2(Fraction(0)) is not INFINITY:
        return False, "nu2(0) is not the infinite valuation"
    return True, f"nu2 is a valuation on {trials} random rational pairs"


def check_kummer_binomials(m_hi: int = 64):
    for m in range(1, m_hi + 1):
        if nu2(binom(2 * m, m)) != kummer_carries(m, m):
            return False, f"nu2(binom(2m,m)) != carries at m={m}"
        if nu2(binom(2 * m, m)) != alpha(m):
            return False, f"nu2(binom(2m,m)) != alpha(m) at m={m}"
    for m in range(2, 33):
        lhs = binom(-m - 1, m - 1)
        rhs = (-1) ** (m - 1) * binom(2 * m, m) // 2
        if lhs != rhs:
            return False, f"binom(-m-1, m-1) identity fails at m={m}"
    for m in range(4, m_hi + 1):
        if m % 2 == 0 and nu2(binom(2 * m - 2, m - 2)) != alpha(m) - 1:
            return False, f"even-m binomial valuation fails at m={m}"
        if m % 2 == 1 and nu2(binom(2 * m - 3, m - 3)) != alpha(m) - 2:
            return False, f"odd-m binomial valuation fails at m={m}"
    return True, f"binomial valuations match the Kummer carry oracle, m <= {m_hi}"


def check_series_roundtrip(seed: int = 7):
    rng = random.Random(seed)
    for degree in (0, 1, 2, 5, 11, 30):
        coeffs = [1] + [
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(degree)
        ]
        s = TruncatedSeries(degree, coeffs)
        for e in (-7, -1, 2, 13):
            prod = series_pow(s, e) * series_pow(s, -e)
            if prod != TruncatedSeries.one(degree):
                return False, f"series_pow roundtrip fails at degree {degree}, e={e}"
    return True, "series_pow(s,e)*series_pow(s,-e) = 1 at degrees up to 30"


def corpus_50() -> list[LengthVector]:
    """Fixed 50-vector corpus: the two parametric families at small n plus
    seeded random generic integer vectors."""
    vecs: list[LengthVector] = []
    for n in range(5, 9):
        for k in valid_nk_range(n):
            vecs.append(family_nk_vector(n, k))
    for n in range(5, 8):
        for k in valid_nk1_range(n):
            vecs.append(family_nk1_vector(n, k))
    rng = random.Random(1134)
    while len(vecs) < 50:
        n = rng.randint(4, 8)
        cand = LengthVector(sorted(rng.randint(1, 9) for _ in range(n)))
        if cand.is_generic():
            vecs.append(cand)
    return vecs[:50]


def check_genetics_properties():
    from .genetics import down_covers

    for lv in corpus_50():
        n = lv.n
        code = genetic_code(lv)
        nbit = 1 << (n - 1)
        if bool(code.genes) != is_short(lv, nbit):
            return False, f"nonemptiness criterion fails for {lv!r}"
        # Monotone shortness: checking covers suffices by transitivity.
        for mask in range(1, 1 << n):
            if is_short(lv, mask):
                for c in down_covers(mask):
                    if not is_short(lv, c):
                        return False, f"monotonicity fails for {lv!r} at {mask}"
            if is_short(lv, mask) == is_short(lv, ((1 << n) - 1) ^ mask):
                return False, f"short/long dichotomy fails for {lv!r} at {mask}"
    return True, "monotonicity, dichotomy, and nonemptiness hold on the corpus"


def check_realize_roundtrip():
    for lv in corpus_50():
        code = genetic_code(lv)
        if not code.genes:
            continue
        witness = realize(code)
        if isinstance(witness, Unrealizable):
            return False, f"realize failed for {code!r}: {witness.reason}"
        if genetic_code(witness) != code:
            return False, f"realize round-trip failed for {code!r}"
    return True, "realize(genetic_code(l)) round-trips on the 50-vector corpus"


def check_enumeration_small():
    codes4 = cached_enumerate(4)
    want = {GeneticCode(4, [mask_of([4])]), GeneticCode(4, [mask_of([4, 1])])}
    if not want.issubset(set(codes4)):
        return False, f"enumerate(4) = {[repr(c) for c in codes4]}"
    for n in (3, 4, 5, 6):
        codes = cached_enumerate(n)
        if len(set(codes)) != len(codes):
            return False, f"enumerate({n}) contains duplicates"
        if list(codes) != sorted(codes, key=GeneticCode.sort_key):
            return False, f"enumerate({n}) is not canonically sorted"
        for code in codes:
            if not code.is_antichain():
                return False, f"enumerate({n}) produced a non-antichain {code!r}"
            witness = realize(code)
            if isinstance(witness, Unrealizable):
                return False, f"enumerated code {code!r} failed realize()"
            if genetic_code(witness) != code:
                return False, f"enumerated code {code!r} does not round-trip"
    return True, "small-n enumerations are canonical, duplicate-free, realizable"


def check_ring_axioms(seed: int = 42):
    rng = random.Random(seed)
    code = nk1_code(7, 3)
    cctx = coh.CohContext(code)

    def rand_coh():
        acc = cctx.zero()
        for d in range(cctx.m + 1):
            for mono in cctx.basis_monomials(d):
                acc = acc + cctx.from_raw({mono: rng.randint(-3, 3)})
        return acc

    for _ in range(5):
        x, y, z = rand_coh(), rand_coh(), rand_coh()
        if (x * y) * z != x * (y * z) or x * y != y * x:
            return False, "cohomology ring axioms fail"
    for mode, kcode in ((kt.FAMILY_NK, nk_code(7, 4)), (kt.FAMILY_NK1, nk1_code(7, 3)),
                        (kt.GENERAL, GeneticCode(7, [mask_of([7, 6, 5])]))):
        kctx = kt.KContext(kcode, mode)

        def rand_k():
            acc = kctx.zero()
            for mono in kctx.basis:
                if rng.random() < 0.4:
                    acc = acc + kt.KElement(kctx, {mono: Fraction(rng.randint(-3, 3))})
            return acc

        for _ in range(5):
            x, y, z = rand_k(), rand_k(), rand_k()
            if (x * y) * z != x * (y * z) or x * y != y * x:
                return False, f"K-ring axioms fail in mode {mode}"
    return True, "associativity and commutativity hold on random triples"


def check_k_basis_independence():
    """ch maps each stated K basis to a rationally independent set."""
    from .linalg import rational_rank

    for code, mode in (
        (nk_code(6, 3), kt.FAMILY_NK),
        (nk_code(7, 4), kt.FAMILY_NK),
        (nk1_code(7, 3), kt.FAMILY_NK1),
        (GeneticCode(7, [mask_of([7, 6, 5])]), kt.GENERAL),
    ):
        kctx = kt.KContext(code, mode)
        cctx = coh.CohContext(code)
        ch = kt.ChernCharacter(kctx, cctx)
        rows = []
        for mono in kctx.basis:
            el = ch.of_monomial(mono)
            vec = []
            for d in range(cctx.m + 1):
                vec.extend(el.coordinate_vector(d))
            rows.append(vec)
        if rational_rank(rows, len(rows[0])) != len(kctx.basis):
            return False, f"ch images of the {mode} basis are dependent for {code!r}"
    return True, "ch sends each stated K basis to an independent set"


def check_family_general_consistency(seed: int = 11):
    """Products agree between the family ring and the degree-truncated
    general quotient, after expanding family monomials into the general
    basis."""
    rng = random.Random(seed)
    for code, mode in ((nk_code(7, 3), kt.FAMILY_NK), (nk1_code(8, 4), kt.FAMILY_NK1)):
        fctx = kt.KContext(code, mode)
        gctx = kt.KContext(code, kt.GENERAL)

        def to_general(x: kt.KElement) -> kt.KElement:
            acc = gctx.zero()
            for mono, c in x.coeffs.items():
                acc = acc + gctx.from_raw({mono: c})
            return acc

        def rand_poly():
            raw = {}
            for i in range(1, fctx.k + 1):
                raw[(0, ((i, 1),))] = rng.randint(-2, 2)
            raw[(1, ())] = rng.randint(-2, 2)
            raw[(0, ())] = rng.randint(-2, 2)
            return raw

        for _ in range(8):
            raw_x, raw_y = rand_poly(), rand_poly()
            fam = fctx.from_raw(raw_x) * fctx.from_raw(raw_y)
            gen = gctx.from_raw(raw_x) * gctx.from_raw(raw_y)
            if to_general(fam) != gen:
                return False, f"family/general structure constants differ for {code!r}"
    return True, "family rings and the general quotient agree in low degrees"


def check_family_presentations(n_hi: int = 9):
    for n in range(5, n_hi + 1):
        for k in valid_nk_range(n):
            report = coh.relation_check_family(nk_code(n, k))
            if not report.ok:
                return False, f"{{n,k}}=({n},{k}): {report.failures}"
        for k in valid_nk1_range(n):
            report = coh.relation_check_family(nk1_code(n, k))
            if not report.ok:
                return False, f"{{n,k,1}}=({n},{k}): {report.failures}"
    return True, f"family presentations match SNF quotients for 5 <= n <= {n_hi}"


def check_gamma_examples():
    kctx = kt.KContext(nk_code(5, 2), kt.FAMILY_NK)
    g = imm.gamma_normal(kctx)
    if g.coefficient((1, ())) != Fraction(-3, 2):
        return False, f"beta coordinate of Gamma(eta) for {{5,2}}: {g.coefficient((1, ()))}"
    for code, mode in (
        (nk_code(6, 2), kt.FAMILY_NK),
        (nk1_code(7, 4), kt.FAMILY_NK1),
        (GeneticCode(7, [mask_of([7, 6, 5])]), kt.GENERAL),
    ):
        kctx = kt.KContext(code, mode)
        if imm.gamma_normal(kctx) * imm.gamma_tangent(kctx) != kctx.one():
            return False, f"Gamma(tau)*Gamma(eta) != 1 for {code!r}"
    for n in range(5, 21):
        m = n - 3
        kctx = kt.KContext(nk_code(n, 2), kt.FAMILY_NK)
        g = imm.gamma_normal(kctx)
        want = Fraction(binom(-m - 1, m - 1), 2 ** (m - 1))
        if g.coefficient((m - 1, ())) != want:
            return False, f"beta^(m-1) coordinate wrong at n={n}"
        if nu2(want) != alpha(m) - m:
            return False, f"beta^(m-1) valuation wrong at n={n}"
    return True, "Gamma coordinates and multiplicativity check out"


def check_m_formula_consistency(m_hi: int = 64):
    for m in range(1, m_hi + 1):
        if imm.M_formula(m, 1) != m - alpha(m):
            return False, f"M(m,1) != m - alpha(m) at m={m}"
    for m, s, sw_want in ((18, 7, 53), (19, 8, 53)):
        if imm.M_formula_dim(m, s) != 55:
            return False, f"table value at ({m},{s}) is not 55"
        if imm.sw_nonimmersion_dim(m, s) != sw_want:
            return False, f"SW dimension at ({m},{s}) is not {sw_want}"
    for m in range(2, 33):
        for s in range(0, m + 1):
            if imm.sw_nonimmersion_dim(m, s) > imm.M_formula_dim(m, s):
                return False, f"SW exceeds the K bound at ({m},{s})"
    return True, f"M(m,1) = m - alpha(m) for m <= {m_hi}; SW never beats K"


def check_report_sanity(n_hi: int = 6):
    for n in range(4, n_hi + 1):
        for code in cached_enumerate(n):
            rep = imm.build_report(code)
            m = rep.m
            if not rep.nonimmersion_dim <= 4 * m - 1:
                return False, f"{code!r}: dimension above the trivial 4m-1 bound"
            if rep.gamma_gap > 0 and rep.nonimmersion_dim < 2 * m + 1:
                return False, f"{code!r}: positive gap below 2m+1"
            if rep.mode == kt.GENERAL and rep.nonimmersion_dim < rep.m_formula_dim:
                return False, f"{code!r}: Gamma bound below the closed formula"
            if rep.sw_dim > rep.m_formula_dim:
                return False, f"{code!r}: SW bound above the closed formula"
    return True, f"report invariants hold for all enumerated codes, n <= {n_hi}"


QUICK_CHECKS = [
    ("exact.valuation-properties", check_valuation_properties),
    ("exact.kummer-binomials", check_kummer_binomials),
    ("exact.series-roundtrip", check_series_roundtrip),
    ("genetics.corpus-properties", check_genetics_properties),
    ("genetics.realize-roundtrip", check_realize_roundtrip),
    ("genetics.small-enumerations", check_enumeration_small),
    ("cohomology.family-presentations", lambda: check_family_presentations(7)),
    ("rings.axioms", check_ring_axioms),
    ("ktheory.basis-independence", check_k_basis_independence),
    ("ktheory.family-general-consistency", check_family_general_consistency),
    ("immersion.gamma-examples", check_gamma_examples),
    ("immersion.m-formula-consistency", check_m_formula_consistency),
    ("immersion.report-sanity", lambda: check_report_sanity(5)),
    ("acceptance.1-family-codes", lambda: crit_family_codes(9)),
    ("acceptance.3-table1", crit_table1),
    ("acceptance.4-nk-dimensions", lambda: crit_thm_nk_dims(12)),
    ("acceptance.5-nk1-dimensions", lambda: crit_thm_nk1_dims(9)),
    ("acceptance.6-coefficient-bound", lambda: crit_coefficient_bound(20)),
    ("acceptance.7-immersion-verdicts", lambda: crit_immersion_verdicts(9)),
    ("acceptance.9-sw-comparison", crit_sw_comparison),
]

FULL_CHECKS = [
    ("exact.valuation-properties", check_valuation_properties),
    ("exact.kummer-binomials", check_kummer_binomials),
    ("exact.series-roundtrip", check_series_roundtrip),
    ("genetics.corpus-properties", check_genetics_properties),
    ("genetics.realize-roundtrip", check_realize_roundtrip),
    ("genetics.small-enumerations", check_enumeration_small),
    ("cohomology.family-presentations", check_family_presentations),
    ("rings.axioms", check_ring_axioms),
    ("ktheory.basis-independence", check_k_basis_independence),
    ("ktheory.family-general-consistency", check_family_general_consistency),
    ("immersion.gamma-examples", check_gamma_examples),
    ("immersion.m-formula-consistency", check_m_formula_consistency),
    ("immersion.report-sanity", check_report_sanity),
    ("acceptance.1-family-codes", crit_family_codes),
    ("acceptance.2-enumeration-count", crit_enumeration_count),
    ("acceptance.3-table1", crit_table1),
    ("acceptance.4-nk-dimensions", crit_thm_nk_dims),
    ("acceptance.5-nk1-dimensions", crit_thm_nk1_dims),
    ("acceptance.6-coefficient-bound", crit_coefficient_bound),
    ("acceptance.7-immersion-verdicts", crit_immersion_verdicts),
    ("acceptance.8-ring-oracles", crit_ring_oracles),
    ("acceptance.9-sw-comparison", crit_sw_comparison),
]


def run_checks(level: str = "full"):
    checks = FULL_CHECKS if level == "full" else QUICK_CHECKS
    results = []
    for name, fn in checks:
        ok, detail = fn()
        results.append((name, ok, detail))
    return results
