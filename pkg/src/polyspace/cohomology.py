"""Integral cohomology rings of spatial polygon spaces.

The ring for a genetic code is generated in degree 2 by R and V_1..V_{n-1},
with V_S = 0 off the subgee lattice, V_i^2 = -R V_i, and one relation per
subgee T in each grading d with |T| >= n-2-d, summing R^{d-|S|} V_S over
subgees S disjoint from T.  Monomials are kept squarefree in the V's, so
each grading is a finite quotient of a monomial span; bases come from exact
echelon reduction over Q with integrality verified, and an independent
Smith-normal-form oracle certifies ranks and torsion-freeness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InternalInvariantError
from .exact import binom
from .genetics import GeneticCode, SubgeeLattice, indices_desc
from .linalg import RationalEchelon, smith_diagonals

Monomial = tuple[int, int]  # (power of R, squarefree V-support mask)


class _Grading:
    __slots__ = ("monomials", "index", "echelon", "basis", "betti", "snf_diags")

    def __init__(self, monomials, index, echelon, basis, betti, snf_diags):
        self.monomials = monomials
        self.index = index
        self.echelon = echelon
        self.basis = basis  # list of (column, monomial) for free columns
        self.betti = betti
        self.snf_diags = snf_diags


class CohContext:
    """Cohomology ring data for one nonempty genetic code.

    Immutable after construction; holds per-grading monomial lists, reduced
    relation echelons, and the chosen integral basis monomials for gradings
    0..m (everything above is verified to vanish through 2m).
    """

    def __init__(self, code: GeneticCode, lattice: SubgeeLattice | None = None):
        if not code.genes:
            raise ValueError("cannot build a ring context for an empty genetic code")
        self.code = code
        self.n = code.n
        self.m = code.n - 3
        self.lattice = lattice if lattice is not None else SubgeeLattice(code)
        self.subgees = self.lattice.subgees
        self.singletons = self.lattice.singletons()
        self.k = self.lattice.k
        self.s = self.lattice.s
        self._by_size: dict[int, list[int]] = {}
        for t in self.subgees:
            self._by_size.setdefault(bin(t).count("1"), []).append(t)
        for masks in self._by_size.values():
            masks.sort()
        self.gradings: dict[int, _Grading] = {}
        for d in range(self.m + 1):
            self.gradings[d] = self._build_grading(d)
        if self.gradings[self.m].betti != 1:
            raise InternalInvariantError(
                f"top grading has rank {self.gradings[self.m].betti}, expected 1"
            )
        for d in range(self.m + 1, 2 * self.m + 1):
            self._verify_zero(d)

    def _monomials(self, d: int) -> list[Monomial]:
        monos = []
        for size in range(min(d, self.n - 1) + 1):
            for mask in self._by_size.get(size, ()):
                monos.append((d - size, mask))
        monos.sort(key=lambda rm: (-rm[0], rm[1]))
        return monos

    def _relation_rows(self, d: int, index: dict[Monomial, int], width: int):
        rows = []
        threshold = self.n - 2 - d
        for t in self.subgees:
            if bin(t).count("1") < threshold:
                continue
            row = [0] * width
            for s in self.subgees:
                if s & t:
                    continue
                size = bin(s).count("1")
                if size <= d:
                    row[index[(d - size, s)]] += 1
            rows.append(row)
        return rows

    def _build_grading(self, d: int) -> _Grading:
        monos = self._monomials(d)
        index = {mono: j for j, mono in enumerate(monos)}
        rows = self._relation_rows(d, index, len(monos))
        ech = RationalEchelon(len(monos))
        for row in rows:
            ech.add_row(row)
        diags = smith_diagonals(rows)
        if len(diags) != ech.rank:
            raise InternalInvariantError(
                f"rank disagreement in grading {d}: SNF {len(diags)} vs echelon {ech.rank}"
            )
        if any(x != 1 for x in diags):
            raise InternalInvariantError(
                f"torsion detected in grading {d}: invariant factors {diags}"
            )
        free = ech.free_cols()
        # The echelon basis is only an integral basis if every pivot monomial
        # reduces to integer coordinates on the free monomials.
        for p in ech.pivot_cols:
            unit = [0] * len(monos)
            unit[p] = 1
            red = ech.reduce(unit)
            if any(red[j].denominator != 1 for j in free):
                raise InternalInvariantError(
                    f"non-integral basis reduction in grading {d}"
                )
        basis = [(j, monos[j]) for j in free]
        return _Grading(monos, index, ech, basis, len(free), diags)

    def _verify_zero(self, d: int) -> None:
        monos = self._monomials(d)
        if not monos:
            return
        index = {mono: j for j, mono in enumerate(monos)}
        rows = self._relation_rows(d, index, len(monos))
        diags = smith_diagonals(rows)
        if len(diags) != len(monos) or any(x != 1 for x in diags):
            raise InternalInvariantError(
                f"grading {d} above the top dimension does not vanish"
            )

    # -- element constructors ------------------------------------------------

    def zero(self) -> "CohElement":
        return CohElement(self, {})

    def one(self):
        return self.from_raw({(0, 0): 1})

    def gen_r(self):
        """The degree-2 generator R."""
        return self.from_raw({(1, 0): 1})

    def gen_v(self, i: int):
        """The degree-2 generator V_i (zero unless {i} is a subgee)."""
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"V_{i} is out of range for n={self.n}")
        return self.from_raw({(0, 1 << (i - 1)): 1})

    def v_power(self, i: int, j: int):
        """Normal form of V_i^j, i.e. (-R)^(j-1) V_i for j >= 1."""
        if j == 0:
            return self.one()
        sign = -1 if (j - 1) % 2 else 1
        return self.from_raw({(j - 1, 1 << (i - 1)): sign})

    def r_power(self, j: int):
        return self.from_raw({(j, 0): 1})

    def from_raw(self, raw: dict) -> "CohElement":
        """Reduce a raw monomial combination to basis coordinates.

        Monomials with non-subgee support, or of degree above m, are zero in
        the ring and are dropped (vanishing above m is verified through 2m
        at construction).
        """
        by_deg: dict[int, dict[Monomial, Fraction]] = {}
        for (r, mask), coeff in raw.items():
            if coeff == 0 or mask not in self.subgees:
                continue
            d = r + bin(mask).count("1")
            if d > self.m:
                continue
            bucket = by_deg.setdefault(d, {})
            bucket[(r, mask)] = bucket.get((r, mask), 0) + coeff
        coeffs: dict[Monomial, Fraction] = {}
        for d, bucket in by_deg.items():
            grading = self.gradings[d]
            vec = [Fraction(0)] * len(grading.monomials)
            for mono, c in bucket.items():
                vec[grading.index[mono]] += Fraction(c)
            red = grading.echelon.reduce(vec)
            for col, mono in grading.basis:
                if red[col] != 0:
                    coeffs[mono] = red[col]
        return CohElement(self, coeffs)

    def basis_monomials(self, d: int) -> list[Monomial]:
        return [mono for _, mono in self.gradings[d].basis]

    def betti_numbers(self) -> list[int]:
        return [self.gradings[d].betti for d in range(self.m + 1)]


def build_context(code: GeneticCode) -> CohContext:
    return CohContext(code)


class CohElement:
    """An element in reduced basis coordinates; coefficients are exact
    integers or rationals keyed by basis monomial."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: CohContext, coeffs: dict):
        self.ctx = ctx
        self.coeffs = {m: c for m, c in coeffs.items() if c != 0}

    def _check(self, other: "CohElement"):
        if self.ctx is not other.ctx:
            raise ValueError("elements from different ring contexts")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, CohElement)
            and self.ctx is other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.ctx), tuple(sorted(self.coeffs.items()))))

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return CohElement(self.ctx, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) - c
        return CohElement(self.ctx, out)

    def __neg__(self):
        return CohElement(self.ctx, {m: -c for m, c in self.coeffs.items()})

    def scale(self, factor):
        if factor == 0:
            return self.ctx.zero()
        return CohElement(self.ctx, {m: c * factor for m, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        subgees = self.ctx.subgees
        raw: dict[Monomial, Fraction] = {}
        for (r1, s1), c1 in self.coeffs.items():
            for (r2, s2), c2 in other.coeffs.items():
                union = s1 | s2
                if union not in subgees:
                    continue
                common = bin(s1 & s2).count("1")
                sign = -1 if common % 2 else 1
                key = (r1 + r2 + common, union)
                raw[key] = raw.get(key, 0) + sign * c1 * c2
        return self.ctx.from_raw(raw)

    __rmul__ = __mul__

    def power(self, e: int) -> "CohElement":
        if e < 0:
            raise ValueError("use inverse_total for total-class inverses")
        result = self.ctx.one()
        for _ in range(e):
            result = result * self
        return result

    def grading_component(self, d: int) -> "CohElement":
        return CohElement(
            self.ctx,
            {m: c for m, c in self.coeffs.items() if m[0] + bin(m[1]).count("1") == d},
        )

    def gradings_present(self) -> list[int]:
        return sorted({r + bin(mask).count("1") for r, mask in self.coeffs})

    def coordinate_vector(self, d: int) -> list[Fraction]:
        """Coordinates on the stored basis of grading d."""
        return [self.coeffs.get(mono, Fraction(0)) for mono in self.ctx.basis_monomials(d)]

    def reduce_mod(self, q: int) -> "CohElement":
        out = {}
        for m, c in self.coeffs.items():
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError("cannot reduce a non-integer coefficient")
                c = c.numerator
            out[m] = c % q
        return CohElement(self.ctx, out)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (r, mask), c in sorted(self.coeffs.items()):
            factors = []
            if r:
                factors.append("R" if r == 1 else f"R^{r}")
            for i in indices_desc(mask)[::-1]:
                factors.append(f"V{i}")
            body = "*".join(factors) if factors else "1"
            parts.append(f"({c})*{body}")
        return " + ".join(parts)


def equal_mod(x: CohElement, y: CohElement, q: int) -> bool:
    diff = x - y
    return all(
        (c.numerator if isinstance(c, Fraction) else c) % q == 0
        for c in diff.coeffs.values()
    )


def coh_mul(x: CohElement, y: CohElement) -> CohElement:
    return x * y


def inverse_total(x: CohElement) -> CohElement:
    """Inverse of a total class 1 + (positive-degree part), graded recurrence."""
    ctx = x.ctx
    comps = [x.grading_component(d) for d in range(ctx.m + 1)]
    if comps[0] != ctx.one():
        raise ValueError("total class must have constant term 1")
    inv = [ctx.one()]
    for d in range(1, ctx.m + 1):
        acc = ctx.zero()
        for j in range(1, d + 1):
            acc = acc + comps[j] * inv[d - j]
        inv.append(-acc)
    total = ctx.zero()
    for piece in inv:
        total = total + piece
    return total


def chern_tangent(ctx: CohContext) -> CohElement:
    """Total Chern class of the tangent bundle:
    product of (1 + 2 V_i + R) over singleton subgees i, times
    (1 + R)^(m+1-k); the exponent can be negative and is expanded exactly."""
    total = ctx.one()
    for i in ctx.singletons:
        factor = ctx.one() + ctx.gen_v(i).scale(2) + ctx.gen_r()
        total = total * factor
    e = ctx.m + 1 - ctx.k
    powers = ctx.zero()
    for j in range(ctx.m + 1):
        powers = powers + ctx.r_power(j).scale(binom(e, j))
    return total * powers


def chern_normal(ctx: CohContext, modulus: int | None = None) -> CohElement:
    """Total Chern class of the stable normal bundle (inverse of the tangent
    class), over Z, optionally reduced mod 2 or mod 4."""
    c_eta = inverse_total(chern_tangent(ctx))
    if modulus is None:
        return c_eta
    if modulus not in (2, 4):
        raise ValueError("modulus must be None, 2, or 4")
    return c_eta.reduce_mod(modulus)


def sq2(x: CohElement) -> CohElement:
    """Steenrod square Sq^2 on a homogeneous mod-2 class, by the Cartan rule:
    square one degree-2 factor of each monomial at a time."""
    degs = x.gradings_present()
    if len(degs) > 1:
        raise ValueError("Sq^2 requires a homogeneous class")
    ctx = x.ctx
    raw: dict[Monomial, int] = {}
    for (r, mask), coeff in x.coeffs.items():
        # R -> R^2 for each of the r factors of R; V_i -> V_i^2 = -R V_i.
        count = r - bin(mask).count("1")
        key = (r + 1, mask)
        raw[key] = raw.get(key, 0) + coeff * count
    return ctx.from_raw(raw).reduce_mod(2)


def sw_tangent(ctx: CohContext) -> CohElement:
    """Total Stiefel-Whitney class of the tangent bundle, (1+R)^(m+1) mod 2."""
    acc = ctx.zero()
    for j in range(ctx.m + 1):
        acc = acc + ctx.r_power(j).scale(binom(ctx.m + 1, j))
    return acc.reduce_mod(2)


def sw_normal(ctx: CohContext) -> CohElement:
    """Total dual Stiefel-Whitney class, (1+R)^-(m+1) mod 2."""
    acc = ctx.zero()
    for j in range(ctx.m + 1):
        acc = acc + ctx.r_power(j).scale(binom(-(ctx.m + 1), j))
    return acc.reduce_mod(2)


def sw_classes(ctx: CohContext) -> tuple[CohElement, CohElement]:
    return sw_tangent(ctx), sw_normal(ctx)


def w2_normal(ctx: CohContext) -> CohElement:
    """w_2 of the stable normal bundle: (m+1) R mod 2."""
    return ctx.gen_r().scale(ctx.m + 1).reduce_mod(2)


@dataclass
class FamilyCheckReport:
    """Outcome of checking a closed-form family presentation against the
    relation-matrix quotient."""

    family: str
    code: GeneticCode
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _family_of(code: GeneticCode) -> tuple[str, int]:
    """Classify a code as ("nk", k) or ("nk1", k); ValueError otherwise."""
    if len(code.genes) != 1:
        raise ValueError("not a single-gene family code")
    elems = indices_desc(code.genes[0])
    n = code.n
    if len(elems) == 2 and elems[0] == n:
        return "nk", elems[1]
    if len(elems) == 3 and elems[0] == n and elems[2] == 1 and elems[1] > 1:
        return "nk1", elems[1]
    raise ValueError(f"code {code!r} is not of the {{n,k}} or {{n,k,1}} form")


def _is_unimodular_span(ctx: CohContext, elements, d: int) -> bool:
    """True iff the elements' classes are a Z-basis of grading d."""
    betti = ctx.gradings[d].betti
    if len(elements) != betti:
        return False
    rows = []
    for el in elements:
        vec = el.coordinate_vector(d)
        if any(isinstance(c, Fraction) and c.denominator != 1 for c in vec):
            return False
        rows.append([int(c) for c in vec])
    diags = smith_diagonals(rows)
    return len(diags) == betti and all(x == 1 for x in diags)


def relation_check_family(code: GeneticCode, ctx: CohContext | None = None) -> FamilyCheckReport:
    """Verify the closed-form presentation of an {{n,k}} or {{n,k,1}} code
    against the Smith-normal-form quotient: every stated identity reduces to
    zero and every stated basis list is an integral basis."""
    family, k = _family_of(code)
    if ctx is None:
        ctx = CohContext(code)
    m = ctx.m
    report = FamilyCheckReport(family, code)
    fail = report.failures.append

    def expect_zero(name: str, el: CohElement):
        if not el.is_zero():
            fail(f"{name} does not vanish: {el!r}")

    if family == "nk":
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                expect_zero(f"V_{i}*V_{j}", ctx.gen_v(i) * ctx.gen_v(j))
            expect_zero(
                f"V_{i}^2 + R*V_{i}", ctx.gen_v(i) * ctx.gen_v(i) + ctx.gen_r() * ctx.gen_v(i)
            )
        v1m = ctx.v_power(1, m)
        for i in range(2, k + 1):
            expect_zero(f"V_{i}^m - V_1^m", ctx.v_power(i, m) - v1m)
        sign = -1 if m % 2 else 1
        expect_zero(
            "R^m - (-1)^m (k-1) V_1^m", ctx.r_power(m) - v1m.scale(sign * (k - 1))
        )
        expect_zero("R^(m+1)", ctx.r_power(m) * ctx.gen_r())
        expect_zero("V_1^(m+1)", ctx.v_power(1, m) * ctx.gen_v(1))
        for j in range(1, m):
            basis = [ctx.r_power(j)] + [ctx.v_power(i, j) for i in range(1, k + 1)]
            if not _is_unimodular_span(ctx, basis, j):
                fail(f"stated basis of grading {j} is not a Z-basis")
        if not _is_unimodular_span(ctx, [v1m], m):
            fail("V_1^m does not generate the top grading")
        return report

    # family nk1
    r, m1 = ctx.gen_r(), m - 1
    for i in range(2, k + 1):
        for j in range(i + 1, k + 1):
            expect_zero(f"V_{i}*V_{j}", ctx.gen_v(i) * ctx.gen_v(j))
    vk_m1 = ctx.v_power(k, m1)
    for i in range(2, k):
        expect_zero(f"V_{i}^(m-1) - V_{k}^(m-1)", ctx.v_power(i, m1) - vk_m1)
    sign = -1 if m1 % 2 else 1
    expect_zero(
        "R^(m-1) - (-1)^(m-1)(k-2) V_k^(m-1)",
        ctx.r_power(m1) - vk_m1.scale(sign * (k - 2)),
    )
    expect_zero("R^m", ctx.r_power(m))
    for i in range(2, k + 1):
        expect_zero(f"V_{i}^m", ctx.v_power(i, m))
    v1 = ctx.gen_v(1)
    tops = [v1 * ctx.v_power(i, m1) for i in range(2, k + 1)]
    for i, el in enumerate(tops[:-1], start=2):
        expect_zero(f"V_1V_{i}^(m-1) - V_1V_{k}^(m-1)", el - tops[-1])
    expect_zero(
        "V_1^m - (k-2) V_1 V_k^(m-1)", ctx.v_power(1, m) - tops[-1].scale(k - 2)
    )
    if not _is_unimodular_span(ctx, [tops[-1]], m):
        fail("V_1 V_k^(m-1) does not generate the top grading")
    if m >= 3:
        basis = [ctx.v_power(1, m1), vk_m1] + [
            v1 * ctx.v_power(i, m1 - 1) for i in range(2, k + 1)
        ]
        if not _is_unimodular_span(ctx, basis, m1):
            fail("stated basis of grading m-1 is not a Z-basis")
    for j in range(2, m - 1):
        basis = (
            [ctx.r_power(j)]
            + [ctx.v_power(i, j) for i in range(1, k + 1)]
            + [v1 * ctx.v_power(i, j - 1) for i in range(2, k + 1)]
        )
        if not _is_unimodular_span(ctx, basis, j):
            fail(f"stated basis of grading {j} is not a Z-basis")
    return report
