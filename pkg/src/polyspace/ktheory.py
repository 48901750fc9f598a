"""Complex K-theory rings of spatial polygon spaces.

Three presentations are carried: the full ring for single-gene codes {{n,k}}
(generators alpha_1..alpha_k, beta with alpha_i*alpha_j = 0, beta eliminated
against any alpha via alpha*beta = -alpha^2/(1+alpha), and top relations in
degrees m, m+1), the full ring for {{n,k,1}}, and for arbitrary nonempty
codes the quotient modulo (m-s+1)-fold products of the generators, whose
basis is beta^i * alpha_S for subgees S with i+|S| <= m-s.  The Chern
character into rational cohomology is the independent oracle for all of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .cohomology import CohContext, CohElement
from .exact import INFINITY, nu2
from .genetics import GeneticCode, SubgeeLattice, indices_desc, minimal_long_gees

FAMILY_NK = "family_nk"
FAMILY_NK1 = "family_nk1"
GENERAL = "general_quotient"

KMonomial = tuple[int, tuple[tuple[int, int], ...]]  # (beta power, ((i, e), ...))

ONE: KMonomial = (0, ())


def _mono_degree(mono: KMonomial) -> int:
    return mono[0] + sum(e for _, e in mono[1])


def _support_mask(exps) -> int:
    mask = 0
    for i, _ in exps:
        mask |= 1 << (i - 1)
    return mask


def _with_exp(exps, i: int, e: int):
    """Exponent tuple with index i set to e (dropped when e == 0)."""
    out = [(a, b) for a, b in exps if a != i]
    if e:
        out.append((i, e))
    out.sort()
    return tuple(out)


def _classify_family(code: GeneticCode):
    if len(code.genes) != 1:
        return None
    elems = indices_desc(code.genes[0])
    if len(elems) == 2:
        return (FAMILY_NK, elems[1])
    if len(elems) == 3 and elems[2] == 1 and elems[1] > 1:
        return (FAMILY_NK1, elems[1])
    return None


class KContext:
    """Rewrite rules, basis, and truncation data for one code and mode."""

    def __init__(self, code: GeneticCode, mode: str):
        if mode not in (FAMILY_NK, FAMILY_NK1, GENERAL):
            raise ValueError(f"unknown mode {mode!r}")
        if not code.genes:
            raise ValueError("cannot build a K-ring context for an empty code")
        fam = _classify_family(code)
        if mode == FAMILY_NK and (fam is None or fam[0] != FAMILY_NK):
            raise ValueError(f"{code!r} is not an {{n,k}} code")
        if mode == FAMILY_NK1 and (fam is None or fam[0] != FAMILY_NK1):
            raise ValueError(f"{code!r} is not an {{n,k,1}} code")
        self.code = code
        self.mode = mode
        self.n = code.n
        self.m = code.n - 3
        self.lattice = SubgeeLattice(code)
        self.subgees = self.lattice.subgees
        self.k = self.lattice.k
        self.s = self.lattice.s
        self.truncation = self.m if mode != GENERAL else self.m - self.s
        self.basis = self._build_basis()
        self._norm_cache: dict[KMonomial, dict[KMonomial, Fraction]] = {}

    def _build_basis(self) -> list[KMonomial]:
        m, k = self.m, self.k
        basis: list[KMonomial] = [ONE]
        if self.mode == FAMILY_NK:
            basis += [(0, ((1, j),)) for j in range(1, m + 1)]
            basis += [(0, ((i, j),)) for i in range(2, k + 1) for j in range(1, m)]
            basis += [(j, ()) for j in range(1, m)]
        elif self.mode == FAMILY_NK1:
            basis += [(0, ((i, j),)) for i in range(1, k + 1) for j in range(1, m - 1)]
            basis += [(j, ()) for j in range(1, m - 1)]
            basis += [(0, ((1, m - 1),)), (0, ((k, m - 1),))]
            basis += [
                (0, ((1, 1), (i, j))) for i in range(2, k + 1) for j in range(1, m - 1)
            ]
            basis.append((0, ((1, 1), (k, m - 1))))
        else:
            for sup in sorted(self.subgees):
                size = bin(sup).count("1")
                exps = tuple((i, 1) for i in sorted(indices_desc(sup)))
                for b in range(self.truncation - size + 1):
                    if (b, exps) != ONE:
                        basis.append((b, exps))
        return basis

    # -- normalization ---------------------------------------------------

    def normalize(self, mono: KMonomial) -> dict[KMonomial, Fraction]:
        """Expansion of a raw monomial in basis coordinates."""
        cached = self._norm_cache.get(mono)
        if cached is None:
            cached = self._normalize_uncached(mono)
            self._norm_cache[mono] = cached
        return cached

    def _normalize_uncached(self, mono: KMonomial) -> dict[KMonomial, Fraction]:
        b, exps = mono
        if exps and _support_mask(exps) not in self.subgees:
            return {}
        if _mono_degree(mono) > self.truncation:
            return {}
        if self.mode == GENERAL:
            return self._norm_general(b, exps)
        if self.mode == FAMILY_NK:
            return self._norm_nk(b, exps)
        return self._norm_nk1(b, exps)

    def _accumulate(self, out, mono, scale):
        for bm, c in self.normalize(mono).items():
            val = out.get(bm, 0) + scale * c
            if val:
                out[bm] = val
            else:
                out.pop(bm, None)

    def _eliminate_beta(self, b: int, exps) -> dict[KMonomial, Fraction]:
        """One step of alpha_i * beta = -alpha_i^2/(1+alpha_i), against the
        smallest-index alpha present."""
        i, e = exps[0]
        out: dict[KMonomial, Fraction] = {}
        budget = self.truncation - (b - 1) - sum(x for _, x in exps)
        for t in range(budget):
            sign = -1 if t % 2 == 0 else 1
            self._accumulate(out, (b - 1, _with_exp(exps, i, e + 1 + t)), sign)
        return out

    def _norm_nk(self, b, exps):
        m, k = self.m, self.k
        if b and exps:
            return self._eliminate_beta(b, exps)
        if exps:
            ((i, e),) = exps  # support is a single singleton subgee here
            if e < m or (e == m and i == 1):
                return {(0, exps): Fraction(1)}
            if e == m:
                return {(0, ((1, m),)): Fraction(1)}
            return {}
        if b < m:
            return {(b, ()): Fraction(1)} if b else {ONE: Fraction(1)}
        if b == m:
            sign = 1 if m % 2 == 0 else -1
            coeff = sign * (k - 1)
            return {(0, ((1, m),)): Fraction(coeff)} if coeff else {}
        return {}

    def _norm_nk1(self, b, exps):
        m, k = self.m, self.k
        if b and exps:
            return self._eliminate_beta(b, exps)
        if not exps:
            if b <= m - 2:
                return {(b, ()): Fraction(1)} if b else {ONE: Fraction(1)}
            if b == m - 1:
                sign = 1 if (m - 1) % 2 == 0 else -1
                coeff = sign * (k - 2)
                return {(0, ((k, m - 1),)): Fraction(coeff)} if coeff else {}
            return {}
        if len(exps) == 1:
            ((i, e),) = exps
            if i == 1:
                if e <= m - 1:
                    return {(0, exps): Fraction(1)}
                if e == m:
                    out: dict[KMonomial, Fraction] = {}
                    self._accumulate(out, (0, ((1, 1), (k, m - 1))), k - 2)
                    return out
                # alpha_1^e = (k-2) alpha_1^(e-m+1) alpha_k^(m-1), recursively
                out = {}
                self._accumulate(out, (0, ((1, e - m + 1), (k, m - 1))), k - 2)
                return out
            if e <= m - 2:
                return {(0, exps): Fraction(1)}
            if e == m - 1:
                return {(0, ((k, m - 1),)): Fraction(1)}
            return {}
        # support {1, i}: alpha_1^t alpha_i^u = alpha_1 alpha_i^(t+u-1)
        (_, t), (i, u) = exps
        j = t + u - 1
        if j >= m:
            return {}
        if j <= m - 2:
            return {(0, ((1, 1), (i, j))): Fraction(1)}
        return {(0, ((1, 1), (k, m - 1))): Fraction(1)}

    def _norm_general(self, b, exps):
        for i, e in exps:
            if e >= 2:
                # alpha_i^2 = -alpha_i * beta/(1+beta)
                out: dict[KMonomial, Fraction] = {}
                degree_rest = b + sum(x for _, x in exps) - 2
                for t in range(self.truncation - degree_rest):
                    sign = -1 if t % 2 == 0 else 1
                    self._accumulate(out, (b + t + 1, _with_exp(exps, i, e - 1)), sign)
                return out
        mono = (b, exps)
        return {mono: Fraction(1)}

    # -- element constructors ---------------------------------------------

    def zero(self) -> "KElement":
        return KElement(self, {})

    def one(self) -> "KElement":
        return KElement(self, {ONE: Fraction(1)})

    def gen_alpha(self, i: int) -> "KElement":
        if not 1 <= i <= self.k:
            raise ValueError(f"alpha_{i} is not a generator (k={self.k})")
        return self.from_raw({(0, ((i, 1),)): 1})

    def gen_beta(self) -> "KElement":
        return self.from_raw({(1, ()): 1})

    def from_raw(self, raw: dict) -> "KElement":
        coeffs: dict[KMonomial, Fraction] = {}
        for mono, c in raw.items():
            if c == 0:
                continue
            for bm, factor in self.normalize(mono).items():
                val = coeffs.get(bm, 0) + Fraction(c) * factor
                if val:
                    coeffs[bm] = val
                else:
                    coeffs.pop(bm, None)
        return KElement(self, coeffs)


def k_context(code: GeneticCode, mode: str) -> KContext:
    return KContext(code, mode)


class KElement:
    """Exact rational combination of basis monomials of a KContext."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: KContext, coeffs: dict):
        self.ctx = ctx
        self.coeffs = {m: Fraction(c) for m, c in coeffs.items() if c != 0}

    def _check(self, other):
        if self.ctx is not other.ctx:
            raise ValueError("elements from different K-ring contexts")

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, KElement)
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
        return KElement(self.ctx, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) - c
        return KElement(self.ctx, out)

    def __neg__(self):
        return KElement(self.ctx, {m: -c for m, c in self.coeffs.items()})

    def scale(self, factor):
        return KElement(self.ctx, {m: c * Fraction(factor) for m, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        raw: dict[KMonomial, Fraction] = {}
        for (b1, e1), c1 in self.coeffs.items():
            for (b2, e2), c2 in other.coeffs.items():
                merged = dict(e1)
                for i, e in e2:
                    merged[i] = merged.get(i, 0) + e
                mono = (b1 + b2, tuple(sorted(merged.items())))
                raw[mono] = raw.get(mono, 0) + c1 * c2
        return self.ctx.from_raw(raw)

    __rmul__ = __mul__

    def power(self, e: int) -> "KElement":
        result = self.ctx.one()
        for _ in range(e):
            result = result * self
        return result

    def coefficient(self, mono: KMonomial) -> Fraction:
        return self.coeffs.get(mono, Fraction(0))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (b, exps), c in sorted(self.coeffs.items()):
            factors = []
            if b:
                factors.append("beta" if b == 1 else f"beta^{b}")
            for i, e in exps:
                factors.append(f"alpha_{i}" if e == 1 else f"alpha_{i}^{e}")
            body = "*".join(factors) if factors else "1"
            parts.append(f"({c})*{body}")
        return " + ".join(parts)


def k_mul(x: KElement, y: KElement) -> KElement:
    return x * y


def k_inverse(x: KElement) -> KElement:
    """Inverse of 1 + (nilpotent part) by a finite geometric series."""
    ctx = x.ctx
    if x.coefficient(ONE) != 1:
        raise ValueError("k_inverse requires constant term exactly 1")
    w = x - ctx.one()
    total = ctx.one()
    power = ctx.one()
    sign = 1
    for _ in range(ctx.truncation + 2):
        power = power * w
        if power.is_zero():
            break
        sign = -sign
        total = total + power.scale(sign)
    if not power.is_zero():
        raise ValueError("element is not invertible by a finite series")
    return total


def integrality_gap(x: KElement) -> int:
    """Least t >= 0 such that 2^t x has integral basis coordinates:
    max(0, -min nu2 over nonzero coordinates)."""
    worst = 0
    for c in x.coeffs.values():
        v = nu2(c)
        if v is not INFINITY and v < -worst:
            worst = -v
    return worst


def pure_beta_part(x: KElement) -> KElement:
    """Restriction of x to its pure beta-power coordinates."""
    return KElement(x.ctx, {m: c for m, c in x.coeffs.items() if not m[1]})


# -- Chern character -------------------------------------------------------


class ChernCharacter:
    """The ring map alpha_i -> e^{V_i} - 1, beta -> e^R - 1 into rational
    cohomology, evaluated on raw monomials (no K-ring rewriting involved, so
    it can independently check that rewriting rules map to 0)."""

    def __init__(self, kctx: KContext, cctx: CohContext):
        if kctx.code != cctx.code:
            raise ValueError("K and cohomology contexts are for different codes")
        self.kctx = kctx
        self.cctx = cctx
        self._gen_cache: dict[tuple, CohElement] = {}

    def _exp_minus_one(self, which: tuple) -> CohElement:
        """e^g - 1 for a degree-2 generator g."""
        cctx = self.cctx
        acc = cctx.zero()
        for j in range(1, cctx.m + 1):
            if which[0] == "a":
                term = cctx.v_power(which[1], j)
            else:
                term = cctx.r_power(j)
            acc = acc + term.scale(Fraction(1, factorial(j)))
        return acc

    def _gen_power(self, which: tuple, e: int) -> CohElement:
        key = (which, e)
        out = self._gen_cache.get(key)
        if out is None:
            if e == 0:
                out = self.cctx.one()
            else:
                out = self._gen_power(which, e - 1) * self._exp_minus_one(which)
            self._gen_cache[key] = out
        return out

    def of_monomial(self, mono: KMonomial) -> CohElement:
        b, exps = mono
        out = self._gen_power(("b",), b)
        for i, e in exps:
            out = out * self._gen_power(("a", i), e)
        return out

    def of_raw(self, raw: dict) -> CohElement:
        acc = self.cctx.zero()
        for mono, c in raw.items():
            if c:
                acc = acc + self.of_monomial(mono).scale(Fraction(c))
        return acc

    def of_element(self, x: KElement) -> CohElement:
        return self.of_raw(x.coeffs)


def chern_character(x: KElement, kctx: KContext, cctx: CohContext) -> CohElement:
    if x.ctx is not kctx:
        raise ValueError("element does not belong to the given K context")
    return ChernCharacter(kctx, cctx).of_element(x)


# -- relations, for dump/oracle use ----------------------------------------


@dataclass
class KRelation:
    name: str
    raw: dict


def _beta_elimination_relation(i: int, m: int) -> dict:
    """alpha_i*beta + alpha_i^2/(1+alpha_i), truncated where ch vanishes."""
    raw = {(1, ((i, 1),)): 1}
    for t in range(m - 1):
        raw[(0, ((i, 2 + t),))] = (-1) ** t
    return raw


def context_relations(kctx: KContext) -> list[KRelation]:
    """The defining relations of the context as raw polynomials; the Chern
    character must send each to zero."""
    m, k = kctx.m, kctx.k
    rels: list[KRelation] = []
    for i in range(1, k + 1):
        rels.append(KRelation(f"alpha_{i}*beta + alpha_{i}^2/(1+alpha_{i})",
                              _beta_elimination_relation(i, m)))
    if kctx.mode == FAMILY_NK:
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                rels.append(KRelation(f"alpha_{i}*alpha_{j}", {(0, ((i, 1), (j, 1))): 1}))
        for i in range(2, k + 1):
            rels.append(
                KRelation(
                    f"alpha_1^m - alpha_{i}^m",
                    {(0, ((1, m),)): 1, (0, ((i, m),)): -1},
                )
            )
        sign = 1 if m % 2 == 0 else -1
        rels.append(
            KRelation(
                "beta^m - (-1)^m (k-1) alpha_1^m",
                {(m, ()): 1, (0, ((1, m),)): -sign * (k - 1)},
            )
        )
        rels.append(KRelation("beta^(m+1)", {(m + 1, ()): 1}))
        rels.append(KRelation("alpha_1^(m+1)", {(0, ((1, m + 1),)): 1}))
    elif kctx.mode == FAMILY_NK1:
        for i in range(2, k + 1):
            for j in range(i + 1, k + 1):
                rels.append(KRelation(f"alpha_{i}*alpha_{j}", {(0, ((i, 1), (j, 1))): 1}))
        for i in range(2, k):
            rels.append(
                KRelation(
                    f"alpha_{i}^(m-1) - alpha_{k}^(m-1)",
                    {(0, ((i, m - 1),)): 1, (0, ((k, m - 1),)): -1},
                )
            )
        sign = 1 if (m - 1) % 2 == 0 else -1
        rels.append(
            KRelation(
                "beta^(m-1) - (-1)^(m-1)(k-2) alpha_k^(m-1)",
                {(m - 1, ()): 1, (0, ((k, m - 1),)): -sign * (k - 2)},
            )
        )
    else:
        for t in minimal_long_gees(kctx.n, kctx.subgees):
            if t == 0:
                continue
            exps = tuple((i, 1) for i in sorted(indices_desc(t)))
            name = "*".join(f"alpha_{i}" for i, _ in exps)
            rels.append(KRelation(f"{name} (support not a subgee)", {(0, exps): 1}))
    return rels


def mono_str(mono: KMonomial) -> str:
    b, exps = mono
    factors = []
    if b:
        factors.append("beta" if b == 1 else f"beta^{b}")
    for i, e in exps:
        factors.append(f"alpha_{i}" if e == 1 else f"alpha_{i}^{e}")
    return "*".join(factors) if factors else "1"
