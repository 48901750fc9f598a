"""Length vectors, genetic codes, and the combinatorics that classifies
spatial polygon spaces.

Index subsets of [[n]] = {1..n} are bitmasks (bit i-1 set iff i is in the
subset).  The partial order `leq_sets` is elementwise domination of the
descending element lists; for a nondecreasing length vector it makes
shortness of subsets downward closed, which is what lets the maximal short
subsets containing n (the genes) carry the whole classification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import format_rational
from .simplex import OPTIMAL, maximize


def mask_of(indices) -> int:
    mask = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"indices are 1-based, got {i}")
        mask |= 1 << (i - 1)
    return mask


@lru_cache(maxsize=None)
def indices_desc(mask: int) -> tuple[int, ...]:
    """Elements of a mask, largest first."""
    out = []
    i = mask.bit_length()
    while i > 0:
        if mask & (1 << (i - 1)):
            out.append(i)
        i -= 1
    return tuple(out)


@lru_cache(maxsize=None)
def leq_sets(a: int, b: int) -> bool:
    """Domination order: A <= B iff |A| <= |B| and, writing both with
    elements descending, each element of A is <= the matching element of B.
    Set inclusion is a special case."""
    aa, bb = indices_desc(a), indices_desc(b)
    if len(aa) > len(bb):
        return False
    return all(x <= y for x, y in zip(aa, bb))


def down_covers(mask: int) -> list[int]:
    """Covers of mask from below in the domination order: drop the element 1,
    or decrement one element into a free slot."""
    out = []
    if mask & 1:
        out.append(mask & ~1)
    for i in indices_desc(mask):
        if i >= 2 and not mask & (1 << (i - 2)):
            out.append((mask & ~(1 << (i - 1))) | (1 << (i - 2)))
    return out


def up_covers(mask: int, ground: int) -> list[int]:
    """Covers of mask from above, inside subsets of [[ground]]."""
    out = []
    if not mask & 1:
        out.append(mask | 1)
    for i in indices_desc(mask):
        if i < ground and not mask & (1 << i):
            out.append((mask & ~(1 << (i - 1))) | (1 << i))
    return out


class GenericityError(ValueError):
    """A subset's lengths sum to exactly half the total."""

    def __init__(self, indices: tuple[int, ...]):
        self.indices = indices
        super().__init__(
            "length vector is not generic: subset {%s} ties its complement"
            % ", ".join(map(str, indices))
        )


class LengthVector:
    """A sorted tuple of n >= 3 positive rational side lengths."""

    __slots__ = ("lengths", "_scaled")

    def __init__(self, lengths):
        vals = sorted(Fraction(x) for x in lengths)
        if len(vals) < 3:
            raise ValueError("a length vector needs at least 3 sides")
        if vals[0] <= 0:
            raise ValueError("side lengths must be positive")
        self.lengths = tuple(vals)
        self._scaled = None

    @property
    def n(self) -> int:
        return len(self.lengths)

    @property
    def total(self) -> Fraction:
        return sum(self.lengths)

    def scaled(self) -> tuple[tuple[int, ...], int]:
        """Integer rescaling (common denominator cleared) and its total."""
        if self._scaled is None:
            lcm = 1
            for x in self.lengths:
                lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
            ints = tuple(int(x * lcm) for x in self.lengths)
            self._scaled = (ints, sum(ints))
        return self._scaled

    def __eq__(self, other):
        return isinstance(other, LengthVector) and self.lengths == other.lengths

    def __hash__(self):
        return hash(self.lengths)

    def __repr__(self):
        return "LengthVector(%s)" % ", ".join(format_rational(x) for x in self.lengths)

    def is_generic(self) -> bool:
        try:
            genetic_code(self)
        except GenericityError:
            return False
        return True


def is_short(lv: LengthVector, mask: int) -> bool:
    """Exact test of sum(S) < sum(complement of S)."""
    ints, total = lv.scaled()
    s = 0
    for i in indices_desc(mask):
        s += ints[i - 1]
    return 2 * s < total


class GeneticCode:
    """A canonically sorted list of genes, each a subset mask containing n.

    Genes are sorted by size then lexicographically on their descending
    element lists, so equal codes print identically.  Antichain-ness is a
    property of codes produced by genetic_code/enumerate_codes; arbitrary
    gene lists can be constructed (and are then rejected by realize).
    """

    __slots__ = ("n", "genes")

    def __init__(self, n: int, genes):
        if n < 3:
            raise ValueError("n must be at least 3")
        nbit = 1 << (n - 1)
        seen = set()
        for g in genes:
            if not g & nbit:
                raise ValueError(
                    f"gene {{{', '.join(map(str, indices_desc(g)))}}} does not contain n={n}"
                )
            if g >> n:
                raise ValueError("gene has an element larger than n")
            seen.add(g)
        self.n = n
        self.genes = tuple(sorted(seen, key=_gene_key))

    def gees(self) -> tuple[int, ...]:
        """Genes with n removed (masks over [[n-1]])."""
        nbit = 1 << (self.n - 1)
        return tuple(g & ~nbit for g in self.genes)

    def is_antichain(self) -> bool:
        gs = self.genes
        for i, a in enumerate(gs):
            for b in gs[i + 1 :]:
                if leq_sets(a, b) or leq_sets(b, a):
                    return False
        return True

    def sort_key(self):
        return (self.n, len(self.genes), tuple(_gene_key(g) for g in self.genes))

    def __eq__(self, other):
        return (
            isinstance(other, GeneticCode)
            and self.n == other.n
            and self.genes == other.genes
        )

    def __hash__(self):
        return hash((self.n, self.genes))

    def __repr__(self):
        return f"GeneticCode({format_code(self)!r})"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "genes": [list(indices_desc(g)) for g in self.genes]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "GeneticCode":
        return cls(data["n"], [mask_of(g) for g in data["genes"]])


def _gene_key(mask: int):
    return (bin(mask).count("1"), indices_desc(mask))


def format_code(code: GeneticCode) -> str:
    if not code.genes:
        return "{}"
    parts = ["{%s}" % ",".join(map(str, indices_desc(g))) for g in code.genes]
    return "{%s}" % ",".join(parts)


class CodeSyntaxError(ValueError):
    """Malformed genetic-code text; carries the offending position."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


def parse_code(text: str) -> GeneticCode:
    """Parse the text form {{7,4},{7,6,1}} into a canonical GeneticCode.

    n is the largest element mentioned; every gene must contain it.
    """
    s = text.strip()
    pos = 0

    def fail(msg, at):
        raise CodeSyntaxError(msg, at)

    if not s.startswith("{"):
        fail("expected '{'", 0)
    pos = 1
    genes: list[list[int]] = []
    while True:
        while pos < len(s) and s[pos] in " \t":
            pos += 1
        if pos >= len(s):
            fail("unterminated code", pos)
        if s[pos] == "}":
            pos += 1
            break
        if s[pos] != "{":
            fail("expected '{' starting a gene", pos)
        pos += 1
        gene: list[int] = []
        while True:
            while pos < len(s) and s[pos] in " \t":
                pos += 1
            start = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            if pos == start:
                fail("expected an index", pos)
            gene.append(int(s[start:pos]))
            while pos < len(s) and s[pos] in " \t":
                pos += 1
            if pos >= len(s):
                fail("unterminated gene", pos)
            if s[pos] == ",":
                pos += 1
                continue
            if s[pos] == "}":
                pos += 1
                break
            fail("expected ',' or '}'", pos)
        genes.append(gene)
        while pos < len(s) and s[pos] in " \t":
            pos += 1
        if pos < len(s) and s[pos] == ",":
            pos += 1
            continue
        if pos < len(s) and s[pos] == "}":
            pos += 1
            break
        if pos >= len(s):
            fail("unterminated code", pos)
        fail("expected ',' or '}'", pos)
    if pos != len(s):
        fail("trailing characters", pos)
    if not genes:
        fail("empty code (no genes, so n is undetermined)", 0)
    n = max(max(g) for g in genes)
    for g in genes:
        if min(g) < 1:
            fail("indices are 1-based", 0)
        if n not in g:
            raise ValueError(
                f"gene {{{','.join(map(str, sorted(g, reverse=True)))}}} does not contain n={n}"
            )
    return GeneticCode(n, [mask_of(g) for g in genes])


def genetic_code(lv: LengthVector) -> GeneticCode:
    """Maximal short subsets containing n, under the domination order.

    Raises GenericityError (naming the tying subset) if any subset sums to
    exactly half the total; ties not containing n are caught through their
    complements.
    """
    n = lv.n
    ints, total = lv.scaled()
    half_count = 1 << (n - 1)
    # sums[gee] = scaled length sum of gee's indices plus index n
    sums = [0] * half_count
    sums[0] = ints[n - 1]
    for mask in range(1, half_count):
        low = mask & -mask
        sums[mask] = sums[mask & (mask - 1)] + ints[low.bit_length() - 1]
    shorts = []
    nbit = 1 << (n - 1)
    for gee in range(half_count):
        twice = 2 * sums[gee]
        if twice == total:
            raise GenericityError(indices_desc(gee | nbit))
        if twice < total:
            shorts.append(gee)
    maximal = [
        g
        for g in shorts
        if not any(h != g and leq_sets(g, h) for h in shorts)
    ]
    return GeneticCode(n, [g | nbit for g in maximal])


class SubgeeLattice:
    """All subsets T of [[n-1]] lying below some gee, with cached statistics:
    k = the largest index whose singleton is a subgee (0 if none), and
    s = the maximal gee size."""

    __slots__ = ("code", "n", "subgees", "k", "s")

    def __init__(self, code: GeneticCode):
        self.code = code
        self.n = code.n
        subgees: set[int] = set()
        for gee in code.gees():
            _collect_down_set(gee, subgees)
        self.subgees = frozenset(subgees)
        self.k = max(
            (i for i in range(1, self.n) if (1 << (i - 1)) in subgees), default=0
        )
        self.s = max((bin(g).count("1") for g in code.gees()), default=0)

    def singletons(self) -> list[int]:
        """Indices i with {i} a subgee, ascending."""
        return [i for i in range(1, self.k + 1) if (1 << (i - 1)) in self.subgees]

    def __contains__(self, mask: int) -> bool:
        return mask in self.subgees


def _collect_down_set(gee: int, out: set[int]) -> None:
    bound = indices_desc(gee)

    def rec(depth: int, ceiling: int, acc: int):
        out.add(acc)
        if depth == len(bound):
            return
        hi = min(bound[depth], ceiling - 1)
        for t in range(hi, 0, -1):
            rec(depth + 1, t, acc | (1 << (t - 1)))

    rec(0, gee.bit_length() + 2 if gee else 2, 0)


def subgee_lattice(code: GeneticCode) -> SubgeeLattice:
    return SubgeeLattice(code)


def minimal_long_gees(n: int, subgees: frozenset[int]) -> list[int]:
    """Minimal (under domination) subsets T of [[n-1]] with T not a subgee,
    i.e. the frontier of sets forced long among subsets containing n."""
    if 0 not in subgees:
        return [0]
    ground = n - 1
    candidates: set[int] = set()
    for t in subgees:
        candidates.update(up_covers(t, ground))
    out = [
        c
        for c in candidates
        if c not in subgees and all(d in subgees for d in down_covers(c))
    ]
    out.sort(key=_gene_key)
    return out


@dataclass(frozen=True)
class Unrealizable:
    """Certificate that no generic length vector has the requested code."""

    reason: str
    margin: Fraction | None = None


def realize(code: GeneticCode):
    """A generic length vector whose genetic code is `code`, or Unrealizable.

    The code fixes the short/long status of every subset containing n
    (short iff dominated by a gene); complements fix the rest.  Only the
    frontier rows (genes short, minimal non-subgees long) enter the LP; the
    rest follow from domination and sortedness.  Feasibility of the strict
    system is decided exactly by maximizing a shared slack margin t with
    l_n normalized to 1; realizable iff the optimum is positive.
    """
    if not code.is_antichain():
        return Unrealizable("genes do not form an antichain")
    lattice = SubgeeLattice(code)
    longs = minimal_long_gees(code.n, lattice.subgees)
    solution = _solve_margin_lp(code.n, code.gees(), longs)
    if solution is None:
        return Unrealizable("no strictly feasible length vector", Fraction(0))
    margin, lengths = solution
    if margin <= 0:
        return Unrealizable("no strictly feasible length vector", margin)
    return _to_integer_lengths(lengths)


def _solve_margin_lp(n: int, short_gees, long_gees):
    """Maximize the margin t for the frontier system; returns (t, lengths)
    with l_n = 1, or None when even the weak system is infeasible."""
    nt = n - 1  # column of t; columns 0..n-2 are l_1..l_{n-1}
    ncols = n
    constraints = []

    def row(coeffs, rhs):
        constraints.append((coeffs, Fraction(rhs)))

    first = [Fraction(0)] * ncols
    first[0] = Fraction(1)
    first[nt] = Fraction(-1)
    row(first, 0)  # l_1 >= t
    for j in range(n - 2):
        r = [Fraction(0)] * ncols
        r[j] = Fraction(-1)
        r[j + 1] = Fraction(1)
        row(r, 0)  # l_{j+2} >= l_{j+1}
    top = [Fraction(0)] * ncols
    top[n - 2] = Fraction(-1)
    row(top, -1)  # l_{n-1} <= 1
    for gee in short_gees:
        r = [Fraction(1)] * (n - 1) + [Fraction(-1)]
        for i in indices_desc(gee):
            r[i - 1] = Fraction(-1)
        row(r, 1)  # total - 2*sum(gene) >= t, with l_n = 1 inside gene
    for gee in long_gees:
        r = [Fraction(-1)] * (n - 1) + [Fraction(-1)]
        for i in indices_desc(gee):
            r[i - 1] = Fraction(1)
        row(r, -1)  # 2*sum(gee+{n}) - total >= t
    objective = [Fraction(0)] * (n - 1) + [Fraction(1)]
    status, value, x = maximize(objective, constraints)
    if status != OPTIMAL:
        return None
    return value, x[: n - 1] + [Fraction(1)]


def _to_integer_lengths(lengths) -> LengthVector:
    lcm = 1
    for v in lengths:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    return LengthVector([v * lcm for v in lengths])


class UnsupportedRangeError(ValueError):
    pass


def enumerate_codes(n: int) -> list[GeneticCode]:
    """All realizable nonempty genetic codes for a given n, canonically sorted.

    Depth-first search over monotone short/long assignments on the gee poset
    (subsets of [[n-1]] in a linear extension of the domination order).  A
    branch keeps a witness length vector and only re-solves the frontier LP
    when the witness violates the newest decision; infeasible branches are
    pruned, so every leaf reached is a realizable code.
    """
    if not 3 <= n <= 9:
        raise UnsupportedRangeError(f"enumeration is supported for 3 <= n <= 9, got {n}")
    ground = n - 1
    full = (1 << ground) - 1
    gees = sorted(range(full + 1), key=lambda m: _extension_key(m))
    nbit = 1 << (n - 1)

    status: dict[int, bool] = {}  # gee -> True if short (decided)
    gene_frontier: list[int] = []
    long_frontier: list[int] = []
    results: list[frozenset[int]] = []
    lp_cache: dict[tuple[frozenset[int], frozenset[int]], tuple | None] = {}

    def solve_frontier():
        key = (frozenset(gene_frontier), frozenset(long_frontier))
        if key in lp_cache:
            return lp_cache[key]
        sol = _solve_margin_lp(n, tuple(gene_frontier), tuple(long_frontier))
        if sol is None or sol[0] <= 0:
            out = None
        else:
            lv = LengthVector(sol[1])
            out = lv.scaled()
        lp_cache[key] = out
        return out

    def witness_short(witness, gee: int) -> bool:
        ints, total = witness
        s = ints[n - 1]
        for i in indices_desc(gee):
            s += ints[i - 1]
        return 2 * s < total

    def witness_long(witness, gee: int) -> bool:
        ints, total = witness
        s = ints[n - 1]
        for i in indices_desc(gee):
            s += ints[i - 1]
        return 2 * s > total

    def rec(idx: int, witness):
        if idx > full:
            if gene_frontier:
                results.append(frozenset(gene_frontier))
            return
        gee = gees[idx]

        # Short branch: allowed when every down-cover is already short, and
        # never for the full gee (the whole of [[n]] is long outright).
        if gee != full and all(status.get(d, False) for d in down_covers(gee)):
            removed = [g for g in gene_frontier if leq_sets(g, gee)]
            for g in removed:
                gene_frontier.remove(g)
            gene_frontier.append(gee)
            status[gee] = True
            w = witness if witness is not None and witness_short(witness, gee) else solve_frontier()
            if w is not None:
                rec(idx + 1, w)
            # Deeper frames may have reshuffled the list while restoring
            # their own removals, so remove by value rather than popping.
            gene_frontier.remove(gee)
            gene_frontier.extend(removed)

        # Long branch: always order-consistent.
        status[gee] = False
        added = not any(leq_sets(ml, gee) for ml in long_frontier)
        if added:
            long_frontier.append(gee)
        w = witness if witness is not None and witness_long(witness, gee) else solve_frontier()
        if w is not None:
            rec(idx + 1, w)
        if added:
            long_frontier.pop()
        del status[gee]

    rec(0, None)
    codes = [GeneticCode(n, [g | nbit for g in fs]) for fs in results]
    codes.sort(key=GeneticCode.sort_key)
    return codes


def _extension_key(mask: int):
    total = 0
    m = mask
    while m:
        low = m & -m
        total += low.bit_length()
        m &= m - 1
    return (bin(mask).count("1"), total, indices_desc(mask))
