"""Exact scalar arithmetic: 2-adic valuations, binomial coefficients with
arbitrary integer upper argument, binary digit sums, and truncated power
series over the rationals.

Everything here is big-integer / big-rational arithmetic.  No floating point
is used anywhere in this package: valuations and integrality questions are
meaningless under rounding.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction


class InfiniteValuation:
    """The 2-adic valuation of zero: a top element above every integer.

    Using a distinguished object (rather than a large sentinel integer) lets
    min-over-coordinates logic skip zero coordinates safely.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return isinstance(other, InfiniteValuation)

    def __hash__(self):
        return hash("InfiniteValuation")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, InfiniteValuation)

    def __gt__(self, other):
        return not isinstance(other, InfiniteValuation)

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__


#: Valuation of the zero element.
INFINITY = InfiniteValuation()


def nu2(x) -> int:
    """2-adic valuation of a nonzero integer or Fraction.

    Returns the exponent of 2 in x (negative when the reduced denominator is
    even).  For x == 0 the distinguished INFINITY object is returned, never a
    numeric answer.
    """
    if isinstance(x, int):
        if x == 0:
            return INFINITY
        return ((x & -x).bit_length()) - 1
    num = x.numerator
    if num == 0:
        return INFINITY
    den = x.denominator
    return ((num & -num).bit_length() - 1) - ((den & -den).bit_length() - 1)


def alpha(m: int) -> int:
    """Number of 1's in the binary expansion of m >= 0."""
    if m < 0:
        raise ValueError(f"alpha requires a nonnegative argument, got {m}")
    return bin(m).count("1")


def binom(a: int, k: int) -> int:
    """Generalized binomial coefficient a(a-1)...(a-k+1) / k! for integer a.

    Computed by the falling-factorial product so that negative upper
    arguments work uniformly; the division by k! is always exact.
    """
    if k < 0:
        raise ValueError(f"binom requires k >= 0, got k={k}")
    num = 1
    for j in range(k):
        num *= a - j
    return num // math.factorial(k)


_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" (optional leading minus) into a Fraction.

    Rejects anything else, in particular decimal notation.
    """
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    """Print a rational in lowest terms as "p" or "p/q"."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class TruncatedSeries:
    """A one-variable power series over Q truncated at a fixed degree.

    Coefficients are stored for degrees 0..degree; all arithmetic discards
    terms above the truncation degree.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs=()):
        if degree < 0:
            raise ValueError("truncation degree must be nonnegative")
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > degree + 1:
            cs = cs[: degree + 1]
        cs.extend([Fraction(0)] * (degree + 1 - len(cs)))
        self.degree = degree
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, degree: int) -> "TruncatedSeries":
        return cls(degree, [1])

    @classmethod
    def x(cls, degree: int) -> "TruncatedSeries":
        return cls(degree, [0, 1])

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        return TruncatedSeries(
            self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        other = self._coerce(other)
        return TruncatedSeries(
            self.degree, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self):
        return TruncatedSeries(self.degree, [-a for a in self.coeffs])

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.degree != self.degree:
                raise ValueError("mixed truncation degrees")
            return other
        return TruncatedSeries(self.degree, [Fraction(other)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.degree, [Fraction(other) * a for a in self.coeffs])
        other = self._coerce(other)
        d = self.degree
        out = [Fraction(0)] * (d + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(d + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(d, out)

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be nonzero."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ValueError("series with zero constant term has no inverse")
        d = self.degree
        inv = [Fraction(0)] * (d + 1)
        inv[0] = 1 / c0
        for i in range(1, d + 1):
            acc = Fraction(0)
            for j in range(1, i + 1):
                acc += self.coeffs[j] * inv[i - j]
            inv[i] = -acc / c0
        return TruncatedSeries(d, inv)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c != 0:
                terms.append(f"{format_rational(c)}*x^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"TruncatedSeries(deg={self.degree}: {body})"


def series_pow(base: TruncatedSeries, e: int) -> TruncatedSeries:
    """Raise a series with constant term 1 to an arbitrary integer power.

    Negative powers go through truncated inversion followed by a positive
    power, so every coefficient stays exact.
    """
    if base.coeffs[0] != 1:
        raise ValueError("series_pow requires constant term exactly 1")
    if e < 0:
        base = base.reciprocal()
        e = -e
    result = TruncatedSeries.one(base.degree)
    square = base
    while e:
        if e & 1:
            result = result * square
        e >>= 1
        if e:
            square = square * square
    return result
