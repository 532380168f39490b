"""Truncated bivariate formal power series with exact rational coefficients,
the product/sum sides of the package's generating-function identities, and
the one approximate operation (zeta-style evaluation over restricted
partitions).

All series here have nonnegative exponents only, so truncation commutes
with multiplication: a coefficient within bounds depends only on in-range
factors.  Identity verification is exact; no tolerances are involved
anywhere except in the zeta evaluation, which reports both sides and its
truncation depth instead of asserting agreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

import mpmath
import random

from .errors import (
    BoundsMismatch,
    DivergentParameters,
    ExtentExceeded,
    InvalidExponent,
    NonDistinctA,
    ResourceBound,
)
from .families import (
    enumerate_family,
    iter_pba_by_size,
    parts_in,
    partitions_of,
    seqcong_largest,
    step_bounded_largest,
    count as family_count,
)
from .sequences import SequenceSpec


class BivariateSeries:
    """Sparse truncated series in x and q over the rationals.

    Coefficients beyond the truncation bounds are unknown and never stored;
    arithmetic silently discards out-of-range terms.
    """

    __slots__ = ("xtrunc", "qtrunc", "_coeffs")

    def __init__(
        self,
        xtrunc: int,
        qtrunc: int,
        coeffs: Mapping[tuple[int, int], Fraction] | None = None,
    ):
        if xtrunc < 0 or qtrunc < 0:
            raise InvalidExponent(f"truncation bounds ({xtrunc}, {qtrunc}) must be >= 0")
        self.xtrunc = xtrunc
        self.qtrunc = qtrunc
        stored: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in (coeffs or {}).items():
            if a < 0 or b < 0:
                raise InvalidExponent(f"exponent pair ({a}, {b}) is negative")
            if a > xtrunc or b > qtrunc:
                continue
            c = Fraction(c)
            if c:
                stored[(a, b)] = c
        self._coeffs = stored

    @classmethod
    def constant(cls, value, xtrunc: int, qtrunc: int) -> "BivariateSeries":
        return cls(xtrunc, qtrunc, {(0, 0): Fraction(value)})

    def coefficient(self, xexp: int, qexp: int) -> Fraction:
        if xexp < 0 or qexp < 0 or xexp > self.xtrunc or qexp > self.qtrunc:
            raise BoundsMismatch(
                f"coefficient ({xexp}, {qexp}) is outside the truncation "
                f"bounds ({self.xtrunc}, {self.qtrunc})"
            )
        return self._coeffs.get((xexp, qexp), Fraction(0))

    def items(self) -> list[tuple[tuple[int, int], Fraction]]:
        """Nonzero coefficients sorted by (q-exponent, x-exponent)."""
        return sorted(self._coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._require_same_bounds(other)
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BivariateSeries(self.xtrunc, self.qtrunc, out)

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._require_same_bounds(other)
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            out[key] = out.get(key, Fraction(0)) - c
        return BivariateSeries(self.xtrunc, self.qtrunc, out)

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._require_same_bounds(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self._coeffs.items():
            for (a2, b2), c2 in other._coeffs.items():
                a, b = a1 + a2, b1 + b2
                if a > self.xtrunc or b > self.qtrunc:
                    continue
                key = (a, b)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BivariateSeries(self.xtrunc, self.qtrunc, out)

    def _require_same_bounds(self, other: "BivariateSeries") -> None:
        if self.xtrunc != other.xtrunc or self.qtrunc != other.qtrunc:
            raise BoundsMismatch(
                f"series bounds ({self.xtrunc}, {self.qtrunc}) != "
                f"({other.xtrunc}, {other.qtrunc})"
            )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BivariateSeries):
            return (
                self.xtrunc == other.xtrunc
                and self.qtrunc == other.qtrunc
                and self._coeffs == other._coeffs
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.xtrunc, self.qtrunc, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        return (
            f"BivariateSeries(xtrunc={self.xtrunc}, qtrunc={self.qtrunc}, "
            f"{len(self._coeffs)} terms)"
        )


@dataclass(frozen=True)
class WeightSpec:
    """Exact rational weight function on positive integers.

    kinds: ``one`` (constant 1), ``table`` (explicit values for 1..extent,
    hard error beyond), ``indicator`` (1 on a finite set, else 0).
    """

    kind: str
    table: tuple[Fraction, ...] | None = None
    members: frozenset[int] | None = None

    @classmethod
    def one(cls) -> "WeightSpec":
        return cls("one")

    @classmethod
    def from_values(cls, values: Iterable) -> "WeightSpec":
        return cls("table", table=tuple(Fraction(v) for v in values))

    @classmethod
    def indicator(cls, members: Iterable[int]) -> "WeightSpec":
        return cls("indicator", members=frozenset(int(v) for v in members))

    @classmethod
    def random_table(cls, seed: int, extent: int, span: int = 4) -> "WeightSpec":
        """Seeded table of small rationals, for identity spot checks."""
        rng = random.Random(seed)
        vals = [
            Fraction(rng.randint(-span, span), rng.randint(1, span))
            for _ in range(extent)
        ]
        return cls("table", table=tuple(vals))

    def value(self, n: int) -> Fraction:
        if n < 1:
            raise ExtentExceeded(f"weight index {n} must be >= 1")
        if self.kind == "one":
            return Fraction(1)
        if self.kind == "table":
            if n > len(self.table):
                raise ExtentExceeded(
                    f"weight table of extent {len(self.table)} has no value at {n}"
                )
            return self.table[n - 1]
        if self.kind == "indicator":
            return Fraction(1 if n in self.members else 0)
        raise ValueError(f"unknown weight kind {self.kind!r}")

    def describe(self) -> str:
        if self.kind == "one":
            return "1"
        if self.kind == "indicator":
            return "indicator{" + ",".join(map(str, sorted(self.members))) + "}"
        return ",".join(str(v) for v in self.table)


def geometric_factor(
    c, a: int, b: int, xtrunc: int, qtrunc: int
) -> BivariateSeries:
    """Truncation of 1 / (1 - c x^a q^b): the sum of c^k x^{ka} q^{kb}.

    b must be positive so only finitely many terms land in range.
    """
    if b < 1:
        raise InvalidExponent(f"q-exponent b must be >= 1, got {b}")
    if a < 0:
        raise InvalidExponent(f"x-exponent a must be >= 0, got {a}")
    c = Fraction(c)
    coeffs: dict[tuple[int, int], Fraction] = {}
    k = 0
    while k * b <= qtrunc and k * a <= xtrunc:
        coeffs[(k * a, k * b)] = c**k
        k += 1
    return BivariateSeries(xtrunc, qtrunc, coeffs)


def product_side(f: WeightSpec, qtrunc: int) -> BivariateSeries:
    """Product over n of 1 / (1 - f(n) q^n), truncated at q^qtrunc.

    Factors with n beyond the truncation cannot move retained coefficients,
    so the finite product is exact.
    """
    acc = BivariateSeries.constant(1, 0, qtrunc)
    for n in range(1, qtrunc + 1):
        acc = acc * geometric_factor(f.value(n), 0, n, 0, qtrunc)
    return acc


def partition_sum_side(f: WeightSpec, qtrunc: int) -> BivariateSeries:
    """Sum over all partitions of q^size weighted by the product of f over
    the parts (with multiplicity), by direct enumeration."""
    coeffs: dict[tuple[int, int], Fraction] = {}
    for n in range(qtrunc + 1):
        total = Fraction(0)
        for p in partitions_of(n):
            w = Fraction(1)
            for part, mult in p.frequencies().items():
                w *= f.value(part) ** mult
            total += w
        if total:
            coeffs[(0, n)] = total
    return BivariateSeries(0, qtrunc, coeffs)


def seqcong_sum_side(f: WeightSpec, qtrunc: int) -> BivariateSeries:
    """Sum over sequentially congruent partitions of q^(largest part),
    weighted by f(i) raised to the i-th successive difference over i.

    Enumerates the members with each largest part directly; their lengths
    never exceed the largest part, so f's extent need only reach qtrunc.
    """
    coeffs: dict[tuple[int, int], Fraction] = {}
    for n in range(qtrunc + 1):
        total = Fraction(0)
        for phi in enumerate_family(seqcong_largest(n)):
            w = Fraction(1)
            for i in range(1, phi.length + 1):
                e = (phi.part_at(i) - phi.part_at(i + 1)) // i
                if e:
                    w *= f.value(i) ** e
            total += w
        if total:
            coeffs[(0, n)] = total
    return BivariateSeries(0, qtrunc, coeffs)


def _factor_positions(
    a_seq: SequenceSpec, b_seq: SequenceSpec, qtrunc: int
) -> list[tuple[int, int]]:
    """(a_n, b_n) pairs, one per position n with a_n * b_n <= qtrunc."""
    extents = [e for e in (a_seq.extent, b_seq.extent) if e is not None]
    pairs = []
    if extents:
        for i in range(1, min(extents) + 1):
            a, b = a_seq.at(i), b_seq.at(i)
            if a * b <= qtrunc:
                pairs.append((a, b))
        return pairs
    i = 1
    while True:
        a, b = a_seq.at(i), b_seq.at(i)
        if a * b > qtrunc:  # rule products never decrease with the position
            break
        if i > qtrunc:
            raise ResourceBound(
                "A and B keep infinitely many factors within the truncation; "
                "the product is not a finite computation"
            )
        pairs.append((a, b))
        i += 1
    return pairs


def two_var_product_side(
    a_seq: SequenceSpec, b_seq: SequenceSpec, xtrunc: int, qtrunc: int
) -> BivariateSeries:
    """Product over positions n of 1 / (1 - x^{a_n} q^{a_n b_n}), truncated."""
    acc = BivariateSeries.constant(1, xtrunc, qtrunc)
    for a, b in _factor_positions(a_seq, b_seq, qtrunc):
        if a > xtrunc:
            continue  # only the constant term of this factor is in range
        acc = acc * geometric_factor(Fraction(1), a, a * b, xtrunc, qtrunc)
    return acc


def pba_sum_side(
    a_seq: SequenceSpec, b_seq: SequenceSpec, xtrunc: int, qtrunc: int
) -> BivariateSeries:
    """Coefficient of x^m q^n counts the members of the (A, B) divisibility
    family with length m and size n, by direct enumeration."""
    coeffs: dict[tuple[int, int], Fraction] = {}
    for p in iter_pba_by_size(a_seq, b_seq, qtrunc, max_length=xtrunc):
        key = (p.length, p.size)
        coeffs[key] = coeffs.get(key, Fraction(0)) + 1
    return BivariateSeries(xtrunc, qtrunc, coeffs)


def euler_limit_side(a_seq: SequenceSpec, xtrunc: int) -> BivariateSeries:
    """Product over distinct terms a of A of 1 / (1 - x^a), truncated at
    x^xtrunc; the x^n coefficient counts partitions of n with parts in A.

    Computed directly from the product, never by a numeric limit.
    """
    if a_seq.kind == "table":
        if not a_seq.is_distinct_through(len(a_seq.terms)):
            raise NonDistinctA(f"A ({a_seq.describe()}) must have distinct terms")
        values = [v for v in a_seq.terms if v <= xtrunc]
    elif a_seq.kind == "naturals":
        values = list(range(1, xtrunc + 1))
    elif a_seq.kind == "odds":
        values = list(range(1, xtrunc + 1, 2))
    else:
        raise NonDistinctA(f"A ({a_seq.describe()}) repeats its terms")
    acc = BivariateSeries.constant(1, xtrunc, 0)
    for a in values:
        coeffs = {(k * a, 0): Fraction(1) for k in range(xtrunc // a + 1)}
        acc = acc * BivariateSeries(xtrunc, 0, coeffs)
    return acc


def distinct_product_side(qtrunc: int) -> BivariateSeries:
    """Product over n of (1 + q^n), truncated; the q^n coefficient counts
    partitions of n into distinct parts."""
    acc = BivariateSeries.constant(1, 0, qtrunc)
    for n in range(1, qtrunc + 1):
        factor = BivariateSeries(0, qtrunc, {(0, 0): Fraction(1), (0, n): Fraction(1)})
        acc = acc * factor
    return acc


def step_bounded_sum_side(qtrunc: int) -> BivariateSeries:
    """Sum of q^(largest part) over sequentially congruent partitions whose
    steps are all 0 or the index, by direct enumeration."""
    coeffs = {}
    for n in range(qtrunc + 1):
        c = family_count(step_bounded_largest(n))
        if c:
            coeffs[(0, n)] = Fraction(c)
    return BivariateSeries(0, qtrunc, coeffs)


@dataclass(frozen=True)
class SeriesComparison:
    """Outcome of a coefficientwise comparison; on inequality the fields
    name the first differing exponent pair and both values."""

    equal: bool
    x_exponent: Optional[int] = None
    q_exponent: Optional[int] = None
    lhs_coefficient: Optional[Fraction] = None
    rhs_coefficient: Optional[Fraction] = None


def compare(lhs: BivariateSeries, rhs: BivariateSeries) -> SeriesComparison:
    """Exact coefficientwise equality over the shared truncation bounds."""
    if lhs.xtrunc != rhs.xtrunc or lhs.qtrunc != rhs.qtrunc:
        raise BoundsMismatch(
            f"cannot compare bounds ({lhs.xtrunc}, {lhs.qtrunc}) with "
            f"({rhs.xtrunc}, {rhs.qtrunc})"
        )
    keys = set(lhs._coeffs) | set(rhs._coeffs)
    for a, b in sorted(keys, key=lambda k: (k[1], k[0])):
        lc = lhs._coeffs.get((a, b), Fraction(0))
        rc = rhs._coeffs.get((a, b), Fraction(0))
        if lc != rc:
            return SeriesComparison(False, a, b, lc, rc)
    return SeriesComparison(True)


@dataclass(frozen=True)
class ZetaEvaluation:
    """Both sides of the restricted-partition zeta identity, as high
    precision reals, with the truncation depth that produced the sum."""

    sum_side: mpmath.mpf
    product_side: mpmath.mpf
    qdepth: int
    terms: int


def partition_zeta(
    part_set: Iterable[int], s, qdepth: int, dps: int = 30
) -> ZetaEvaluation:
    """Evaluate the sum of N^(-s) over partitions with parts in the given
    set (N = product of the parts, sizes up to qdepth) alongside the closed
    product over the set of 1 / (1 - t^(-s)).

    Requires every set element >= 2 and s > 1 for convergence; anything
    else raises :class:`DivergentParameters`.  No equality is asserted
    here; callers decide what agreement to demand at which depth.
    """
    values = sorted(set(int(v) for v in part_set))
    if not values:
        raise DivergentParameters("the part set must not be empty")
    if any(v < 2 for v in values):
        raise DivergentParameters(f"every part must be >= 2, got {values}")
    s = Fraction(s)
    if s <= 1:
        raise DivergentParameters(f"exponent s must exceed 1, got {s}")
    if qdepth < 0:
        raise DivergentParameters(f"qdepth must be >= 0, got {qdepth}")
    with mpmath.workdps(dps):
        s_mp = mpmath.mpf(s.numerator) / s.denominator
        prod = mpmath.mpf(1)
        for t in values:
            prod /= 1 - mpmath.power(t, -s_mp)
        total = mpmath.mpf(0)
        terms = 0
        for n in range(qdepth + 1):
            if n == 0:
                total += 1  # the empty partition has product 1
                terms += 1
                continue
            for p in enumerate_family(parts_in(values, n)):
                norm = 1
                for part in p.parts:
                    norm *= part
                total += mpmath.power(norm, -s_mp)
                terms += 1
    return ZetaEvaluation(total, prod, qdepth, terms)
