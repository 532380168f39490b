"""Deterministic generators and counters for every partition family in the
package, plus the finite-truncation ideal checks.

Enumeration order for every family is strictly decreasing lexicographic on
the parts sequence, and two runs produce identical streams.  A configurable
item cap (default 10**7) turns runaway requests into a clean
:class:`ResourceBound` error.

The sequentially congruent generator builds members directly from the
congruence conditions (right-to-left residue choices, realized as a DFS
from the fixed largest part); it deliberately does not reuse the dual map,
so that counting agreement with the plain enumerator is a genuine check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .errors import InvalidDeletion, InvalidPart, NonDistinctA, ResourceBound
from .partition import Partition
from .predicates import ViolationReport, is_member_pba
from .sequences import SequenceSpec

DEFAULT_ITEM_CAP = 10**7

Membership = Callable[[Partition], bool]


@dataclass(frozen=True)
class FamilyDescriptor:
    """A named finite family of partitions.

    kinds: ``all`` (size n), ``parts-in`` (size n, parts from a set),
    ``distinct`` (size n), ``seqcong-lg`` (largest part n), ``pba-len``
    (length n, divisibility family), ``sna-lg`` (largest part n, congruences
    modulo A), ``step-lg`` (largest part n, steps 0 or the index).
    """

    kind: str
    n: int
    part_set: tuple[int, ...] | None = None
    a_seq: SequenceSpec | None = None
    b_seq: SequenceSpec | None = None

    def describe(self) -> str:
        bits = [self.kind, str(self.n)]
        if self.part_set is not None:
            bits.append("T=" + ",".join(map(str, self.part_set)))
        if self.a_seq is not None:
            bits.append("A=" + self.a_seq.describe())
        if self.b_seq is not None:
            bits.append("B=" + self.b_seq.describe())
        return ":".join(bits)


def all_of_size(n: int) -> FamilyDescriptor:
    return FamilyDescriptor("all", _check_n(n))


def parts_in(part_set: Iterable[int], n: int) -> FamilyDescriptor:
    t = tuple(sorted(set(int(v) for v in part_set)))
    if any(v < 1 for v in t):
        raise InvalidPart(f"part set must contain positive integers, got {t}")
    return FamilyDescriptor("parts-in", _check_n(n), part_set=t)


def distinct_of_size(n: int) -> FamilyDescriptor:
    return FamilyDescriptor("distinct", _check_n(n))


def seqcong_largest(n: int) -> FamilyDescriptor:
    return FamilyDescriptor("seqcong-lg", _check_n(n))


def pba_length(a_seq: SequenceSpec, b_seq: SequenceSpec, n: int) -> FamilyDescriptor:
    return FamilyDescriptor("pba-len", _check_n(n), a_seq=a_seq, b_seq=b_seq)


def sna_largest(a_seq: SequenceSpec, n: int) -> FamilyDescriptor:
    return FamilyDescriptor("sna-lg", _check_n(n), a_seq=a_seq)


def step_bounded_largest(n: int) -> FamilyDescriptor:
    return FamilyDescriptor("step-lg", _check_n(n))


def _check_n(n: int) -> int:
    if n < 0:
        raise InvalidPart(f"family parameter n must be >= 0, got {n}")
    return n


# ---------------------------------------------------------------------------
# raw generators (tuples, strictly decreasing lexicographic)


def _gen_all(n: int) -> Iterator[tuple[int, ...]]:
    cur: list[int] = []

    def rec(rem: int, mx: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield tuple(cur)
            return
        for k in range(min(rem, mx), 0, -1):
            cur.append(k)
            yield from rec(rem - k, k)
            cur.pop()

    yield from rec(n, n if n else 1)


def _gen_parts_in(part_set: tuple[int, ...], n: int) -> Iterator[tuple[int, ...]]:
    allowed = sorted(part_set, reverse=True)
    cur: list[int] = []

    def rec(rem: int, start: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield tuple(cur)
            return
        for idx in range(start, len(allowed)):
            v = allowed[idx]
            if v > rem:
                continue
            cur.append(v)
            yield from rec(rem - v, idx)
            cur.pop()

    yield from rec(n, 0)


def _gen_distinct(n: int) -> Iterator[tuple[int, ...]]:
    cur: list[int] = []

    def rec(rem: int, mx: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield tuple(cur)
            return
        for k in range(min(rem, mx), 0, -1):
            cur.append(k)
            yield from rec(rem - k, k - 1)
            cur.pop()

    yield from rec(n, n if n else 1)


def _gen_seqcong_lg(n: int) -> Iterator[tuple[int, ...]]:
    # Prefixes extend while the next part can still reach a valid smallest
    # part (a part at depth r must be a positive multiple of r, hence >= r).
    if n == 0:
        yield ()
        return
    prefix = [n]

    def rec(i: int, v: int) -> Iterator[tuple[int, ...]]:
        for c in range(v, i, -i):  # c = v mod i, i+1 <= c <= v, descending
            prefix.append(c)
            yield from rec(i + 1, c)
            prefix.pop()
        if v % i == 0:
            yield tuple(prefix)

    yield from rec(1, n)


def _gen_step_lg(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    prefix = [n]

    def rec(i: int, v: int) -> Iterator[tuple[int, ...]]:
        for c in (v, v - i):  # steps of 0 or i, descending
            if c >= i + 1:  # a later stop needs a part equal to its depth
                prefix.append(c)
                yield from rec(i + 1, c)
                prefix.pop()
        if v == i:
            yield tuple(prefix)

    yield from rec(1, n)


def _gen_sna_lg(a_seq: SequenceSpec, n: int) -> Iterator[tuple[int, ...]]:
    # Stops at depth r need a_r | part_r, so part_r >= a_r; strictly
    # increasing terms bound the depth.  Constant-like rules admit members
    # of every length and the family is infinite.
    if not a_seq.strictly_increasing:
        raise ResourceBound(
            f"A ({a_seq.describe()}) does not increase strictly; the family "
            "has members of unbounded length and cannot be enumerated"
        )
    if n == 0:
        yield ()
        return
    prefix = [n]

    def rec(i: int, v: int) -> Iterator[tuple[int, ...]]:
        a_i = a_seq.at(i)
        if v > a_i:  # a continuation can only stop at a strictly larger term
            a_next = a_seq.at(i + 1)
            for c in range(v, a_next - 1, -a_i):
                prefix.append(c)
                yield from rec(i + 1, c)
                prefix.pop()
        if v % a_i == 0:
            yield tuple(prefix)

    yield from rec(1, n)


def _pba_value_pairs(
    a_seq: SequenceSpec, b_seq: SequenceSpec, *, a_bound: int | None, ab_bound: int | None
) -> list[tuple[int, int]]:
    """Distinct B-values paired with the A-term at their first position.

    Positions are bounded by explicit tables when present; otherwise by the
    requested a- or a*b-bound, which is only finite for rules whose relevant
    product grows.  Repeated B-values keep their first position, matching
    the membership predicate.
    """
    pairs: list[tuple[int, int]] = []
    seen: set[int] = set()

    def push(a: int, b: int) -> None:
        if b in seen:
            return
        if a_bound is not None and a > a_bound:
            return
        if ab_bound is not None and a * b > ab_bound:
            return
        seen.add(b)
        pairs.append((b, a))

    extents = [e for e in (a_seq.extent, b_seq.extent) if e is not None]
    if extents:
        for i in range(1, min(extents) + 1):
            push(a_seq.at(i), b_seq.at(i))
        return pairs
    # both total rules
    bound = a_bound if ab_bound is None else ab_bound
    i = 1
    while True:
        a, b = a_seq.at(i), b_seq.at(i)
        prod = a if ab_bound is None else a * b
        if prod > bound:
            break
        if i > bound:
            if b_seq.kind in ("ones", "constant"):
                break  # a single B-value; later positions repeat it
            raise ResourceBound(
                f"A ({a_seq.describe()}) keeps infinitely many terms within "
                f"the bound {bound}; the family is infinite"
            )
        push(a, b)
        i += 1
    return pairs


def _gen_pba_len(
    a_seq: SequenceSpec, b_seq: SequenceSpec, n: int
) -> Iterator[tuple[int, ...]]:
    pairs = _pba_value_pairs(a_seq, b_seq, a_bound=n, ab_bound=None)
    members: list[tuple[int, ...]] = []
    chosen: list[tuple[int, int]] = []

    def rec(idx: int, rem: int) -> None:
        if rem == 0:
            parts: list[int] = []
            for value, mult in chosen:
                parts.extend([value] * mult)
            parts.sort(reverse=True)
            members.append(tuple(parts))
            return
        if idx == len(pairs):
            return
        b, a = pairs[idx]
        rec(idx + 1, rem)
        m = a
        while m <= rem:
            chosen.append((b, m))
            rec(idx + 1, rem - m)
            chosen.pop()
            m += a

    rec(0, n)
    members.sort(reverse=True)
    yield from members


def iter_pba_by_size(
    a_seq: SequenceSpec,
    b_seq: SequenceSpec,
    max_size: int,
    max_length: int | None = None,
) -> Iterator[Partition]:
    """All members of the (A, B) divisibility family with size <= max_size
    (and, optionally, length <= max_length), including the empty partition.

    A part b with A-term a occurs in multiples of a copies, so it only
    contributes when a*b <= max_size; that keeps the candidate value set
    finite for every sequence kind.
    """
    pairs = _pba_value_pairs(a_seq, b_seq, a_bound=None, ab_bound=max_size)
    pairs.sort(reverse=True)  # deterministic stream, largest values first
    chosen: list[tuple[int, int]] = []

    def rec(idx: int, size_left: int, len_left: int | None) -> Iterator[Partition]:
        if idx == len(pairs):
            parts: list[int] = []
            for value, mult in chosen:
                parts.extend([value] * mult)
            parts.sort(reverse=True)
            yield Partition(parts)
            return
        b, a = pairs[idx]
        yield from rec(idx + 1, size_left, len_left)
        m = a
        while m * b <= size_left and (len_left is None or m <= len_left):
            chosen.append((b, m))
            yield from rec(idx + 1, size_left - m * b, None if len_left is None else len_left - m)
            chosen.pop()
            m += a

    yield from rec(0, max_size, max_length)


# ---------------------------------------------------------------------------
# public enumeration API


def _dispatch(desc: FamilyDescriptor) -> Iterator[tuple[int, ...]]:
    if desc.kind == "all":
        return _gen_all(desc.n)
    if desc.kind == "parts-in":
        return _gen_parts_in(desc.part_set, desc.n)
    if desc.kind == "distinct":
        return _gen_distinct(desc.n)
    if desc.kind == "seqcong-lg":
        return _gen_seqcong_lg(desc.n)
    if desc.kind == "step-lg":
        return _gen_step_lg(desc.n)
    if desc.kind == "sna-lg":
        return _gen_sna_lg(desc.a_seq, desc.n)
    if desc.kind == "pba-len":
        return _gen_pba_len(desc.a_seq, desc.b_seq, desc.n)
    raise ValueError(f"unknown family kind {desc.kind!r}")


def enumerate_family(
    desc: FamilyDescriptor, max_items: int | None = None
) -> Iterator[Partition]:
    """Yield every member of the family once, in strictly decreasing
    lexicographic order on the parts sequence."""
    cap = DEFAULT_ITEM_CAP if max_items is None else max_items
    produced = 0
    for t in _dispatch(desc):
        produced += 1
        if produced > cap:
            raise ResourceBound(
                f"enumeration of {desc.describe()} exceeded the cap of {cap} items"
            )
        yield Partition(t)


def count(desc: FamilyDescriptor, max_items: int | None = None) -> int:
    """Number of members; by contract the length of :func:`enumerate_family`."""
    return sum(1 for _ in enumerate_family(desc, max_items=max_items))


def partitions_of(n: int) -> Iterator[Partition]:
    """Convenience iterator over all partitions of n (decreasing lex)."""
    return enumerate_family(all_of_size(n))


def partition_count(n: int) -> int:
    """p(n), computed by the plain enumerator."""
    return count(all_of_size(n))


def counts_by_size(membership: Membership, bound: int) -> list[int]:
    """Entry n is the number of partitions of n satisfying `membership`,
    for 0 <= n <= bound (the empty partition counts at n = 0)."""
    if bound < 0:
        raise InvalidPart(f"bound must be >= 0, got {bound}")
    return [
        sum(1 for p in partitions_of(n) if membership(p)) for n in range(bound + 1)
    ]


@dataclass(frozen=True)
class EquivalenceReport:
    equivalent: bool
    first_difference: Optional[int]
    counts_first: tuple[int, ...]
    counts_second: tuple[int, ...]


def ideal_equivalent_upto(
    first: Membership, second: Membership, bound: int
) -> EquivalenceReport:
    """Compare size-n member counts of two families for all n <= bound."""
    c1 = counts_by_size(first, bound)
    c2 = counts_by_size(second, bound)
    for n, (x, y) in enumerate(zip(c1, c2)):
        if x != y:
            return EquivalenceReport(False, n, tuple(c1), tuple(c2))
    return EquivalenceReport(True, None, tuple(c1), tuple(c2))


def check_ideal_closure(membership: Membership, bound: int) -> ViolationReport:
    """Verify closure under deleting a single part, over members of size
    <= bound.  Closure under single deletions gives closure under arbitrary
    ones by induction, so this check is complete.

    On failure the report's index is the deleted part and the detail names
    the witness member.
    """
    for n in range(1, bound + 1):
        for p in partitions_of(n):
            if not membership(p):
                continue
            for value in sorted(set(p.parts)):
                reduced = p.delete_parts(value, 1)
                if not membership(reduced):
                    return ViolationReport(
                        False,
                        value,
                        f"deleting one copy of {value} from {list(p.parts)} "
                        f"leaves {list(reduced.parts)}, which is outside the family",
                    )
    return ViolationReport(True, None, "closed under single-part deletion")


def scaled_deletion(
    lam: Partition,
    a_seq: SequenceSpec,
    b_seq: SequenceSpec,
    value: int,
    copies: int,
) -> Partition:
    """Delete `copies` copies of `value`, where `copies` must be a positive
    multiple of the A-term at the value's B-position.  Any other request is
    outside the quasi-ideal contract and raises :class:`InvalidDeletion`."""
    pos = b_seq.index_of(value)
    if pos is None:
        raise InvalidDeletion(f"value {value} is not a term of B ({b_seq.describe()})")
    a = a_seq.at(pos)
    if copies < 1 or copies % a:
        raise InvalidDeletion(
            f"may only delete positive multiples of {a} copies of {value}, "
            f"not {copies}"
        )
    return lam.delete_parts(value, copies)


def check_quasi_ideal(
    a_seq: SequenceSpec, b_seq: SequenceSpec, bound: int
) -> ViolationReport:
    """Verify that deleting any allowed multiple of copies of any part keeps
    membership in the (A, B) divisibility family, over members of size
    <= bound."""
    for p in iter_pba_by_size(a_seq, b_seq, bound):
        freq = p.frequencies()
        for value in sorted(freq):
            pos = b_seq.index_of(value)
            a = a_seq.at(pos)
            k = a
            while k <= freq[value]:
                reduced = scaled_deletion(p, a_seq, b_seq, value, k)
                if not is_member_pba(reduced, a_seq, b_seq).ok:
                    return ViolationReport(
                        False,
                        value,
                        f"deleting {k} copies of {value} from {list(p.parts)} "
                        f"leaves {list(reduced.parts)}, which is outside the family",
                    )
                k += a
    return ViolationReport(True, None, "closed under scaled deletions")


def _a_value_set(a_seq: SequenceSpec, upto: int) -> tuple[int, ...]:
    """Distinct term values of A that are <= upto."""
    if a_seq.kind == "table":
        return tuple(sorted({v for v in a_seq.terms if v <= upto}))
    if a_seq.kind == "naturals":
        return tuple(range(1, upto + 1))
    if a_seq.kind == "odds":
        return tuple(range(1, upto + 1, 2))
    if a_seq.kind == "ones":
        return (1,) if upto >= 1 else ()
    if a_seq.kind == "constant":
        return (a_seq.k,) if a_seq.k <= upto else ()
    raise ValueError(f"unknown sequence kind {a_seq.kind!r}")


def restricted_count(a_seq: SequenceSpec, n: int) -> int:
    """Number of partitions of n with all parts among the terms of A."""
    values = _a_value_set(a_seq, n)
    if n == 0:
        return 1
    if not values:
        return 0
    return count(parts_in(values, n))


@dataclass(frozen=True)
class InvarianceReport:
    ok: bool
    detail: str
    sets_differ_at: Optional[int]
    counts: tuple[int, ...]


def count_invariance_suite(
    a_seq: SequenceSpec,
    b_seq: SequenceSpec,
    bound: int,
    a_prime: SequenceSpec | None = None,
    b_prime: SequenceSpec | None = None,
) -> InvarianceReport:
    """Check, for every n <= bound, that the family count is unchanged by
    permuting A and by replacing B, and equals the count of partitions of n
    with parts in A.

    `a_prime` defaults to the reversed table of A; `b_prime` defaults to the
    table 1..extent(B) (or 1..bound for rule B).  The report also records
    the first n at which the A-permuted family differs as a set, which it
    must somewhere when the permutation is nontrivial.
    """
    probe = max(bound, a_seq.extent or 0)
    if not a_seq.is_distinct_through(probe):
        raise NonDistinctA(f"A ({a_seq.describe()}) must have distinct terms")
    if a_prime is None:
        if a_seq.kind != "table":
            raise InvalidPart("a_prime is required when A is not an explicit table")
        a_prime = SequenceSpec.table(tuple(reversed(a_seq.terms)))
    if a_seq.kind == "table" and a_prime.kind == "table":
        if sorted(a_seq.terms) != sorted(a_prime.terms):
            raise InvalidPart(
                f"a_prime ({a_prime.describe()}) is not a permutation of A "
                f"({a_seq.describe()})"
            )
    if b_prime is None:
        ext = b_seq.extent
        b_prime = SequenceSpec.table(range(1, max(ext or bound, 1) + 1))

    counts: list[int] = []
    differs_at: Optional[int] = None
    for n in range(bound + 1):
        base = sorted(p.parts for p in enumerate_family(pba_length(a_seq, b_seq, n)))
        permuted = sorted(
            p.parts for p in enumerate_family(pba_length(a_prime, b_seq, n))
        )
        replaced = count(pba_length(a_seq, b_prime, n))
        expected = restricted_count(a_seq, n)
        counts.append(len(base))
        if len(base) != len(permuted):
            return InvarianceReport(
                False,
                f"n={n}: permuting A changed the count {len(base)} -> {len(permuted)}",
                differs_at,
                tuple(counts),
            )
        if len(base) != replaced:
            return InvarianceReport(
                False,
                f"n={n}: replacing B changed the count {len(base)} -> {replaced}",
                differs_at,
                tuple(counts),
            )
        if len(base) != expected:
            return InvarianceReport(
                False,
                f"n={n}: family count {len(base)} differs from the {expected} "
                "partitions with parts in A",
                differs_at,
                tuple(counts),
            )
        if differs_at is None and base != permuted:
            differs_at = n
    return InvarianceReport(
        True, "counts invariant under permuting A and replacing B", differs_at, tuple(counts)
    )
