"""The bijections between ordinary and sequentially congruent partitions,
their compositions, orbit traces, and the frequency-scaling bijection for
divisibility families.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ExtentExceeded,
    InternalContradiction,
    NonDistinctA,
    NotMemberPBA,
    NotSequentiallyCongruent,
    PartNotInA,
)
from .partition import Partition
from .predicates import is_member_pba, is_sequentially_congruent
from .sequences import SequenceSpec


def pi(lam: Partition) -> Partition:
    """Sequentially congruent dual: the i-th output part is i times the i-th
    input part plus the sum of all later parts.

    The image of a partition of n has largest part n and the same length.
    """
    parts = lam.parts
    out = []
    tail = 0
    for i in range(len(parts), 0, -1):
        v = parts[i - 1]
        out.append(i * v + tail)
        tail += v
    out.reverse()
    result = Partition(out)
    # guaranteed by construction; a failure here is a defect, not user error
    assert is_sequentially_congruent(result).ok
    return result


def pi_inverse(phi: Partition) -> Partition:
    """Invert :func:`pi` by working right to left: the smallest part divided
    by the length, then each earlier part minus the recovered tail, divided
    by its index.

    Raises :class:`NotSequentiallyCongruent` when the input is not in the
    domain; any inexact division or ordering failure afterwards would mean a
    library defect and raises :class:`InternalContradiction`.
    """
    report = is_sequentially_congruent(phi)
    if not report.ok:
        raise NotSequentiallyCongruent(report)
    parts = phi.parts
    r = len(parts)
    lam = [0] * r
    tail = 0
    for i in range(r, 0, -1):
        num = parts[i - 1] - tail
        if num <= 0 or num % i:
            raise InternalContradiction(
                f"recovering part {i} of {list(parts)}: residue {num} not a "
                f"positive multiple of {i}"
            )
        lam[i - 1] = num // i
        tail += lam[i - 1]
    for i in range(r - 1):
        if lam[i] < lam[i + 1]:
            raise InternalContradiction(f"recovered parts {lam} are not ordered")
    return Partition(lam)


def sigma(phi: Partition) -> Partition:
    """Map a sequentially congruent partition to the partition whose
    multiplicity of i is the i-th successive difference divided by i
    (zero-extended past the length).

    The result has size equal to the largest part of the input.
    """
    report = is_sequentially_congruent(phi)
    if not report.ok:
        raise NotSequentiallyCongruent(report)
    r = phi.length
    freq: dict[int, int] = {}
    for i in range(1, r + 1):
        d = phi.part_at(i) - phi.part_at(i + 1)
        if d % i:
            raise InternalContradiction(
                f"difference {d} at index {i} of {list(phi.parts)} not divisible by {i}"
            )
        if d:
            freq[i] = d // i
    return Partition.from_frequencies(freq)


def sigma_inverse(gam: Partition) -> Partition:
    """Right inverse of :func:`sigma`, realized as pi composed with
    conjugation (sigma after pi is exactly conjugation)."""
    return pi(gam.conjugate())


def sigma_pi(lam: Partition) -> Partition:
    """Literal composition sigma(pi(lam)); equals the diagram transpose."""
    return sigma(pi(lam))


@dataclass(frozen=True)
class OrbitTrace:
    """Alternating trace of the two maps, starting and ending at the input.

    `states` alternates between the plain-partition side and the
    sequentially congruent side; `cycle_length` counts full round trips
    (always 1 or 2).
    """

    states: tuple[Partition, ...]
    cycle_length: int
    closed: bool


def orbit(start: Partition, side: str = "P") -> OrbitTrace:
    """Alternate the two maps from `start` until it recurs.

    side="P" starts on the plain side (apply pi first); side="S" starts on
    the sequentially congruent side (apply sigma first) and requires a
    sequentially congruent input.  Round trips beyond two are impossible;
    hitting the bound raises :class:`InternalContradiction`.
    """
    if side not in ("P", "S"):
        raise ValueError(f"side must be 'P' or 'S', got {side!r}")
    if side == "S":
        report = is_sequentially_congruent(start)
        if not report.ok:
            raise NotSequentiallyCongruent(report)
        ops = (sigma, pi)
    else:
        ops = (pi, sigma)
    states = [start]
    current = start
    for half_step in range(1, 5):
        current = ops[(half_step + 1) % 2](current)
        states.append(current)
        if half_step % 2 == 0 and current == start:
            return OrbitTrace(tuple(states), half_step // 2, True)
    raise InternalContradiction(
        f"orbit of {list(start.parts)} did not close within two round trips"
    )


def _require_distinct(a_seq: SequenceSpec, through: int) -> None:
    if not a_seq.is_distinct_through(through):
        raise NonDistinctA(
            f"A ({a_seq.describe()}) repeats terms within the first {through}; "
            "positions would be ambiguous"
        )


def scale_map(lam: Partition, a_seq: SequenceSpec, b_seq: SequenceSpec) -> Partition:
    """Send a partition with parts among the terms of A to the member of the
    (A, B) divisibility family obtained by replacing each part a_i of
    multiplicity m by the part b_i of multiplicity a_i * m.

    The result's length equals the input's size.  A must have distinct terms
    over the consulted range so positions are unambiguous.
    """
    freq = lam.frequencies()
    out: dict[int, int] = {}
    max_pos = 0
    for part, mult in freq.items():
        pos = a_seq.index_of(part)
        if pos is None:
            raise PartNotInA(f"part {part} is not a term of A ({a_seq.describe()})")
        max_pos = max(max_pos, pos)
        b = b_seq.at(pos)
        out[b] = out.get(b, 0) + part * mult
    _require_distinct(a_seq, max_pos)
    return Partition.from_frequencies(out)


def scale_map_inverse(mu: Partition, a_seq: SequenceSpec, b_seq: SequenceSpec) -> Partition:
    """Invert :func:`scale_map`: each part b_i of multiplicity a_i * m maps
    back to the part a_i with multiplicity m.

    The input must belong to the (A, B) divisibility family, otherwise
    :class:`NotMemberPBA` is raised with the violation report.
    """
    report = is_member_pba(mu, a_seq, b_seq)
    if not report.ok:
        raise NotMemberPBA(report)
    freq = mu.frequencies()
    out: dict[int, int] = {}
    max_pos = 0
    for part, mult in freq.items():
        pos = b_seq.index_of(part)
        if pos is None:  # membership above already guarantees a position
            raise InternalContradiction(f"part {part} lost its position in B")
        max_pos = max(max_pos, pos)
        a = a_seq.at(pos)
        out[a] = out.get(a, 0) + mult // a
    _require_distinct(a_seq, max_pos)
    return Partition.from_frequencies(out)
