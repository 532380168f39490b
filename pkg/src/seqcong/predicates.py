"""Membership tests for the partition families handled by this package.

Each structured predicate returns a :class:`ViolationReport` rather than a
bare boolean so that callers (and the CLI) can point at the first broken
condition.  The mod-1 condition at index 1 is always satisfied but is still
evaluated, keeping index bookkeeping aligned with the definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ExtentExceeded
from .partition import Partition
from .sequences import SequenceSpec


@dataclass(frozen=True)
class ViolationReport:
    """Outcome of a membership test; `index` pins the first failure."""

    ok: bool
    index: Optional[int]
    detail: str

    def __bool__(self) -> bool:
        return self.ok


def _passed(detail: str) -> ViolationReport:
    return ViolationReport(True, None, detail)


def _failed(index: int, detail: str) -> ViolationReport:
    return ViolationReport(False, index, detail)


def is_sequentially_congruent(lam: Partition) -> ViolationReport:
    """Successive parts congruent modulo their index; smallest part divisible
    by the length.  The empty partition passes vacuously.

    Index i < length reports a broken congruence between parts i and i+1;
    index == length reports the divisibility condition on the smallest part.
    """
    r = lam.length
    for i in range(1, r + 1):
        a = lam.part_at(i)
        b = lam.part_at(i + 1)
        if (a - b) % i:
            if i == r:
                return _failed(i, f"smallest part {a} is not congruent to 0 modulo {r}")
            return _failed(i, f"lambda_{i}={a} is not congruent to lambda_{i + 1}={b} modulo {i}")
    return _passed("all sequential congruences hold")


def is_frequency_congruent(lam: Partition) -> ViolationReport:
    """Each part divides its own multiplicity; the failing part is the index."""
    freq = lam.frequencies()
    for part in sorted(freq):
        if freq[part] % part:
            return _failed(
                part,
                f"part {part} has multiplicity {freq[part]}, not divisible by {part}",
            )
    return _passed("every part divides its multiplicity")


def is_member_pba(lam: Partition, a_seq: SequenceSpec, b_seq: SequenceSpec) -> ViolationReport:
    """Parts drawn from the terms of B, with the multiplicity of the i-th
    B-term divisible by the i-th A-term.

    A part that B provably lacks is a membership failure; an A lookup past
    an explicit table raises :class:`ExtentExceeded`.  With A = B = naturals
    this reduces exactly to :func:`is_frequency_congruent`.
    """
    freq = lam.frequencies()
    for part in sorted(freq):
        pos = b_seq.index_of(part)
        if pos is None:
            return _failed(part, f"part {part} is not a term of B ({b_seq.describe()})")
        a = a_seq.at(pos)
        if freq[part] % a:
            return _failed(
                part,
                f"multiplicity {freq[part]} of part {part} is not divisible by "
                f"{a} (A term at position {pos})",
            )
    return _passed("all multiplicities divisible as required")


def is_member_sna(lam: Partition, a_seq: SequenceSpec) -> ViolationReport:
    """Successive parts congruent modulo the terms of A (zero-extended), so
    the final condition is divisibility of the smallest part by A's term at
    the length."""
    r = lam.length
    ext = a_seq.extent
    if ext is not None and r > ext:
        raise ExtentExceeded(
            f"partition of length {r} needs A terms beyond extent {ext}"
        )
    for i in range(1, r + 1):
        a = lam.part_at(i)
        b = lam.part_at(i + 1)
        m = a_seq.at(i)
        if (a - b) % m:
            return _failed(
                i, f"lambda_{i}={a} is not congruent to lambda_{i + 1}={b} modulo {m}"
            )
    return _passed("all congruences modulo A hold")


def has_distinct_parts(lam: Partition) -> bool:
    """True when every multiplicity equals 1."""
    return len(set(lam.parts)) == lam.length


def is_step_bounded_seqcong(lam: Partition) -> ViolationReport:
    """Every difference lambda_i - lambda_{i+1} (zero-extended) is 0 or i.

    Partitions passing this are automatically sequentially congruent.
    """
    r = lam.length
    for i in range(1, r + 1):
        step = lam.part_at(i) - lam.part_at(i + 1)
        if step not in (0, i):
            return _failed(i, f"step {step} at index {i} is neither 0 nor {i}")
    return _passed("all steps are 0 or the index")


def is_self_conjugate(lam: Partition) -> bool:
    """True when the partition equals its own diagram transpose."""
    return lam.conjugate() == lam
