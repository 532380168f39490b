"""Canonical partition values and Young-diagram utilities.

A partition is stored as its weakly decreasing tuple of positive parts;
the empty tuple is the empty partition.  All values are immutable and all
operations are pure, so they can be shared freely across threads.  Parts
are plain Python integers and therefore unbounded.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import InsufficientMultiplicity, InvalidPart


class Partition:
    """A weakly decreasing sequence of positive integers.

    The constructor demands canonical input; use :meth:`from_parts` to
    sort and drop zeros, or :meth:`from_frequencies` to expand a
    part -> multiplicity mapping.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        t = tuple(parts)
        for i, v in enumerate(t):
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InvalidPart(f"part {v!r} is not a positive integer")
            if i and t[i - 1] < v:
                raise InvalidPart(f"parts {t} are not weakly decreasing")
        self._parts = t

    @classmethod
    def from_parts(cls, raw: Iterable[int]) -> "Partition":
        """Canonicalize an arbitrary finite sequence: drop zeros, sort descending.

        Negative entries are rejected with :class:`InvalidPart`.
        """
        vals = []
        for v in raw:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InvalidPart(f"part {v!r} is not a nonnegative integer")
            if v:
                vals.append(v)
        vals.sort(reverse=True)
        p = cls.__new__(cls)
        p._parts = tuple(vals)
        return p

    @classmethod
    def from_frequencies(cls, fv: Mapping[int, int]) -> "Partition":
        """Expand a part -> multiplicity mapping into a canonical partition."""
        vals = []
        for part, mult in fv.items():
            if not isinstance(part, int) or isinstance(part, bool) or part < 1:
                raise InvalidPart(f"part {part!r} is not a positive integer")
            if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
                raise InvalidPart(f"multiplicity {mult!r} of part {part} is not positive")
            vals.extend([part] * mult)
        vals.sort(reverse=True)
        p = cls.__new__(cls)
        p._parts = tuple(vals)
        return p

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        """Sum of the parts."""
        return sum(self._parts)

    @property
    def length(self) -> int:
        """Number of parts."""
        return len(self._parts)

    @property
    def largest(self) -> int:
        """First part, or 0 for the empty partition."""
        return self._parts[0] if self._parts else 0

    def part_at(self, k: int) -> int:
        """The k-th part (1-based); 0 for every index beyond the length."""
        if k < 1:
            raise IndexError(f"part index {k} must be >= 1")
        return self._parts[k - 1] if k <= len(self._parts) else 0

    def frequencies(self) -> dict[int, int]:
        """Part -> multiplicity mapping; absent parts are simply missing."""
        freq: dict[int, int] = {}
        for v in self._parts:
            freq[v] = freq.get(v, 0) + 1
        return freq

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram: column k has one cell per part >= k."""
        if not self._parts:
            return Partition()
        cols = [0] * self._parts[0]
        for v in self._parts:
            for k in range(v):
                cols[k] += 1
        p = Partition.__new__(Partition)
        p._parts = tuple(cols)
        return p

    def delete_parts(self, value: int, count: int = 1) -> "Partition":
        """Remove `count` copies of `value`; the rest of the partition is unchanged."""
        if value < 1 or count < 1:
            raise InvalidPart(f"cannot delete {count} copies of {value}")
        have = self._parts.count(value)
        if have < count:
            raise InsufficientMultiplicity(
                f"partition {list(self._parts)} has only {have} copies of {value}, "
                f"cannot delete {count}"
            )
        vals = list(self._parts)
        for _ in range(count):
            vals.remove(value)
        p = Partition.__new__(Partition)
        p._parts = tuple(vals)
        return p

    def ferrers(self) -> str:
        """ASCII Young diagram, one row of dots per part (debug aid)."""
        return "\n".join("." * v for v in self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({self._parts!r})"


EMPTY = Partition()


def conjugate_by_frequencies(lam: Partition) -> Partition:
    """Conjugate computed from parts and frequencies alone, no diagram.

    Writing lam = (a_1^{m_1} ... a_r^{m_r}) with a_1 > ... > a_r >= 1, the
    conjugate has r distinct parts b_i = m_1 + ... + m_{r-i+1}, the i-th of
    which occurs a_{r-i+1} - a_{r-i+2} times (taking a_{r+1} = 0).  This is
    an independent path from :meth:`Partition.conjugate` and the two are
    asserted equal in the test suite.
    """
    freq = lam.frequencies()
    if not freq:
        return Partition()
    a = sorted(freq, reverse=True)  # a_1 > a_2 > ... > a_r
    r = len(a)
    prefix = 0
    cum = []  # cum[j] = m_{a_1} + ... + m_{a_{j+1}}
    for v in a:
        prefix += freq[v]
        cum.append(prefix)
    out: dict[int, int] = {}
    for i in range(1, r + 1):
        b = cum[r - i]
        below = a[r - i + 1] if r - i + 1 < r else 0
        out[b] = a[r - i] - below
    return Partition.from_frequencies(out)
