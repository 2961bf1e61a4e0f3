"""
This module provides ``PointSet``, a subset of the universe {0, ..., n-1}
stored as an integer bitmask, plus the bit helpers the operators share.

Classes:
PointSet: An immutable subset of a finite universe.

Functions:
make_bitset: Bitmask of a collection of indexes.
iter_indexes: Indexes of the set bits, ascending.
count_bits: Number of set bits.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, List

from .errors import UniverseMismatch

__all__ = ["PointSet", "make_bitset", "iter_indexes", "count_bits"]


def make_bitset(indexes: Iterable[int]) -> int:
    value = 0
    for idx in indexes:
        value |= 1 << idx
    return value


def count_bits(value: int) -> int:
    return bin(value).count("1")


def iter_indexes(value: int) -> Iterator[int]:
    index = 0
    while value:
        if value & 1:
            yield index
        value >>= 1
        index += 1


def full_bits(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class PointSet:
    """A subset of {0, ..., n-1}.

    Set algebra is written with the usual operators: ``|`` union, ``&``
    intersection, ``-`` difference, ``~`` complement, ``<=`` subset.
    Mixing sets over different universes raises ``UniverseMismatch``.
    Ordering (``sort_key``) is numeric on the bitmask, which is the
    canonical order used by every enumeration.
    """
    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("universe size must be non-negative")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError("member index out of range for n=%d" % self.n)

    @staticmethod
    def of(n: int, members: Iterable[int]) -> "PointSet":
        """of(n, members) -> PointSet
            Build the set holding the given point indexes.
        """
        members = list(members)
        for idx in members:
            if not 0 <= idx < n:
                raise ValueError("point %d is not in a universe of %d" %
                                 (idx, n))
        return PointSet(n, make_bitset(members))

    @staticmethod
    def empty(n: int) -> "PointSet":
        return PointSet(n, 0)

    @staticmethod
    def full(n: int) -> "PointSet":
        return PointSet(n, full_bits(n))

    @staticmethod
    def single(n: int, x: int) -> "PointSet":
        return PointSet.of(n, (x, ))

    @staticmethod
    def all_subsets(n: int) -> Iterator["PointSet"]:
        """Every subset of the universe in canonical order."""
        for bits in range(1 << n):
            yield PointSet(n, bits)

    def _check(self, other: "PointSet"):
        if not isinstance(other, PointSet):
            raise TypeError("expected a PointSet, got %r" % (other, ))
        if other.n != self.n:
            raise UniverseMismatch(self.n, other.n)

    def __or__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.n, self.bits | other.bits)

    def __and__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.n, self.bits & other.bits)

    def __sub__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.n, self.bits & ~other.bits)

    def __invert__(self) -> "PointSet":
        return PointSet(self.n, full_bits(self.n) & ~self.bits)

    def complement(self) -> "PointSet":
        return ~self

    def __le__(self, other: "PointSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "PointSet") -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: "PointSet") -> bool:
        return other <= self

    def __gt__(self, other: "PointSet") -> bool:
        return other < self

    def issubset(self, other: "PointSet") -> bool:
        return self <= other

    def isdisjoint(self, other: "PointSet") -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.n and (self.bits >> x) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter_indexes(self.bits)

    def __len__(self) -> int:
        return count_bits(self.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def is_full(self) -> bool:
        return self.bits == full_bits(self.n)

    def members(self) -> List[int]:
        return list(self)

    def sort_key(self) -> int:
        return self.bits

    def labels(self, names) -> List[str]:
        """Member labels in index order."""
        return [names[i] for i in self]

    def __repr__(self):
        return "PointSet(n=%d, %s)" % (self.n, "{" + ",".join(
            str(i) for i in self) + "}")
