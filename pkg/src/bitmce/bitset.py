"""Fixed-capacity bitstrings.

A :class:`BitSet` keeps its bits in a single Python ``int``; CPython applies
``&``, ``|`` and ``^`` digit by digit, so every set operation is word-parallel.
The :attr:`BitSet.words` view exposes the same bits as 64-bit words.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Optional

WORD_BITS = 64
_WORD_MASK = (1 << WORD_BITS) - 1


def lowest_bit(x: int) -> int:
    """Index of the lowest set bit of a nonzero int."""
    return (x & -x).bit_length() - 1


def iter_bits(x: int) -> Iterator[int]:
    """Set bit positions of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class BitSet:
    __slots__ = ("capacity", "bits")

    def __init__(self, capacity: int, bits: int = 0):
        if capacity < 0:
            raise ValueError("capacity must be non-negative")
        self.capacity = capacity
        # trailing padding is always clean
        self.bits = bits & ((1 << capacity) - 1)

    @classmethod
    def from_indices(cls, capacity: int, indices: Iterable[int]) -> "BitSet":
        bits = 0
        for i in indices:
            if not 0 <= i < capacity:
                raise IndexError(f"bit {i} out of range for capacity {capacity}")
            bits |= 1 << i
        return cls(capacity, bits)

    @classmethod
    def full(cls, capacity: int) -> "BitSet":
        return cls(capacity, (1 << capacity) - 1)

    @property
    def words(self) -> tuple[int, ...]:
        nwords = -(-self.capacity // WORD_BITS)
        return tuple((self.bits >> (WORD_BITS * k)) & _WORD_MASK for k in range(nwords))

    def _check(self, other: "BitSet") -> None:
        if self.capacity != other.capacity:
            raise ValueError(
                f"capacity mismatch: {self.capacity} vs {other.capacity}"
            )

    def __and__(self, other: "BitSet") -> "BitSet":
        self._check(other)
        return BitSet(self.capacity, self.bits & other.bits)

    def __or__(self, other: "BitSet") -> "BitSet":
        self._check(other)
        return BitSet(self.capacity, self.bits | other.bits)

    def __sub__(self, other: "BitSet") -> "BitSet":
        self._check(other)
        return BitSet(self.capacity, self.bits & ~other.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitSet):
            return NotImplemented
        return self.capacity == other.capacity and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.capacity, self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.capacity and (self.bits >> i) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __repr__(self) -> str:
        return f"BitSet({self.capacity}, {{{', '.join(map(str, self))}}})"

    def set(self, i: int) -> None:
        if not 0 <= i < self.capacity:
            raise IndexError(f"bit {i} out of range for capacity {self.capacity}")
        self.bits |= 1 << i

    def clear(self, i: int) -> None:
        if not 0 <= i < self.capacity:
            raise IndexError(f"bit {i} out of range for capacity {self.capacity}")
        self.bits &= ~(1 << i)

    def first(self) -> Optional[int]:
        if not self.bits:
            return None
        return lowest_bit(self.bits)

    def copy(self) -> "BitSet":
        return BitSet(self.capacity, self.bits)


def bs_and(a: BitSet, b: BitSet) -> BitSet:
    return a & b


def bs_or(a: BitSet, b: BitSet) -> BitSet:
    return a | b


def bs_and_not(a: BitSet, b: BitSet) -> BitSet:
    """Set difference ``a \\ b``."""
    return a - b


def bs_first(a: BitSet) -> Optional[int]:
    """Smallest member, or ``None`` for the empty set."""
    return a.first()


def bs_popcount(a: BitSet) -> int:
    return len(a)


def bs_iterate(a: BitSet) -> Iterator[int]:
    return iter(a)


def bs_set(a: BitSet, i: int) -> None:
    a.set(i)


def bs_clear(a: BitSet, i: int) -> None:
    a.clear(i)


def bs_test(a: BitSet, i: int) -> bool:
    return i in a


def bs_is_empty(a: BitSet) -> bool:
    return not a


def bs_copy(a: BitSet) -> BitSet:
    return a.copy()
