"""Finite integer sets stored as sorted, disjoint closed intervals.

Chains of maximal Schreier sets double in size, so the covering
constructions routinely produce sets with 2^50 and more elements.  All
operations here cost O(#intervals), never O(#elements); nothing below
materializes elements unless explicitly asked to.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Iterable, Iterator

from .errors import InvalidInputError, SizeLimitError

# Refuse to expand interval sets into element lists beyond this size.
MATERIALIZE_LIMIT = 200_000


class IntSet:
    __slots__ = ("_ivs", "_size", "_starts")

    def __init__(self, intervals: Iterable[tuple[int, int]] = ()):
        merged: list[list[int]] = []
        for lo, hi in sorted(intervals):
            if not isinstance(lo, int) or not isinstance(hi, int):
                raise InvalidInputError("interval endpoints must be integers")
            if lo > hi:
                raise InvalidInputError(f"empty interval [{lo}, {hi}]")
            if merged and lo <= merged[-1][1] + 1:
                if hi > merged[-1][1]:
                    merged[-1][1] = hi
            else:
                merged.append([lo, hi])
        self._ivs: tuple[tuple[int, int], ...] = tuple((a, b) for a, b in merged)
        self._size = sum(b - a + 1 for a, b in self._ivs)
        self._starts = [a for a, _ in self._ivs]

    @classmethod
    def from_iterable(cls, elements: Iterable[int]) -> "IntSet":
        elems = sorted(set(elements))
        for e in elems:
            if not isinstance(e, int):
                raise InvalidInputError(f"set element {e!r} is not an integer")
        ivs = []
        for e in elems:
            if ivs and e == ivs[-1][1] + 1:
                ivs[-1][1] = e
            else:
                ivs.append([e, e])
        return cls((a, b) for a, b in ivs)

    @classmethod
    def interval(cls, lo: int, hi: int) -> "IntSet":
        """Closed integer interval [lo, hi]."""
        return cls(((lo, hi),))

    @property
    def intervals(self) -> tuple[tuple[int, int], ...]:
        return self._ivs

    @property
    def size(self) -> int:
        return self._size

    @property
    def is_empty(self) -> bool:
        return self._size == 0

    @property
    def min(self) -> int:
        if self.is_empty:
            raise InvalidInputError("empty set has no minimum")
        return self._ivs[0][0]

    @property
    def max(self) -> int:
        if self.is_empty:
            raise InvalidInputError("empty set has no maximum")
        return self._ivs[-1][1]

    def __contains__(self, value: int) -> bool:
        i = bisect_right(self._starts, value) - 1
        return i >= 0 and self._ivs[i][0] <= value <= self._ivs[i][1]

    def __bool__(self) -> bool:
        return self._size > 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntSet) and self._ivs == other._ivs

    def __hash__(self) -> int:
        return hash(self._ivs)

    def __repr__(self) -> str:
        if self._size <= 12:
            return f"IntSet({self.to_list()})"
        return f"IntSet(<{self._size} elements in {len(self._ivs)} intervals>)"

    def element_at(self, ordinal: int) -> int:
        """1-based: the ordinal-th smallest element."""
        if not 1 <= ordinal <= self._size:
            raise InvalidInputError(f"ordinal {ordinal} out of range 1..{self._size}")
        rem = ordinal
        for lo, hi in self._ivs:
            n = hi - lo + 1
            if rem <= n:
                return lo + rem - 1
            rem -= n
        raise AssertionError("unreachable")

    def first_k(self, k: int) -> "IntSet":
        """The k smallest elements."""
        if k < 0 or k > self._size:
            raise InvalidInputError(f"cannot take first {k} of {self._size} elements")
        out = []
        rem = k
        for lo, hi in self._ivs:
            if rem == 0:
                break
            n = hi - lo + 1
            take = min(n, rem)
            out.append((lo, lo + take - 1))
            rem -= take
        return IntSet(out)

    def drop_first(self, k: int) -> "IntSet":
        if k < 0 or k > self._size:
            raise InvalidInputError(f"cannot drop first {k} of {self._size} elements")
        out = []
        rem = k
        for lo, hi in self._ivs:
            n = hi - lo + 1
            if rem >= n:
                rem -= n
                continue
            out.append((lo + rem, hi))
            rem = 0
        return IntSet(out)

    def select_ordinals(self, ordinals: "IntSet") -> "IntSet":
        """Subset at the given 1-based ordinal positions."""
        if ordinals.is_empty:
            return EMPTY
        if ordinals.max > self._size:
            raise InvalidInputError(
                f"ordinal {ordinals.max} out of range 1..{self._size}"
            )
        out = []
        base = 0  # ordinals before the current interval
        for lo, hi in self._ivs:
            n = hi - lo + 1
            for olo, ohi in ordinals._ivs:
                a = max(olo, base + 1)
                b = min(ohi, base + n)
                if a <= b:
                    out.append((lo + a - base - 1, lo + b - base - 1))
            base += n
        return IntSet(out)

    def intersection(self, other: "IntSet") -> "IntSet":
        out = []
        i = j = 0
        a, b = self._ivs, other._ivs
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = min(a[i][1], b[j][1])
            if lo <= hi:
                out.append((lo, hi))
            if a[i][1] < b[j][1]:
                i += 1
            else:
                j += 1
        return IntSet(out)

    def union(self, other: "IntSet") -> "IntSet":
        return IntSet(self._ivs + other._ivs)

    def issubset(self, other: "IntSet") -> bool:
        return self.intersection(other)._size == self._size

    def iter_elements(self) -> Iterator[int]:
        for lo, hi in self._ivs:
            yield from range(lo, hi + 1)

    def to_list(self, limit: int | None = MATERIALIZE_LIMIT) -> list[int]:
        if limit is not None and self._size > limit:
            raise SizeLimitError(
                f"refusing to materialize {self._size} elements (limit {limit})"
            )
        return list(self.iter_elements())


EMPTY = IntSet()


def as_intset(value) -> IntSet:
    """Coerce an IntSet, iterable of ints, or (lo, hi) interval list."""
    if isinstance(value, IntSet):
        return value
    return IntSet.from_iterable(value)


def successive(a: IntSet, b: IntSet) -> bool:
    """True iff max(a) < min(b); both must be non-empty."""
    return a.max < b.min
