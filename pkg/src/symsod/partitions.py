"""Integer partitions, weak compositions, and the length-weighted count q(n; l).

Everything here is exact integer arithmetic.  The three quantities interlock:

* ``p(n)`` -- the number of partitions of ``n``,
* weak compositions -- length-``l`` tuples of non-negative integers summing
  to ``n``,
* ``q(n; l)`` -- the sum over all weak compositions ``(i_1, ..., i_l)`` of
  ``n`` of the product ``p(i_1) * ... * p(i_l)``.

``q(n; l)`` is the length of the full exceptional collection carried by the
n-th symmetric product of a category with an exceptional collection of
length ``l``; the rewrite engine reproduces it structurally and the series
module reproduces it as a coefficient of an Euler product, so the counting
here deliberately stays independent of both.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Iterator


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 1 for p in self.parts):
            raise ValueError(f"partition parts must be >= 1: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {self.parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


@dataclass(frozen=True)
class WeakComposition:
    """A tuple of non-negative integers with fixed length and total."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) < 1:
            raise ValueError("weak composition needs at least one entry")
        if any(e < 0 for e in self.entries):
            raise ValueError(f"weak composition entries must be >= 0: {self.entries}")

    @property
    def total(self) -> int:
        return sum(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass
class MultiplicityVector:
    """Exponent encoding of a partition: ``a[i]`` parts equal to ``i``.

    The weight is ``sum(i * a[i])``; entries with ``a[i] == 0`` are omitted.
    """

    a: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for i, ai in self.a.items():
            if i < 1 or ai < 1:
                raise ValueError(f"multiplicity vector needs i >= 1, a_i >= 1: {self.a}")

    @property
    def weight(self) -> int:
        return sum(i * ai for i, ai in self.a.items())

    def as_partition(self) -> Partition:
        parts: list[int] = []
        for i in sorted(self.a, reverse=True):
            parts.extend([i] * self.a[i])
        return Partition(tuple(parts))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MultiplicityVector) and self.a == other.a


def _iter_partitions(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for first in range(min(max_part, remaining), 0, -1):
        for rest in _iter_partitions(remaining - first, first):
            yield (first,) + rest


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order.

    The order starts with ``[n]`` and ends with ``[1, 1, ..., 1]``, e.g. for
    n=4: [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return [Partition(parts) for parts in _iter_partitions(n, n)]


# p(n) table built with the pentagonal-number recurrence.  Kept deliberately
# independent of partitions_of so the two can cross-check each other.
_P_TABLE: list[int] = [1]
_P_LOCK = threading.Lock()


def partition_count(n: int) -> int:
    """The partition number ``p(n)``; memoized in a process-wide table."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n < len(_P_TABLE):
        return _P_TABLE[n]
    with _P_LOCK:
        while len(_P_TABLE) <= n:
            m = len(_P_TABLE)
            total = 0
            k = 1
            while True:
                g1 = k * (3 * k - 1) // 2
                g2 = k * (3 * k + 1) // 2
                if g1 > m:
                    break
                sign = -1 if k % 2 == 0 else 1
                total += sign * _P_TABLE[m - g1]
                if g2 <= m:
                    total += sign * _P_TABLE[m - g2]
                k += 1
            _P_TABLE.append(total)
    return _P_TABLE[n]


def _iter_weak_compositions(n: int, l: int) -> Iterator[tuple[int, ...]]:
    if l == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _iter_weak_compositions(n - first, l - 1):
            yield (first,) + rest


def weak_compositions(n: int, l: int) -> list[WeakComposition]:
    """All length-``l`` weak compositions of ``n``, lexicographically ordered.

    There are ``C(n + l - 1, l - 1)`` of them.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    return [WeakComposition(c) for c in _iter_weak_compositions(n, l)]


_Q_CACHE: dict[tuple[int, int], int] = {}


def q_length(n: int, l: int) -> int:
    """``q(n; l)``: sum of ``p(i_1)*...*p(i_l)`` over weak compositions of n.

    Computed literally from the composition sum (with memoization), not from
    the convolution recurrence -- the recurrence and the Euler-product
    coefficient are kept as independent cross-checks.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    key = (n, l)
    cached = _Q_CACHE.get(key)
    if cached is not None:
        return cached
    partition_count(n)  # warm the p table once
    p = _P_TABLE
    total = 0
    for comp in _iter_weak_compositions(n, l):
        prod = 1
        for i in comp:
            prod *= p[i]
        total += prod
    _Q_CACHE[key] = total
    return total


def multiplicity_vectors(n: int) -> list[MultiplicityVector]:
    """All multiplicity vectors of weight ``n``, in bijection with partitions_of(n)."""
    result = []
    for part in partitions_of(n):
        a: dict[int, int] = {}
        for i in part:
            a[i] = a.get(i, 0) + 1
        result.append(MultiplicityVector(a))
    return result


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer (0 when out of range)."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)
