"""Exact integer primitives: binomials, Stirling numbers, Bell numbers and
set/integer partitions.

Everything here works with Python integers; nothing is floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator


def binomial(m: int, j: int) -> int:
    """Binomial coefficient valid for any integer upper argument.

    Negative upper arguments use C(-m, j) = (-1)^j C(m+j-1, j).

      >>> binomial(5, 2), binomial(-3, 2), binomial(7, -1)
      (10, 6, 0)
    """
    if j < 0:
        return 0
    if m >= 0:
        return comb(m, j)
    return (-1) ** j * comb(-m + j - 1, j)


@lru_cache(maxsize=None)
def stirling2(m: int, d: int) -> int:
    """Stirling number of the second kind S(m, d)."""
    if m < 0 or d < 0:
        return 0
    if m == 0 or d == 0:
        return 1 if m == d else 0
    return stirling2(m - 1, d - 1) + d * stirling2(m - 1, d)


@lru_cache(maxsize=None)
def stirling_cycle(m: int, j: int) -> int:
    """Signless Stirling number of the first kind c(m, j): permutations of
    an m-set with exactly j cycles."""
    if m < 0 or j < 0:
        return 0
    if m == 0 or j == 0:
        return 1 if m == j else 0
    return stirling_cycle(m - 1, j - 1) + (m - 1) * stirling_cycle(m - 1, j)


def reduced_stirling(j: int, d: int) -> int:
    """Set partitions of {1..j} into d blocks, no block holding two
    consecutive integers.  Equal to S(j-1, d-1) for j >= 1."""
    if j == 0:
        return 1 if d == 0 else 0
    return stirling2(j - 1, d - 1)


def bell(m: int) -> int:
    return sum(stirling2(m, d) for d in range(m + 1))


def bell_no_singletons(m: int) -> int:
    """Number of set partitions of an m-set without singleton blocks,
    by inclusion-exclusion over the forced singletons."""
    return sum((-1) ** r * comb(m, r) * bell(m - r) for r in range(m + 1))


# -- set partitions ---------------------------------------------------------

@dataclass(frozen=True)
class SetPartition:
    """A set partition of {1..m}; blocks sorted by their least element."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __str__(self) -> str:
        return "|".join("".join(map(str, b)) for b in self.blocks)


def restricted_growth_strings(m: int) -> Iterator[tuple[int, ...]]:
    """All restricted growth strings of length m (a_1 = 0, a_i <= 1 + max prefix)."""
    if m == 0:
        yield ()
        return

    def extend(prefix: list[int], top: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == m:
            yield tuple(prefix)
            return
        for a in range(top + 2):
            prefix.append(a)
            yield from extend(prefix, max(top, a))
            prefix.pop()

    yield from extend([0], 0)


def set_partitions(m: int) -> Iterator[SetPartition]:
    for rgs in restricted_growth_strings(m):
        nblocks = max(rgs, default=-1) + 1
        blocks: list[list[int]] = [[] for _ in range(nblocks)]
        for i, a in enumerate(rgs, start=1):
            blocks[a].append(i)
        yield SetPartition(tuple(tuple(b) for b in blocks))


def count_set_partitions(m: int, d: int | None = None, *,
                         no_singletons: bool = False,
                         no_consecutive: bool = False) -> int:
    """Brute-force count of set partitions of {1..m} with optional filters.

    Independent of the recurrences above; used as their oracle.
    """
    total = 0
    for p in set_partitions(m):
        if d is not None and len(p.blocks) != d:
            continue
        if no_singletons and any(len(b) == 1 for b in p.blocks):
            continue
        if no_consecutive and any(
                b[i + 1] == b[i] + 1 for b in p.blocks for i in range(len(b) - 1)):
            continue
        total += 1
    return total


# -- integer partitions -----------------------------------------------------

@dataclass(frozen=True, order=True)
class IntPartition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 1 for p in self.parts) or list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError(f"not a partition: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def multiplicity(self, i: int) -> int:
        return self.parts.count(i)

    @property
    def ones(self) -> int:
        """m_1, the number of parts equal to 1 (fixed points of the cycle type)."""
        return self.parts.count(1)

    def z(self) -> int:
        """Centralizer order z = prod_i i^{m_i} m_i!."""
        return prod(i ** self.parts.count(i) * factorial(self.parts.count(i))
                    for i in set(self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[IntPartition, ...]:
    """All partitions of n in reverse lexicographic order, (n) first."""

    def gen(rest: int, largest: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(IntPartition(p) for p in gen(n, n))


def z(lam: IntPartition) -> int:
    return lam.z()
