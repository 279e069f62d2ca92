"""Brute-force order-complex homology and fix-count characters.

This module is the independent oracle for the closed-form representation
formulas: Betti numbers come from ranks of explicit boundary matrices,
characters from Möbius numbers and chain counts of fixed-point subposets.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable

from .linalg import sparse_rank
from .words import RankedPoset, build_poset, check_rank_set, subwords, words_of_length

DEFAULT_CHAIN_CAP = 5_000_000


class ChainCapExceeded(RuntimeError):
    """The order complex has more chains than the configured cap."""


def chain_cap() -> int:
    return int(os.environ.get("SUBWORD_CHAIN_CAP", DEFAULT_CHAIN_CAP))


@dataclass(frozen=True)
class ChainComplexSummary:
    """Face counts and reduced Betti numbers keyed by dimension (from -1)."""

    face_counts: dict[int, int]
    betti: dict[int, int]
    reduced_euler: int

    @property
    def top_dimension(self) -> int:
        return max(self.face_counts)

    def nonzero(self) -> dict[int, int]:
        return {d: b for d, b in self.betti.items() if b}

    def betti_vector(self) -> tuple[int, ...]:
        """Reduced Betti numbers in dimensions 0..top."""
        return tuple(self.betti[d] for d in range(0, self.top_dimension + 1))


def betti_numbers(P: RankedPoset, cap: int | None = None) -> ChainComplexSummary:
    """Reduced rational homology of the order complex of P (bounds excluded)."""
    cap = chain_cap() if cap is None else cap
    total = P.count_chains()
    if total > cap:
        raise ChainCapExceeded(f"{total} chains exceed the cap of {cap}")

    by_dim: dict[int, list[tuple[int, ...]]] = {-1: [()]}
    for ch in P.chains():
        by_dim.setdefault(len(ch) - 1, []).append(ch)
    top = max(by_dim)
    index = {d: {ch: i for i, ch in enumerate(chs)} for d, chs in by_dim.items()}

    ranks = {}
    for d in range(0, top + 1):
        lower = index[d - 1]
        rows = []
        for ch in by_dim[d]:
            row = {}
            for i in range(len(ch)):
                row[lower[ch[:i] + ch[i + 1:]]] = (-1) ** i
            rows.append(row)
        ranks[d] = sparse_rank(rows)
    ranks[top + 1] = 0

    counts = {d: len(chs) for d, chs in by_dim.items()}
    betti = {d: counts[d] - ranks.get(d, 0) - ranks[d + 1] for d in range(-1, top + 1)}
    euler = sum(c if d % 2 == 0 else -c for d, c in counts.items())
    return ChainComplexSummary(counts, betti, euler)


def admissible_fix_counts(n: int) -> list[int]:
    """Fixed-point counts of permutations of n letters: 0..n except n-1."""
    return [f for f in range(n + 1) if f != n - 1 or n == 0]


@dataclass(frozen=True)
class FixCharacter:
    """A class function of S_n depending only on the number of fixed points."""

    n: int
    values: dict[int, int] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return self.values[self.n]

    def __getitem__(self, f: int) -> int:
        return self.values[f]


def lefschetz_character(n: int, k: int, ranks: Iterable[int] | None = None,
                        normal: bool = False) -> FixCharacter:
    """Homology character of A*_{n,k}(T): at each fix count f the Möbius number
    of the fixed subposet, times (-1)^(|T|-1)."""
    t = check_rank_set(range(1, k + 1) if ranks is None else ranks, k)
    sign = (-1) ** (len(t) - 1)
    return FixCharacter(n, {f: sign * build_poset(f, k, t, normal=normal).mobius_number()
                            for f in admissible_fix_counts(n)})


def chain_character(n: int, k: int, ranks: Iterable[int] | None = None,
                    normal: bool = False) -> FixCharacter:
    """Permutation character on maximal chains: f -> number of maximal chains
    over an f-letter alphabet, by enumeration."""
    t = check_rank_set(range(1, k + 1) if ranks is None else ranks, k)
    values = {}
    for f in admissible_fix_counts(n):
        P = build_poset(f, k, t, normal=normal)
        values[f] = sum(1 for _ in P.flags())
    return FixCharacter(n, values)


def whitney_dims(n: int, k: int, normal: bool = False) -> list[int]:
    """Dimensions of WH_0..WH_k of A*_{n,k}, from lower-interval Möbius values."""
    P = build_poset(n, k, normal=normal)
    mu = P.mobius_from_bottom()
    dims = [1] + [0] * k
    for i, r in enumerate(P.rank):
        dims[r] += (-1) ** r * mu[i]
    return dims


def upper_mobius(n: int, k: int) -> dict[tuple[int, ...], int]:
    """mu(x, 1^) for every nonempty word x of length <= k over n letters.

    Works top-down: once mu(y, 1^) is known, it is pushed to every distinct
    proper subword of y, so each x collects the sum over all y > x.  Only the
    subword relation is used, and no poset is stored.
    """
    acc: dict[tuple[int, ...], int] = {}
    mu: dict[tuple[int, ...], int] = {}
    for r in range(k, 0, -1):
        for y in words_of_length(n, r):
            m = -1 - acc.pop(y, 0)
            mu[y] = m
            for x in subwords(y):
                if 0 < len(x) < r:
                    acc[x] = acc.get(x, 0) + m
    return mu


def dual_whitney_dims(n: int, k: int) -> list[int]:
    """Dimensions of WH*_0..WH*_{k+1} of A*_{n,k}.

    WH*_m collects the upper intervals (x, 1^) over elements of rank k+1-m;
    the bottom element (the empty word) sits at rank 0.
    """
    dims = [0] * (k + 2)
    dims[0] = 1
    total = 0
    for x, m in upper_mobius(n, k).items():
        dims[k + 1 - len(x)] += (-1) ** (k + 1 - len(x)) * m
        total += m
    dims[k + 1] = (-1) ** (k + 1) * (-1 - total)
    return dims


# -- per-permutation traces -------------------------------------------------

def _permute(word: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(g[a] for a in word)


def permutation_traces(n: int, k: int, ranks: Iterable[int] | None = None
                       ) -> dict[tuple[int, ...], tuple[int, int]]:
    """For every permutation g of the alphabet: (Lefschetz trace, chain trace).

    The Lefschetz trace is the alternating count of chains fixed by g,
    including the empty chain in dimension -1, sign-normalised to the top
    homology; the chain trace counts fixed maximal chains.  Computed on the
    full poset, without passing through fixed-point subposets.
    """
    P = build_poset(n, k, ranks)
    sign = (-1) ** (len(P.ranks) - 1)
    all_chains = list(P.chains())
    flags = list(P.flags())
    out = {}
    for g in permutations(range(n)):
        image = [P.index(_permute(w, g)) for w in P.elements]
        fixed = [all(image[i] == i for i in ch) for ch in all_chains]
        euler = -1 + sum((-1) ** (len(ch) - 1) for ch, ok in zip(all_chains, fixed) if ok)
        chain_fixed = sum(1 for fl in flags if all(image[i] == i for i in fl))
        out[g] = (sign * euler, chain_fixed)
    return out


def fix_count(g: tuple[int, ...]) -> int:
    return sum(1 for i, x in enumerate(g) if i == x)
