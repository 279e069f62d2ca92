"""Words over a finite alphabet under subword order.

Words are tuples of letter indices 0..n-1 (printed as a, b, c, ...).  The
finite posets built here are rank-selected truncations of subword order,
optionally restricted to normal words, with artificial bottom and top.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from .combinatorics import binomial

Word = tuple[int, ...]
EMPTY: Word = ()


def word(s: str | Iterable[int]) -> Word:
    """Parse 'abab' (or an iterable of letter indices) into a word."""
    if isinstance(s, str):
        return tuple(ord(ch) - ord("a") for ch in s)
    return tuple(s)


def fmt(w: Word) -> str:
    return "".join(chr(ord("a") + x) for x in w) or "ε"


def words_of_length(n: int, r: int) -> list[Word]:
    """All n^r words of length r, in lexicographic order."""
    return list(product(range(n), repeat=r))


def is_subword(u: Word, v: Word) -> bool:
    """True iff u is obtained from v by deleting letters."""
    it = iter(v)
    return all(letter in it for letter in u)


def repetition_set(v: Word) -> frozenset[int]:
    """Positions i (1-based) with v[i-1] == v[i]."""
    return frozenset(i + 1 for i in range(1, len(v)) if v[i - 1] == v[i])


def _count(u: Word, v: Word, forced: frozenset[int]) -> int:
    # ways[j]: embeddings of u[:j] into the positions scanned so far
    ways = [1] + [0] * len(u)
    for pos, letter in enumerate(v, start=1):
        new = [0] * len(ways) if pos in forced else ways[:]
        for j in range(len(u)):
            if u[j] == letter:
                new[j + 1] += ways[j]
        ways = new
    return ways[-1]


def count_embeddings(u: Word, v: Word) -> int:
    """Number of index sequences i_1 < ... < i_m with v[i_1..i_m] = u."""
    return _count(u, v, frozenset())


def count_normal_embeddings(u: Word, v: Word) -> int:
    """Embeddings whose index set contains the repetition set of v."""
    return _count(u, v, repetition_set(v))


def is_normal(w: Word) -> bool:
    return all(w[i] != w[i + 1] for i in range(len(w) - 1))


def count_normal(n: int, j: int) -> int:
    """n(n-1)^(j-1) normal words of length j >= 1."""
    if j < 1:
        raise ValueError("length must be positive")
    return n * (n - 1) ** (j - 1)


def normal_words(n: int, r: int) -> list[Word]:
    return [w for w in words_of_length(n, r) if is_normal(w)]


def mobius_interval(u: Word, v: Word) -> int:
    """Möbius function of subword order from the normal-embedding count."""
    if not is_subword(u, v):
        raise ValueError(f"{fmt(u)} is not a subword of {fmt(v)}")
    return (-1) ** (len(v) - len(u)) * count_normal_embeddings(u, v)


def subwords(v: Word) -> set[Word]:
    """All distinct subwords of v, including the empty word and v."""
    return {tuple(v[i] for i in idx)
            for r in range(len(v) + 1) for idx in combinations(range(len(v)), r)}


def mobius_recursive(u: Word, v: Word) -> int:
    """Möbius function on the explicit interval [u, v] by the defining
    recursion mu(u, w) = -sum_{u <= y < w} mu(u, y)."""
    if not is_subword(u, v):
        raise ValueError(f"{fmt(u)} is not a subword of {fmt(v)}")
    interval = sorted((w for w in subwords(v) if is_subword(u, w)), key=len)

    @lru_cache(maxsize=None)
    def mu(w: Word) -> int:
        if w == u:
            return 1
        return -sum(mu(y) for y in interval if len(y) < len(w) and is_subword(y, w))

    return mu(v)


def zeta_counts(n: int, beta_len: int, p: int) -> int:
    """Number of words of length p lying above a fixed word of length beta_len."""
    if not 0 <= beta_len <= p:
        raise ValueError("need 0 <= beta_len <= p")
    return sum(comb(p, i) * (n - 1) ** i for i in range(p - beta_len + 1))


def mobius_series_coeff(n: int, beta_len: int, p: int) -> int:
    """[t^p] of t^m (1-t) / (1+(n-1)t)^(m+1), m = beta_len."""
    e = p - beta_len
    if e < 0:
        return 0

    def c(j: int) -> int:
        return binomial(-(beta_len + 1), j) * (n - 1) ** j if j >= 0 else 0

    return c(e) - c(e - 1)


def check_rank_set(ranks: Iterable[int], k: int) -> tuple[int, ...]:
    """Validate a rank set against [1, k]; returns it as a sorted tuple."""
    t = tuple(ranks)
    if any(a >= b for a, b in zip(t, t[1:])):
        raise ValueError(f"rank set must be strictly increasing: {t}")
    if t and (t[0] < 1 or t[-1] > k):
        raise ValueError(f"rank set {t} is not contained in [1,{k}]")
    return t


class RankedPoset:
    """A finite ranked poset stored level by level.

    ``up[i]`` holds the indices of all elements strictly above element i.
    The artificial bottom and top are implicit: they are never stored as
    elements but enter the Möbius computations when ``with_bounds`` is set.
    """

    def __init__(self, levels: Sequence[Sequence[Hashable]], level_ranks: Sequence[int],
                 up: Sequence[frozenset[int]], with_bounds: bool = True):
        self.levels = tuple(tuple(lv) for lv in levels)
        self.level_ranks = tuple(level_ranks)
        self.elements = [x for lv in self.levels for x in lv]
        self.rank = [r for r, lv in zip(self.level_ranks, self.levels) for _ in lv]
        self.up = list(up)
        self.with_bounds = with_bounds
        self._index = {x: i for i, x in enumerate(self.elements)}

    @classmethod
    def from_leq(cls, levels: Sequence[Sequence[Hashable]], level_ranks: Sequence[int],
                 leq: Callable[[Hashable, Hashable], bool], with_bounds: bool = True,
                 compose: bool = True) -> "RankedPoset":
        """Build from a comparison function.

        With ``compose`` only adjacent nonempty levels are compared and the
        rest of the order is obtained transitively; that is valid whenever
        every relation u < w factors through each intermediate level.
        """
        offsets, pos = [], 0
        for lv in levels:
            offsets.append(pos)
            pos += len(lv)
        up: list[frozenset[int]] = [frozenset()] * pos
        nonempty = [i for i, lv in enumerate(levels) if lv]
        for li in reversed(range(len(levels))):
            higher = [j for j in nonempty if j > li]
            for a, x in enumerate(levels[li]):
                above: set[int] = set()
                targets = higher[:1] if compose else higher
                for lj in targets:
                    for b, y in enumerate(levels[lj]):
                        if leq(x, y):
                            idx = offsets[lj] + b
                            above.add(idx)
                            if compose:
                                above |= up[idx]
                up[offsets[li] + a] = frozenset(above)
        return cls(levels, level_ranks, up, with_bounds)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, x: Hashable) -> int:
        return self._index[x]

    def less(self, i: int, j: int) -> bool:
        return j in self.up[i]

    def down(self) -> list[list[int]]:
        below: list[list[int]] = [[] for _ in self.elements]
        for i, ups in enumerate(self.up):
            for j in ups:
                below[j].append(i)
        return below

    def mobius_from_bottom(self) -> list[int]:
        """mu(0^, x) for every element x (elements are in rank order)."""
        below = self.down()
        mu: list[int] = []
        for j in range(len(self)):
            mu.append(-1 - sum(mu[i] for i in below[j]))
        return mu

    def mobius_to_top(self) -> list[int]:
        """mu(x, 1^) for every element x."""
        mu = [0] * len(self)
        for i in reversed(range(len(self))):
            mu[i] = -1 - sum(mu[j] for j in self.up[i])
        return mu

    def mobius_number(self) -> int:
        """mu(0^, 1^) of the poset with bounds attached."""
        return -1 - sum(self.mobius_from_bottom())

    def mobius(self, i: int, j: int) -> int:
        """mu(x_i, x_j) by memoised recursion over the explicit interval."""
        if i == j:
            return 1
        if not self.less(i, j):
            return 0
        memo: dict[int, int] = {i: 1}
        interval = sorted(y for y in self.up[i] if y == j or self.less(y, j))

        def mu(y: int) -> int:
            if y not in memo:
                memo[y] = -sum(mu(z) for z in [i] + interval if z != y and
                               (z == i or self.less(z, y)))
            return memo[y]

        return mu(j)

    def count_chains(self) -> int:
        """Number of nonempty chains, by dynamic programming."""
        starting = [0] * len(self)
        for i in reversed(range(len(self))):
            starting[i] = 1 + sum(starting[j] for j in self.up[i])
        return sum(starting)

    def chains(self) -> Iterator[tuple[int, ...]]:
        """All nonempty chains as increasing index tuples."""
        def extend(chain: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            yield chain
            for j in sorted(self.up[chain[-1]]):
                yield from extend(chain + (j,))

        for i in range(len(self)):
            yield from extend((i,))

    def flags(self) -> Iterator[tuple[int, ...]]:
        """Chains meeting every level exactly once (the maximal chains of a
        rank-selected poset).  An empty level admits no flag."""
        offsets, pos = [], 0
        for lv in self.levels:
            offsets.append(pos)
            pos += len(lv)
        if any(not lv for lv in self.levels):
            return
        if not self.levels:
            yield ()
            return

        def extend(chain: tuple[int, ...], li: int) -> Iterator[tuple[int, ...]]:
            if li == len(self.levels):
                yield chain
                return
            lo, hi = offsets[li], offsets[li] + len(self.levels[li])
            for j in range(lo, hi):
                if not chain or self.less(chain[-1], j):
                    yield from extend(chain + (j,), li + 1)

        yield from extend((), 0)


class SubwordPoset(RankedPoset):
    """Rank-selected subposet A*_{n,k}(T) (or its normal-word analogue)."""

    def __init__(self, n: int, k: int, ranks: tuple[int, ...], levels, up,
                 with_bounds: bool = True, normal: bool = False):
        super().__init__(levels, ranks, up, with_bounds)
        self.n = n
        self.k = k
        self.ranks = ranks
        self.normal = normal

    def __repr__(self) -> str:
        kind = "N" if self.normal else "A*"
        return f"{kind}_{{{self.n},{self.k}}}({list(self.ranks)}) with {len(self)} words"


def build_poset(n: int, k: int, ranks: Iterable[int] | None = None,
                with_bounds: bool = True, normal: bool = False) -> SubwordPoset:
    """Words over n letters with lengths in ``ranks`` (default [1,k]),
    ordered by the subword relation."""
    t = check_rank_set(range(1, k + 1) if ranks is None else ranks, k)
    gen = normal_words if normal else words_of_length
    levels = [gen(n, r) for r in t]
    base = RankedPoset.from_leq(levels, t, is_subword, with_bounds)
    return SubwordPoset(n, k, t, base.levels, base.up, with_bounds, normal)


def fixed_subposet(P: SubwordPoset, f: int) -> SubwordPoset:
    """Subposet fixed by a permutation with f fixed letters; isomorphic to
    the same construction over an f-letter alphabet."""
    if not 0 <= f <= P.n:
        raise ValueError(f"fix count {f} outside [0,{P.n}]")
    return build_poset(f, P.k, P.ranks, P.with_bounds, P.normal)


def restrict_to_letters(P: SubwordPoset, letters: Iterable[int]) -> SubwordPoset:
    """Literal restriction of P to words using only the given letters."""
    keep = set(letters)
    levels = [[w for w in lv if set(w) <= keep] for lv in P.levels]
    base = RankedPoset.from_leq(levels, P.ranks, is_subword, P.with_bounds, compose=False)
    return SubwordPoset(len(keep), P.k, P.ranks, base.levels, base.up, P.with_bounds, P.normal)


def lower_interval(alpha: Word, normal: bool = False) -> RankedPoset:
    """The open interval (ε, alpha) of subword order (or of normal words)."""
    subs = {w for w in subwords(alpha) if 0 < len(w) < len(alpha)}
    if normal:
        subs = {w for w in subs if is_normal(w)}
    ranks = list(range(1, len(alpha)))
    levels = [sorted(w for w in subs if len(w) == r) for r in ranks]
    return RankedPoset.from_leq(levels, ranks, is_subword, with_bounds=True)
