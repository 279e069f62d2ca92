"""Normal (Smirnov) words: Möbius numbers, Whitney homology against the full
subword order, the dual-Whitney counterexample and the two-letter case."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .homology import admissible_fix_counts, betti_numbers, chain_character, lefschetz_character, whitney_dims
from .tensorpoly import rank_deletion_poly
from .words import (RankedPoset, SubwordPoset, Word, build_poset, is_normal, is_subword,
                    lower_interval, mobius_interval, normal_words, word)

NormalPoset = SubwordPoset


def build_normal(n: int, k: int, T: Iterable[int] | None = None) -> NormalPoset:
    return build_poset(n, k, T, normal=True)


def normal_mobius_number(n: int, k: int) -> int:
    return build_normal(n, k).mobius_number()


def _guard(n: int, k: int) -> None:
    if n > 4 or k > 4:
        raise ValueError("limited to n <= 4, k <= 4")


def compare_whitney(n: int, k: int) -> bool:
    """Whitney homology characters of A*_{n,k} and N_{n,k} agree at every
    admissible fix count."""
    _guard(n, k)
    return all(whitney_dims(f, k) == whitney_dims(f, k, normal=True)
               for f in admissible_fix_counts(n))


def open_interval(u: Word, v: Word, normal: bool = False) -> RankedPoset:
    """(u, v) in subword order, optionally restricted to normal words."""
    ranks = list(range(len(u) + 1, len(v)))
    levels = []
    for r in ranks:
        mids = {tuple(v[i] for i in keep) for keep in combinations(range(len(v)), r)}
        mids = {w for w in mids if is_subword(u, w) and (not normal or is_normal(w))}
        levels.append(sorted(mids))
    return RankedPoset.from_leq(levels, ranks, is_subword, with_bounds=True)


@dataclass(frozen=True)
class DualWhitneyWitness:
    full_value: int
    normal_value: int
    full_elements: tuple[Word, ...]
    normal_elements: tuple[Word, ...]


def dual_whitney_witness() -> DualWhitneyWitness:
    u, v = word("ab"), word("abab")
    full = open_interval(u, v)
    norm = open_interval(u, v, normal=True)
    if full.mobius_number() != mobius_interval(u, v):
        raise AssertionError("explicit interval disagrees with the embedding count")
    return DualWhitneyWitness(full.mobius_number(), norm.mobius_number(),
                              tuple(full.elements), tuple(norm.elements))


def dual_whitney_counterexample() -> tuple[int, int]:
    """mu(ab, abab) in all words and in normal words."""
    w = dual_whitney_witness()
    return w.full_value, w.normal_value


def is_ordinal_sum_of_antichains(P: RankedPoset) -> bool:
    """Every element lies below every element of each higher level."""
    return all(P.less(i, j) for i in range(len(P)) for j in range(len(P))
               if P.rank[j] > P.rank[i])


def eulerian_failures(n: int, k: int) -> list[tuple[Word, Word, int]]:
    """Intervals [x, y] of normal words of length <= k with mu != (-1)^(|y|-|x|)."""
    levels = [normal_words(n, r) for r in range(k + 1)]
    P = RankedPoset.from_leq(levels, list(range(k + 1)), is_subword, with_bounds=False)
    bad = []
    for i in range(len(P)):
        for j in sorted(P.up[i]):
            mu = P.mobius(i, j)
            if mu != (-1) ** (P.rank[j] - P.rank[i]):
                bad.append((P.elements[i], P.elements[j], mu))
    return bad


def lower_interval_mismatches(n: int, k: int) -> list[Word]:
    """Normal words alpha whose open lower intervals in N and A* have
    different reduced Betti numbers."""
    bad = []
    for r in range(1, k + 1):
        for alpha in normal_words(n, r):
            a = betti_numbers(lower_interval(alpha)).nonzero()
            b = betti_numbers(lower_interval(alpha, normal=True)).nonzero()
            if a != b:
                bad.append(alpha)
    return bad


def n2_examples(max_k: int = 5) -> dict:
    """Brute-force data for the two-letter examples, alongside the stated
    module formulas so that discrepancies are visible."""
    full = build_poset(2, 3, (1, 3))
    norm = build_normal(2, 3, (1, 3))
    first = {
        "full": {"betti": betti_numbers(full).nonzero(),
                 "character": lefschetz_character(2, 3, (1, 3)).values},
        "normal": {"betti": betti_numbers(norm).nonzero(),
                   "character": lefschetz_character(2, 3, (1, 3), normal=True).values},
        # 3 trivial + 2 sign; one trivial
        "stated_full_character": {2: 5, 0: 3 - 2},
        "stated_normal_character": {2: 1, 0: 1},
    }

    atoms_deleted = []
    for k in range(2, max_k + 1):
        T = tuple(range(2, k + 1))
        fc = lefschetz_character(2, k, T).values
        nc = lefschetz_character(2, k, T, normal=True).values
        atoms_deleted.append({
            "k": k,
            "full_betti": betti_numbers(build_poset(2, k, T)).nonzero(),
            "full_character": fc,
            "formula_character": {f: rank_deletion_poly(1, k).character(f) for f in (2, 0)},
            # (k-1) copies of sign^k plus k trivial
            "stated_full_character": {2: 2 * k - 1, 0: (k - 1) * (-1) ** k + k},
            "normal_betti": betti_numbers(build_normal(2, k, T)).nonzero(),
            "normal_character": nc,
            # sign^k
            "stated_normal_character": {2: 1, 0: (-1) ** k},
            "ordinal_sum": is_ordinal_sum_of_antichains(build_normal(2, k, T)),
        })

    chains = []
    for k in range(1, max_k + 1):
        for mask in range(1, 1 << k):
            T = tuple(i + 1 for i in range(k) if mask >> i & 1)
            chi = chain_character(2, k, T, normal=True).values
            copies = 2 ** (len(T) - 1)
            chains.append({"k": k, "T": T, "character": chi,
                           "regular_copies": copies,
                           "matches": chi == {2: 2 * copies, 0: 0}})
    return {"rank_set_1_3": first, "atoms_deleted": atoms_deleted, "chains": chains}


def n2_discrepancies(report: dict) -> list[str]:
    """Stated module formulas that disagree with the brute-force data."""
    out = []
    first = report["rank_set_1_3"]
    if first["full"]["character"] != first["stated_full_character"]:
        out.append("full {1,3}: character")
    if first["normal"]["character"] != first["stated_normal_character"]:
        out.append("normal {1,3}: character")
    for row in report["atoms_deleted"]:
        k = row["k"]
        if row["full_character"] != row["stated_full_character"]:
            out.append(f"full [2,{k}]: stated {row['stated_full_character']}, "
                       f"computed {row['full_character']}")
        if row["normal_character"] != row["stated_normal_character"]:
            out.append(f"normal [2,{k}]: stated {row['stated_normal_character']}, "
                       f"computed {row['normal_character']}")
    for row in report["chains"]:
        if not row["matches"]:
            out.append(f"chains {row['T']} in k={row['k']}")
    return out
