"""Desk-scale harness for the two positivity conjectures on rank-selected
homology of subword order, together with the cases that are theorems.

Conjecture 1: the homology is a nonnegative combination of positive tensor
powers of S_(n-1,1).  Conjecture 2: homology plus (-1)^|T| S_(n-1,1) has an
h-positive characteristic supported on h_1^d h_(n-d), d >= 2.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .homology import admissible_fix_counts, betti_numbers, lefschetz_character
from .symfunc import HookHVector, frobenius_of_fixpoly, relation_polynomial, to_hook_h, u_module
from .tensorpoly import (X, TensorPowerPoly, alternating_coeff_sum, beta_poly,
                         consecutive_ranks_poly, rank_deletion_poly, rank_sets, two_ranks_poly)
from .words import build_poset

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive-canonical-form"


class TheoremViolation(AssertionError):
    """A proven statement failed on computed data (an implementation bug)."""


@dataclass
class RankSetRecord:
    T: tuple[int, ...]
    beta: TensorPowerPoly
    hook: HookHVector
    conj1: str
    conj2: str
    flags: list[str] = field(default_factory=list)
    rewrite: TensorPowerPoly | None = None

    def to_dict(self) -> dict:
        out = {
            "T": list(self.T),
            "beta": {str(j): c for j, c in self.beta.items()},
            "hook_h": {str(d): int(c) for d, c in self.hook.coeffs.items()},
            "conj1": self.conj1,
            "conj2": self.conj2,
            "flags": list(self.flags),
        }
        if self.rewrite is not None:
            out["rewrite"] = {str(j): c for j, c in self.rewrite.items()}
        return out


@dataclass
class ConjectureReport:
    n: int
    k: int
    records: list[RankSetRecord]

    def failures(self, which: int | None = None) -> list[RankSetRecord]:
        out = []
        for r in self.records:
            bad1 = r.conj1 == FAILS and which in (None, 1)
            bad2 = r.conj2 == FAILS and which in (None, 2)
            if bad1 or bad2:
                out.append(r)
        return out

    def minimal_witness(self) -> RankSetRecord | None:
        """Failing record with the fewest ranks (earliest in colex order on ties)."""
        bad = self.failures()
        return min(bad, key=lambda r: len(r.T)) if bad else None

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "records": [r.to_dict() for r in self.records]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def almost_module(T: tuple[int, ...]) -> TensorPowerPoly:
    """beta(T) + (-1)^|T| x."""
    return beta_poly(T) + (-1) ** len(T) * X


def hook_vector(T: tuple[int, ...], n: int) -> HookHVector:
    """Hook expansion of F_n(T) + (-1)^|T| s_(n-1,1); asserts the h-support theorem."""
    vec = to_hook_h(frobenius_of_fixpoly(almost_module(T), n))
    if vec is None:
        raise TheoremViolation(f"T={T}, n={n}: not in the span of hook-shaped h functions")
    if not vec.is_integral():
        raise TheoremViolation(f"T={T}, n={n}: non-integral hook expansion {vec}")
    if any(d < 2 for d in vec.support()):
        raise TheoremViolation(f"T={T}, n={n}: support {vec.support()} reaches d < 2")
    return vec


def search_rewrite(poly: TensorPowerPoly, n: int, depth: int = 3) -> TensorPowerPoly | None:
    """Look for a nonnegative representative of the same class function by
    adding at most ``depth`` multiples +-x^i R of the annihilating relation R."""
    relation = TensorPowerPoly(tuple(relation_polynomial(n)))
    max_shift = max(0, poly.degree - relation.degree + 1)
    moves = [s * X ** i * relation for i in range(max_shift + 1) for s in (1, -1)]
    seen = {poly}
    queue = deque([(poly, 0)])
    while queue:
        p, d = queue.popleft()
        if p.is_nonnegative() and p[0] == 0:
            return p
        if d == depth:
            continue
        for m in moves:
            q = p + m
            if q not in seen:
                seen.add(q)
                queue.append((q, d + 1))
    return None


def scan(n: int, k: int, rewrite_depth: int = 3) -> ConjectureReport:
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    records = []
    for T in rank_sets(k):
        beta = beta_poly(T)
        flags = []
        rewrite = None
        if beta.is_nonnegative():
            conj1 = HOLDS
        elif k >= n:
            conj1 = INCONCLUSIVE
            rewrite = search_rewrite(beta, n, rewrite_depth)
            flags.append("rewrite-found" if rewrite is not None else "rewrite-not-found")
        else:
            conj1 = FAILS
        vec = hook_vector(T, n)
        conj2 = HOLDS if vec.is_nonnegative() else FAILS
        if beta[0] != 0:
            raise TheoremViolation(f"T={T}: trivial module in beta")
        records.append(RankSetRecord(T, beta, vec, conj1, conj2, flags, rewrite))
    return ConjectureReport(n, k, records)


def proven_rank_sets(k: int) -> dict[str, list[tuple[int, ...]]]:
    full = tuple(range(1, k + 1))
    return {
        "consecutive": [tuple(range(r, k + 1)) for r in range(1, k + 1)],
        "rank-deletion": [tuple(x for x in full if x != r) for r in range(1, k + 1) if k > 1],
        "two-ranks": [(a, b) for a in range(1, k + 1) for b in range(a + 1, k + 1)],
    }


def closed_form(shape: str, T: tuple[int, ...], k: int) -> TensorPowerPoly:
    if shape == "consecutive":
        return consecutive_ranks_poly(T[0], k)
    if shape == "rank-deletion":
        missing = next(r for r in range(1, k + 1) if r not in T)
        return rank_deletion_poly(missing, k)
    return two_ranks_poly(*T)


def proven_case_failures(n: int, k: int) -> list[str]:
    problems = []
    for shape, sets in proven_rank_sets(k).items():
        for T in sets:
            beta = beta_poly(T)
            if closed_form(shape, T, k) != beta:
                problems.append(f"{shape} {T}: closed form differs from inclusion-exclusion")
            if not beta.is_nonnegative():
                problems.append(f"{shape} {T}: negative tensor-power coefficient")
            if alternating_coeff_sum(beta) + (-1) ** len(T) != 0:
                problems.append(f"{shape} {T}: alternating sum does not vanish")
            V = almost_module(T)
            via_u = HookHVector(n)
            for j, c in V.items():
                if j >= 2:
                    via_u = via_u + u_module(n, j).scale(c)
            if not via_u.is_nonnegative():
                problems.append(f"{shape} {T}: negative U-decomposition")
            if to_hook_h(frobenius_of_fixpoly(V, n)) != via_u:
                problems.append(f"{shape} {T}: U-decomposition disagrees with hook expansion")
    return problems


def check_proven_cases(n: int, k: int) -> bool:
    return not proven_case_failures(n, k)


def cross_validate(n: int, k: int) -> bool:
    """Brute-force Möbius characters and Betti numbers against beta(T)."""
    if n > 4 or k > 4:
        raise ValueError("cross_validate is limited to n <= 4, k <= 4")
    for T in rank_sets(k):
        beta = beta_poly(T)
        chi = lefschetz_character(n, k, T)
        if any(chi[f] != beta.character(f) for f in admissible_fix_counts(n)):
            return False
        summary = betti_numbers(build_poset(n, k, T))
        if summary.nonzero() != {len(T) - 1: beta.dimension(n)}:
            return False
    return True
