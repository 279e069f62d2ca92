"""Integer polynomials in the reflection representation.

A ``TensorPowerPoly`` sum_j c_j x^j stands for the virtual S_n-module
sum_j c_j S_(n-1,1)^{(x) j}.  Since that module has character fix(g) - 1,
evaluating at x = f - 1 gives the character at a permutation with f fixed
points, and at x = n - 1 the dimension.  The coefficients produced by the
recurrences below do not depend on n.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Mapping


@dataclass(frozen=True)
class TensorPowerPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(v) for v in c))

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "TensorPowerPoly":
        if not d:
            return cls()
        if min(d) < 0:
            raise ValueError("negative exponent")
        c = [0] * (max(d) + 1)
        for j, v in d.items():
            c[j] += v
        return cls(tuple(c))

    @classmethod
    def monomial(cls, j: int, c: int = 1) -> "TensorPowerPoly":
        return cls.from_dict({j: c})

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def items(self):
        return [(j, c) for j, c in enumerate(self.coeffs) if c]

    def to_dict(self) -> dict[int, int]:
        return dict(self.items())

    def __add__(self, other: "TensorPowerPoly") -> "TensorPowerPoly":
        m = max(len(self.coeffs), len(other.coeffs))
        return TensorPowerPoly(tuple(self[j] + other[j] for j in range(m)))

    def __neg__(self) -> "TensorPowerPoly":
        return TensorPowerPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "TensorPowerPoly") -> "TensorPowerPoly":
        return self + (-other)

    def __mul__(self, other) -> "TensorPowerPoly":
        if isinstance(other, int):
            return TensorPowerPoly(tuple(other * c for c in self.coeffs))
        out = [0] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TensorPowerPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TensorPowerPoly":
        out = ONE
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x: int) -> int:
        val = 0
        for c in reversed(self.coeffs):
            val = val * x + c
        return val

    def dimension(self, n: int) -> int:
        return self(n - 1)

    def character(self, f: int) -> int:
        return self(f - 1)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __str__(self) -> str:
        terms = [f"{c}" if j == 0 else f"{c}x" if j == 1 else f"{c}x^{j}"
                 for j, c in self.items()]
        return " + ".join(terms).replace("+ -", "- ") or "0"


ONE = TensorPowerPoly((1,))
X = TensorPowerPoly((0, 1))


def binomial_row(top: int, upto: int) -> TensorPowerPoly:
    """sum_{i=0}^{upto} C(top, i) x^i."""
    return TensorPowerPoly(tuple(comb(top, i) for i in range(upto + 1)))


def _ranks(S: Iterable[int]) -> tuple[int, ...]:
    s = tuple(S)
    if any(a >= b for a, b in zip(s, s[1:])) or (s and s[0] < 1):
        raise ValueError(f"rank set must be strictly increasing positive integers: {s}")
    return s


def alpha_poly(S: Iterable[int]) -> TensorPowerPoly:
    """Permutation module on the maximal chains of A*_{n,k}(S)."""
    s = _ranks(S)
    out = ONE
    prev = 0
    for r in s:
        out = out * binomial_row(r, r - prev)
        prev = r
    return out


def beta_poly(T: Iterable[int]) -> TensorPowerPoly:
    """Homology module of A*_{n,k}(T), by inclusion-exclusion over subsets."""
    t = _ranks(T)
    if not t:
        raise ValueError("beta_poly needs a nonempty rank set")
    out = TensorPowerPoly()
    for size in range(len(t) + 1):
        for S in combinations(t, size):
            out = out + (-1) ** (len(t) - size) * alpha_poly(S)
    return out


def consecutive_ranks_poly(r: int, k: int) -> TensorPowerPoly:
    """Homology of the consecutive rank set [r, k]."""
    if not 1 <= r <= k:
        raise ValueError("need 1 <= r <= k")
    return TensorPowerPoly.from_dict(
        {i: comb(k, i) * comb(i - 1, k - r) for i in range(1 + k - r, k + 1)})


def rank_deletion_poly(r: int, k: int) -> TensorPowerPoly:
    """Homology of [1, k] with rank r removed."""
    if not 1 <= r <= k:
        raise ValueError("need 1 <= r <= k")
    c = comb(k, r)
    return TensorPowerPoly.from_dict({k: c - 1, k - 1: c})


def two_ranks_c(s1: int, s2: int, v: int) -> int:
    return sum(comb(s2 - j, v - j) * comb(s1 + j - 1, j)
               for j in range(1, min(v, s2 - s1) + 1))


def two_ranks_poly(s1: int, s2: int) -> TensorPowerPoly:
    """Homology of the two-element rank set {s1 < s2}."""
    if not 1 <= s1 < s2:
        raise ValueError("need 1 <= s1 < s2")
    return TensorPowerPoly.from_dict(
        {v: two_ranks_c(s1, s2, v) - (comb(s1, v) if v <= s1 else 0)
         for v in range(1, s2 + 1)})


def two_ranks_chain_forms(s1: int, s2: int) -> tuple[TensorPowerPoly, TensorPowerPoly]:
    """The two product expressions for the chains between ranks s1 < s2."""
    if not 1 <= s1 < s2:
        raise ValueError("need 1 <= s1 < s2")
    first = binomial_row(s1, s1) * binomial_row(s2, s2 - s1)
    natural = ONE + X
    inner = TensorPowerPoly()
    for j in range(s2 - s1 + 1):
        i = s2 - s1 - j
        inner = inner + comb(s1 + j - 1, j) * (X ** j) * (natural ** i)
    second = natural ** s1 * inner
    return first, second


def alternating_coeff_sum(p: TensorPowerPoly) -> int:
    """sum_{j >= 1} (-1)^(j-1) c_j."""
    return sum((-1) ** (j - 1) * c for j, c in p.items() if j >= 1)


def dual_whitney_poly(i: int, k: int) -> TensorPowerPoly:
    """WH*_{k+1-i}(A*_{n,k}) = C(k,i) x^(k-i) (1+x)^i."""
    return comb(k, i) * X ** (k - i) * (ONE + X) ** i


def whitney_poly(i: int) -> TensorPowerPoly:
    """WH_i(A*_{n,k}) = x^i + x^(i-1) for i >= 1; trivial for i = 0."""
    return ONE if i == 0 else X ** i + X ** (i - 1)


def rank_sets(k: int, nonempty: bool = True) -> list[tuple[int, ...]]:
    """Subsets of [1, k] in colex order (compare largest element first)."""
    subsets = [tuple(i + 1 for i in range(k) if mask >> i & 1) for mask in range(1 << k)]
    return [s for s in subsets if s or not nonempty]
