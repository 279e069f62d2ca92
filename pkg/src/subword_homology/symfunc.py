"""Symmetric functions of fixed degree, stored in the power-sum basis.

The internal (Kronecker) product is diagonal on power sums, and class
functions of S_n convert through ch(chi) = sum chi(lambda) p_lambda / z_lambda.
Homogeneous, Schur and hook-shaped h expansions are computed from the
power-sum coefficients by exact linear algebra.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Mapping

from .combinatorics import IntPartition, partitions_of, stirling2, stirling_cycle
from .linalg import determinant, solve
from .tensorpoly import TensorPowerPoly


@dataclass(frozen=True)
class SymFunc:
    n: int
    p: Mapping[IntPartition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {lam: Fraction(c) for lam, c in self.p.items() if c}
        for lam in clean:
            if lam.n != self.n:
                raise ValueError(f"partition {lam} is not of size {self.n}")
        object.__setattr__(self, "p", clean)

    def coeff(self, lam: IntPartition) -> Fraction:
        return self.p.get(lam, Fraction(0))

    def __add__(self, other: "SymFunc") -> "SymFunc":
        _same_degree(self, other)
        keys = set(self.p) | set(other.p)
        return SymFunc(self.n, {lam: self.coeff(lam) + other.coeff(lam) for lam in keys})

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.n, {lam: -c for lam, c in self.p.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __rmul__(self, c) -> "SymFunc":
        return SymFunc(self.n, {lam: c * v for lam, v in self.p.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, SymFunc) and self.n == other.n and self.p == other.p

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.p.items())))

    def character(self, mu: IntPartition) -> Fraction:
        """Value of the corresponding class function on cycle type mu."""
        return self.coeff(mu) * mu.z()


def _same_degree(f: SymFunc, g: SymFunc) -> None:
    if f.n != g.n:
        raise ValueError(f"degree mismatch: {f.n} vs {g.n}")


def from_class_function(n: int, chi: Callable[[IntPartition], int | Fraction]) -> SymFunc:
    return SymFunc(n, {lam: Fraction(chi(lam), lam.z()) for lam in partitions_of(n)})


def frobenius_of_fixpoly(Q: TensorPowerPoly, n: int) -> SymFunc:
    """Frobenius characteristic of the module Q(S_(n-1,1))."""
    if n < 1:
        raise ValueError("n must be positive")
    return from_class_function(n, lambda lam: Q(lam.ones - 1))


def internal_product(f: SymFunc, g: SymFunc) -> SymFunc:
    """Kronecker product: p_lambda * p_mu = delta z_lambda p_lambda."""
    _same_degree(f, g)
    return SymFunc(f.n, {lam: c * g.coeff(lam) * lam.z() for lam, c in f.p.items()})


def internal_power(f: SymFunc, k: int) -> SymFunc:
    out = h(f.n)
    for _ in range(k):
        out = internal_product(out, f)
    return out


def inner(f: SymFunc, g: SymFunc) -> Fraction:
    """Hall inner product, <p_lambda, p_mu> = z_lambda delta."""
    _same_degree(f, g)
    return sum((c * g.coeff(lam) * lam.z() for lam, c in f.p.items()), Fraction(0))


# -- standard bases ---------------------------------------------------------

def h(n: int) -> SymFunc:
    return from_class_function(n, lambda lam: 1)


def p_one_times(d: int, f: SymFunc) -> SymFunc:
    """p_1^d f."""
    return SymFunc(f.n + d, {IntPartition(lam.parts + (1,) * d): c for lam, c in f.p.items()})


def hook_h(n: int, d: int) -> SymFunc:
    """h_1^d h_(n-d)."""
    if not 0 <= d <= n:
        raise ValueError("need 0 <= d <= n")
    return p_one_times(d, h(n - d)) if d < n else SymFunc(n, {IntPartition((1,) * n): 1})


def h_lambda(lam: IntPartition) -> SymFunc:
    parts = lam.parts
    coeffs: dict[tuple[int, ...], Fraction] = {(): Fraction(1)}
    for part in parts:
        new: dict[tuple[int, ...], Fraction] = {}
        for mu, c in coeffs.items():
            for nu, d in h(part).p.items():
                key = tuple(sorted(mu + nu.parts, reverse=True))
                new[key] = new.get(key, Fraction(0)) + c * d
        coeffs = new
    return SymFunc(lam.n, {IntPartition(k): c for k, c in coeffs.items()})


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    # beta-set of lam: first-column hook lengths
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    bset = set(beta)
    total = 0
    for b in beta:
        if b - r >= 0 and b - r not in bset:
            height = sum(1 for c in beta if b - r < c < b)
            new = sorted((bset - {b}) | {b - r}, reverse=True)
            m = len(new)
            parts = tuple(x for x in (new[i] - (m - 1 - i) for i in range(m)) if x > 0)
            total += (-1) ** height * _mn(parts, rest)
    return total


def mn_character(lam: IntPartition, mu: IntPartition) -> int:
    """Irreducible character chi^lam at cycle type mu (Murnaghan-Nakayama)."""
    if lam.n != mu.n:
        raise ValueError("partitions of different sizes")
    return _mn(lam.parts, mu.parts)


def schur(lam: IntPartition) -> SymFunc:
    return from_class_function(lam.n, lambda mu: mn_character(lam, mu))


def schur_expand(f: SymFunc) -> dict[IntPartition, Fraction]:
    """Coefficients <f, s_lambda>, nonzero ones only."""
    out = {}
    for lam in partitions_of(f.n):
        c = sum((v * mn_character(lam, mu) for mu, v in f.p.items()), Fraction(0))
        if c:
            out[lam] = c
    return out


def reflection(n: int) -> SymFunc:
    """s_(n-1,1) = h_1 h_(n-1) - h_n."""
    return frobenius_of_fixpoly(TensorPowerPoly((0, 1)), n)


# -- hook-shaped h expansions ----------------------------------------------

def hook_slots(n: int) -> list[int]:
    """Distinct h_1^d h_(n-d): d = 0..n-2 and d = n (d = n-1 is the same function)."""
    return list(range(n - 1)) + [n] if n >= 1 else [0]


@dataclass(frozen=True)
class HookHVector:
    """Coefficients on h_1^d h_(n-d).  A d = n-1 entry is folded into d = n."""

    n: int
    coeffs: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        folded: dict[int, Fraction] = {}
        for d, c in self.coeffs.items():
            if not 0 <= d <= self.n:
                raise ValueError(f"slot {d} outside [0,{self.n}]")
            key = self.n if d == self.n - 1 and self.n >= 1 else d
            folded[key] = folded.get(key, Fraction(0)) + Fraction(c)
        object.__setattr__(self, "coeffs", {d: c for d, c in sorted(folded.items()) if c})

    def __getitem__(self, d: int) -> Fraction:
        if d == self.n - 1:
            d = self.n
        return self.coeffs.get(d, Fraction(0))

    def __add__(self, other: "HookHVector") -> "HookHVector":
        keys = set(self.coeffs) | set(other.coeffs)
        return HookHVector(self.n, {d: self[d] + other[d] for d in keys})

    def scale(self, c) -> "HookHVector":
        return HookHVector(self.n, {d: c * v for d, v in self.coeffs.items()})

    def to_symfunc(self) -> SymFunc:
        out = SymFunc(self.n)
        for d, c in self.coeffs.items():
            out = out + c * hook_h(self.n, d)
        return out

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def as_ints(self) -> dict[int, int]:
        if not self.is_integral():
            raise ValueError("non-integral hook vector")
        return {d: int(c) for d, c in self.coeffs.items()}


def to_hook_h(f: SymFunc) -> HookHVector | None:
    """Expand f in the hook-shaped h functions, or None if f is outside their span."""
    n = f.n
    slots = hook_slots(n)
    basis = [hook_h(n, d) for d in slots]
    rows = partitions_of(n)
    matrix = [[b.coeff(lam) for b in basis] for lam in rows]
    sol = solve(matrix, [f.coeff(lam) for lam in rows])
    if sol is None:
        return None
    return HookHVector(n, dict(zip(slots, sol)))


def ind_res_step(vec: dict[int, int], n: int) -> dict[int, int]:
    """One internal product with s_(n-1,1) on unfolded hook coefficients:
    (h_1^a h_b) * s = (a-1) h_1^a h_b + h_1^(a+1) h_(b-1) for a >= 1,
    and h_n * s = h_1 h_(n-1) - h_n."""
    out: dict[int, int] = {}

    def add(d: int, c: int) -> None:
        if d <= n and c:
            out[d] = out.get(d, 0) + c

    for a, c in vec.items():
        if a == 0:
            add(1, c)
            add(0, -c)
        else:
            add(a, (a - 1) * c)
            add(a + 1, c)
    return out


# -- the g table and its consequences ---------------------------------------

def g_coeff(n: int, k: int, d: int) -> int:
    """Coefficient of h_1^d h_(n-d) in s_(n-1,1)^{*k} (d = n-1 and d = n kept apart)."""
    if k < 1 or not 0 <= d <= n:
        raise ValueError("need k >= 1 and 0 <= d <= n")
    if d == 0:
        return (-1) ** k
    if d == 1:
        return (-1) ** (k - 1)
    return sum((-1) ** (k - i) * stirling2(i - 1, d - 1) for i in range(d, k + 1))


def g_alternating(k: int, d: int) -> int:
    """sum_r (-1)^r C(k, r) S(k-r, d): the inclusion-exclusion form."""
    return sum((-1) ** r * comb(k, r) * stirling2(k - r, d) for r in range(k - d + 1))


def g_by_iteration(n: int, k: int) -> dict[int, int]:
    """Unfolded hook coefficients of h_n * s^{*k} by iterating ind_res_step."""
    vec = {0: 1}
    for _ in range(k):
        vec = ind_res_step(vec, n)
    return vec


def refl_power_hook(n: int, k: int) -> HookHVector:
    """Closed-form hook expansion of s_(n-1,1)^{*k}."""
    return HookHVector(n, {d: g_coeff(n, k, d) for d in range(min(n, k) + 1)})


def u_module(n: int, k: int) -> HookHVector:
    """ch U_{n,k} = s^{*k} - (-1)^(k-1) s = sum_{d >= 2} g_n(k, d) h_1^d h_(n-d)."""
    if k < 1:
        raise ValueError("k must be positive")
    return HookHVector(n, {d: g_coeff(n, k, d) for d in range(2, min(n, k) + 1)})


def trivial_multiplicity(n: int, k: int) -> int:
    """Multiplicity of the trivial module in S_(n-1,1)^{(x) k}."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return sum(g_coeff(n, k, d) for d in range(2, min(n, k) + 1))


# -- reduction of tensor powers ---------------------------------------------

def character_values(n: int) -> list[int]:
    """Values fix(g) - 1 of the reflection character: -1..n-1 except n-2."""
    return [f - 1 for f in range(n + 1) if f != n - 1]


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def relation_polynomial(n: int) -> list[int]:
    """t * prod over nonzero character values b of (t - b), low degree first.

    Its roots are exactly the values of the reflection character together
    with zero, so it annihilates x as a class function."""
    poly = [0, 1]
    for b in character_values(n):
        if b != 0:
            poly = _poly_mul(poly, [-b, 1])
    return poly


def reduction_polynomial(n: int) -> list[int]:
    """[a_1(n), ..., a_{n-1}(n)] with x^n = sum_j a_j(n) x^j.

    Computed from the signless Stirling numbers of the first kind:
    P(t) = (t+1)/(t-(n-2)) * sum_j c(n,j) (-1)^(n-j) t^j.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    falling = [stirling_cycle(n, j) * (-1) ** (n - j) for j in range(n + 1)]
    # synthetic division by (t - (n-2)), highest degree first
    root = n - 2
    high = falling[::-1]
    quot = [high[0]]
    for c in high[1:]:
        quot.append(c + root * quot[-1])
    remainder = quot.pop()
    if remainder != 0:
        raise ArithmeticError("t - (n-2) does not divide the falling factorial")
    P = _poly_mul(quot[::-1], [1, 1])
    if P[-1] != 1 or P[0] != 0 or len(P) != n + 1:
        raise ArithmeticError("unexpected shape of the reduction polynomial")
    return [-P[j] for j in range(1, n)]


def reduction_polynomial_product(n: int) -> list[int]:
    """Same coefficients from P(t) = (t+1) t prod_{i=1, i != n-2}^{n-1} (t - i)."""
    poly = _poly_mul([0, 1], [1, 1])
    for i in range(1, n):
        if i != n - 2:
            poly = _poly_mul(poly, [-i, 1])
    return [-poly[j] for j in range(1, n)]


def power_basis_determinant(n: int) -> Fraction:
    """det of (b^j) over nonzero character values b and j = 1..#values."""
    values = [b for b in character_values(n) if b != 0]
    return determinant([[b ** j for j in range(1, len(values) + 1)] for b in values])
