from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from subword_homology.combinatorics import IntPartition, partitions_of, stirling2
from subword_homology.symfunc import (HookHVector, SymFunc, character_values, frobenius_of_fixpoly,
                                      g_alternating, g_by_iteration, g_coeff, h, hook_h,
                                      hook_slots, ind_res_step, inner, internal_power,
                                      internal_product, mn_character, power_basis_determinant,
                                      reduction_polynomial, reduction_polynomial_product,
                                      refl_power_hook, reflection, relation_polynomial, schur,
                                      schur_expand, to_hook_h, trivial_multiplicity, u_module)
from subword_homology.tensorpoly import ONE, X, TensorPowerPoly, alpha_poly, rank_sets

# low degree first: [a_1, ..., a_{n-1}] from the published list
PUBLISHED_REDUCTIONS = {
    3: [2, 1],
    4: [-3, 1, 3],
    5: [8, -6, -7, 6],
    6: [-30, 31, 20, -30, 10],
    7: [144, -180, -64, 165, -79, 15],
    8: [-840, 1198, 189, -1029, 630, -168, 21],
}


def cycle_type(perm):
    seen, lengths = set(), []
    for i in range(len(perm)):
        if i not in seen:
            m = 0
            while i not in seen:
                seen.add(i)
                i = perm[i]
                m += 1
            lengths.append(m)
    return IntPartition(tuple(sorted(lengths, reverse=True)))


def hook_dimension(lam):
    """Hook length formula."""
    parts = lam.parts
    conj = [sum(1 for p in parts if p > j) for j in range(parts[0])]
    hooks = 1
    for i, p in enumerate(parts):
        for j in range(p):
            hooks *= p - j + conj[j] - i - 1
    return factorial(lam.n) // hooks


def test_frobenius_examples():
    for n in range(1, 6):
        assert frobenius_of_fixpoly(ONE, n) == h(n)
        assert frobenius_of_fixpoly(ONE + X, n) == hook_h(n, 1)
    sign2 = frobenius_of_fixpoly(X, 2)
    assert sign2.p == {IntPartition((1, 1)): Fraction(1, 2), IntPartition((2,)): Fraction(-1, 2)}
    assert sign2 == schur(IntPartition((1, 1)))


@pytest.mark.parametrize("n", range(2, 7))
def test_internal_product_identities(n):
    f = frobenius_of_fixpoly(X ** 2 + 3 * X, n)
    assert internal_product(f, h(n)) == f
    nat = hook_h(n, 1)
    power = h(n)
    for k in range(1, 6):
        power = internal_product(power, nat)
        expected = HookHVector(n, {j: stirling2(k, j) for j in range(1, min(n, k) + 1)})
        assert to_hook_h(power) == expected
    s = reflection(n)
    for a in range(2, n):
        lhs = internal_product(hook_h(n, a), s)
        assert lhs == (a - 1) * hook_h(n, a) + hook_h(n, a + 1)
    with pytest.raises(ValueError):
        internal_product(h(n), h(n + 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_mn_characters(n):
    full = IntPartition((n,))
    ones = IntPartition((1,) * n)
    for mu in partitions_of(n):
        assert mn_character(full, mu) == 1
        if n >= 2:
            assert mn_character(IntPartition((n - 1, 1)), mu) == mu.ones - 1
    assert mn_character(ones, full) == (-1) ** (n - 1)
    # orthogonality and hook-length dimensions
    for lam in partitions_of(n):
        assert mn_character(lam, ones) == hook_dimension(lam)
        for nu in partitions_of(n):
            s = sum(Fraction(mn_character(lam, mu) * mn_character(nu, mu), mu.z())
                    for mu in partitions_of(n))
            assert s == (1 if lam == nu else 0)


@pytest.mark.parametrize("n", range(2, 6))
def test_schur_expansion_of_tensor_powers(n):
    assert schur_expand(h(n)) == {IntPartition((n,)): 1}
    perms = Counter(cycle_type(p) for p in permutations(range(n)))
    for k in range(1, 6):
        f = frobenius_of_fixpoly(X ** k, n)
        expansion = schur_expand(f)
        for lam in partitions_of(n):
            # average over the group, element by element
            brute = Fraction(sum(cnt * (mu.ones - 1) ** k * mn_character(lam, mu)
                                 for mu, cnt in perms.items()), factorial(n))
            assert expansion.get(lam, 0) == brute
            assert brute >= 0 and brute.denominator == 1


def test_hook_expansion_examples():
    for n in range(3, 7):
        for k in range(1, 6):
            vec = to_hook_h(frobenius_of_fixpoly(X ** k, n))
            assert vec[0] == (-1) ** k
            assert vec[1] == (-1) ** (k - 1)
        assert to_hook_h(h(n)) == HookHVector(n, {0: 1})
    for n in range(4, 7):
        assert to_hook_h(schur(IntPartition((n - 2, 2)))) is None


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(-4, 4), min_size=n, max_size=n))))
def test_hook_round_trip(data):
    n, cs = data
    vec = HookHVector(n, dict(zip(hook_slots(n), cs)))
    assert to_hook_h(vec.to_symfunc()) == vec


def test_hook_folding():
    assert hook_h(5, 4) == hook_h(5, 5)
    v = HookHVector(5, {4: 2, 5: 1})
    assert v.coeffs == {5: 3} and v[4] == 3
    assert v.as_ints() == {5: 3}


@pytest.mark.parametrize("n", range(2, 7))
def test_g_table(n):
    for k in range(1, 7):
        it = g_by_iteration(n, k)
        for d in range(0, n + 1):
            g = g_coeff(n, k, d)
            assert g == g_alternating(k, d)
            assert g == it.get(d, 0)
            if d > k:
                assert g == 0
            if 2 <= d <= k:
                assert g >= 0
        assert refl_power_hook(n, k) == to_hook_h(internal_power(reflection(n), k))
        assert g_coeff(n, k, 2) == (1 + (-1) ** k) // 2
        if 2 <= k <= n:
            assert g_coeff(n, k, k - 1) == comb(k - 1, 2) - 1
        if k < n:
            assert g_coeff(n, k, k) == 1


def test_ind_res_step_on_trivial():
    assert ind_res_step({0: 1}, 4) == {1: 1, 0: -1}
    assert ind_res_step({3: 1}, 4) == {3: 2, 4: 1}


@pytest.mark.parametrize("n", range(2, 7))
def test_u_module(n):
    assert u_module(n, 1) == HookHVector(n)
    s = reflection(n)
    assert u_module(n, 2) == to_hook_h(internal_power(s, 2) + s) == HookHVector(n, {2: 1})
    for k in range(1, 7):
        u = u_module(n, k)
        assert u.is_nonnegative()
        assert u[0] == 0 and (n <= 2 or u[1] == 0)
        direct = to_hook_h(internal_power(s, k) - (-1) ** (k - 1) * s)
        assert direct == u


def test_trivial_multiplicity():
    for n in range(4, 8):
        assert trivial_multiplicity(n, 4) == 4
        assert inner(frobenius_of_fixpoly(X ** 4, n), h(n)) == 4
    assert trivial_multiplicity(3, 4) == 3
    assert trivial_multiplicity(3, 5) == 5
    for n in range(2, 7):
        for k in range(2, 7):
            assert inner(frobenius_of_fixpoly(X ** k, n), h(n)) == trivial_multiplicity(n, k)


@pytest.mark.parametrize("n", range(2, 8))
def test_whitney_h_positivity(n):
    for j in range(2, 8):
        vec = to_hook_h(frobenius_of_fixpoly(X ** j + X ** (j - 1), n))
        expected = HookHVector(n, {d: stirling2(j - 1, d - 1) for d in range(2, min(n, j) + 1)})
        assert vec == expected


@pytest.mark.parametrize("n", range(3, 6))
def test_chain_h_positivity(n):
    for k in range(1, 5):
        for S in rank_sets(k):
            vec = to_hook_h(frobenius_of_fixpoly(alpha_poly(S), n))
            assert vec is not None and vec.is_nonnegative() and vec.is_integral()
            assert vec[1] == 1


def test_reduction_polynomials_published():
    for n, coeffs in PUBLISHED_REDUCTIONS.items():
        assert reduction_polynomial(n) == coeffs
        assert reduction_polynomial_product(n) == coeffs
    with pytest.raises(ValueError):
        reduction_polynomial(2)


@pytest.mark.parametrize("n", range(3, 10))
def test_reduction_polynomial_properties(n):
    a = reduction_polynomial(n)
    assert a == reduction_polynomial_product(n)
    assert a[-1] == comb(n - 1, 2)
    assert a[0] == (-1) ** (n - 1) * (factorial(n - 2) + factorial(n - 3))
    for b in character_values(n):  # includes the dimension n - 1
        assert b ** n == sum(c * b ** (j + 1) for j, c in enumerate(a))
    assert power_basis_determinant(n) != 0


def test_relation_polynomial():
    assert relation_polynomial(2) == [0, -1, 0, 1]
    for n in range(2, 8):
        R = relation_polynomial(n)
        for b in character_values(n) + [0]:
            assert sum(c * b ** i for i, c in enumerate(R)) == 0
        # as a class function R(x) vanishes
        assert frobenius_of_fixpoly(TensorPowerPoly(tuple(R)), n) == SymFunc(n)
