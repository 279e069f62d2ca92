from math import comb, prod

import pytest

from subword_homology.homology import (ChainCapExceeded, admissible_fix_counts, betti_numbers,
                                       chain_character, dual_whitney_dims, fix_count,
                                       lefschetz_character, permutation_traces, upper_mobius,
                                       whitney_dims)
from subword_homology.tensorpoly import alpha_poly, beta_poly, rank_sets
from subword_homology.words import build_poset


def top_betti(n, k, T):
    if not T:
        return 1  # only the empty face: reduced H_{-1}
    return betti_numbers(build_poset(n, k, T)).betti[len(T) - 1]


def test_betti_examples():
    assert betti_numbers(build_poset(2, 2)).betti_vector() == (0, 1)
    assert betti_numbers(build_poset(2, 3, (1, 3))).nonzero() == {1: 5}
    for n in (2, 3):
        for s in (1, 2, 3):
            assert betti_numbers(build_poset(n, 3, (s,))).nonzero() == {0: n ** s - 1}


def test_empty_complex():
    s = betti_numbers(build_poset(0, 3))
    assert s.face_counts == {-1: 1}
    assert s.nonzero() == {-1: 1}
    assert s.reduced_euler == -1


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)])
def test_betti_concentrated_and_euler(n, k):
    for T in rank_sets(k):
        P = build_poset(n, k, T)
        s = betti_numbers(P)
        assert s.nonzero() == {len(T) - 1: beta_poly(T).dimension(n)}
        assert s.reduced_euler == sum((-1) ** d * b for d, b in s.betti.items())
        assert s.reduced_euler == P.mobius_number()


def test_chain_cap():
    with pytest.raises(ChainCapExceeded):
        betti_numbers(build_poset(3, 3), cap=10)


def test_chain_cap_env(monkeypatch):
    monkeypatch.setenv("SUBWORD_CHAIN_CAP", "5")
    with pytest.raises(ChainCapExceeded):
        betti_numbers(build_poset(2, 2))


def test_admissible_fix_counts():
    assert admissible_fix_counts(4) == [0, 1, 2, 4]
    assert admissible_fix_counts(2) == [0, 2]


def test_lefschetz_examples():
    for n in (2, 3, 4):
        for k in (1, 2, 3):
            assert lefschetz_character(n, k).dimension == (n - 1) ** k
    assert lefschetz_character(2, 2)[0] == 1
    chi = lefschetz_character(2, 3, (1, 3))
    assert chi.values == {2: 5, 0: 3 - 2}


def test_chain_character_examples():
    for n in (2, 3):
        for k in (1, 2, 3):
            assert chain_character(n, k).dimension == prod(1 + i * (n - 1) for i in range(1, k + 1))
    for s in (1, 2, 3):
        chi = chain_character(3, 3, (s,))
        assert chi.values == {f: f ** s for f in admissible_fix_counts(3)}
    assert chain_character(2, 2)[2] == 6


@pytest.mark.parametrize("n,k", [(n, k) for n in (2, 3, 4) for k in (1, 2, 3)])
def test_characters_match_polynomials(n, k):
    for T in rank_sets(k):
        beta, alpha = beta_poly(T), alpha_poly(T)
        lef = lefschetz_character(n, k, T)
        ch = chain_character(n, k, T)
        for f in admissible_fix_counts(n):
            assert lef[f] == beta.character(f)
            assert ch[f] == alpha.character(f)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_per_permutation_traces(k):
    for T in rank_sets(k):
        lef = lefschetz_character(3, k, T)
        ch = chain_character(3, k, T)
        for g, (trace, fixed) in permutation_traces(3, k, T).items():
            assert trace == lef[fix_count(g)]
            assert fixed == ch[fix_count(g)]


@pytest.mark.parametrize("n,k", [(n, k) for n in (2, 3, 4) for k in (1, 2, 3, 4) if n ** k <= 81])
def test_whitney_dims(n, k):
    dims = whitney_dims(n, k)
    assert dims[0] == 1
    assert dims[1:] == [n * (n - 1) ** (i - 1) for i in range(1, k + 1)]
    dual = dual_whitney_dims(n, k)
    assert dual[0] == 1
    for i in range(0, k + 1):
        assert dual[k + 1 - i] == n ** i * comb(k, i) * (n - 1) ** (k - i)
    # acyclicity telescope
    assert sum((-1) ** (k - i) * d for i, d in enumerate(dims)) == top_betti(n, k, tuple(range(1, k + 1)))


@pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)])
def test_consecutive_ranks_against_dual_whitney(n, k):
    dual = dual_whitney_dims(n, k)
    for i in range(1, k + 1):
        lhs = top_betti(n, k, tuple(range(i, k + 1))) + top_betti(n, k, tuple(range(i + 1, k + 1)))
        assert lhs == dual[k + 1 - i]


@pytest.mark.parametrize("n,k", [(2, 3), (3, 3), (2, 4), (3, 4)])
def test_upper_mobius_matches_poset_recursion(n, k):
    P = build_poset(n, k)
    mu = P.mobius_to_top()
    up = upper_mobius(n, k)
    assert {w: mu[i] for i, w in enumerate(P.elements)} == up
