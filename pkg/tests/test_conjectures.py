import json

import pytest

from subword_homology.conjectures import (FAILS, HOLDS, INCONCLUSIVE, ConjectureReport,
                                          RankSetRecord, TheoremViolation, check_proven_cases,
                                          cross_validate, hook_vector, proven_case_failures,
                                          proven_rank_sets, scan, search_rewrite)
from subword_homology.symfunc import HookHVector
from subword_homology.tensorpoly import X, TensorPowerPoly, rank_sets


def record(report, T):
    return next(r for r in report.records if r.T == T)


def test_scan_examples():
    rep = scan(5, 4)
    assert [r.T for r in rep.records] == rank_sets(4)
    for T in [(2, 3, 4), (1, 3, 4), (2, 4)]:
        r = record(rep, T)
        assert (r.conj1, r.conj2) == (HOLDS, HOLDS)
    assert record(rep, (2, 4)).hook == HookHVector(5, {2: 13, 3: 22, 5: 5})


def test_scan_rejects_bad_parameters():
    with pytest.raises(ValueError):
        scan(1, 3)
    with pytest.raises(ValueError):
        scan(3, 0)


@pytest.mark.parametrize("n", range(2, 7))
def test_no_failures_in_unique_regime(n):
    for k in range(1, min(n - 1, 5) + 1):
        rep = scan(n, k)
        assert all(r.conj1 != FAILS and r.conj2 != FAILS for r in rep.records)
        assert rep.minimal_witness() is None


def test_hook_support_theorem_asserted():
    for n in range(2, 7):
        for T in rank_sets(4):
            vec = hook_vector(T, n)
            assert vec.is_integral() and min(vec.support(), default=2) >= 2


def test_report_is_deterministic():
    a, b = scan(4, 4).to_json(), scan(4, 4).to_json()
    assert a == b
    data = json.loads(a)
    assert data["n"] == 4 and len(data["records"]) == 15


def test_conj1_statuses_follow_sign_and_regime():
    neg = TensorPowerPoly((0, 2, 0, -1))
    rec = RankSetRecord((1,), neg, HookHVector(2, {2: -1}), FAILS, FAILS)
    rep = ConjectureReport(2, 3, [RankSetRecord((1, 2), X, HookHVector(2), HOLDS, HOLDS), rec])
    assert rep.failures() == [rec]
    assert rep.failures(1) == [rec] and rep.minimal_witness() is rec
    assert INCONCLUSIVE == "inconclusive-canonical-form"


def test_rewrite_search():
    # x^3 = x on S_2, so 2x - x^3 has the nonnegative representative x
    assert search_rewrite(TensorPowerPoly((0, 2, 0, -1)), 2) == X
    assert search_rewrite(TensorPowerPoly((0, -1)), 2) is None
    assert search_rewrite(X ** 2, 3) == X ** 2


@pytest.mark.parametrize("n", range(2, 7))
def test_proven_cases(n):
    for k in range(1, 7):
        assert proven_case_failures(n, k) == []
        assert check_proven_cases(n, k)


def test_proven_rank_sets_shapes():
    shapes = proven_rank_sets(3)
    assert shapes["consecutive"] == [(1, 2, 3), (2, 3), (3,)]
    assert shapes["rank-deletion"] == [(2, 3), (1, 3), (1, 2)]
    assert shapes["two-ranks"] == [(1, 2), (1, 3), (2, 3)]


def test_cross_validate():
    assert cross_validate(2, 3)
    assert cross_validate(3, 3)
    assert cross_validate(2, 4)
    with pytest.raises(ValueError):
        cross_validate(5, 2)


def test_theorem_violation_is_an_assertion():
    assert issubclass(TheoremViolation, AssertionError)
