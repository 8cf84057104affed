from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from higgsforms.slope import (BundleSelector, bigthm_verdict, chern_coeff, enumerate_invariant,
                              is_higgs_invariant, parse_selector, slope, slope_diff,
                              slope_diff_direct, stability_preclusion, trivial_action_test)


def all_selectors(n):
    return [BundleSelector(n, d) for z in range(1, n + 2) for d in combinations(range(n + 1), z)]


def test_selector_validation():
    with pytest.raises(ValueError):
        BundleSelector(3, ())
    with pytest.raises(ValueError):
        BundleSelector(3, (2, 1))
    with pytest.raises(ValueError):
        BundleSelector(3, (0, 4))
    assert BundleSelector.of(3, [3, 1, 1]).degrees == (1, 3)
    assert BundleSelector(4, (0, 2)).rank == 1 + 6


def test_chern_coeff():
    assert chern_coeff(6, 0) == 0
    assert chern_coeff(6, 1) == 1
    assert chern_coeff(4, 2) == 3
    with pytest.raises(ValueError):
        chern_coeff(3, 4)


@pytest.mark.parametrize("n", range(1, 9))
def test_single_degree_slopes(n):
    for p in range(n + 1):
        rep = slope(BundleSelector(n, (p,)))
        assert rep.slope_coeff == Fraction(p, n)
        assert rep.slope_coeff == rep.degree_coeff / rep.rank


@pytest.mark.parametrize("n", range(2, 9))
def test_total_even_and_odd_slopes(n):
    half = Fraction(1, 2)
    assert slope(BundleSelector.filtration(n, 0)).slope_coeff == half
    assert slope(BundleSelector.even(n)).slope_coeff == half
    assert slope(BundleSelector.odd(n)).slope_coeff == half


def test_slope_diff_examples():
    n = 3
    assert slope_diff(BundleSelector.filtration(n, 0), BundleSelector(n, (3,))) == Fraction(-1, 2)
    P = BundleSelector(n, (1, 3))
    assert slope_diff(P, P) == 0
    with pytest.raises(ValueError):
        slope_diff(BundleSelector(n, (1,)), BundleSelector(n, (2,)))


@pytest.mark.parametrize("n", range(1, 9))
def test_closed_form_matches_direct_on_all_pairs(n):
    sels = all_selectors(n)
    for P in sels:
        for Q in sels:
            if Q.issubset(P):
                assert slope_diff(P, Q) == slope_diff_direct(P, Q)


@pytest.mark.parametrize("n", range(1, 9))
def test_tails_have_negative_difference(n):
    for P in all_selectors(n):
        for l in range(1, P.z):
            Q = BundleSelector(n, P.degrees[P.z - l:])
            assert slope_diff(P, Q) < 0


@given(st.integers(2, 12), st.data())
def test_filtration_chain_slopes_increase(n, data):
    a = data.draw(st.integers(0, n - 1))
    assert slope(BundleSelector.filtration(n, a)).slope_coeff < slope(BundleSelector.filtration(n, a + 1)).slope_coeff


# -- invariance ----------------------------------------------------------------

def odd_ks(n):
    return [k for k in range(3, n + 1, 2)]


@pytest.mark.parametrize("n", range(3, 9))
def test_named_families_are_invariant(n):
    for k in odd_ks(n):
        for a in range(n + 1):
            assert is_higgs_invariant(BundleSelector.filtration(n, a), k)
        assert is_higgs_invariant(BundleSelector.even(n), k)
        assert is_higgs_invariant(BundleSelector.odd(n), k)
        for i in range(k - 1):
            assert is_higgs_invariant(BundleSelector(n, tuple(range(i, n + 1, k - 1))), k)


def test_non_invariant_example():
    assert not is_higgs_invariant(BundleSelector(5, (1, 2)), 3)
    assert is_higgs_invariant(BundleSelector(5, (1, 3, 5)), 3)


def test_enumeration_n3_k3():
    found = {s.degrees for s in enumerate_invariant(3, 3)}
    for d in [(3,), (2, 3), (1, 3), (0, 2, 3), (0, 1, 2, 3), (1, 2, 3)]:
        assert d in found
    # independent count: subsets S of {0..3} with p in S, p+2 <= 3 => p+2 in S
    brute = sum(1 for m in range(1, 16)
                if all(not (m >> p) & 1 or p + 2 > 3 or (m >> (p + 2)) & 1 for p in range(4)))
    # 0 forces 2 and 1 forces 3, so 3 * 3 - 1 nonempty choices
    assert len(found) == brute == 8


@pytest.mark.parametrize("n", range(3, 9))
def test_enumeration_is_exactly_the_invariant_set(n):
    for k in odd_ks(n):
        found = enumerate_invariant(n, k)
        assert all(is_higgs_invariant(s, k) for s in found)
        assert len(found) == sum(1 for s in all_selectors(n) if is_higgs_invariant(s, k))
        for s in found:
            for a in range(n + 1):
                meet = s & BundleSelector.filtration(n, a)
                assert meet is None or is_higgs_invariant(meet, k)


def test_enumeration_bound():
    with pytest.raises(ValueError):
        enumerate_invariant(13, 3)


def test_stability_preclusion():
    n, k = 5, 3
    for a in range(n):
        assert stability_preclusion(BundleSelector.filtration(n, a), k)
    assert not stability_preclusion(BundleSelector(n, (n,)), k)
    assert not stability_preclusion(BundleSelector(n, (0, 2, 4)), k)
    with pytest.raises(ValueError):
        stability_preclusion(BundleSelector(n, (1, 2)), k)


def test_trivial_action_threshold():
    assert trivial_action_test(5, 3, BundleSelector(5, (4, 5)))
    assert not trivial_action_test(5, 3, BundleSelector(5, (3, 4, 5)))


# -- verdicts ------------------------------------------------------------------

def test_verdict_examples():
    E1 = BundleSelector.filtration(5, 1)
    assert bigthm_verdict(5, 3, -1, E1).tag == "ObstructedCaseI"
    assert bigthm_verdict(5, 3, 0, E1).tag == "ObstructedCaseII"
    v = bigthm_verdict(5, 5, 1, BundleSelector(5, (1, 5)), contains_omega=True)
    assert v.tag == "ObstructedCaseIII" and v.satisfied == ("ObstructedCaseIII",)
    assert v.facts["sign_d"] == -1


def test_verdict_records_every_satisfied_case():
    v = bigthm_verdict(5, 5, -1, BundleSelector(5, (1, 5)))
    assert v.tag == "ObstructedCaseI"
    assert v.satisfied == ("ObstructedCaseI", "ObstructedCaseIII")
    assert v.obstructed


@pytest.mark.parametrize("n", range(3, 10))
def test_sharpness_boundary(n):
    for k in odd_ks(n):
        for s in enumerate_invariant(n, k):
            if s.z >= 2 and s.degrees[0] >= n - k + 2:
                v = bigthm_verdict(n, k, 0, s)
                assert v.tag == "NoObstructionFound" and not v.obstructed
                assert v.facts["theta_acts_trivially"]


@pytest.mark.parametrize("args", [
    (5, 4, 0, (1, 5)),
    (5, 1, 0, (1, 5)),
    (5, 7, 0, (1, 5)),
    (5, 3, 2, (1, 3, 5)),
    (5, 3, 0, (5,)),
    (5, 3, 0, (1, 2)),
])
def test_verdict_errors(args):
    n, k, sign, degs = args
    with pytest.raises(ValueError):
        bigthm_verdict(n, k, sign, BundleSelector(n, degs))


def test_verdict_rejects_inconsistent_omega_flag():
    with pytest.raises(ValueError):
        bigthm_verdict(5, 3, 1, BundleSelector(5, (4, 5)), contains_omega=True)


# -- parsing -------------------------------------------------------------------

def test_parse_selector():
    assert parse_selector(5, "0,2,4") == BundleSelector(5, (0, 2, 4))
    assert parse_selector(5, "even") == BundleSelector.even(5)
    assert parse_selector(5, "odd").degrees == (1, 3, 5)
    assert parse_selector(5, "E2").degrees == (2, 3, 4, 5)
    assert parse_selector(5, " 3, 1 ").degrees == (1, 3)
    for bad in ("1,1", "a,b", "E9", "", "7"):
        with pytest.raises(ValueError):
            parse_selector(5, bad)


def test_slope_report_json():
    assert slope(BundleSelector(4, (2,))).to_json() == {"degree_coeff": "3", "rank": comb(4, 2), "slope_coeff": "1/2"}
