from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from linkgenus.errors import DomainError, ProfileConsistencyError
from linkgenus.genus import (
    Branch,
    castelnuovo_genus,
    closed_form_genus,
    compute_parameters,
    delta_h,
    delta_h_table,
    exceeds_degree_bound,
    max_genus,
    min_admissible_degree,
    printed_castelnuovo_genus,
    residual_h0_bound,
)


def oracle_genus_from_hilbert(params):
    """ACM route: p_a = Σ_{r>=1} (d - h_Γ(r)), with h_Γ the partial sums of Δh."""
    h, total = 0, 0
    r = 0
    while True:
        h += delta_h(params, r)
        if r >= 1:
            total += params.d - h
        if h == params.d and r >= 1:
            return total
        r += 1


def valid(d, n, s):
    try:
        p = compute_parameters(d, n, s)
    except DomainError:
        return None
    return p if p.stable else None


class TestParameters:
    def test_anchor_98_5_9(self):
        p = compute_parameters(98, 5, 9)
        assert (p.m, p.eps, p.w, p.v) == (10, 7, 2, 2)
        assert p.branch is Branch.HIGH
        assert (p.k, p.delta, p.e) == (2, 2, 1)

    def test_division_identities(self):
        for d in range(10, 300):
            p = compute_parameters(d, 5, 9)
            assert d - 1 == p.s * p.m + p.eps
            assert p.s - 1 == (p.n - 2) * p.w + p.v
            if p.branch is Branch.LOW:
                assert p.eps == p.k * p.w + p.delta and 0 <= p.delta < p.w
            else:
                assert p.eps + p.n - 2 - p.v == p.k * (p.w + 1) + p.delta
                assert 0 <= p.delta <= p.w

    @pytest.mark.parametrize("d,n,s", [(4, 5, 4), (10, 2, 5), (10, 5, 3), (9, 4, 9)])
    def test_domain_errors(self, d, n, s):
        with pytest.raises(DomainError):
            compute_parameters(d, n, s)

    def test_low_branch_example(self):
        p = compute_parameters(4, 3, 2)
        assert p.branch is Branch.LOW and max_genus(p) == 1


class TestDeltaH:
    def test_profile_98_5_9(self):
        t = delta_h_table(compute_parameters(98, 5, 9))
        assert t.values == (1, 4, 7) + (9,) * 8 + (8, 5, 1)
        assert t.total == 98
        assert t.hilbert(2) == 12 and t(-1) == 0 and t(14) == 0

    def test_unstable_range_rejected(self):
        # m = 1 < w = 2
        p = compute_parameters(12, 5, 9)
        assert not p.stable
        with pytest.raises(ProfileConsistencyError):
            delta_h_table(p)

    @settings(max_examples=300, deadline=None)
    @given(st.integers(3, 9), st.integers(0, 40), st.integers(1, 3000))
    def test_sum_and_nonnegativity(self, n, extra_s, d):
        s = n - 1 + extra_s
        p = valid(d, n, s)
        if p is None:
            return
        t = delta_h_table(p)
        assert t.total == d
        assert all(v >= 0 for v in t.values)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(3, 8), st.integers(0, 25), st.integers(1, 2000))
    def test_profile_is_unimodal(self, n, extra_s, d):
        p = valid(d, n, n - 1 + extra_s)
        if p is None:
            return
        vals = delta_h_table(p).values
        peak = vals.index(max(vals))
        assert list(vals[: peak + 1]) == sorted(vals[: peak + 1])
        assert list(vals[peak:]) == sorted(vals[peak:], reverse=True)


class TestMaxGenus:
    @pytest.mark.parametrize(
        "d,n,s,g", [(98, 5, 9, 550), (4, 3, 2, 1), (85, 5, 8, 452), (96, 5, 9, 529), (2036, 5, 9, 230633)]
    )
    def test_frozen_values(self, d, n, s, g):
        assert max_genus(compute_parameters(d, n, s)) == g

    @settings(max_examples=200, deadline=None)
    @given(st.integers(3, 8), st.integers(0, 25), st.integers(1, 3000))
    def test_matches_hilbert_route(self, n, extra_s, d):
        p = valid(d, n, n - 1 + extra_s)
        if p is None:
            return
        assert max_genus(p) == oracle_genus_from_hilbert(p)

    def test_monotone_in_degree(self):
        for n, s in [(4, 5), (5, 9), (6, 12)]:
            gs = [max_genus(p) for d in range(s + 1, 800) if (p := valid(d, n, s))]
            assert gs == sorted(gs)

    def test_curves_on_quadrics_in_p3(self):
        for d in range(3, 40):
            p = valid(d, 3, 2)
            if p:
                assert max_genus(p) == oracle_genus_from_hilbert(p)


class TestClosedForm:
    def test_documented_discrepancy(self):
        cf = closed_form_genus(compute_parameters(98, 5, 9))
        assert cf.value == 528 and cf.discrepancy and cf.is_integral

    def test_non_integral(self):
        cf = closed_form_genus(compute_parameters(121, 5, 12))
        assert cf.value == Fraction(1413, 2) and not cf.is_integral

    def test_92_5_9(self):
        # recomputed from the printed expression, which overshoots the Δh genus here
        p = compute_parameters(92, 5, 9)
        cf = closed_form_genus(p)
        assert max_genus(p) == 485
        assert cf.value == 496 and cf.discrepancy

    def test_flag_means_disagreement(self):
        for d in range(10, 400):
            p = valid(d, 5, 9)
            if p:
                cf = closed_form_genus(p)
                assert cf.discrepancy == (cf.value != max_genus(p))


class TestCastelnuovo:
    @pytest.mark.parametrize(
        "deg,r,g",
        [(3, 3, 0), (4, 3, 1), (5, 3, 2), (6, 3, 4), (7, 3, 6), (9, 4, 7), (4, 4, 0), (5, 3, 2), (5, 2, 6), (6, 5, 1)],
    )
    def test_classical_values(self, deg, r, g):
        assert castelnuovo_genus(deg, r) == g

    def test_plane_curves(self):
        for deg in range(2, 30):
            assert castelnuovo_genus(deg, 2) == comb(deg - 1, 2)

    def test_printed_variant(self):
        assert printed_castelnuovo_genus(9, 4) == 5
        assert printed_castelnuovo_genus(9, 2) == castelnuovo_genus(9, 2)


def sympy_min_degree(n, s):
    bound = sympy.Rational(2 * s, n - 2) * sympy.Mul(
        *[sympy.factorial(n - 1) ** sympy.Rational(1, n - 1 - i) for i in range(1, n - 1)]
    )
    return int(sympy.floor(bound)) + 1


class TestDegreeBound:
    @pytest.mark.parametrize("n,s,d", [(3, 2, 9), (4, 7, 103), (5, 9, 2035), (5, 8, 1809)])
    def test_frozen(self, n, s, d):
        assert min_admissible_degree(n, s) == d

    def test_against_sympy(self):
        for n in range(3, 8):
            for s in range(n - 1, n + 12):
                assert min_admissible_degree(n, s) == sympy_min_degree(n, s)

    def test_threshold_is_sharp(self):
        for n, s in [(4, 7), (5, 9), (6, 11)]:
            d = min_admissible_degree(n, s)
            assert exceeds_degree_bound(d, n, s) and not exceeds_degree_bound(d - 1, n, s)

    def test_exact_tie_not_exceeded(self):
        # n = 3: the bound is exactly 4s
        s = 10**20 + 1
        assert not exceeds_degree_bound(4 * s, 3, s)
        assert exceeds_degree_bound(4 * s + 1, 3, s)
        assert min_admissible_degree(3, s) == 4 * s + 1


class TestResidualBound:
    def test_values(self):
        p = compute_parameters(98, 5, 9)
        assert [residual_h0_bound(p, i) for i in range(3)] == [1, 6, 14]

    def test_range(self):
        with pytest.raises(DomainError):
            residual_h0_bound(compute_parameters(98, 5, 9), 3)

    def test_monotone_in_i(self):
        for d in range(30, 300):
            p = valid(d, 5, 9)
            if p:
                vals = [residual_h0_bound(p, i) for i in range(min(p.w, p.m) + 1)]
                assert vals == sorted(vals)
