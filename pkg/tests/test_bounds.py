import math
import warnings

import numpy as np
import pytest

from benfordlab.bounds import (
    RateParams,
    erdos_turan_bound,
    lemma_bound,
    optimal_H,
    partial_exponential_sum,
    partial_exponential_sum_scan,
    prop_bound_form,
    theorem1_rhs,
    van_der_corput_bound,
    weyl_sum,
    weyl_sum_grid,
)
from benfordlab.discrepancy import SamplePoints, extreme_discrepancy
from benfordlab.errors import DomainError, SizeGuardError
from benfordlab.schedules import Schedule

from conftest import fuzz_point_set

LOG10_2 = math.log10(2.0)


class TestWeylSum:
    def test_constant_sequence(self):
        sp = SamplePoints.from_values(np.zeros(7))
        for h in (1, 3, 11):
            assert weyl_sum(sp, h) == pytest.approx(1.0 + 0.0j, abs=1e-14)

    def test_full_period_cancellation(self):
        sp = SamplePoints.from_values(np.arange(4) / 4.0)
        z = weyl_sum(sp, 1)
        assert abs(z) <= 1e-15

    def test_equidistributed_sequence_is_small(self):
        pts = np.mod(np.arange(1, 1001) * LOG10_2, 1.0)
        z = weyl_sum(SamplePoints.from_values(pts), 1)
        assert abs(z) < 0.01

    def test_zero_frequency_rejected(self):
        sp = SamplePoints.from_values([0.3])
        with pytest.raises(DomainError):
            weyl_sum(sp, 0)

    def test_modulus_at_most_one(self, rng):
        for _ in range(50):
            sp = SamplePoints.from_values(fuzz_point_set(rng, max_n=100))
            hs = rng.integers(1, 200, size=5)
            assert np.all(np.abs(weyl_sum_grid(sp, hs)) <= 1.0 + 1e-12)

    def test_negative_frequency_is_conjugate(self):
        sp = SamplePoints.from_values([0.1, 0.37, 0.8])
        assert weyl_sum(sp, -3) == pytest.approx(np.conj(weyl_sum(sp, 3)), abs=1e-14)


class TestErdosTuran:
    def test_all_points_zero(self):
        sp = SamplePoints.from_values(np.zeros(5))
        assert erdos_turan_bound(sp, 1) == pytest.approx(1.5)
        assert erdos_turan_bound(sp, 1, safety=2.0) == pytest.approx(3.0)

    def test_dominates_midpoint_lattice(self):
        sp = SamplePoints.from_values((2 * np.arange(1, 101) - 1) / 200.0)
        assert erdos_turan_bound(sp, 10) >= extreme_discrepancy(sp)

    def test_kronecker_sequence_value_in_unit_interval(self):
        pts = np.mod(np.arange(1, 1001) * LOG10_2, 1.0)
        sp = SamplePoints.from_values(pts)
        value = erdos_turan_bound(sp, 31)
        assert 0.0 < value <= 1.0

    def test_fuzz_dominance_with_recorded_retest(self, rng):
        # the bare inequality (safety 1) is checked on mixed point sets;
        # violations are recorded rather than asserted impossible, and any
        # recorded case must clear a raised safety multiplier
        violations = []
        for _ in range(500):
            sp = SamplePoints.from_values(fuzz_point_set(rng, max_n=500))
            d = extreme_discrepancy(sp)
            for H in (1, 5, 20, 100):
                if d > erdos_turan_bound(sp, H) + 1e-12:
                    violations.append((sp, H, d))
        for sp, H, d in violations:
            assert d <= erdos_turan_bound(sp, H, safety=2.0) + 1e-12
        if violations:
            warnings.warn(f"bare-form dominance failed {len(violations)} times")

    def test_guards(self):
        sp = SamplePoints.from_values([0.3])
        with pytest.raises(DomainError):
            erdos_turan_bound(sp, 0)
        with pytest.raises(SizeGuardError):
            erdos_turan_bound(sp, 10**7 + 1)
        with pytest.raises(DomainError):
            erdos_turan_bound(sp, 10, safety=0.5)


class TestPartialExponentialSum:
    def test_single_term(self):
        for h in (1, 5):
            assert partial_exponential_sum(1, h) == pytest.approx(1.0 + 0.0j)

    def test_two_terms(self):
        expected = 1.0 + np.exp(2j * np.pi * math.log(2.0))
        assert partial_exponential_sum(2, 1) == pytest.approx(expected, abs=1e-14)

    def test_bounded_by_lemma(self):
        assert abs(partial_exponential_sum(1000, 3)) <= lemma_bound(1000, 3)

    def test_scan_matches_direct(self):
        scan = partial_exponential_sum_scan(50, 7)
        for k in (1, 10, 50):
            assert scan[k - 1] == pytest.approx(
                abs(partial_exponential_sum(k, 7)), abs=1e-11
            )


class TestLemmaBound:
    def test_k_one(self):
        assert lemma_bound(1, 1) == pytest.approx(1.0 / (2 * math.pi) + 1.0, abs=1e-12)

    def test_k_hundred(self):
        # 100/(2 pi) + 1 + pi ln 100
        assert lemma_bound(100, 1) == pytest.approx(31.383063134, abs=1e-8)

    def test_k_ten_h_ten(self):
        assert lemma_bound(10, 10) == pytest.approx(73.496999067, abs=1e-8)

    def test_exhaustive_small_grid(self):
        # acceptance covers h <= 50, k <= 5000; keep a fast slice here
        for h in range(1, 11):
            scan = partial_exponential_sum_scan(2000, h)
            ks = np.arange(1, 2001)
            rhs = ks / (2 * math.pi * h) + 1.0 + math.pi * h * np.log(ks)
            assert np.all(scan <= rhs)


class TestVanDerCorput:
    def test_plug_in_values(self):
        assert van_der_corput_bound(1, 1) == pytest.approx(22.0)
        assert van_der_corput_bound(10**4, 1) == pytest.approx(8.050603, abs=1e-9)
        assert van_der_corput_bound(10**4, 100) == pytest.approx(1.2109, abs=1e-9)

    def test_bounds_uniform_exponential_average(self):
        for n in (10, 50, 100, 500, 1000, 2000):
            scan = partial_exponential_sum_scan(n, 1)
            for h in (1, 7, 50):
                lhs = partial_exponential_sum_scan(n, h)[n - 1] / n
                assert lhs <= van_der_corput_bound(n, h)


class TestPropBoundForm:
    def test_vanishing_r(self):
        params = RateParams(c1=1, c2=1, gamma=1, delta=1, r_schedule=Schedule.constant(0.0))
        assert prop_bound_form(4, 1, params) == pytest.approx(0.25)

    def test_sqrt_shape(self):
        params = RateParams(
            c1=1, c2=1, gamma=0.5, delta=1, beta=0.5,
            r_schedule=Schedule.polynomial(1.0, -0.5),
        )
        assert prop_bound_form(4, 100, params) == pytest.approx(0.9)

    def test_zero_c1(self):
        params = RateParams(
            c1=0, c2=2, gamma=1, delta=2, r_schedule=Schedule.constant(1e-3)
        )
        assert prop_bound_form(10, 17, params) == pytest.approx(0.2)


class TestTheorem1Rhs:
    def test_constant_unit_schedule_middle_term(self):
        params = RateParams(C0=0.0, c0=1.0, gamma=1.0, beta=100.0, delta=1.0)
        value = theorem1_rhs(1000, params, Schedule.constant(1.0))
        # middle term is exactly 1; tail term is tiny for huge beta
        tail = math.log(1000) ** 0.5 * 1000 ** (-0.5)
        assert value == pytest.approx(1.0 + tail, abs=1e-12)

    def test_corollary_constant_d_shape(self):
        params = RateParams(C0=0.0, c0=1.0, gamma=1.0, delta=1.0, beta=1.0, theta=0.0)
        for d in (2.0, 8.0):
            value = theorem1_rhs(10**4, params, Schedule.constant(d))
            expected = 1.0 / d + math.log(10**4) ** 0.5 * (10**4) ** (-0.5)
            assert value == pytest.approx(expected, abs=1e-12)

    def test_non_decaying_regime(self):
        params = RateParams(beta=0.5, delta=1.0, theta=1.0, c0=1.0, C0=1.0)
        assert params.beta - params.delta * params.theta < 0
        assert theorem1_rhs(1000, params, Schedule.constant(1.0)) >= params.c0

    def test_monotone_in_n_when_decaying(self):
        params = RateParams(beta=1.0, delta=1.0, theta=0.0)
        grid = np.unique(np.logspace(2, 6, 40).astype(int))
        values = [theorem1_rhs(int(n), params, Schedule.constant(3.0)) for n in grid]
        diffs = np.diff(values)
        assert np.all(diffs <= 1e-15)

    def test_rejects_tiny_n(self):
        with pytest.raises(DomainError):
            theorem1_rhs(1, RateParams(), Schedule.constant(1.0))


class TestOptimalH:
    def test_small_n(self):
        assert optimal_H(3, RateParams(beta=1, delta=1, theta=0)) == 2

    def test_large_n(self):
        # (ln 1e6)^(-1/2) * 1e3 = 269.0397..., floor + 1
        assert optimal_H(10**6, RateParams(beta=1, delta=1, theta=0)) == 270

    def test_degenerate_regime_returns_one(self):
        params = RateParams(beta=1.0, delta=1.0, theta=5.0)
        for n in (3, 100, 10**5):
            assert optimal_H(n, params) == 1

    def test_always_at_least_one(self, rng):
        for _ in range(100):
            params = RateParams(
                beta=float(rng.uniform(0.1, 3)),
                delta=float(rng.uniform(0.1, 3)),
                theta=float(rng.uniform(0, 2)),
            )
            assert optimal_H(int(rng.integers(2, 10**6)), params) >= 1

    def test_rejects_tiny_n(self):
        with pytest.raises(DomainError):
            optimal_H(1, RateParams())


class TestRateParamsValidation:
    def test_rejects_nonpositive_exponents(self):
        with pytest.raises(DomainError):
            RateParams(gamma=0.0)
        with pytest.raises(DomainError):
            RateParams(beta=-1.0)
        with pytest.raises(DomainError):
            RateParams(theta=-0.1)

    def test_default_r_schedule_decays_like_beta(self):
        params = RateParams(beta=2.0)
        assert params.r(10) == pytest.approx(0.01)
        # r_n * n^beta stays bounded over the tested range
        ns = np.arange(1, 1001)
        assert np.max(params.r(ns) * ns**2.0) <= 1.0 + 1e-12
