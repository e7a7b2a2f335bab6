import math

import numpy as np
import pytest

from benfordlab.discrepancy import (
    SamplePoints,
    benford_discrepancy,
    extreme_discrepancy,
    extreme_discrepancy_oracle,
    star_discrepancy,
)
from benfordlab.errors import DomainError, SizeGuardError
from benfordlab.mantissa import log10_frac

from conftest import fuzz_point_set


def midpoint_lattice(n):
    return SamplePoints.from_values((2 * np.arange(1, n + 1) - 1) / (2 * n))


class TestStarDiscrepancy:
    def test_single_half(self):
        assert star_discrepancy(SamplePoints.from_values([0.5])) == pytest.approx(0.5)

    def test_midpoint_lattice(self):
        assert star_discrepancy(midpoint_lattice(10)) == pytest.approx(0.05, abs=1e-15)

    def test_single_zero(self):
        assert star_discrepancy(SamplePoints.from_values([0.0])) == pytest.approx(1.0)

    @pytest.mark.parametrize("n", [1, 2, 5, 10, 100])
    def test_midpoint_lattice_is_optimal(self, n):
        assert star_discrepancy(midpoint_lattice(n)) == pytest.approx(
            1.0 / (2 * n), abs=1e-12
        )


class TestExtremeDiscrepancy:
    def test_single_half(self):
        assert extreme_discrepancy(SamplePoints.from_values([0.5])) == pytest.approx(1.0)

    def test_two_quartiles(self):
        sp = SamplePoints.from_values([0.25, 0.75])
        assert extreme_discrepancy(sp) == pytest.approx(0.5)

    @pytest.mark.parametrize("n", [1, 2, 5, 10, 100])
    def test_midpoint_lattice(self, n):
        assert extreme_discrepancy(midpoint_lattice(n)) == pytest.approx(
            1.0 / n, abs=1e-12
        )


class TestOracle:
    def test_single_half(self):
        assert extreme_discrepancy_oracle(
            SamplePoints.from_values([0.5])
        ) == pytest.approx(1.0)

    def test_zero_and_half(self):
        sp = SamplePoints.from_values([0.0, 0.5])
        assert extreme_discrepancy_oracle(sp) == pytest.approx(0.5)

    def test_nine_equally_spaced(self):
        # [0.1, 0.9 + eps) holds all nine points at length 0.8, so the sup
        # is 0.2 (confirmed by a dense-grid brute force)
        sp = SamplePoints.from_values(np.arange(1, 10) / 10.0)
        assert extreme_discrepancy_oracle(sp) == pytest.approx(0.2, abs=1e-12)

    def test_size_guard(self):
        sp = SamplePoints.from_values(np.linspace(0, 0.999, 2001))
        with pytest.raises(SizeGuardError):
            extreme_discrepancy_oracle(sp)

    def test_ties_kept_with_multiplicity(self):
        sp = SamplePoints.from_values([0.3, 0.3, 0.3, 0.9])
        assert extreme_discrepancy(sp) == pytest.approx(
            extreme_discrepancy_oracle(sp), abs=1e-12
        )


class TestClosedFormulaAgainstOracle:
    def test_fuzz(self, rng):
        # the full 1000-case battery runs in the acceptance suite
        for _ in range(300):
            sp = SamplePoints.from_values(fuzz_point_set(rng))
            closed = extreme_discrepancy(sp)
            oracle = extreme_discrepancy_oracle(sp)
            assert abs(closed - oracle) <= 1e-12
            star = star_discrepancy(sp)
            assert star <= closed <= 2 * star + 1e-15
            assert 1.0 / (2 * sp.n) - 1e-15 <= star <= 1.0


class TestBenfordDiscrepancy:
    def test_powers_of_ten(self):
        report = benford_discrepancy([10.0, 100.0, 1000.0])
        assert report.extreme == pytest.approx(1.0)
        assert report.n == 3

    def test_powers_of_two_are_nearly_benford(self):
        report = benford_discrepancy(2.0 ** np.arange(1, 1001))
        assert report.extreme < 0.05

    def test_matches_explicit_points(self):
        report = benford_discrepancy([1.0, 2.0])
        sp = SamplePoints.from_values([0.0, math.log10(2.0)])
        assert report.star == pytest.approx(star_discrepancy(sp), abs=0)
        assert report.extreme == pytest.approx(extreme_discrepancy(sp), abs=0)

    def test_decade_shift_invariance(self, rng):
        xs = 10.0 ** rng.uniform(-3, 3, size=400)
        base = benford_discrepancy(xs)
        k = rng.integers(-15, 16, size=xs.size).astype(float)
        shifted = benford_discrepancy(xs * np.power(10.0, k))
        assert shifted.star == pytest.approx(base.star, abs=1e-10)
        assert shifted.extreme == pytest.approx(base.extreme, abs=1e-10)

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            benford_discrepancy([1.0, -2.0])

    def test_frac_consistency_with_mantissa_module(self, rng):
        xs = 10.0 ** rng.uniform(-5, 5, size=100)
        report = benford_discrepancy(xs)
        sp = SamplePoints.from_values(log10_frac(xs))
        assert report.extreme == pytest.approx(extreme_discrepancy(sp), abs=0)


class TestSamplePointsValidation:
    def test_rejects_empty(self):
        with pytest.raises(DomainError):
            SamplePoints.from_values([])

    @pytest.mark.parametrize("bad", [[-0.1], [1.0], [0.5, float("nan")]])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(DomainError):
            SamplePoints.from_values(bad)

    def test_sorts_a_private_copy(self):
        raw = np.array([0.9, 0.1, 0.5])
        sp = SamplePoints.from_values(raw)
        assert list(sp.points) == [0.1, 0.5, 0.9]
        assert list(raw) == [0.9, 0.1, 0.5]
