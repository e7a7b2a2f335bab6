"""Acceptance suite: one test per release criterion, each at its stated
tolerance, printing one pass/fail line (visible with pytest -s / -v)."""

import math
import time

import numpy as np
import pytest
from scipy.stats import kendalltau

import benfordlab as bl
from benfordlab.cli import main
from benfordlab.distributions import CharFnQuery, char_fn, char_fn_oracle
from benfordlab.mantissa import LOG10_DIGIT_PROBS
from benfordlab.schedules import Schedule

from conftest import fuzz_point_set

MASTER_SEED = 20260810


def _report(num, name):
    print(f"[acceptance] criterion {num} ({name}): PASS")


def _uniform_config(**kw):
    base = dict(
        spec=bl.continuous_uniform(1.0, Schedule.polynomial(1.0, 1.0)),
        d=Schedule.constant(2.0),
        n_terms=1000,
        master_seed=MASTER_SEED,
        replicates=1,
    )
    base.update(kw)
    return bl.ExperimentConfig(**base)


def test_criterion_01_table1_reproduction(tmp_path):
    started = time.monotonic()

    out = tmp_path / "t1"
    assert main(["table1", "--seed", str(MASTER_SEED), "--out-dir", str(out)]) == 0
    rows = (out / "digits.csv").read_text().splitlines()[1:]
    single = np.array([float(r.split(",")[1]) for r in rows])
    assert np.max(np.abs(single - LOG10_DIGIT_PROBS)) < 0.05

    summary = bl.aggregate(_uniform_config(replicates=100))
    assert np.max(np.abs(summary.digit_mean - LOG10_DIGIT_PROBS)) < 0.015

    digit_one = np.array([t.frequencies[0] for t in summary.tables])
    low, high = np.quantile(digit_one, [0.005, 0.995])
    assert low <= 0.308 <= high

    elapsed = time.monotonic() - started
    assert elapsed < 10.0
    _report(1, f"table1 reproduction, {elapsed:.1f}s")


def test_criterion_02_lemma_inequality():
    from benfordlab.bounds import partial_exponential_sum_scan

    started = time.monotonic()
    violations = 0
    ks = np.arange(1, 5001, dtype=float)
    for h in range(1, 51):
        scan = partial_exponential_sum_scan(5000, h)
        rhs = ks / (2 * math.pi * h) + 1.0 + math.pi * h * np.log(ks)
        violations += int(np.sum(scan > rhs))
    elapsed = time.monotonic() - started
    assert violations == 0
    assert elapsed < 60.0
    _report(2, f"250k lemma evaluations, {elapsed:.1f}s")


def test_criterion_03_van_der_corput():
    from benfordlab.bounds import partial_exponential_sum_scan

    violations = 0
    for n in (10, 50, 100, 500, 1000, 2000):
        for h in range(1, 51):
            lhs = partial_exponential_sum_scan(n, h)[n - 1] / n
            if lhs > bl.van_der_corput_bound(n, h):
                violations += 1
    assert violations == 0
    _report(3, "van der Corput bound")


def test_criterion_04_prop3_exponential_constant():
    c1 = (math.exp(-1.0) + 1.0) / (2.0 * math.pi)
    spec = bl.exponential(1.0)
    for h in range(1, 101):
        res = char_fn_oracle(
            spec, CharFnQuery(t=float(h), n=1, tolerance=1e-8), mc_draws=10**4
        )
        assert h * abs(res.value) <= c1 + 1e-6, f"h = {h}"
    _report(4, "exponential decay constant over h = 1..100")


def test_criterion_05_discrepancy_oracle_equivalence():
    rng = np.random.default_rng(MASTER_SEED)
    worst = 0.0
    for _ in range(1000):
        sp = bl.SamplePoints.from_values(fuzz_point_set(rng, max_n=200))
        closed = bl.extreme_discrepancy(sp)
        oracle = bl.extreme_discrepancy_oracle(sp)
        worst = max(worst, abs(closed - oracle))
    assert worst <= 1e-12

    for n in (1, 2, 5, 10, 100):
        sp = bl.SamplePoints.from_values((2 * np.arange(1, n + 1) - 1) / (2 * n))
        assert abs(bl.star_discrepancy(sp) - 1.0 / (2 * n)) <= 1e-12
    _report(5, f"1000 fuzz cases, worst gap {worst:.2e}")


def test_criterion_06_powers_of_two_benford():
    report = bl.benford_discrepancy(2.0 ** np.arange(1, 1001))
    assert report.extreme < 0.05
    _report(6, f"D~_1000(2^n) = {report.extreme:.4f}")


def test_criterion_07_corollary_trend_in_d():
    means = []
    for d in (1, 2, 4, 8):
        config = _uniform_config(d=Schedule.constant(float(d)), replicates=100)
        summary = bl.aggregate(config)
        means.append(float(summary.extreme_mean[-1]))
    inversions = sum(1 for a, b in zip(means, means[1:]) if b > a)
    assert inversions <= 1, means
    _report(7, "mean D~ by d: " + ", ".join(f"{m:.4f}" for m in means))


def test_criterion_08_charfn_cross_validation():
    # per-family certification tolerances; the discrete power law is summed
    # to a looser target because its tail is only polynomial
    tolerances = {
        "geometric": 1e-8,
        "powerlaw": 1e-3,
        "discrete-uniform": 1e-8,
        "exponential": 1e-8,
        "frechet": 1e-8,
        "continuous-uniform": 1e-10,
    }
    specs = {
        "geometric": bl.geometric(Schedule.polynomial(0.5, -0.5)),
        "powerlaw": bl.powerlaw(1.0),
        "discrete-uniform": bl.discrete_uniform(1.0, Schedule.polynomial(1.0, 1.0)),
        "exponential": bl.exponential(Schedule.polynomial(1.0, -1.0)),
        "frechet": bl.frechet(Schedule.polynomial(1.0, 0.25)),
        "continuous-uniform": bl.continuous_uniform(1.0, Schedule.polynomial(1.0, 1.0)),
    }
    rng = np.random.default_rng(MASTER_SEED)
    bad_rows = []
    cells = 0
    for family, spec in specs.items():
        tol = tolerances[family]
        for n in (2, 10, 100, 1000):
            for t in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0):
                cells += 1
                q = CharFnQuery(t=t, n=n, tolerance=tol)
                value = char_fn(spec, q)
                res = char_fn_oracle(spec, q, rng=rng, mc_draws=10**5)
                ok = abs(value - res.value) <= 1.25 * tol and abs(
                    value - res.mc_value
                ) <= max(5.0 * res.mc_stderr, 2.0 * tol)
                if not ok:
                    bad_rows.append((family, n, t, abs(value - res.value)))
    assert bad_rows == [], bad_rows
    _report(8, f"{cells} grid cells, zero ok=false rows")


def test_criterion_09_cohen_cuny_boundedness():
    stats = {}
    for n_terms in (100, 1000, 10000):
        config = bl.ExperimentConfig(
            spec=bl.exponential(1.0),
            d=Schedule.constant(1.0),
            n_terms=n_terms,
            master_seed=MASTER_SEED,
            replicates=200,
            eta=1.0,
            h_max=10,
        )
        stats[n_terms] = np.array(
            [bl.cohen_cuny_statistic(config, r) for r in range(200)]
        )
    percentiles = [float(np.quantile(stats[n], 0.95)) for n in (100, 1000, 10000)]

    # stated form: no increasing trend of the three 95th percentiles
    tau_3 = kendalltau([100, 1000, 10000], percentiles, alternative="greater")
    assert tau_3.pvalue > 0.05

    # sharper guard: one-sided Kendall over all (N, statistic) pairs
    ns = np.repeat([100, 1000, 10000], 200)
    values = np.concatenate([stats[100], stats[1000], stats[10000]])
    tau_all = kendalltau(ns, values, alternative="greater")
    assert tau_all.pvalue > 0.05
    _report(
        9,
        "95th percentiles " + ", ".join(f"{p:.3f}" for p in percentiles)
        + f"; trend p = {tau_all.pvalue:.3f}",
    )


def test_criterion_10_determinism(tmp_path):
    pairs = []
    for tag, argv in (
        ("table1", ["table1", "--seed", "12345"]),
        ("bounds", ["bounds", "--check", "vdc", "--h", "1..10", "--seed", "12345"]),
        (
            "discrepancy",
            ["discrepancy", "--n", "300", "--replicates", "2", "--seed", "12345"],
        ),
    ):
        outputs = []
        for run in ("a", "b"):
            out = tmp_path / f"{tag}_{run}"
            assert main(argv + ["--out-dir", str(out)]) == 0
            blobs = {
                p.name: p.read_bytes()
                for p in sorted(out.iterdir())
                if p.suffix == ".csv"
            }
            outputs.append(blobs)
        assert outputs[0] == outputs[1], f"{tag} differs between runs"
        pairs.append(tag)
    _report(10, "byte-identical reruns: " + ", ".join(pairs))
