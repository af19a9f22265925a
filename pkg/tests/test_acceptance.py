"""Acceptance suite: every criterion at its stated tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to see one pass line per
criterion (pytest itself reports failures).  Statistical criteria are seeded
and therefore deterministic; the Kolmogorov-Smirnov check is documented as
flaky-tolerant and is rerun once on failure with a fresh seed.
"""

import itertools
import math
import time

import numpy as np
import pytest
from scipy import stats

from polyagraph import (
    FiniteMemoryParams,
    UrnParams,
    averaging_matrix,
    build_graph,
    degree_pmf,
    degree_variance,
    expected_decay_centrality,
    expected_stationary_exact,
    finite_memory_joint_pmf,
    iterate,
    laplacian,
    memory_sweep,
    opinion_preset,
    polya_joint_pmf,
    sample_connected_graph,
    sample_polya,
    spectrum,
    verify_eigenpairs,
)
from polyagraph.oracle import oracle_centrality, oracle_degree_pmf
from polyagraph.rng import stream

GRID = (UrnParams(5, 5, 2), UrnParams(1, 1, 1), UrnParams(1, 9, 5))
REF = UrnParams(5, 5, 2)


def all_vectors(n):
    return itertools.product((0, 1), repeat=n)


def report(number, message):
    print(f"\n[PASS] criterion {number}: {message}")


def test_criterion_01_degree_pmf_matches_oracle():
    start = time.perf_counter()
    worst = 0.0
    for params in GRID:
        for n in (4, 8, 12):
            for i in range(1, n + 1):
                closed = degree_pmf(params, n, i).pmf
                brute = oracle_degree_pmf(params, n, i)
                keys = set(closed) | set(brute)
                worst = max(
                    worst,
                    max(abs(closed.get(k, 0.0) - brute.get(k, 0.0)) for k in keys),
                )
    elapsed = time.perf_counter() - start
    assert worst < 1e-10
    assert elapsed < 5.0
    report(1, f"degree pmf vs enumeration, max |diff| = {worst:.2e} in {elapsed:.2f}s")


def test_criterion_02_mean_and_variance():
    worst_mean = worst_var = 0.0
    for params in GRID:
        for n in (4, 8, 12):
            for i in range(1, n + 1):
                dist = degree_pmf(params, n, i)
                worst_mean = max(worst_mean, abs(dist.moment_mean() - n * params.rho))
                brute = oracle_degree_pmf(params, n, i)
                mu = math.fsum(k * p for k, p in brute.items())
                var = math.fsum((k - mu) ** 2 * p for k, p in brute.items())
                worst_var = max(worst_var, abs(dist.variance - var))
    assert worst_mean < 1e-10
    assert worst_var < 1e-8
    # spot value at (rho, delta, n, i) = (0.5, 0.2, 2, 1): the 4-term
    # enumeration gives exactly 7/12 = 0.58333...
    spot = degree_variance(UrnParams.from_proportions(0.5, 0.2), 2, 1)
    assert abs(spot - 7 / 12) < 1e-8
    report(2, f"pmf mean error {worst_mean:.2e}, variance vs oracle {worst_var:.2e}, spot = {spot:.7f}")


def test_criterion_03_expected_decay_centrality():
    worst = 0.0
    for params in GRID:
        for n in range(1, 11):
            for i in range(1, n + 1):
                closed = expected_decay_centrality(params, n, i)
                worst = max(worst, abs(closed - oracle_centrality(params, n, i)))
    assert worst < 1e-10
    spot = expected_decay_centrality(UrnParams.from_proportions(0.5, 0.2), 2, 1)
    assert spot == pytest.approx(0.75, abs=1e-12)
    report(3, f"centrality vs BFS enumeration (n <= 10, all i), max |diff| = {worst:.2e}")


def test_criterion_04_spectrum_theorem():
    start = time.perf_counter()
    rng = stream(404)
    failures = 0
    for _ in range(1000):
        z = tuple(int(b) for b in rng.integers(0, 2, size=50))
        failures += len(verify_eigenpairs(build_graph(z)).failures())
    assert failures == 0
    worst = 0.0
    for _ in range(60):
        n = int(rng.integers(1, 31))
        z = tuple(int(b) for b in rng.integers(0, 2, size=n))
        g = build_graph(z)
        numeric = np.sort(np.linalg.eigvalsh(laplacian(g).astype(float)))
        worst = max(worst, float(np.max(np.abs(numeric - np.array(spectrum(g), dtype=float)))))
    elapsed = time.perf_counter() - start
    assert worst < 1e-8
    assert elapsed < 10.0
    report(4, f"1000 exact eigenpair runs, eigensolver multiset diff {worst:.2e}, {elapsed:.2f}s")


def test_criterion_05_consensus_histogram_reproduction():
    start = time.perf_counter()
    n, runs, t = 10, 200, 100
    x0 = opinion_preset("paper-n10", n)
    snapshots = np.empty(runs)
    for r in range(runs):
        g = sample_connected_graph(REF, n, seed=505, stream_index=r)
        sys_ = averaging_matrix(g)
        x = x0.copy()
        for _ in range(t):
            x = sys_.W @ x
        snapshots[r] = x.mean()
    theoretical = float(expected_stationary_exact(REF, n).pi @ x0)  # 512-term enumeration
    se = snapshots.std(ddof=1) / math.sqrt(runs)
    deviation = abs(snapshots.mean() - theoretical)
    elapsed = time.perf_counter() - start
    assert deviation < 3 * se
    assert elapsed < 5.0
    report(
        5,
        f"200-run mean {snapshots.mean():.6f} vs exact {theoretical:.6f} "
        f"({deviation / se:.2f} SE), {elapsed:.2f}s",
    )


def test_criterion_06_convergence_at_n100():
    start = time.perf_counter()
    n = 100
    rng = stream(606)
    worst_steps = 0
    for r in range(100):
        g = sample_connected_graph(REF, n, seed=606, stream_index=r)
        sys_ = averaging_matrix(g)
        x0 = rng.uniform(0, 10, size=n)
        traj = iterate(sys_, x0, t_max=10_000, tol=1e-10, record=False)
        assert traj.converged, f"run {r} did not converge"
        assert np.max(np.abs(traj.final - traj.limit)) < 1e-10
        worst_steps = max(worst_steps, traj.converged_at)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    report(6, f"100 realizations at n = 100 converged (worst {worst_steps} steps), {elapsed:.2f}s")


def test_criterion_07_finite_memory_reduction():
    worst = 0.0
    for n in range(1, 11):
        for memory in (n, n + 3):
            fm = FiniteMemoryParams(REF, memory)
            for z in all_vectors(n):
                worst = max(worst, abs(finite_memory_joint_pmf(fm, z) - polya_joint_pmf(REF, z)))
    assert worst < 1e-12
    n = 10
    points = memory_sweep(
        REF, n, deltas=(0.2, 1.0, 10.0), memories=(n,), runs=1000,
        x0=opinion_preset("polarized", n), seed=707,
    )
    worst_dev = 0.0
    for p in points:
        combined = math.hypot(p.std_error, p.baseline_se)
        worst_dev = max(worst_dev, abs(p.value - p.baseline) / combined)
    assert worst_dev < 3.0
    report(7, f"M >= n pmf diff {worst:.2e}; sweep at M = n within {worst_dev:.2f} combined SE")


def test_criterion_08_exchangeability_and_normalization():
    rng = stream(808)
    worst_perm = worst_norm = 0.0
    for params in (REF, UrnParams(1, 9, 5)):
        for n in range(2, 11):
            if n <= 5:
                cases = ((z, sigma) for z in all_vectors(n) for sigma in itertools.permutations(range(n)))
            else:
                cases = (
                    (
                        tuple(int(b) for b in rng.integers(0, 2, size=n)),
                        tuple(int(s) for s in rng.permutation(n)),
                    )
                    for _ in range(30)
                )
            for z, sigma in cases:
                permuted = tuple(z[s] for s in sigma)
                worst_perm = max(
                    worst_perm, abs(polya_joint_pmf(params, z) - polya_joint_pmf(params, permuted))
                )
        for n in range(1, 11):
            total = math.fsum(polya_joint_pmf(params, z) for z in all_vectors(n))
            worst_norm = max(worst_norm, abs(total - 1.0))
    assert worst_perm < 1e-12
    assert worst_norm < 1e-12
    report(8, f"permutation diff {worst_perm:.2e}, normalization error {worst_norm:.2e}")


def test_criterion_09_beta_trace_limit_sanity():
    # seeded statistical test; documented flaky-tolerant, rerun once on failure
    n, samples = 2000, 2000

    def ks_pvalue(master_seed):
        means = np.empty(samples)
        for r in range(samples):
            z = sample_polya(REF, n, seed=master_seed, stream_index=r)
            means[r] = sum(z.draws) / n
        return stats.kstest(means, stats.beta(2.5, 2.5).cdf).pvalue

    p = ks_pvalue(909)
    if p < 0.01:
        p = ks_pvalue(910)
    assert p >= 0.01
    report(9, f"KS test of trace means vs Beta(2.5, 2.5): p = {p:.3f}")


def test_criterion_10_chu_vandermonde():
    from polyagraph import rising_factorial

    rng = stream(1010)
    worst = 0.0
    for _ in range(200):
        s = float(rng.uniform(0.01, 10.0))
        t = float(rng.uniform(0.01, 10.0))
        m = int(rng.integers(0, 9))
        lhs = rising_factorial(s + t, m)
        rhs = math.fsum(
            math.comb(m, k) * rising_factorial(s, k) * rising_factorial(t, m - k)
            for k in range(m + 1)
        )
        worst = max(worst, abs(rhs - lhs) / abs(lhs))
    assert worst < 1e-9
    report(10, f"identity over 200 random (s, t, m), max relative error = {worst:.2e}")
