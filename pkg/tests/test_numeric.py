import math

import numpy as np
import pytest

from polyagraph._numeric import CompensatedSum, log_beta, log_binomial, log_gamma


def test_log_gamma_accuracy_against_stdlib():
    # independent C implementation; demand <= 1e-13 relative agreement on (0, 1e4)
    rng = np.random.default_rng(7)
    xs = np.concatenate([rng.uniform(1e-6, 1.0, 200), rng.uniform(1.0, 1e4, 200), [0.5, 1.0, 2.0, 9999.5]])
    for x in xs:
        ours = log_gamma(float(x))
        ref = math.lgamma(float(x))
        scale = max(1.0, abs(ref))
        assert abs(ours - ref) / scale < 1e-13


def test_log_gamma_rejects_nonpositive():
    with pytest.raises(ValueError):
        log_gamma(0.0)
    with pytest.raises(ValueError):
        log_gamma(-3.5)


def test_log_binomial_matches_exact_integers():
    # exact 64-bit binomials as the cross-check for n <= 60
    for n in range(0, 61, 5):
        for k in range(n + 1):
            exact = math.comb(n, k)
            assert math.exp(log_binomial(n, k)) == pytest.approx(exact, rel=1e-12)
    assert log_binomial(5, -1) == -math.inf
    assert log_binomial(5, 6) == -math.inf


def test_log_beta_consistency():
    assert log_beta(1.0, 1.0) == pytest.approx(0.0, abs=1e-15)
    assert math.exp(log_beta(2.5, 2.5)) == pytest.approx(math.gamma(2.5) ** 2 / math.gamma(5.0), rel=1e-13)


def test_compensated_sum_scalar():
    acc = CompensatedSum()
    for v in (1e16, 1.0, -1e16):
        acc.add(v)
    assert acc.value == 1.0


def test_compensated_sum_vector_and_empty():
    acc = CompensatedSum()
    acc.add(np.array([1e16, 1.0]))
    acc.add(np.array([1.0, 1.0]))
    acc.add(np.array([-1e16, -2.0]))
    assert np.array_equal(acc.value, np.array([1.0, 0.0]))
    assert CompensatedSum().value == 0.0
