"""Internal numeric kernels shared across the package.

Every Gamma/Beta ratio in the exact laws is evaluated through the log-gamma
kernel below and accumulated in log space; exponentiation happens once, at
the end.  Arguments like 1/delta + n overflow a direct Gamma for small delta,
log space does not.
"""

from __future__ import annotations

import numpy as np
from scipy.special import gammaln as _gammaln


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x), x > 0.  Relative accuracy better than 1e-13
    on (0, 1e4); not part of the public API."""
    if not x > 0:
        raise ValueError(f"log_gamma needs x > 0, got {x!r}")
    return float(_gammaln(x))


def log_beta(x: float, y: float) -> float:
    return log_gamma(x) + log_gamma(y) - log_gamma(x + y)


def log_binomial(n: int, k: int) -> float:
    """log of C(n, k); -inf outside 0 <= k <= n."""
    if k < 0 or k > n:
        return float("-inf")
    return log_gamma(n + 1) - log_gamma(k + 1) - log_gamma(n - k + 1)


class CompensatedSum:
    """Neumaier-compensated running sum of scalars or fixed-shape vectors.

    Keeps 2^n-term enumeration sums well inside a 1e-12 tolerance budget and
    makes the result independent of summation order at that scale.
    """

    __slots__ = ("_sum", "_comp")

    def __init__(self):
        self._sum = None
        self._comp = None

    def add(self, value) -> None:
        v = np.asarray(value, dtype=float)
        if self._sum is None:
            self._sum = np.zeros_like(v)
            self._comp = np.zeros_like(v)
        t = self._sum + v
        swap = np.abs(self._sum) >= np.abs(v)
        self._comp = self._comp + np.where(swap, (self._sum - t) + v, (v - t) + self._sum)
        self._sum = t

    @property
    def value(self):
        if self._sum is None:
            return 0.0
        total = self._sum + self._comp
        if total.ndim == 0:
            return float(total)
        return total
