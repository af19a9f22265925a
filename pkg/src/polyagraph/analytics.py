"""Closed-form laws of the urn-driven threshold graph.

For a graph on n nodes the degree of node i is i*Z_i + (universal nodes
after i), which splits every probability into a Z_i = 1 branch and a
Z_i = 0 branch of the exchangeable draw process.  This module evaluates the
resulting exact expressions:

* the degree pmf, whose support is {0..n} when 2i <= n and otherwise
  {0..n-i} union {i..n}, with both branch terms added where they overlap;
* the degree mean n*rho (the same for every node) and the closed-form degree
  variance;
* the distance law over the attainable values {0, 1, 2, inf};
* the expected decay centrality sum_j alpha^d(i,j), with alpha^inf = 0.

All Gamma ratios go through the shared log-gamma kernel.  Binomial
coefficients are evaluated through the same kernel so the whole pmf lives in
log space until the final exponentiation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._numeric import log_binomial, log_gamma
from .graph import ThresholdGraph
from .urn import UrnParams

__all__ = [
    "DegreeDistribution",
    "DistanceDistribution",
    "CentralityConfig",
    "expected_degree",
    "degree_support",
    "degree_pmf",
    "degree_variance",
    "distance_pmf",
    "expected_decay_centrality",
    "empirical_decay_centrality",
    "rising_factorial",
]


def _check_node(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"node index {i} out of range 1..{n}")


@dataclass(frozen=True)
class CentralityConfig:
    """Decay parameter for the centrality score; 1/2 is the standard choice."""

    alpha: float = 0.5

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha!r}")


@dataclass(frozen=True)
class DegreeDistribution:
    """Exact degree law of one node at a given horizon."""

    node: int
    horizon: int
    support: tuple[int, ...]
    pmf: dict[int, float]
    mean: float
    variance: float

    def moment_mean(self) -> float:
        """Mean recomputed from the pmf (cross-check against ``mean``)."""
        return math.fsum(k * p for k, p in self.pmf.items())

    def moment_variance(self) -> float:
        mu = self.moment_mean()
        return math.fsum((k - mu) ** 2 * p for k, p in self.pmf.items())


@dataclass(frozen=True)
class DistanceDistribution:
    """Distance law for a node pair; zero mass on inapplicable values."""

    i: int
    j: int
    probabilities: dict[float, float]

    def p(self, value: float) -> float:
        return self.probabilities[value]


def expected_degree(params: UrnParams, n: int, i: int) -> float:
    """Expected degree of node i: n * rho, independent of i."""
    _check_node(i, n)
    return n * params.rho


def degree_support(n: int, i: int) -> tuple[int, ...]:
    """Attainable degrees of node i: all of 0..n when 2i <= n, otherwise the
    isolated branch 0..n-i together with the universal branch i..n."""
    _check_node(i, n)
    if 2 * i <= n:
        return tuple(range(n + 1))
    return tuple(range(0, n - i + 1)) + tuple(range(i, n + 1))


def degree_pmf(params: UrnParams, n: int, i: int) -> DegreeDistribution:
    """Exact degree distribution of node i.

    P(deg = k) combines the isolated branch C(n-i, k) * g(k) for k <= n-i
    with the universal branch C(n-i, k-i) * g(k-i+1) for k >= i, where g is
    the Gamma-ratio kernel of the draw process at horizon n-i+1; both terms
    are summed where the branches overlap.
    """
    _check_node(i, n)
    rho, delta = params.rho, params.delta
    a = rho / delta
    b = (1.0 - rho) / delta
    m = n - i + 1
    log_norm = log_gamma(1.0 / delta) - log_gamma(a) - log_gamma(b) - log_gamma(1.0 / delta + m)

    def term(choose_k: int, g_arg: int) -> float:
        lb = log_binomial(n - i, choose_k)
        if lb == -math.inf:
            return 0.0
        return math.exp(lb + log_gamma(a + g_arg) + log_gamma(b + m - g_arg) + log_norm)

    pmf: dict[int, float] = {}
    for k in degree_support(n, i):
        p = 0.0
        if k <= n - i:
            p += term(k, k)
        if k >= i:
            p += term(k - i, k - i + 1)
        pmf[k] = p
    return DegreeDistribution(
        node=i,
        horizon=n,
        support=tuple(pmf),
        pmf=pmf,
        mean=n * rho,
        variance=degree_variance(params, n, i),
    )


def degree_variance(params: UrnParams, n: int, i: int) -> float:
    """Closed-form variance of the degree of node i."""
    _check_node(i, n)
    rho, delta = params.rho, params.delta
    tail = n - i
    bb_second_moment = tail * rho * (tail * (delta + rho) + 1.0 - rho) / (1.0 + delta)
    second_moment = (
        (1.0 + 2.0 * i / (1.0 / delta + tail)) * bb_second_moment
        + i * i * rho
        + 2.0 * i * rho * rho * tail / (1.0 + n * delta - i * delta)
    )
    return second_moment - (n * rho) ** 2


def _prob_no_later_universal(params: UrnParams, n: int, m: int) -> float:
    """P(draws m..n are all black) = prod_{s=0}^{n-m} (1-rho+s*delta)/(1+s*delta)."""
    rho, delta = params.rho, params.delta
    p = 1.0
    for s in range(n - m + 1):
        p *= (1.0 - rho + s * delta) / (1.0 + s * delta)
    return p


def distance_pmf(params: UrnParams, n: int, i: int, j: int) -> DistanceDistribution:
    """Exact distance law for the pair (i, j).

    Same node: distance 0 with probability rho (self-loop), inf otherwise.
    Distinct nodes: distance 1 with probability rho; unreachable iff no draw
    from max(i,j) on is red; distance 2 carries the remaining mass.
    """
    _check_node(i, n)
    _check_node(j, n)
    rho = params.rho
    if i == j:
        probs = {0.0: rho, 1.0: 0.0, 2.0: 0.0, math.inf: 1.0 - rho}
    else:
        p_inf = _prob_no_later_universal(params, n, max(i, j))
        probs = {0.0: 0.0, 1.0: rho, 2.0: 1.0 - rho - p_inf, math.inf: p_inf}
    return DistanceDistribution(i=i, j=j, probabilities=probs)


def expected_decay_centrality(
    params: UrnParams, n: int, i: int, cfg: CentralityConfig = CentralityConfig()
) -> float:
    """Expected decay centrality E(sum_j alpha^d(i,j)) of node i.

    Built from the distance law: the self term contributes rho, and each
    other node j contributes alpha*rho + alpha^2 * P(d(i,j) = 2).
    """
    _check_node(i, n)
    alpha = cfg.alpha
    rho = params.rho
    total = rho
    for j in range(1, n + 1):
        if j == i:
            continue
        p_two = distance_pmf(params, n, i, j).p(2.0)
        total += alpha * rho + alpha * alpha * p_two
    return total


def empirical_decay_centrality(
    g: ThresholdGraph, i: int, cfg: CentralityConfig = CentralityConfig()
) -> float:
    """Realized decay centrality sum_j alpha^d(i,j) on one graph, with
    alpha^inf = 0."""
    g._check_index(i)
    alpha = cfg.alpha
    return math.fsum(alpha ** g.distance(i, j) for j in range(1, g.n + 1))


def rising_factorial(x: float, m: int) -> float:
    """x (x+1) ... (x+m-1); the empty product is 1."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    p = 1.0
    for k in range(m):
        p *= x + k
    return p
