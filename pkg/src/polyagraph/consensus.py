"""Discrete-time averaging consensus on connected realizations.

Connectivity is enforced by construction throughout: samplers draw the first
n-1 indicators from the urn and pin the last one to 1, so the final node is
universal and every pair of nodes is within distance two of it.

Each node repeatedly replaces its opinion by the average of its own and its
neighbors' opinions.  In matrix form x(t) = W x(t-1), where
W_ij = (1 if i = j else z_{max(i,j)}) / N_i and N_i is one plus the neighbor
count of node i (self-loops do not enter N_i).  W is row-stochastic,
irreducible and aperiodic, satisfies the exact detailed balance
N_i W_ij = N_j W_ji, and has the unique stationary vector
pi*_i = N_i / sum_k N_k, so every trajectory converges to the scalar
pi* . x(0).

Averaging pi* over the urn law of the free draws gives the expected
consensus weights pi_E: the expected opinion vector converges to
(pi_E . x(0)) at every node.  pi_E is computed exactly by enumerating the
2^(n-1) free draw vectors (guarded) or estimated by seeded Monte Carlo with
one independent stream per run, merged by run index so scheduling cannot
change the estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._numeric import CompensatedSum
from .graph import ThresholdGraph, build_graph
from .oracle import MAX_ENUMERATION_HORIZON, EnumerationLimitError, _gray_vectors, _joint_pmf_fn
from .urn import (
    FiniteMemoryParams,
    UrnParams,
    sample_finite_memory,
    sample_polya,
)

__all__ = [
    "ConsensusSystem",
    "Trajectory",
    "ExpectedStationary",
    "SweepPoint",
    "sample_connected_graph",
    "averaging_matrix",
    "stationary",
    "iterate",
    "expected_stationary_exact",
    "expected_stationary_mc",
    "expected_consensus_value",
    "memory_sweep",
    "opinion_preset",
    "X0_REFERENCE_10",
]

# reference 10-node initial opinions behind the bundled experiment presets
X0_REFERENCE_10 = (0.1, 0.6, 0.3, 1.0, 0.5, 3.0, 10.0, 2.0, 9.0, 0.2)


@dataclass(frozen=True, eq=False)
class ConsensusSystem:
    """Averaging matrix W with its neighbor counts and stationary vector.

    ``neighbor_counts[i]`` is the integer N_i; W rows are N_i-ths of the
    0/1 numerator matrix, so N_i * W_ij = N_j * W_ji holds exactly at the
    integer level.  Immutable after construction.
    """

    graph: ThresholdGraph
    W: np.ndarray
    neighbor_counts: np.ndarray
    pi_star: np.ndarray


@dataclass(frozen=True, eq=False)
class Trajectory:
    """States of one averaging run.

    ``states`` holds x(0), x(1), ... when recording was requested and None
    in streaming mode; ``converged_at`` is the first step at which every
    entry is within tolerance of the limit pi* . x(0), or None if that never
    happened within the step budget.
    """

    states: tuple[np.ndarray, ...] | None
    converged_at: int | None
    limit: float
    final: np.ndarray

    @property
    def converged(self) -> bool:
        return self.converged_at is not None


@dataclass(frozen=True, eq=False)
class ExpectedStationary:
    """Expected consensus weights pi_E under the chosen urn law.

    ``std_error`` carries per-entry standard errors in Monte Carlo mode and
    is None in exact mode.
    """

    pi: np.ndarray
    mode: str
    std_error: np.ndarray | None
    urn_mode: str


@dataclass(frozen=True)
class SweepPoint:
    """One (delta, memory) cell of a memory sweep, with its infinite-memory
    baseline estimated from the same number of runs."""

    delta: float
    memory: int
    value: float
    std_error: float
    baseline: float
    baseline_se: float


def _neighbor_counts(draws: tuple[int, ...]) -> np.ndarray:
    z = np.asarray(draws, dtype=np.int64)
    n = len(z)
    suffix = np.cumsum(z[::-1])[::-1] - z
    return 1 + np.arange(n, dtype=np.int64) * z + suffix


def _urn_mode(params) -> str:
    if isinstance(params, FiniteMemoryParams):
        return f"finite-memory(M={params.memory})"
    return "infinite"


def _connected_draws(params, n: int, seed: int, stream_index: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return (1,)
    if isinstance(params, FiniteMemoryParams):
        head = sample_finite_memory(params, n - 1, seed, stream_index=stream_index)
    else:
        head = sample_polya(params, n - 1, seed, stream_index=stream_index)
    return head.draws + (1,)


def sample_connected_graph(params, n: int, seed: int, *, stream_index: int = 0) -> ThresholdGraph:
    """Sample a realization with the last node forced universal, matching the
    connected experimental protocol."""
    return build_graph(_connected_draws(params, n, seed, stream_index))


def averaging_matrix(g: ThresholdGraph) -> ConsensusSystem:
    """Build the averaging system for a connected realization.

    Rejects realizations whose last node is not universal: without it the
    graph may split into components and the consensus guarantees fail.
    """
    if g.draws[-1] != 1:
        raise ValueError(
            "averaging needs a connected realization: the last draw must be 1 "
            "(use sample_connected_graph)"
        )
    counts = _neighbor_counts(g.draws)
    numerator = g.adjacency().astype(float)
    np.fill_diagonal(numerator, 1.0)
    W = numerator / counts[:, None]
    pi_star = counts / counts.sum()
    return ConsensusSystem(graph=g, W=W, neighbor_counts=counts, pi_star=pi_star)


def stationary(sys: ConsensusSystem) -> np.ndarray:
    """The stationary vector pi*_i = N_i / sum_k N_k of W."""
    return sys.pi_star.copy()


def iterate(
    sys: ConsensusSystem,
    x0,
    t_max: int = 10_000,
    tol: float = 1e-10,
    record: bool = True,
) -> Trajectory:
    """Run x(t) = W x(t-1) until every entry is within ``tol`` of the known
    limit pi* . x(0), or until ``t_max`` steps have been taken.

    Convergence is detected against the closed-form limit rather than by
    successive differences, so slow mixing cannot fake convergence.
    Non-convergence is reported through ``converged_at = None``, never
    silently.  ``record=False`` keeps only the current state.
    """
    x = np.array(x0, dtype=float)
    if x.shape != (sys.graph.n,):
        raise ValueError(f"x0 must have length {sys.graph.n}, got shape {x.shape}")
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    limit = float(sys.pi_star @ x)
    states = [x.copy()] if record else None
    converged_at = None
    if np.max(np.abs(x - limit)) < tol:
        converged_at = 0
    else:
        for t in range(1, t_max + 1):
            x = sys.W @ x
            if record:
                states.append(x.copy())
            if np.max(np.abs(x - limit)) < tol:
                converged_at = t
                break
    return Trajectory(
        states=tuple(states) if record else None,
        converged_at=converged_at,
        limit=limit,
        final=x,
    )


def expected_stationary_exact(params, n: int, *, max_n: int = MAX_ENUMERATION_HORIZON) -> ExpectedStationary:
    """Exact pi_E by enumerating all free draw vectors.

    The weight of the realization (z_1 .. z_{n-1}, 1) is the joint law of
    the free n-1 draws, so the weights sum to one with nothing to
    renormalize.  Horizons beyond ``max_n`` (default 24, i.e. 2^23 terms)
    are refused; use :func:`expected_stationary_mc` for those.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > max_n:
        raise EnumerationLimitError(
            f"exact pi_E at n = {n} needs 2^{n - 1} terms (guard: n <= {max_n}); "
            "use expected_stationary_mc instead"
        )
    mode = _urn_mode(params)
    if n == 1:
        return ExpectedStationary(pi=np.array([1.0]), mode="exact-enumeration", std_error=None, urn_mode=mode)
    weight = _joint_pmf_fn(params)
    acc = CompensatedSum()
    for head in _gray_vectors(n - 1):
        counts = _neighbor_counts(head + (1,))
        acc.add(weight(head) * (counts / counts.sum()))
    return ExpectedStationary(pi=acc.value, mode="exact-enumeration", std_error=None, urn_mode=mode)


def _pi_star_samples(params, n: int, runs: int, seed: int, first_stream: int = 0) -> np.ndarray:
    samples = np.empty((runs, n))
    for r in range(runs):
        counts = _neighbor_counts(_connected_draws(params, n, seed, first_stream + r))
        samples[r] = counts / counts.sum()
    return samples


def expected_stationary_mc(params, n: int, runs: int, seed: int) -> ExpectedStationary:
    """Monte Carlo pi_E: mean of pi* over seeded sampled realizations.

    Run r draws from the (seed, r) stream, so the estimate is reproducible
    and independent of execution order.
    """
    if runs < 2:
        raise ValueError(f"need runs >= 2 for a standard error, got {runs}")
    samples = _pi_star_samples(params, n, runs, seed)
    return ExpectedStationary(
        pi=samples.mean(axis=0),
        mode="monte-carlo",
        std_error=samples.std(axis=0, ddof=1) / math.sqrt(runs),
        urn_mode=_urn_mode(params),
    )


def expected_consensus_value(
    params,
    n: int,
    x0,
    mode: str = "exact",
    *,
    runs: int = 1000,
    seed: int = 0,
    max_n: int = MAX_ENUMERATION_HORIZON,
) -> float:
    """The expected consensus limit pi_E . x(0) under the selected mode."""
    x = np.asarray(x0, dtype=float)
    if x.shape != (n,):
        raise ValueError(f"x0 must have length {n}, got shape {x.shape}")
    if mode == "exact":
        pi = expected_stationary_exact(params, n, max_n=max_n).pi
    elif mode == "mc":
        pi = expected_stationary_mc(params, n, runs=runs, seed=seed).pi
    else:
        raise ValueError(f"mode must be 'exact' or 'mc', got {mode!r}")
    return float(pi @ x)


def memory_sweep(
    base: UrnParams,
    n: int,
    deltas,
    memories,
    runs: int,
    x0,
    seed: int,
) -> list[SweepPoint]:
    """Monte Carlo expected consensus across (delta, memory) cells.

    For each reinforcement strength the infinite-memory baseline is estimated
    from ``runs`` fresh realizations, then each memory length gets its own
    ``runs`` finite-memory realizations.  Every cell uses a disjoint block of
    run streams derived from ``seed``, so the full table is reproducible.
    """
    memories = list(memories)
    deltas = list(deltas)
    if not memories:
        raise ValueError("need at least one memory length")
    if runs < 2:
        raise ValueError(f"need runs >= 2, got {runs}")
    x = np.asarray(x0, dtype=float)
    if x.shape != (n,):
        raise ValueError(f"x0 must have length {n}, got shape {x.shape}")
    points: list[SweepPoint] = []
    block = 0
    for d in deltas:
        params = UrnParams.from_proportions(base.rho, d)
        base_vals = _pi_star_samples(params, n, runs, seed, first_stream=block * runs) @ x
        block += 1
        baseline = float(base_vals.mean())
        baseline_se = float(base_vals.std(ddof=1) / math.sqrt(runs))
        for memory in memories:
            fm = FiniteMemoryParams(params, int(memory))
            vals = _pi_star_samples(fm, n, runs, seed, first_stream=block * runs) @ x
            block += 1
            points.append(
                SweepPoint(
                    delta=float(d),
                    memory=int(memory),
                    value=float(vals.mean()),
                    std_error=float(vals.std(ddof=1) / math.sqrt(runs)),
                    baseline=baseline,
                    baseline_se=baseline_se,
                )
            )
    return points


def opinion_preset(name: str, n: int) -> np.ndarray:
    """Named initial-opinion vectors.

    "paper-n10":  the reference 10-node experiment vector.
    "paper-n100": the same vector tiled to 100 nodes (x_{i+10k} = x_i).
    "polarized":  first half 0, second half 100.
    """
    if name == "paper-n10":
        if n != 10:
            raise ValueError(f"preset 'paper-n10' needs n = 10, got {n}")
        return np.array(X0_REFERENCE_10)
    if name == "paper-n100":
        if n != 100:
            raise ValueError(f"preset 'paper-n100' needs n = 100, got {n}")
        return np.tile(np.array(X0_REFERENCE_10), 10)
    if name == "polarized":
        x = np.full(n, 100.0)
        x[: n // 2] = 0.0
        return x
    raise ValueError(f"unknown preset {name!r}")
