"""Command-line driver for generation, analytics and experiments.

Subcommands: generate, degree-dist, centrality, spectrum, consensus, pi-e,
histogram, memory-sweep, validate.  Urn parameters are given either as ball
counts (--R --B --delta-balls) or as proportions (--rho --delta); the two
flags --delta-balls (the reinforcement ball count) and --delta (the
reinforcement ratio) are deliberately distinct.  Relative output paths land
in $POLYAGRAPH_OUT_DIR when set, else the current directory.

Exit codes: 0 success, 2 configuration error, 3 enumeration-guard refusal,
4 validation failure, 5 I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import io
from .analytics import (
    CentralityConfig,
    degree_pmf,
    empirical_decay_centrality,
    expected_decay_centrality,
)
from .consensus import (
    averaging_matrix,
    expected_stationary_exact,
    expected_stationary_mc,
    iterate,
    memory_sweep,
    opinion_preset,
    sample_connected_graph,
)
from .graph import build_graph
from .oracle import EnumerationLimitError, run_validation_suite
from .spectral import spectrum, verify_eigenpairs
from .urn import FiniteMemoryParams, UrnParams, sample_finite_memory, sample_polya

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_GUARD = 3
EXIT_VALIDATION = 4
EXIT_IO = 5


class ConfigError(Exception):
    pass


def _out_path(name: str) -> Path:
    p = Path(name)
    if p.is_absolute():
        return p
    return Path(os.environ.get("POLYAGRAPH_OUT_DIR", ".")) / p


def _add_urn_args(p: argparse.ArgumentParser, memory: bool = True) -> None:
    g = p.add_argument_group("urn parameters (one style only)")
    g.add_argument("--R", type=float, help="initial red ball count")
    g.add_argument("--B", type=float, help="initial black ball count")
    g.add_argument("--delta-balls", dest="delta_balls", type=float,
                   help="reinforcement ball count added per draw")
    g.add_argument("--rho", type=float, help="initial red proportion")
    g.add_argument("--delta", type=float, help="reinforcement ratio delta")
    if memory:
        g.add_argument("--memory", type=int, default=None,
                       help="finite memory length M (default: infinite memory)")


def _urn_params(args) -> UrnParams:
    counts = (args.R, args.B, args.delta_balls)
    props = (args.rho, args.delta)
    have_counts = all(v is not None for v in counts)
    have_props = all(v is not None for v in props)
    if have_counts and not any(v is not None for v in props):
        return UrnParams(args.R, args.B, args.delta_balls)
    if have_props and not any(v is not None for v in counts):
        return UrnParams.from_proportions(args.rho, args.delta)
    raise ConfigError(
        "provide exactly one parameter style: --R --B --delta-balls, or --rho --delta"
    )


def _law_params(args):
    params = _urn_params(args)
    memory = getattr(args, "memory", None)
    if memory is not None:
        return FiniteMemoryParams(params, memory)
    return params


def _parse_x0(source: str, n: int) -> np.ndarray:
    if source in ("paper-n10", "paper-n100", "polarized"):
        return opinion_preset(source, n)
    if source.startswith("@"):
        text = Path(source[1:]).read_text(encoding="utf-8")
        tokens = text.replace(",", " ").split()
    else:
        tokens = source.split(",")
    try:
        x = np.array([float(tok) for tok in tokens])
    except ValueError as exc:
        raise ConfigError(f"cannot parse x0: {exc}") from exc
    if x.shape != (n,):
        raise ConfigError(f"x0 must have {n} entries, got {len(x)}")
    return x


def _parse_draws(text: str):
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"cannot parse draws: {exc}") from exc


def _realization(args):
    """Graph from --draws, or sampled from the urn flags."""
    if args.draws is not None:
        return build_graph(_parse_draws(args.draws))
    if args.n is None or args.seed is None:
        raise ConfigError("need either --draws or (--n and --seed with urn parameters)")
    law = _law_params(args)
    if args.force_last_universal:
        return sample_connected_graph(law, args.n, args.seed)
    if isinstance(law, FiniteMemoryParams):
        return build_graph(sample_finite_memory(law, args.n, args.seed))
    return build_graph(sample_polya(law, args.n, args.seed))


# --------------------------------------------------------------------------
# subcommand handlers

def _cmd_generate(args) -> int:
    law = _law_params(args)
    params = law.base if isinstance(law, FiniteMemoryParams) else law
    if args.force_last_universal:
        g = sample_connected_graph(law, args.n, args.seed)
    elif isinstance(law, FiniteMemoryParams):
        g = build_graph(sample_finite_memory(law, args.n, args.seed))
    else:
        g = build_graph(sample_polya(law, args.n, args.seed))
    json_path = _out_path(args.json_out)
    edges_path = _out_path(args.edges_out)
    io.write_json(json_path, io.graph_json_payload(g, params=params, seed=args.seed, memory=args.memory))
    io.write_edge_csv(edges_path, g)
    print(f"graph with n = {g.n}, {len(g.edge_set())} edges -> {json_path}, {edges_path}")
    return EXIT_OK


def _cmd_degree_dist(args) -> int:
    params = _urn_params(args)
    dist = degree_pmf(params, args.n, args.node)
    path = _out_path(args.out)
    io.write_distribution_csv(path, dist, params)
    print(f"deg(V_{args.node}) at n = {args.n}: mean = {dist.mean:.15g}, variance = {dist.variance:.15g}")
    print(f"pmf -> {path}")
    return EXIT_OK


def _cmd_centrality(args) -> int:
    cfg = CentralityConfig(alpha=args.alpha)
    if args.mode in ("expected", "both"):
        if args.n is None:
            raise ConfigError("expected centrality needs --n")
        params = _urn_params(args)
        value = expected_decay_centrality(params, args.n, args.node, cfg)
        print(f"expected decay centrality of V_{args.node}: {value:.15g}")
    if args.mode in ("empirical", "both"):
        g = _realization(args)
        value = empirical_decay_centrality(g, args.node, cfg)
        print(f"empirical decay centrality of V_{args.node} on draws {g.draws}: {value:.15g}")
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    g = _realization(args)
    eig = spectrum(g)
    path = _out_path(args.out)
    io.write_spectrum_csv(path, eig)
    report = verify_eigenpairs(g)
    status = "all exact" if report.all_passed else f"{len(report.failures())} FAILED"
    print(f"spectrum of n = {g.n} realization -> {path}")
    print(f"eigenpair verification: {status}")
    return EXIT_OK if report.all_passed else EXIT_VALIDATION


def _cmd_consensus(args) -> int:
    g = _realization(args)
    sys_ = averaging_matrix(g)
    x0 = _parse_x0(args.x0, g.n)
    traj = iterate(sys_, x0, t_max=args.t_max, tol=args.tolerance, record=True)
    path = _out_path(args.out)
    io.write_trajectory_csv(path, traj, metadata=[f"draws = {','.join(map(str, g.draws))}"])
    print(f"trajectory ({len(traj.states)} states) -> {path}")
    print(f"consensus limit pi* . x0 = {traj.limit:.15g}")
    if traj.converged:
        print(f"converged at t = {traj.converged_at} (tolerance {args.tolerance:g})")
    else:
        print(f"WARNING: not converged within t_max = {args.t_max}")
    return EXIT_OK


def _cmd_pi_e(args) -> int:
    law = _law_params(args)
    if args.mode == "exact":
        est = expected_stationary_exact(law, args.n)
    else:
        est = expected_stationary_mc(law, args.n, runs=args.runs, seed=args.seed)
    entries = ", ".join(f"{v:.6f}" for v in est.pi)
    print(f"pi_E ({est.mode}, {est.urn_mode}) = ({entries})")
    if args.out is not None:
        header = ["i", "pi_e"] + ([] if est.std_error is None else ["std_error"])
        rows = [
            (i + 1, est.pi[i], *(() if est.std_error is None else (est.std_error[i],)))
            for i in range(args.n)
        ]
        io.emit_table(_out_path(args.out), header, rows, fmt=args.format)
        print(f"table -> {_out_path(args.out)}")
    return EXIT_OK


def _cmd_histogram(args) -> int:
    law = _law_params(args)
    x0 = _parse_x0(args.x0, args.n)
    snapshots = np.empty(args.runs)
    exact_limits = np.empty(args.runs)
    for r in range(args.runs):
        g = sample_connected_graph(law, args.n, args.seed, stream_index=r)
        sys_ = averaging_matrix(g)
        x = np.array(x0)
        for _ in range(args.t):
            x = sys_.W @ x
        snapshots[r] = x.mean()
        exact_limits[r] = float(sys_.pi_star @ x0)
    try:
        theoretical = float(expected_stationary_exact(law, args.n).pi @ x0)
        theory_mode = "exact-enumeration"
    except EnumerationLimitError:
        theoretical = float(
            expected_stationary_mc(law, args.n, runs=args.theory_runs, seed=args.seed + 1).pi @ x0
        )
        theory_mode = f"monte-carlo({args.theory_runs} runs)"
    path = _out_path(args.out)
    io.write_histogram_csv(
        path,
        snapshots,
        sample_mean=float(snapshots.mean()),
        theoretical=theoretical,
        metadata=[
            f"n = {args.n}",
            f"runs = {args.runs}",
            f"t = {args.t}",
            f"seed = {args.seed}",
            f"theory_mode = {theory_mode}",
            f"mean_exact_limit = {io.format_value(float(exact_limits.mean()))}",
        ],
    )
    print(f"{args.runs} consensus values at t = {args.t} -> {path}")
    print(f"sample mean of snapshots      = {snapshots.mean():.15g}")
    print(f"sample mean of exact limits   = {exact_limits.mean():.15g}")
    print(f"theoretical pi_E . x0         = {theoretical:.15g}")
    return EXIT_OK


def _cmd_memory_sweep(args) -> int:
    params = _urn_params(args)
    deltas = [float(tok) for tok in args.deltas.split(",")]
    memories = [int(tok) for tok in args.memories.split(",")]
    x0 = _parse_x0(args.x0, args.n)
    points = memory_sweep(params, args.n, deltas, memories, runs=args.runs, x0=x0, seed=args.seed)
    path = _out_path(args.out)
    io.write_sweep_csv(
        path,
        points,
        metadata=[f"n = {args.n}", f"runs = {args.runs}", f"seed = {args.seed}", f"rho = {params.rho:.15g}"],
    )
    print(f"{len(points)} sweep points -> {path}")
    return EXIT_OK


def _cmd_validate(args) -> int:
    checks = run_validation_suite()
    width = max(len(c.name) for c in checks)
    failed = 0
    for c in checks:
        mark = "PASS" if c.passed else "FAIL"
        failed += 0 if c.passed else 1
        print(f"{mark}  {c.name:<{width}}  {c.detail}")
    if failed:
        print(f"{failed} of {len(checks)} checks failed")
        return EXIT_VALIDATION
    print(f"all {len(checks)} checks passed")
    return EXIT_OK


# --------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyagraph",
        description="Urn-driven random threshold graphs: generation, exact laws, spectra, consensus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="sample a realization; emit graph JSON and edge CSV")
    _add_urn_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--force-last-universal", action=argparse.BooleanOptionalAction, default=False)
    p.add_argument("--json-out", default="graph.json")
    p.add_argument("--edges-out", default="edges.csv")
    p.set_defaults(handler=_cmd_generate)

    p = sub.add_parser("degree-dist", help="exact degree pmf of one node; emit CSV")
    _add_urn_args(p, memory=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--node", type=int, required=True, help="node index i (1-based)")
    p.add_argument("--out", default="degree_dist.csv")
    p.set_defaults(handler=_cmd_degree_dist)

    p = sub.add_parser("centrality", help="expected and/or empirical decay centrality")
    _add_urn_args(p, memory=False)
    p.add_argument("--n", type=int)
    p.add_argument("--node", type=int, required=True)
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--mode", choices=("expected", "empirical", "both"), default="expected")
    p.add_argument("--draws", help="comma-separated 0/1 creation sequence")
    p.add_argument("--seed", type=int)
    p.add_argument("--force-last-universal", action=argparse.BooleanOptionalAction, default=False)
    p.set_defaults(handler=_cmd_centrality)

    p = sub.add_parser("spectrum", help="closed-form Laplacian spectrum + eigenpair verification")
    _add_urn_args(p)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--draws")
    p.add_argument("--force-last-universal", action=argparse.BooleanOptionalAction, default=False)
    p.add_argument("--out", default="spectrum.csv")
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("consensus", help="averaging trajectory on one realization")
    _add_urn_args(p)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--draws")
    p.add_argument("--x0", required=True, help="comma list, @file, or preset name")
    p.add_argument("--t-max", dest="t_max", type=int, default=10_000)
    p.add_argument("--tolerance", type=float, default=1e-10)
    p.add_argument("--force-last-universal", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--out", default="trajectory.csv")
    p.set_defaults(handler=_cmd_consensus)

    p = sub.add_parser("pi-e", help="expected consensus weights (exact enumeration or Monte Carlo)")
    _add_urn_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("exact", "mc"), default="exact")
    p.add_argument("--runs", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=_cmd_pi_e)

    p = sub.add_parser("histogram", help="consensus values over independent seeded runs")
    _add_urn_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--runs", type=int, default=200)
    p.add_argument("--t", type=int, default=100)
    p.add_argument("--x0", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--theory-runs", dest="theory_runs", type=int, default=10_000,
                   help="Monte Carlo size for the reference value when n exceeds the enumeration guard")
    p.add_argument("--out", default="histogram.csv")
    p.set_defaults(handler=_cmd_histogram)

    p = sub.add_parser("memory-sweep", help="expected consensus vs memory length for several deltas")
    _add_urn_args(p, memory=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--deltas", required=True, help="comma list, e.g. 0.2,1,10")
    p.add_argument("--memories", required=True, help="comma list of memory lengths")
    p.add_argument("--runs", type=int, default=1000)
    p.add_argument("--x0", default="polarized")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="sweep.csv")
    p.set_defaults(handler=_cmd_memory_sweep)

    p = sub.add_parser("validate", help="run the oracle-equivalence suite; nonzero exit on failure")
    p.set_defaults(handler=_cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except EnumerationLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
