"""Command-line surface: solve, census, verify, families, bounds, rall.

Every run prints a reproducibility header (package version, config
digest, seed) on stderr; results go to --output or stdout. Exit codes:
0 success, 1 a violation or counterexample was found, 2 usage or input
error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import __version__
from ._bits import bits
from .backend import ACTIVE_BACKEND
from .bounds import (
    bound_delta_corollary,
    bound_gamma_diam2,
    bound_half,
    bound_half_minus_eleventh,
    bound_total_dom_chain,
    bound_two_delta,
    greedy_chain_bound,
)
from .census import (
    COMPUTE_ALL,
    JobSpec,
    read_records,
    resume_to_file,
    rall_check,
    scan_stream,
    scan_to_file,
    verify_bounds,
)
from .errors import DomgameError
from .families import FAMILY_NAMES, family_build
from .graph6 import encode_graph6, parse_graph6
from .graphs import degree_stats, from_edges
from .solver import (
    DEFAULT_NODE_BUDGET,
    GameState,
    Player,
    domination_number,
    solve,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="domgame", description=__doc__)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    ap.add_argument("--output", default=None)
    ap.add_argument("--format", choices=("jsonl", "csv", "text"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact game values for one graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6")
    src.add_argument("--family", help="name[:param[,param]] e.g. cycle:5, h_graph:4,2")
    src.add_argument("--edges", help="file: first line n, then one 'u v' edge per line")
    p.add_argument("--partial", default=None,
                   help="dominated-set mask (int, 0x.. hex, or comma vertex list)")
    p.add_argument("--turn", choices=("d", "s"), default="d")
    p.add_argument("--prune", action="store_true")

    p = sub.add_parser("census", help="scan internal enumeration or a graph6 stream")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--internal", type=int)
    src.add_argument("--stream")
    p.add_argument("--diam2", action="store_true")
    p.add_argument("--min-delta", type=int, default=0)
    p.add_argument("--max-Delta", type=int, default=None)
    p.add_argument("--hamiltonian", action="store_true")
    p.add_argument("--compute", default="gamma,gamma_g,gamma_g_prime",
                   help="comma list from gamma,gamma_g,gamma_g_prime")
    p.add_argument("--checkpoint-interval", type=int, default=0)
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--resume", action="store_true")
    p.add_argument("--skip-bad", action="store_true")

    p = sub.add_parser("verify", help="re-check bounds over a records file")
    p.add_argument("--records", required=True)

    p = sub.add_parser("families", help="list or emit family graphs")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--list", action="store_true")
    g.add_argument("--emit", help="name[:param[,param]]")

    p = sub.add_parser("bounds", help="closed-form bound values")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--chain", help="n,delta,k")
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--Delta", type=int, default=None)

    p = sub.add_parser("rall", help="half-of-order check on Hamiltonian graphs")
    p.add_argument("--max-n", type=int, required=True)

    return ap


def _config_digest(args: argparse.Namespace) -> str:
    payload = json.dumps(vars(args), sort_keys=True, default=str)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _print_header(args: argparse.Namespace) -> None:
    print(
        f"# domgame {__version__} backend={ACTIVE_BACKEND} "
        f"config={_config_digest(args)} seed={args.seed}",
        file=sys.stderr,
    )


def _emit(result: dict | list[dict], args: argparse.Namespace) -> None:
    rows = result if isinstance(result, list) else [result]
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        if args.format == "jsonl":
            for row in rows:
                out.write(json.dumps(row, sort_keys=True) + "\n")
        elif args.format == "csv":
            keys = list(rows[0]) if rows else []
            out.write(",".join(keys) + "\n")
            for row in rows:
                out.write(",".join(str(row[k]) for k in keys) + "\n")
        else:
            for row in rows:
                for k, v in row.items():
                    out.write(f"{k}={v}\n")
    finally:
        if args.output:
            out.close()


def _parse_family(text: str):
    name, _, rest = text.partition(":")
    params = [int(x) for x in rest.replace(",", " ").split()] if rest else []
    return family_build(name, *params)


def _load_graph(args: argparse.Namespace):
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.family is not None:
        return _parse_family(args.family)
    with open(args.edges, "r", encoding="utf-8") as fh:
        lines = [ln.split() for ln in fh if ln.strip()]
    n = int(lines[0][0])
    edges = [(int(u), int(v)) for u, v in lines[1:]]
    return from_edges(n, edges)


def _parse_mask(text: str) -> int:
    if "," in text:
        return sum(1 << int(v) for v in text.split(","))
    return int(text, 0)


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    budget = args.node_budget
    g6 = encode_graph6(g).decode("ascii") if g.n <= 62 else ""
    if args.partial is not None:
        player = Player.DOMINATOR if args.turn == "d" else Player.STALLER
        state = GameState(g, _parse_mask(args.partial), player)
        res = solve(state, node_budget=budget, prune=args.prune)
        _emit({
            "graph6": g6, "n": g.n,
            "dominated": state.dominated, "to_move": args.turn,
            "value": res.value,
            "optimal_moves": sorted(bits(res.optimal_first_moves)),
            "nodes_visited": res.nodes_visited,
        }, args)
        return EXIT_OK
    res_d = solve(GameState(g, 0, Player.DOMINATOR), node_budget=budget, prune=args.prune)
    res_s = solve(GameState(g, 0, Player.STALLER), node_budget=budget, prune=args.prune)
    stats = degree_stats(g)
    _emit({
        "graph6": g6, "n": g.n, "m": stats.m,
        "delta": stats.delta, "Delta": stats.Delta,
        "diam": "disconnected" if stats.diam is None else stats.diam,
        "gamma": domination_number(g),
        "gamma_g": res_d.value, "gamma_g_prime": res_s.value,
        "optimal_first_moves": sorted(bits(res_d.optimal_first_moves)),
        "nodes_visited": res_d.nodes_visited + res_s.nodes_visited,
    }, args)
    return EXIT_OK


def _cmd_census(args: argparse.Namespace) -> int:
    compute = frozenset(x for x in args.compute.split(",") if x)
    if not compute <= COMPUTE_ALL:
        raise DomgameError(f"--compute must be within {sorted(COMPUTE_ALL)}")
    spec = JobSpec(
        internal_n=args.internal,
        stream_path=args.stream,
        require_diam2=args.diam2,
        min_delta=args.min_delta,
        max_Delta=args.max_Delta,
        require_hamiltonian=args.hamiltonian,
        compute=compute,
        workers=args.workers,
        checkpoint_interval=args.checkpoint_interval,
        checkpoint_path=args.checkpoint,
        skip_bad=args.skip_bad,
        node_budget=args.node_budget,
    )
    if args.resume and not args.output:
        raise DomgameError("--resume needs --output")
    if args.output:
        runner = resume_to_file if args.resume else scan_to_file
        summary = runner(spec, args.output)
    else:
        def sink(rec):
            sys.stdout.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")
        summary = scan_stream(spec, sink)
    for n in sorted(summary.orders):
        o = summary.orders[n]
        classes = summary.eq_half_classes.get(n, 0 if o.eq_half == 0 else None)
        print(
            f"# n={n} scanned={o.scanned} passed={o.passed} diam2={o.diam2} "
            f"eq_half={o.eq_half} (classes={classes}) "
            f"eq_half_minus={o.eq_half_minus} violations={o.violations}",
            file=sys.stderr,
        )
    print(
        f"# records={summary.records} nodes={summary.nodes_visited} "
        f"wall={summary.wall_time:.1f}s",
        file=sys.stderr,
    )
    return EXIT_VIOLATION if summary.total_violations else EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    records = read_records(args.records)
    violations = verify_bounds(records)
    _emit([v.__dict__ for v in violations] if violations else [{"violations": 0, "records": len(records)}], args)
    return EXIT_VIOLATION if violations else EXIT_OK


def _cmd_families(args: argparse.Namespace) -> int:
    if args.list:
        _emit([{"family": name} for name in FAMILY_NAMES], args)
        return EXIT_OK
    g = _parse_family(args.emit)
    stats = degree_stats(g)
    _emit({
        "family": args.emit,
        "graph6": encode_graph6(g).decode("ascii"),
        "n": g.n, "m": stats.m, "delta": stats.delta, "Delta": stats.Delta,
        "diam": "disconnected" if stats.diam is None else stats.diam,
        "twin_free": stats.twin_free,
    }, args)
    return EXIT_OK


def _cmd_bounds(args: argparse.Namespace) -> int:
    if args.chain:
        parts = [int(x) for x in args.chain.split(",")]
        if len(parts) != 3:
            raise DomgameError("--chain takes n,delta,k")
        ch = greedy_chain_bound(*parts)
        _emit({
            "n": ch.n, "delta": ch.delta, "rounds": ch.rounds,
            "u": list(ch.u), "u_prime": list(ch.u_prime),
            "completed_rounds": ch.completed_rounds, "bound": ch.bound,
        }, args)
        return EXIT_OK
    n = args.n
    row: dict = {"n": n, "half": bound_half(n), "half_minus_eleventh": bound_half_minus_eleventh(n)}
    hellwig, meierling = bound_gamma_diam2(n)
    row["gamma_diam2"] = hellwig
    row["meierling"] = meierling
    if n >= 3:
        row["total_dom"] = bound_total_dom_chain(n)
    if args.delta is not None:
        row["two_delta"] = bound_two_delta(args.delta)
    if args.Delta is not None:
        row["delta_corollary"] = bound_delta_corollary(n, args.Delta)
    _emit(row, args)
    return EXIT_OK


def _cmd_rall(args: argparse.Namespace) -> int:
    report = rall_check(args.max_n, workers=args.workers, node_budget=args.node_budget)
    _emit([{
        "n": o.n, "connected": o.connected,
        "skipped_min_degree": o.skipped_min_degree,
        "non_hamiltonian": o.non_hamiltonian, "checked": o.checked,
        "violations": len(o.violations),
    } for o in report.orders], args)
    return EXIT_VIOLATION if report.total_violations else EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "census": _cmd_census,
    "verify": _cmd_verify,
    "families": _cmd_families,
    "bounds": _cmd_bounds,
    "rall": _cmd_rall,
}


def run(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    env_budget = os.environ.get("DOMGAME_NODE_BUDGET")
    if env_budget:
        args.node_budget = int(env_budget)
    _print_header(args)
    try:
        return _COMMANDS[args.command](args)
    except DomgameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
