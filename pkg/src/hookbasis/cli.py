"""Command line front end.

Exit status: 0 when every check verified, 1 when a check was falsified,
2 on usage or resource errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from . import __version__
from .annihilator import (
    ideal_products,
    observation4_check,
    verify_generators,
    verify_propositions,
)
from .bounds import bounds, check_bound
from .degzero import verify_mzero
from .errors import ParameterError, ResourceError
from .exactrank import default_threads, verify_independence, verify_span
from .hookdrawings import (
    children_graph,
    count_formula,
    enumerate_drawings,
    flip,
    flip_child_duality,
    is_acyclic,
    operators,
    sample_pairs,
)
from .polynomial import render
from .shapes import Partition, delta, hooks, partitions

SCHEMA_VERSION = 1
DEFAULT_SEED = 20000101
DEFAULT_SAMPLES = 100
DEFAULT_MAX_TERMS = 50

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    mu: Partition | None
    json: bool
    out: str | None
    seed: int
    samples: int
    threads: int
    timings: bool


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON certificate")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--threads", type=_positive, default=None,
                        help="worker processes for derivative evaluation (default: all cores)")
    common.add_argument("--timings", action="store_true",
                        help="include elapsed times (makes JSON output non-reproducible)")

    parser = argparse.ArgumentParser(
        prog="hookbasis",
        description="Exact checks of monomial bases for the n! conjecture modules of hook shapes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("delta", parents=[common], help="print Delta_mu")
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--max-terms", type=_natural, default=DEFAULT_MAX_TERMS,
                   help="truncate text output after this many terms (0 = no limit)")

    p = sub.add_parser("drawings", parents=[common], help="enumerate hook drawings")
    p.add_argument("--mu", type=_partition, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")

    p = sub.add_parser("count-formula", parents=[common], help="evaluate the closed-form count")
    p.add_argument("--K", type=_natural, required=True)
    p.add_argument("--L", type=_natural, required=True)

    verify = sub.add_parser("verify", help="run a verification")
    vsub = verify.add_subparsers(dest="check", required=True)
    for name in ("independence", "span", "mzero"):
        p = vsub.add_parser(name, parents=[common])
        p.add_argument("--mu", type=_partition, required=True)
    p = vsub.add_parser("ideal", parents=[common])
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--samples", type=_natural, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p = vsub.add_parser("all", parents=[common])
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--samples", type=_natural, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    graph = sub.add_parser("graph", help="build relation graphs")
    gsub = graph.add_subparsers(dest="graph", required=True)
    p = gsub.add_parser("children", parents=[common])
    p.add_argument("--mu", type=_partition, required=True)
    return parser


def _require_hook(mu: Partition) -> tuple[int, int]:
    if not mu.is_hook:
        raise UsageError(f"{mu} is not a hook partition (K+1, 1^L)")
    return mu.arms


# -- commands -------------------------------------------------------------------
# Each returns (verified, payload for JSON, lines for text output).


def cmd_delta(args, cfg):
    d = delta(args.mu)
    limit = args.max_terms or None
    payload = {"mu": str(args.mu), "terms": len(d), "polynomial": render(d)}
    return True, payload, [render(d, limit)]


def cmd_drawings(args, cfg):
    K, L = _require_hook(args.mu)
    if args.count:
        check_bound("drawings", args.mu.n)
        count = sum(1 for _ in enumerate_drawings(K, L))
        ok = count == math.factorial(args.mu.n)
        return ok, {"mu": str(args.mu), "count": count, "expected": math.factorial(args.mu.n)}, [str(count)]
    check_bound("drawings", args.mu.n)
    nodes = list(enumerate_drawings(K, L))
    lines = [f"{i}\t{d.shape}\t{','.join(map(str, d.crosses))}\t{operators(d)[0]}"
             for i, d in enumerate(nodes)]
    payload = {"mu": str(args.mu), "drawings": [d.to_json() for d in nodes]}
    return True, payload, lines


def cmd_count_formula(args, cfg):
    value = count_formula(args.K, args.L)
    expected = math.factorial(args.K + args.L + 1)
    payload = {"K": args.K, "L": args.L, "count": value, "expected": expected}
    return value == expected, payload, [str(value)]


def _rank_lines(label, report):
    status = "verified" if report.verified else "FALSIFIED"
    return [f"{label}: rank {report.rank} of {report.row_count} rows "
            f"(expected {report.expected}) {status}"]


def cmd_independence(args, cfg):
    _require_hook(args.mu)
    report = verify_independence(args.mu, threads=cfg.threads)
    payload = {"mu": str(args.mu), **report.to_json(cfg.timings)}
    return report.verified, payload, _rank_lines(f"independence {args.mu}", report)


def cmd_span(args, cfg):
    _require_hook(args.mu)
    report = verify_span(args.mu, threads=cfg.threads)
    payload = {"mu": str(args.mu), **report.to_json(cfg.timings)}
    return report.verified, payload, _rank_lines(f"span {args.mu}", report)


def _ideal(mu, samples, seed):
    parts = {
        "generators": verify_generators(mu),
        "propositions": verify_propositions(mu, samples, seed),
        "observation4": observation4_check(mu, samples, seed),
        "ideal_products": ideal_products(mu, samples, seed),
    }
    ok = all(r.verified for r in parts.values())
    payload = {"mu": str(mu), "samples": samples, "seed": seed,
               **{k: r.to_json() for k, r in parts.items()}}
    lines = [f"{k}: {len(r.entries)} checked, {len(r.counterexamples)} counterexamples"
             for k, r in parts.items()]
    return ok, payload, lines


def cmd_ideal(args, cfg):
    _require_hook(args.mu)
    return _ideal(args.mu, args.samples, args.seed)


def cmd_mzero(args, cfg):
    report = verify_mzero(args.mu, threads=cfg.threads)
    lines = [f"mzero {args.mu}: {report.count} drawings (expected {report.expected}), "
             f"rank {report.rank.rank}"]
    lines += [f"  {k}: {'ok' if v else 'FAILED'}" for k, v in report.checks.items()]
    return report.verified, report.to_json(cfg.timings), lines


def cmd_graph_children(args, cfg):
    K, L = _require_hook(args.mu)
    graph = children_graph(K, L)
    acyclic = is_acyclic(graph)
    payload = {**graph.to_json(), "acyclic": acyclic}
    if cfg.out:
        # --out receives the graph export; the summary still goes to stdout.
        doc = {"schema_version": SCHEMA_VERSION, "graph": payload}
        with open(cfg.out, "w") as fh:
            fh.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        cfg.out = None
    lines = [f"children graph {args.mu}: {len(graph.nodes)} nodes, "
             f"{len(graph.edges)} edges, {'acyclic' if acyclic else 'HAS A CYCLE'}"]
    return acyclic, payload, lines


def cmd_verify_all(args, cfg):
    limits = bounds()
    results = []

    def record(name, mu, ok):
        results.append({"check": name, "mu": str(mu) if mu else None, "verified": bool(ok)})

    skipped = []
    for n in range(1, args.max_n + 1):
        for mu in hooks(n):
            K, L = mu.arms
            if n <= limits["drawings"]:
                count = sum(1 for _ in enumerate_drawings(K, L))
                record("counting", mu, count == count_formula(K, L) == math.factorial(n))
            if n <= limits["independence"]:
                record("independence", mu, verify_independence(mu, threads=cfg.threads).verified)
            if n <= limits["span"]:
                record("span", mu, verify_span(mu, threads=cfg.threads).verified)
            if n <= limits["delta"]:
                record("ideal", mu, _ideal(mu, args.samples, args.seed)[0])
            if n <= limits["graph"]:
                graph = children_graph(K, L)
                record("acyclicity", mu, is_acyclic(graph))
                nodes = graph.nodes
                record("flip_involution", mu,
                       {flip(d) for d in nodes} == set(nodes)
                       and all(flip(flip(d)) == d for d in nodes))
                if n <= 4:
                    pairs = [(a, b) for a in nodes for b in nodes if a != b]
                else:
                    pairs = sample_pairs(K, L, 1000, args.seed)
                record("flip_duality", mu, all(flip_child_duality(a, b, mu) for a, b in pairs))
        for mu in partitions(n):
            if n <= limits["bars"]:
                record("mzero", mu, verify_mzero(mu, threads=cfg.threads).verified)
        for name in ("drawings", "independence", "span", "graph", "bars"):
            if n > limits[name]:
                skipped.append({"check": name, "n": n, "bound": limits[name]})
    ok = all(r["verified"] for r in results)
    payload = {"max_n": args.max_n, "seed": args.seed, "samples": args.samples,
               "results": results, "skipped": skipped, "verified": ok}
    lines = [f"{r['check']:<16} {r['mu'] or '':<14} {'ok' if r['verified'] else 'FALSIFIED'}"
             for r in results]
    lines += [f"skipped {s['check']} at n={s['n']} (bound {s['bound']})" for s in skipped]
    lines.append(f"{len(results)} checks, {sum(not r['verified'] for r in results)} falsified")
    return ok, payload, lines


def _dispatch(args):
    if args.verb == "delta":
        return "delta", cmd_delta
    if args.verb == "drawings":
        return "drawings", cmd_drawings
    if args.verb == "count-formula":
        return "count-formula", cmd_count_formula
    if args.verb == "graph":
        return "graph children", cmd_graph_children
    table = {
        "independence": cmd_independence,
        "span": cmd_span,
        "ideal": cmd_ideal,
        "mzero": cmd_mzero,
        "all": cmd_verify_all,
    }
    return f"verify {args.check}", table[args.check]


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    command, handler = _dispatch(args)
    cfg = RunConfig(
        command=command,
        mu=getattr(args, "mu", None),
        json=args.json,
        out=args.out,
        seed=getattr(args, "seed", DEFAULT_SEED),
        samples=getattr(args, "samples", DEFAULT_SAMPLES),
        threads=args.threads or default_threads(),
        timings=args.timings,
    )
    try:
        ok, payload, lines = handler(args, cfg)
    except (ResourceError, UsageError, ParameterError) as exc:
        print(f"hookbasis: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.json:
        doc = {"schema_version": SCHEMA_VERSION, "command": command, "verified": ok, "result": payload}
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", cfg.out)
    else:
        _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK if ok else EXIT_FALSIFIED


def main() -> None:
    sys.exit(run())
