"""Command-line front end.

Subcommands wire the library into reproducible runs: greedy and exact
solving, weight optimization and checking, instance generation, gadget
certification, and independent trace verification. Human-readable
summaries go to stdout; a JSON run report goes to --out when given.
Exit codes: 0 success / verified, 1 domain failure or unverified, 2
usage errors (argparse).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .exact import SearchBudgetExceeded, exact_isolation_number
from .families import Gadget, certify_special_edge, chain, metacirculant_14, prism_k4
from .graph import (GenerationError, Graph, Graph6ParseError, emit_graph6,
                    parse_edge_list, parse_graph6, random_min_degree_graph,
                    random_regular_graph, structural_profile)
from .greedy import GreedyTrace, greedy_isolating_set, verify_trace
from .lpweights import build_constraints, check_feasible, solve_min_omega
from .residual import WeightVector, is_isolating


def _load_graph(path: str, fmt: str) -> Graph:
    text = Path(path).read_text()
    if fmt == "auto":
        head = next((ln for ln in text.splitlines() if ln.strip()), "")
        fmt = "edgelist" if " " in head.strip() and not head.startswith(">>") else "graph6"
    if fmt == "graph6":
        return parse_graph6(text)
    return parse_edge_list(text)


def _load_weights(path: str) -> WeightVector:
    with open(path) as fh:
        data = json.load(fh)
    # accept a bare weight vector, an LP solution, or any run report
    # that carries one (lp-weights stores "witness", greedy "weights")
    if "witness" in data and "omega" not in data:
        data = data["witness"]
    if "results" in data:
        inner = data["results"]
        data = inner.get("witness") or inner.get("weights")
        if data is None:
            raise ValueError("report JSON carries no weight vector")
    return WeightVector.from_json_dict(data)


def _emit_report(args, report: dict) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(json.dumps(report, indent=2) + "\n")


def _report_skeleton(args, command: str) -> dict:
    return {
        "command": command,
        "argv": list(getattr(args, "_argv", [])),
        "version": __version__,
    }


def _cmd_greedy(args) -> int:
    t0 = time.monotonic()
    G = _load_graph(args.infile, args.format)
    if args.weights:
        wv = _load_weights(args.weights)
    else:
        sol = solve_min_omega(build_constraints(args.delta, args.variant))
        wv = sol.witness
    S, trace = greedy_isolating_set(G, wv, args.variant)
    bound = math.floor(wv.omega * G.n)
    profile = structural_profile(G)
    precondition = profile.min_degree >= args.delta
    if args.variant == "triangle-free":
        precondition = precondition and profile.triangle_free
    elif args.variant == "girth5":
        precondition = precondition and (profile.girth is None or profile.girth >= 5)
    isolating = is_isolating(G, S)
    rules = {}
    for step in trace.steps:
        rules[step.rule.name] = rules.get(step.rule.name, 0) + 1
    print(f"n = {G.n}, m = {G.num_edges}")
    print(f"omega = {wv.omega}")
    print(f"|S| = {len(S)}, bound floor(omega*n) = {bound}")
    print(f"isolating: {str(isolating).lower()}")
    print(f"precondition (min degree >= {args.delta}, {args.variant}): "
          f"{str(precondition).lower()}")
    print("steps: " + ", ".join(f"{k} x{v}" for k, v in sorted(rules.items())))
    report = _report_skeleton(args, "greedy")
    report["input"] = {"graph6": emit_graph6(G)}
    report["results"] = {
        "size": len(S),
        "set": list(S),
        "bound": bound,
        "isolating": isolating,
        "precondition": precondition,
        "weights": wv.to_json_dict(),
        "trace": trace.to_json_dict(),
    }
    report["timing_seconds"] = time.monotonic() - t0
    _emit_report(args, report)
    ok = isolating and (not precondition or len(S) <= bound)
    return 0 if ok else 1


def _cmd_exact(args) -> int:
    t0 = time.monotonic()
    G = _load_graph(args.infile, args.format)
    result = exact_isolation_number(G, size_cap=args.cap)
    if result.witness is None:
        print(f"no isolating set of size <= {args.cap}")
    else:
        print(f"iota = {result.iota}")
        print(f"witness = {list(result.witness)}")
    print(f"explored = {result.explored}")
    report = _report_skeleton(args, "exact")
    report["input"] = {"graph6": emit_graph6(G)}
    report["results"] = {
        "iota": result.iota,
        "witness": None if result.witness is None else list(result.witness),
        "explored": result.explored,
        "size_cap": result.size_cap,
    }
    report["timing_seconds"] = time.monotonic() - t0
    _emit_report(args, report)
    return 0


def _cmd_lp_weights(args) -> int:
    t0 = time.monotonic()
    cs = build_constraints(args.delta, args.variant)
    sol = solve_min_omega(cs)
    print(f"omega = {sol.optimal_omega}")
    print(f"witness = {json.dumps(sol.witness.to_json_dict())}")
    print(f"tight rows = {[cs.rows[i].tag for i in sol.tight_rows]}")
    report = _report_skeleton(args, "lp-weights")
    report["input"] = {"delta": args.delta, "variant": args.variant}
    report["results"] = sol.to_json_dict()
    report["results"]["tight_row_tags"] = [cs.rows[i].tag for i in sol.tight_rows]
    report["timing_seconds"] = time.monotonic() - t0
    _emit_report(args, report)
    return 0


def _cmd_check_weights(args) -> int:
    t0 = time.monotonic()
    cs = build_constraints(args.delta, args.variant)
    wv = _load_weights(args.weights)
    ok, violations = check_feasible(cs, wv)
    print(f"feasible: {str(ok).lower()}")
    for v in violations:
        print(f"violated row {v.index} [{v.row.tag}]: {v.row} (slack {v.slack})")
    report = _report_skeleton(args, "check-weights")
    report["input"] = {"delta": args.delta, "variant": args.variant,
                       "weights": wv.to_json_dict()}
    report["results"] = {
        "feasible": ok,
        "violations": [
            {"index": v.index, "tag": v.row.tag, "row": str(v.row), "slack": str(v.slack)}
            for v in violations
        ],
    }
    report["timing_seconds"] = time.monotonic() - t0
    _emit_report(args, report)
    return 0 if ok else 1


def _cmd_gen(args) -> int:
    if (args.family is None) == (args.random is None):
        print("error: give exactly one of --family / --random", file=sys.stderr)
        return 2
    if args.family:
        if args.s is None:
            print("error: --family requires --s", file=sys.stderr)
            return 2
        gadget = prism_k4() if args.family == "prism-chain" else metacirculant_14()
        G = chain(gadget, args.s)
        fingerprint = {"family": args.family, "s": args.s}
    else:
        missing = [f for f, v in (("--n", args.n), ("--param", args.param),
                                  ("--seed", args.seed)) if v is None]
        if missing:
            print(f"error: --random requires {', '.join(missing)}", file=sys.stderr)
            return 2
        if args.random == "min-degree":
            G = random_min_degree_graph(args.n, args.param, args.seed)
        else:
            G = random_regular_graph(args.n, args.param, args.seed)
        fingerprint = {"random": args.random, "n": args.n,
                       "param": args.param, "seed": args.seed}
    text = emit_graph6(G) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(f"n = {G.n}, m = {G.num_edges}", file=sys.stderr)
    return 0


def _cmd_certify_edge(args) -> int:
    t0 = time.monotonic()
    G = _load_graph(args.infile, args.format)
    gadget = Gadget(G, (args.x, args.y), args.b, G.n)
    cert = certify_special_edge(gadget)
    print(json.dumps(cert.to_json_dict(), indent=2))
    report = _report_skeleton(args, "certify-edge")
    report["input"] = {"graph6": emit_graph6(G), "x": args.x, "y": args.y, "b": args.b}
    report["results"] = cert.to_json_dict()
    report["timing_seconds"] = time.monotonic() - t0
    _emit_report(args, report)
    return 0 if cert.valid else 1


def _cmd_verify_bound(args) -> int:
    t0 = time.monotonic()
    G = _load_graph(args.infile, args.format)
    wv = _load_weights(args.weights)
    with open(args.trace) as fh:
        data = json.load(fh)
    if "results" in data:
        data = data["results"]["trace"]
    trace = GreedyTrace.from_json_dict(data)
    outcome = verify_trace(G, trace, wv)
    for key, val in outcome.to_json_dict().items():
        print(f"{key}: {str(val).lower()}")
    report = _report_skeleton(args, "verify-bound")
    report["input"] = {"graph6": emit_graph6(G), "weights": wv.to_json_dict()}
    report["results"] = outcome.to_json_dict()
    report["timing_seconds"] = time.monotonic() - t0
    _emit_report(args, report)
    return 0 if outcome else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isobound",
        description="Isolating sets with certified size bounds.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_input(p):
        p.add_argument("--in", dest="infile", required=True, help="input graph file")
        p.add_argument("--format", choices=("auto", "graph6", "edgelist"),
                       default="auto")

    p = sub.add_parser("greedy", help="run the rule-based greedy")
    add_graph_input(p)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--variant", choices=("general", "triangle-free", "girth5"),
                   default="general")
    p.add_argument("--weights", help="weight-vector JSON; default: solve the LP")
    p.add_argument("--out", help="write a JSON run report here")
    p.set_defaults(func=_cmd_greedy)

    p = sub.add_parser("exact", help="exact isolation number (small graphs)")
    add_graph_input(p)
    p.add_argument("--cap", type=int, default=None,
                   help="decision mode: find any set of size <= CAP or certify none")
    p.add_argument("--out", help="write a JSON run report here")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("lp-weights", help="optimal weights for (delta, variant)")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--variant", choices=("general", "triangle-free", "girth5"),
                   default="general")
    p.add_argument("--out", help="write a JSON run report here")
    p.set_defaults(func=_cmd_lp_weights)

    p = sub.add_parser("check-weights", help="feasibility of a weight vector")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--variant", choices=("general", "triangle-free", "girth5"),
                   default="general")
    p.add_argument("--weights", required=True)
    p.add_argument("--out", help="write a JSON run report here")
    p.set_defaults(func=_cmd_check_weights)

    p = sub.add_parser("gen", help="generate instances (graph6)")
    p.add_argument("--family", choices=("prism-chain", "meta-chain"))
    p.add_argument("--s", type=int, help="copies in the chained family")
    p.add_argument("--random", choices=("min-degree", "regular"))
    p.add_argument("--n", type=int)
    p.add_argument("--param", type=int, help="degree bound / regularity degree")
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="write graph6 here instead of stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("certify-edge", help="special-edge gadget certificate")
    add_graph_input(p)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--out", help="write a JSON run report here")
    p.set_defaults(func=_cmd_certify_edge)

    p = sub.add_parser("verify-bound", help="independently replay a greedy trace")
    add_graph_input(p)
    p.add_argument("--trace", required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("--out", help="write a JSON run report here")
    p.set_defaults(func=_cmd_verify_bound)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._argv = list(sys.argv[1:] if argv is None else argv)
    try:
        return args.func(args)
    except (ValueError, Graph6ParseError, GenerationError,
            SearchBudgetExceeded, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
