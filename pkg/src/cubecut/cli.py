"""Command-line front end: metrics, theta, split, bounds, search, verify."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .bounds import bounds_report
from .hypercube import (CYCLIC, GuardError, build_hypercube, facets, format_numbering,
                        gray_numbering, hypercube_dimension, parse_graph,
                        parse_numbering)
from .isoperimetric import EXACT_THETA_MAX_N, theta_table, theta_table_exact
from .metrics import all_metrics
from .search import bb_ccw, exhaustive_lcw, local_search_ccw
from .splits import Diameter, bracket, diameter_sweep, easy_split, find_split, theorem_lower_bound
from .verify import run_battery

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_GUARD, EXIT_IO = 0, 1, 2, 3, 4


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(args):
    if getattr(args, "graph", None):
        return parse_graph(_read(args.graph))
    if args.n is None:
        raise GuardError("give either --graph FILE or --n N")
    return build_hypercube(args.n)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_metrics(args):
    g = _load_graph(args)
    if args.numbering:
        eta = parse_numbering(_read(args.numbering))
    else:
        n = hypercube_dimension(g)
        if not n:
            raise GuardError("a numbering file is required for non-hypercube graphs")
        eta = gray_numbering(n)
    if len(eta) != g.vertex_count:
        raise GuardError("numbering and graph sizes differ")
    return all_metrics(g, eta, args.budget)


def cmd_theta(args):
    if args.exact:
        table = theta_table_exact(args.n) if args.n <= EXACT_THETA_MAX_N else None
        if table is None:
            raise GuardError(f"--exact is limited to n <= {EXACT_THETA_MAX_N}")
    else:
        table = theta_table(args.n)
    return {"n": args.n, "theta": list(table)}


def cmd_split(args):
    n = args.n
    g = build_hypercube(n)
    if n < 2:
        raise GuardError("splits need n >= 2")
    eta = parse_numbering(_read(args.numbering)).as_host(CYCLIC) if args.numbering else gray_numbering(n)
    if len(eta) != g.vertex_count:
        raise GuardError("numbering does not match Q_n")
    sweeps = []
    for f in facets(n):
        sweep = diameter_sweep(g, eta, f.members)
        sweeps.append({"axis": f.axis, "value": f.value, "sweep": sweep, "max": max(sweep)})
    x, y = easy_split(n)
    witness = find_split(g, eta, x)
    payload = {
        "n": n,
        "numbering": format_numbering(eta).strip(),
        "sweeps": sweeps,
        "easy_split": f"{x}/{y}",
        "theorem_hypothesis": witness is not None,
        "theorem_bound": theorem_lower_bound(n),
        "witness": None,
    }
    if witness is not None:
        d, part = witness
        payload["witness"] = {
            "diameter": d.position,
            "part": sorted(part),
            "bracket": bracket(g, eta, Diameter(d.position), part).matrix(),
        }
    return payload


def cmd_bounds(args):
    return [bounds_report(n).as_dict() for n in range(2, args.n_max + 1)]


def cmd_search(args):
    g = _load_graph(args)
    n = hypercube_dimension(g)
    if args.kind == "lcw":
        result = exhaustive_lcw(g)
    else:
        result = bb_ccw(g, budget=args.budget, automorphisms=bool(n))
        if not result.exact and args.steps > 0:
            improved = local_search_ccw(g, result.witness, args.steps, args.seed)
            again = bb_ccw(g, budget=args.budget, witness=improved, automorphisms=bool(n))
            if again.optimum < result.optimum or again.exact:
                result = again
    payload = result.as_dict()
    del payload["elapsed"]
    payload["witness"] = format_numbering(result.witness).strip()
    payload["kind"] = args.kind
    return payload


def cmd_verify(args):
    checks = run_battery(args.n_max)
    return [{"check": c.name, "passed": c.passed, "detail": c.detail} for c in checks]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--threads", type=int, default=0,
                        help="accepted for compatibility; all searches run single-threaded")

    parser = argparse.ArgumentParser(prog="cubecut", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("metrics", parents=[common], help="six embedding metrics of a numbering")
    p.add_argument("--graph")
    p.add_argument("--n", type=int)
    p.add_argument("--numbering")
    p.add_argument("--budget", type=int, default=10**8)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("theta", parents=[common], help="theta table of Q_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="scan all subsets instead of the recursion")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("split", parents=[common], help="facet sweeps and split witnesses")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--numbering")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("bounds", parents=[common], help="closed forms and bounds for n = 2..K")
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", parents=[common], help="certify ccw or lcw by search")
    p.add_argument("kind", choices=("ccw", "lcw"))
    p.add_argument("--n", type=int)
    p.add_argument("--graph")
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=0, help="local-search steps when inexact")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", parents=[common], help="run the reproduction battery")
    p.add_argument("--n-max", type=int, default=4)
    p.set_defaults(func=cmd_verify)
    return parser


def render(command: str, params: dict, payload, fmt: str, status: int) -> str:
    if fmt == "csv":
        if command == "theta":
            return _csv(("l", "theta"), enumerate(payload["theta"]))
        if command in ("bounds", "verify"):
            header = list(payload[0].keys())
            return _csv(header, ([row[k] for k in header] for row in payload))
        raise GuardError(f"csv output is not available for {command}")
    envelope = {
        "command": command,
        "parameters": params,
        "version": __version__,
        "payload": payload,
        "status": status,
    }
    return json.dumps(envelope, indent=2, sort_keys=True) + "\n"


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or ("csv" if args.command == "theta" else "json")
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command")}
    try:
        payload = args.func(args)
        status = EXIT_OK
        if args.command == "verify" and not all(row["passed"] for row in payload):
            status = EXIT_FAILED
        sys.stdout.write(render(args.command, params, payload, fmt, status))
        return status
    except OSError as exc:
        print(f"cubecut: {exc}", file=sys.stderr)
        return EXIT_IO
    except (GuardError, ValueError) as exc:
        print(f"cubecut: {exc}", file=sys.stderr)
        return EXIT_GUARD


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
