"""Command-line front end: ``empirecol <command> ...``.

Exit codes: 0 success or colourable/SAT, 10 not colourable/UNSAT/invalid,
2 usage or input error, 3 timeout.  ``-`` names stdin or stdout.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from typing import Callable, Sequence

import networkx as nx

from . import io
from .core import Colouring, EmpireGraph, verify_colouring
from .gadgets import (
    GadgetArtifact,
    SearchTimeout,
    build_A,
    build_B,
    build_B_minus,
    build_B_plus,
    build_D,
    build_E,
)
from .reductions import (
    FormulaGraph,
    fg_to_lforest,
    fg_to_planar,
    fg_to_tree,
    ksat_to_formula_graph,
    pad_empires,
    sat3_to_lforest,
    sat3_to_tree,
)
from .solvers import SatStatus, Status, decode_colouring, dpll_solve, empire_to_cnf, exact_empire_colour
from .sparse import sparse_colour

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_TIMEOUT = 0, 10, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.kind} needs {' '.join(missing)}")


def _gadget(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "E":
        _need(args, "s", "q", "t")
        art: GadgetArtifact = build_E(args.s, args.q, args.t)
    else:
        _need(args, "r", "s")
        if kind == "B":
            art = build_B(args.r, args.s)
        elif kind == "Bplus":
            art = build_B_plus(args.r, args.s, args.u or 0)
        elif kind == "Bminus":
            art = build_B_minus(args.r, args.s, args.u, args.v)
        elif kind == "A":
            _need(args, "m")
            art = build_A(args.r, args.s, args.m)
        else:
            u = 0 if args.u is None else args.u
            v = 1 if args.v is None else args.v
            art = build_D(args.r, args.s, u, v)
    _write(args.output, io.write_artifact(art))
    return EXIT_OK


def _reduce(args: argparse.Namespace) -> int:
    kind, text = args.kind, _read(args.input)
    if kind.startswith("sat2"):
        phi = io.parse_dimacs(text)
        if kind == "sat2fg":
            _need(args, "s")
            out = ksat_to_formula_graph(phi, args.s).to_artifact()
        elif kind == "sat2lforest":
            _need(args, "r")
            out = sat3_to_lforest(phi, args.r)
        else:
            r = 2 if args.r is None else args.r
            out = sat3_to_tree(phi)
            if r != 2:
                out = pad_empires(out, 2, r)
    else:
        _need(args, "r")
        fg = FormulaGraph.from_artifact(io.read_artifact(text))
        if args.s is not None and args.s != fg.s:
            raise UsageError(f"input formula graph has s={fg.s}, not {args.s}")
        reducer: Callable[[FormulaGraph, int], GadgetArtifact] = {
            "fg2lforest": fg_to_lforest,
            "fg2tree": fg_to_tree,
            "fg2planar": fg_to_planar,
        }[kind]
        out = reducer(fg, args.r)
    _write(args.output, io.write_artifact(out))
    return EXIT_OK


def _solve(args: argparse.Namespace) -> int:
    g = io.read_artifact(_read(args.input)).graph
    if args.engine == "backtrack":
        res = exact_empire_colour(g, args.s, node_budget=args.node_budget, time_budget=args.time_budget)
        status, colouring = res.status, res.colouring
    else:
        sat = dpll_solve(empire_to_cnf(g, args.s), node_budget=args.node_budget, time_budget=args.time_budget)
        status = {SatStatus.SAT: Status.COLOURABLE, SatStatus.UNSAT: Status.NOT_COLOURABLE}.get(
            sat.status, Status.TIMEOUT
        )
        colouring = decode_colouring(sat.assignment, g.num_empires, args.s) if sat.assignment else None
    print(status.value, file=sys.stderr if args.output == "-" else sys.stdout)
    if colouring is not None:
        _write(args.output, io.write_colouring(colouring))
    return {Status.COLOURABLE: EXIT_OK, Status.NOT_COLOURABLE: EXIT_NO}.get(status, EXIT_TIMEOUT)


def _dpll(args: argparse.Namespace) -> int:
    res = dpll_solve(io.parse_dimacs(_read(args.input)), node_budget=args.node_budget, time_budget=args.time_budget)
    if res.status is SatStatus.SAT:
        lits = [i + 1 if b else -(i + 1) for i, b in enumerate(res.assignment or ())]
        print("s SATISFIABLE")
        print(" ".join(["v", *map(str, lits), "0"]))
        return EXIT_OK
    if res.status is SatStatus.UNSAT:
        print("s UNSATISFIABLE")
        return EXIT_NO
    print("s UNKNOWN")
    return EXIT_TIMEOUT


def _encode(args: argparse.Namespace) -> int:
    g = io.read_artifact(_read(args.input)).graph
    _write(args.output, io.write_dimacs(empire_to_cnf(g, args.s)))
    return EXIT_OK


def _verify(args: argparse.Namespace) -> int:
    g = io.read_artifact(_read(args.graph)).graph
    c = io.read_colouring(_read(args.colouring))
    if len(c) != g.num_empires:
        print(f"invalid: colouring covers {len(c)} empires, graph has {g.num_empires}")
        return EXIT_NO
    ok, bad = verify_colouring(g, c)
    if ok:
        print("valid")
        return EXIT_OK
    print(f"invalid: {len(bad)} monochromatic edges")
    for u, v in bad:
        print(f"e {u} {v}")
    return EXIT_NO


def _sparse(args: argparse.Namespace) -> int:
    g = io.read_artifact(_read(args.input)).graph
    res = sparse_colour(g, args.sigma)
    if isinstance(res, Colouring):
        _write(args.output, io.write_colouring(res))
        return EXIT_OK
    print(f"{res.kind.value} {' '.join(map(str, res.witness_empires))}")
    return EXIT_NO


def graph_stats(g: EmpireGraph) -> dict[str, object]:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.num_vertices))
    nxg.add_edges_from(g.edges)
    degrees = Counter(d for _, d in nxg.degree())
    forest = nx.is_forest(nxg) if g.num_vertices else True
    comps = [nxg.subgraph(c) for c in nx.connected_components(nxg)]
    return {
        "vertices": g.num_vertices,
        "edges": len(g.edges),
        "empires": g.num_empires,
        "r": g.r,
        "empire_sizes": dict(sorted(Counter(len(m) for m in g.members).items())),
        "degree_distribution": dict(sorted(degrees.items())),
        "components": len(comps),
        "forest": forest,
        "linear_forest": forest and max(degrees, default=0) <= 2,
        "tree": forest and len(comps) == 1,
        "planar_components": all(nx.check_planarity(c)[0] for c in comps),
    }


def _stats(args: argparse.Namespace) -> int:
    art = io.read_artifact(_read(args.input))
    for key, value in graph_stats(art.graph).items():
        if isinstance(value, dict):
            value = " ".join(f"{k}:{v}" for k, v in value.items())
        print(f"{key} {value}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="empirecol", description="Empire colouring gadgets, reductions and solvers.")
    sub = p.add_subparsers(dest="command", required=True)

    def budgets(q: argparse.ArgumentParser) -> None:
        q.add_argument("--node-budget", type=int, default=10_000_000)
        q.add_argument("--time-budget", type=float, default=60.0)

    q = sub.add_parser("gadget", help="emit a gadget graph")
    q.add_argument("kind", choices=["B", "Bplus", "Bminus", "E", "A", "D"])
    for flag in ("r", "s", "m", "t", "q", "u", "v"):
        q.add_argument(f"--{flag}", type=int)
    q.add_argument("-o", "--output", default="-")
    q.set_defaults(func=_gadget)

    q = sub.add_parser("reduce", help="run a reduction on DIMACS or formula-graph input")
    q.add_argument("kind", choices=["sat2fg", "sat2lforest", "sat2tree", "fg2lforest", "fg2tree", "fg2planar"])
    q.add_argument("--r", type=int)
    q.add_argument("--s", type=int)
    q.add_argument("input")
    q.add_argument("-o", "--output", default="-")
    q.set_defaults(func=_reduce)

    q = sub.add_parser("solve", help="decide (s, r)-colourability")
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--engine", choices=["backtrack", "cnf"], default="backtrack")
    budgets(q)
    q.add_argument("input")
    q.add_argument("-o", "--output", default="-", help="where to write the colouring")
    q.set_defaults(func=_solve)

    q = sub.add_parser("dpll", help="solve a DIMACS CNF file")
    budgets(q)
    q.add_argument("input")
    q.set_defaults(func=_dpll)

    q = sub.add_parser("encode", help="encode s-colourability as DIMACS CNF")
    q.add_argument("--s", type=int, required=True)
    q.add_argument("input")
    q.add_argument("-o", "--output", default="-")
    q.set_defaults(func=_encode)

    q = sub.add_parser("verify", help="check a colouring against a graph")
    q.add_argument("graph")
    q.add_argument("colouring")
    q.set_defaults(func=_verify)

    q = sub.add_parser("sparse-colour", help="colour a SPARSE(sigma) graph with r*sigma colours")
    q.add_argument("--sigma", required=True, help="integer or fraction such as 3/2")
    q.add_argument("input")
    q.add_argument("-o", "--output", default="-")
    q.set_defaults(func=_sparse)

    q = sub.add_parser("stats", help="summarise a graph file")
    q.add_argument("input")
    q.set_defaults(func=_stats)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SearchTimeout as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (UsageError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
