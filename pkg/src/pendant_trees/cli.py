"""Command-line front end.

Exit codes: 0 exact result (or verification passed), 1 error or failed
verification, 2 result limited by the node budget.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .bounds import standard_ledger
from .construct import ConstructionError, construct_theorem_packing, sharpness_probe
from .formats import dumps, graph_to_dot, load_graph, parse_product_terminals
from .graph import GraphError, cartesian_product, label
from .search import DEFAULT_BUDGET, Budget, pendant_tree_connectivity
from .steiner import NotInHostError, packing_from_json, packing_to_json, verify_packing
from .tables import SECTIONS, rows_to_csv, section_rows

EXACT, ERROR, LIMITED = 0, 1, 2

TERMINAL_HELP = ('three product vertices "(i,j),(i,j),(i,j)"; i and j index the vertex '
                 "orders of the first and second factor")


class CliError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _budget(args) -> Budget:
    return Budget(args.budget)


def cmd_compute(args) -> int:
    g = load_graph(args.graph)
    r = pendant_tree_connectivity(g, args.k, _budget(args), jobs=args.jobs)
    ledger = standard_ledger(g, args.k) if len(g) >= 1 and g.is_connected() else None
    if args.format == "csv":
        head = "graph,k,value,exact,witness\n"
        w = " ".join(label(v) for v in r.witness) if r.witness else ""
        text = head + f"{g.name},{args.k},{r.value},{str(r.exact).lower()},{w}\n"
        if ledger is not None:
            text += "\n" + ledger.to_csv()
    elif args.format == "dot":
        text = graph_to_dot(g, r.packing)
    else:
        data = r.to_json(g)
        data["bounds"] = ledger.to_json() if ledger is not None else []
        text = dumps(data)
    _emit(text, args.out)
    if args.out:
        state = "exact" if r.exact else "lower bound"
        print(f"tau_{args.k}({g.name}) = {r.value} ({state})")
    return EXACT if r.exact else LIMITED


def _pick_terminals(args, g, h):
    if args.s:
        return parse_product_terminals(args.s, g, h)
    rng = random.Random(args.seed)
    prod = list(cartesian_product(g, h).vertices)
    return tuple(rng.sample(prod, 3))


def cmd_construct(args) -> int:
    g, h = load_graph(args.g), load_graph(args.h)
    if args.s is None and args.seed is None:
        raise CliError("give --s or --seed to choose the terminals")
    terms = _pick_terminals(args, g, h)
    result = construct_theorem_packing(g, h, terms, _budget(args))
    product = cartesian_product(g, h)
    if args.format == "dot":
        text = graph_to_dot(product, result.packing)
    else:
        text = dumps(result.transcript(product))
    _emit(text, args.out)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(graph_to_dot(product, result.packing))
    print(f"{len(result.packing)} trees, guarantee {result.guarantee()}, case {result.case}",
          file=sys.stderr)
    if not verify_packing(product, result.packing):
        return ERROR
    return EXACT if result.exact_factors else LIMITED


def _host(args):
    if args.graph:
        return load_graph(args.graph)
    if args.g and args.h:
        return cartesian_product(load_graph(args.g), load_graph(args.h))
    raise CliError("give --graph, or --g and --h for a product host")


def cmd_verify(args) -> int:
    host = _host(args)
    try:
        with open(args.packing) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise CliError(f"cannot read packing: {e}") from None
    try:
        pk = packing_from_json(data, host)
        verdict = verify_packing(host, pk).to_json()
    except NotInHostError as e:
        verdict = {"ok": False, "violation": f"not in host graph: {e}"}
    except (KeyError, TypeError, ValueError) as e:
        raise CliError(f"malformed packing: {e}") from None
    _emit(dumps(verdict), args.out)
    return EXACT if verdict["ok"] else ERROR


def cmd_probe(args) -> int:
    g, h = load_graph(args.g), load_graph(args.h)
    rep = sharpness_probe(g, h, _budget(args))
    _emit(dumps(rep.to_json()), args.out)
    return EXACT if rep.exact else LIMITED


def cmd_table(args) -> int:
    rows = section_rows(args.section, args.max_vertices, _budget(args), args.jobs)
    if args.format == "json":
        text = dumps([dict(zip(["network", "k", "claimed", "computed", "match"], r.as_list())) for r in rows])
    else:
        text = rows_to_csv(rows)
    _emit(text, args.out)
    return LIMITED if any(r.match == "inexact" for r in rows) else EXACT


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pendant-trees",
                                description="Pendant tree-connectivity and product-network tree packings.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="search nodes per terminal set (default %(default)s)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for the terminal-set sweep")
    common.add_argument("--seed", type=int, default=None, help="seed for any random choice")
    common.add_argument("--out", default=None, help="write output to PATH instead of stdout")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("compute", parents=[common], help="exact tau_k with witness and certificate")
    c.add_argument("--graph", required=True, help="family spec (e.g. torus:4,5) or graph JSON path")
    c.add_argument("--k", type=int, default=3)
    c.add_argument("--format", choices=["json", "csv", "dot"], default="json")
    c.set_defaults(func=cmd_compute)

    c = sub.add_parser("construct", parents=[common], help="explicit packing in G□H for three terminals")
    c.add_argument("--g", required=True)
    c.add_argument("--h", required=True)
    c.add_argument("--s", default=None, help=TERMINAL_HELP)
    c.add_argument("--format", choices=["json", "dot"], default="json")
    c.add_argument("--dot", default=None, help="also write a DOT rendering to this path")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("verify", parents=[common], help="check a packing JSON against a host graph")
    c.add_argument("--graph", default=None)
    c.add_argument("--g", default=None)
    c.add_argument("--h", default=None)
    c.add_argument("--packing", required=True)
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("probe", parents=[common], help="compare exact tau_3(G□H) with the product bound")
    c.add_argument("--g", required=True)
    c.add_argument("--h", required=True)
    c.set_defaults(func=cmd_probe)

    c = sub.add_parser("table", parents=[common], help="recompute the published family values as CSV")
    c.add_argument("--section", choices=sorted(SECTIONS), required=True)
    c.add_argument("--max-vertices", type=int, default=30)
    c.add_argument("--format", choices=["csv", "json"], default="csv")
    c.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, GraphError, ConstructionError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
