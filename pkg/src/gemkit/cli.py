"""Command-line interface.

Subcommands: info, genus, bounds, consum, check, enum, iso, builtin.
Reports are JSON by default (``--format human`` for tables, ``--format
compact`` for graph output); every number is exact, with half-integers and
rationals rendered as strings.  Exit status: 0 success, 1 domain errors,
2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import catalog, reports
from .bounds import (
    ManifoldParams,
    is_semisimple,
    lens_times_circle_bounds,
    surface_product_bounds,
    theorem1_lower_bounds,
    validate_params_for_graph,
)
from .colored_graphs import (
    ColoredGraph,
    are_isomorphic,
    from_compact,
    from_json,
    to_compact,
    to_json,
)
from .complex_invariants import euler_characteristic, gem_complexity_of_graph
from .errors import GemError, FormatError
from .fixtures import FIXTURE_KEYS, builtin
from .regular_genus import regular_genus_of_graph
from .reports import compute_invariants, invariants_to_json


def _threads() -> int:
    raw = os.environ.get("GEMKIT_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def _parse_graph_text(text: str) -> ColoredGraph:
    text = text.strip()
    if not text:
        raise FormatError("empty graph input")
    if text.startswith("{"):
        return from_json(text)
    return from_compact(text.splitlines()[0])


def _read_graph(path_or_dash: Optional[str], builtin_key: Optional[str]) -> ColoredGraph:
    if builtin_key is not None:
        return builtin(builtin_key).graph
    if path_or_dash is None or path_or_dash == "-":
        return _parse_graph_text(sys.stdin.read())
    with open(path_or_dash, "r", encoding="utf-8") as fh:
        return _parse_graph_text(fh.read())


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--builtin", choices=FIXTURE_KEYS, default=None,
                   help="use a built-in fixture instead of a file")
    p.add_argument("--graph", default=None, metavar="FILE",
                   help="graph file (JSON or compact); '-' or omitted reads stdin")


def _emit(obj, fmt: str) -> None:
    if fmt == "human":
        _emit_human(obj)
    else:
        print(json.dumps(obj, separators=(",", ":")))


def _emit_human(obj, indent: str = "") -> None:
    if isinstance(obj, dict):
        width = max((len(str(k)) for k in obj), default=0)
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                print(f"{indent}{k}:")
                _emit_human(v, indent + "  ")
            else:
                print(f"{indent}{str(k):<{width}}  {v}")
    elif isinstance(obj, list):
        for v in obj:
            _emit_human(v, indent)
            if isinstance(v, dict):
                print(f"{indent}-")
    else:
        print(f"{indent}{obj}")


def _graph_output(g: ColoredGraph, fmt: str) -> str:
    return to_compact(g) if fmt == "compact" else to_json(g)


# -- subcommand handlers -------------------------------------------------


def _cmd_info(args) -> int:
    g = _read_graph(args.graph, args.builtin)
    _emit(invariants_to_json(compute_invariants(g)), args.format)
    return 0


def _cmd_genus(args) -> int:
    g = _read_graph(args.graph, args.builtin)
    inv = compute_invariants(g)
    if inv.genus is None:
        raise GemError("regular genus needs a connected graph")
    out = reports.genus_to_json(inv.genus)
    if inv.residue_rho is not None:
        out["residue_rho"] = {
            str(i): {lbl: str(v) for lbl, v in per.items()}
            for i, per in inv.residue_rho.items()
        }
    _emit(out, args.format)
    return 0


def _parse_product(spec: str) -> tuple[int, int]:
    kind, _, rest = spec.partition(":")
    params = [int(x) for x in rest.split(",") if x != ""]
    if kind == "M3xS1":
        if len(params) != 1:
            raise GemError(f"M3xS1 takes one rank parameter, got {rest!r}")
        genus_lb, k_lb = lens_times_circle_bounds(params[0])
    elif kind in ("TxT", "TxU", "UxU"):
        if len(params) != 2:
            raise GemError(f"{kind} takes two genus parameters, got {rest!r}")
        genus_lb, k_lb = surface_product_bounds(kind, params[0], params[1])
    else:
        raise GemError(f"unknown product kind {kind!r}")
    return genus_lb, k_lb


def _cmd_bounds(args) -> int:
    if args.product is not None:
        genus_lb, k_lb = _parse_product(args.product)
        _emit({"product": args.product, "genus_lb": genus_lb, "k_lb": k_lb},
              args.format)
        return 0
    if args.rank is None:
        raise GemError("--rank is required unless --product is given")
    out: dict = {"rank": args.rank}
    graph = None
    if args.chi is not None:
        if args.builtin is not None or args.graph is not None:
            raise GemError("give either --chi or a graph source, not both")
        chi = args.chi
        params = ManifoldParams(chi=chi, rank=args.rank)
    else:
        graph = _read_graph(args.graph, args.builtin)
        chi = euler_characteristic(graph)
        params = ManifoldParams(chi=chi, rank=args.rank)
        validate_params_for_graph(params, graph)
    k_lb, genus_lb = theorem1_lower_bounds(params)
    out.update({"chi": chi, "k_lb": k_lb, "genus_lb": genus_lb})
    if graph is not None:
        k_graph = gem_complexity_of_graph(graph)
        rho = regular_genus_of_graph(graph)
        attains_k = k_graph == k_lb
        attains_g = rho == genus_lb
        out.update({
            "k_graph": k_graph,
            "rho": str(rho),
            "verdict": ("attains_both" if attains_k and attains_g
                        else "attains_neither" if not attains_k and not attains_g
                        else "mixed"),
        })
    _emit(out, args.format)
    return 0


def _cmd_consum(args) -> int:
    sources = [("builtin", k) for k in args.builtin or []]
    sources += [("graph", p) for p in args.graph or []]
    if len(sources) != 2:
        raise GemError(f"consum needs exactly two graphs, got {len(sources)}")
    graphs = [
        builtin(v).graph if kind == "builtin" else _read_graph(v, None)
        for kind, v in sources
    ]
    g1, g2 = graphs
    result = g1.connected_sum(args.va, g2, args.vb)
    # two inequivalent sums may exist; report where the chosen vertices sit
    for label, g, v in (("first", g1, args.va), ("second", g2, args.vb)):
        side = g.bipartition()
        if side is not None:
            print(f"consum: vertex {v} of the {label} graph is in bipartition "
                  f"class {side[v]}", file=sys.stderr)
    print(_graph_output(result, args.format))
    return 0


def _cmd_check(args) -> int:
    g = _read_graph(args.graph, args.builtin)
    chi = euler_characteristic(g)
    params = ManifoldParams(chi=chi, rank=args.rank)
    validate_params_for_graph(params, g)
    inv = compute_invariants(g)
    semi = is_semisimple(g, params)
    k_lb, genus_lb = theorem1_lower_bounds(params)
    attains_k = inv.k_graph == k_lb
    attains_g = inv.rho == genus_lb
    _emit({
        "order": g.order,
        "chi": chi,
        "rank": args.rank,
        "rank_ub": inv.rank_ub,
        "semisimple": semi,
        "type_candidate": inv.semisimple_candidate,
        "order_identity": g.order == 6 * chi + 20 * args.rank - 10,
        "k_graph": inv.k_graph,
        "rho": str(inv.rho),
        "k_lb": k_lb,
        "genus_lb": genus_lb,
        "verdict": ("attains_both" if attains_k and attains_g
                    else "attains_neither" if not attains_k and not attains_g
                    else "mixed"),
    }, args.format)
    return 0


def _cmd_enum(args) -> int:
    filt = catalog.EnumFilter(
        bipartite_only=args.bipartite,
        contracted_only=args.contracted,
        connected_only=args.connected,
        require_manifold_conditions=args.manifold,
    )
    max_order = args.max_order if args.max_order is not None else 8
    if max_order > 8 and not args.force:
        raise GemError(
            f"max order {max_order} is beyond desk scale; pass --force "
            "(progress goes to stderr)"
        )

    def progress(order: int, total: int) -> None:
        if args.force:
            print(f"enum: order {order} done, {total} graphs so far",
                  file=sys.stderr)

    if args.survey:
        rows = catalog.survey(args.colors, max_order, filt, workers=_threads())
        _emit(rows, args.format)
        return 0
    count = 0
    by_order: dict[str, int] = {}
    for g in catalog.enumerate_graphs(args.colors, max_order, filt, progress):
        print(to_compact(g))
        count += 1
        by_order[str(g.order)] = by_order.get(str(g.order), 0) + 1
    print(json.dumps({"count": count, "by_order": by_order},
                     separators=(",", ":")))
    return 0


def _cmd_iso(args) -> int:
    g1 = _read_graph(args.file_a, None)
    g2 = _read_graph(args.file_b, None)
    cert = are_isomorphic(g1, g2, allow_color_permutation=args.color_permutation)
    if cert is None:
        _emit({"isomorphic": False}, args.format)
        return 1
    _emit({
        "isomorphic": True,
        "vertex_map": list(cert.vertex_map),
        "color_map": list(cert.color_map),
    }, args.format)
    return 0


def _cmd_builtin(args) -> int:
    if args.list:
        _emit(list(FIXTURE_KEYS), args.format)
        return 0
    if args.key is None:
        raise GemError("give a fixture key or --list")
    fx = builtin(args.key)
    if args.format == "compact":
        print(to_compact(fx.graph))
        return 0
    _emit({
        "key": fx.key,
        "name": fx.declared.name,
        "chi": fx.declared.chi,
        "rank": fx.declared.rank,
        "provenance": fx.provenance,
        "graph": json.loads(to_json(fx.graph)),
    }, args.format)
    return 0


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gemkit",
        description="invariants of edge-colored graph encodings of PL 4-manifolds",
        epilog="GEMKIT_THREADS caps the worker count of parallel sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, graph_source: bool = True) -> None:
        if graph_source:
            _add_graph_source(p)
        p.add_argument("--format", choices=("json", "compact", "human"),
                       default="json")
        p.add_argument("--human", dest="format", action="store_const",
                       const="human", help="same as --format human")

    p = sub.add_parser("info", help="full invariant report of a graph")
    common(p)
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("genus", help="genus per cyclic color ordering")
    common(p)
    p.set_defaults(func=_cmd_genus)

    p = sub.add_parser("bounds", help="lower bounds from (chi, rank) or a graph")
    common(p)
    p.add_argument("--chi", type=int, default=None)
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--product", default=None, metavar="KIND:PARAMS",
                   help="TxT:g,r | TxU:g,h | UxU:h,k | M3xS1:r")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("consum", help="graph connected sum at chosen vertices")
    p.add_argument("--builtin", action="append", choices=FIXTURE_KEYS,
                   help="may repeat; builtins come before --graph files")
    p.add_argument("--graph", action="append", metavar="FILE")
    p.add_argument("--va", type=int, required=True,
                   help="vertex deleted from the first graph")
    p.add_argument("--vb", type=int, required=True,
                   help="vertex deleted from the second graph")
    p.add_argument("--format", choices=("json", "compact"), default="json")
    p.set_defaults(func=_cmd_consum)

    p = sub.add_parser("check", help="semi-simplicity and bound attainment")
    common(p)
    p.add_argument("--rank", type=int, required=True,
                   help="declared rank of the fundamental group")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("enum", help="isomorph-free catalogue up to an order")
    p.add_argument("--colors", type=int, default=5)
    p.add_argument("--max-order", type=int, default=None,
                   help="even bound; defaults to the desk-scale cap 8")
    p.add_argument("--contracted", action="store_true")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--manifold", action="store_true",
                   help="keep only graphs passing the necessary 4-manifold conditions")
    p.add_argument("--survey", action="store_true",
                   help="emit the grouped invariant table instead of graphs")
    p.add_argument("--force", action="store_true",
                   help="allow orders beyond 8, with progress on stderr")
    p.add_argument("--format", choices=("json", "human"), default="json")
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("iso", help="isomorphism certificate for two graph files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--color-permutation", action="store_true",
                   help="also allow permuting the color set")
    p.add_argument("--format", choices=("json", "human"), default="json")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("builtin", help="emit a built-in fixture")
    p.add_argument("key", nargs="?", choices=FIXTURE_KEYS)
    p.add_argument("--list", action="store_true")
    p.add_argument("--format", choices=("json", "compact", "human"),
                   default="json")
    p.set_defaults(func=_cmd_builtin)

    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GemError as exc:
        print(f"gemkit: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
