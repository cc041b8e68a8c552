"""Command-line front end: machine-readable reports over the whole pipeline.

Exit codes: 0 when every requested check ran (and no condition failed),
2 when a condition failed (the tile set provably cannot tile), 1 for
usage, IO, or validation errors, and for searches cut off by the node
budget.  Reports are deterministic byte streams: stable key order, exact
fractions rendered as strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import conditions, counterexample as cx, cycles, model, oracle, star

BUDGET_ENV = "TILECHECK_NODE_BUDGET"


def jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, frozenset):
        return sorted(value)
    return value


def emit(report: dict, fmt: str) -> None:
    report = jsonable(report)
    if fmt == "json":
        print(json.dumps(report, indent=2))
        return
    for line in _text_lines(report, ""):
        print(line)


def _text_lines(value, indent):
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                yield f"{indent}{k}:"
                yield from _text_lines(v, indent + "  ")
            else:
                yield f"{indent}{k}: {_scalar(v)}"
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                yield f"{indent}-"
                yield from _text_lines(v, indent + "  ")
            else:
                yield f"{indent}- {_scalar(v)}"
    else:
        yield f"{indent}{_scalar(value)}"


def _scalar(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list) and not v:
        return "[]"
    if isinstance(v, dict) and not v:
        return "{}"
    return str(v)


def load_input(path):
    """Load a tiles or graphs file, telling them apart by their keys."""
    obj = model.load_json(path)
    if isinstance(obj, dict) and "tiles" in obj:
        return model.tiles_from_obj(obj)
    if isinstance(obj, dict) and "graphs" in obj:
        return model.graphs_from_obj(obj)
    raise model.ParseError(f"{path}: neither a tile set nor a graph family file")


def as_graphs(data):
    if isinstance(data, model.WangTileSet):
        return model.wang_to_graphs(data)
    return data


def need_tiles(data, path):
    if not isinstance(data, model.WangTileSet):
        raise model.ParseError(f"{path}: this command needs a tile set file")
    return data


def resolve_budget(args) -> int:
    if getattr(args, "node_budget", None) is not None:
        return args.node_budget
    env = os.environ.get(BUDGET_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise model.ParseError(f"{BUDGET_ENV} must be an integer") from exc
    return oracle.DEFAULT_NODE_BUDGET


# --- report fragments -------------------------------------------------------


def star_fragment(graphs: model.GraphFamily) -> dict:
    result = star.check_star(graphs)
    trace = star.pruning_trace(graphs)
    order = {v: k for k, v in enumerate(graphs.alphabet)}
    trace_out = [
        {"letter": a, "round": r}
        for a, r in sorted(trace.items(), key=lambda kv: (kv[1], order[kv[0]]))
    ]
    if isinstance(result, star.StarFailure):
        return {
            "holds": False,
            "subalphabet": [],
            "psi": None,
            "psi_back": None,
            "pruning_trace": trace_out,
        }
    d = graphs.generators
    psi = {
        a: {model.side_key((i, False)): result.forward_choice[(a, i)] for i in range(1, d + 1)}
        for a in result.subalphabet
    }
    psi_back = {
        a: {model.side_key((i, False)): result.backward_choice[(a, i)] for i in range(1, d + 1)}
        for a in result.subalphabet
    }
    return {
        "holds": True,
        "subalphabet": list(result.subalphabet),
        "psi": psi,
        "psi_back": psi_back,
        "pruning_trace": trace_out,
    }


def _system_fragment(system) -> dict:
    return {
        "variables": list(system.variables),
        "equations": [dict(eq) for eq in system.equations],
        "rendered": [
            conditions.render_equation(eq, system.variables) for eq in system.equations
        ],
    }


def ss_fragment(graphs: model.GraphFamily) -> dict:
    system, classes = conditions.cycle_balance_system(graphs)
    result = conditions.check_starstar(graphs)
    out = {
        "holds": isinstance(result, conditions.SSSolution),
        "cycles": [
            {"generator": i, "classes": [list(c) for c in cls]}
            for i, cls in enumerate(classes, 1)
        ],
        "system": _system_fragment(system),
        "solution": None,
        "certificate": None,
        "reason": None,
    }
    if isinstance(result, conditions.SSSolution):
        out["solution"] = {
            conditions.cycle_var(i, j): w for (i, j), w in sorted(result.weights.items())
        }
    else:
        out["reason"] = result.reason
        if result.certificate is not None:
            out["certificate"] = list(result.certificate)
    return out


def ssp_fragment(tiles: model.WangTileSet) -> dict:
    system = conditions.color_balance_system(tiles)
    result = conditions.check_starstar_prime(tiles)
    out = {
        "holds": isinstance(result, conditions.SSPSolution),
        "system": _system_fragment(system),
        "solution": None,
        "certificate": None,
        "reason": None,
    }
    if isinstance(result, conditions.SSPSolution):
        out["solution"] = {t: result.weights[t] for t in tiles.tile_ids()}
    else:
        out["reason"] = result.reason
        if result.certificate is not None:
            out["certificate"] = list(result.certificate)
    return out


def grid_rows(grid: oracle.TilingGrid | None):
    if grid is None:
        return None
    return [
        [grid.cells[(c, r)] for c in range(grid.width)] for r in range(grid.height)
    ]


# --- commands ----------------------------------------------------------------


def cmd_star(args):
    graphs = as_graphs(load_input(args.file))
    model.require_valid(graphs)
    frag = star_fragment(graphs)
    return {"command": "star", "input": args.file, **frag}, 0 if frag["holds"] else 2


def cmd_cycles(args):
    graphs = as_graphs(load_input(args.file))
    model.require_valid(graphs)
    out = []
    for i, g in enumerate(graphs.graphs, 1):
        classes = cycles.enumerate_simple_cycles(g)
        out.append(
            {
                "generator": i,
                "classes": [
                    {
                        "cycle": list(c),
                        "length": len(c),
                        "abundance": cycles.abundance(c),
                    }
                    for c in classes
                ],
            }
        )
    return {"command": "cycles", "input": args.file, "graphs": out}, 0


def cmd_ss(args):
    graphs = as_graphs(load_input(args.file))
    model.require_valid(graphs)
    frag = ss_fragment(graphs)
    return {"command": "ss", "input": args.file, **frag}, 0 if frag["holds"] else 2


def cmd_ssp(args):
    tiles = need_tiles(load_input(args.file), args.file)
    model.require_valid(tiles)
    frag = ssp_fragment(tiles)
    return {"command": "ssp", "input": args.file, **frag}, 0 if frag["holds"] else 2


def cmd_equiv(args):
    tiles = need_tiles(load_input(args.file), args.file)
    model.require_valid(tiles)
    report = conditions.check_equivalence(tiles)
    out = {
        "command": "equiv",
        "input": args.file,
        "holds": report.holds,
        "consistent": True,
        "ss": ss_fragment(model.wang_to_graphs(tiles)),
        "ssp": ssp_fragment(tiles),
        "translations": None,
    }
    if report.holds:
        out["translations"] = {
            "tile_weights_from_cycles": dict(
                report.tile_weights_from_cycles.weights
            ),
            "cycle_weights_from_tiles": {
                conditions.cycle_var(i, j): w
                for (i, j), w in sorted(report.cycle_weights_from_tiles.weights.items())
            },
        }
    return out, 0 if report.holds else 2


def cmd_tile(args):
    tiles = need_tiles(load_input(args.file), args.file)
    model.require_valid(tiles)
    budget = resolve_budget(args)
    search = oracle.tile_rectangle if args.shape == "rect" else oracle.tile_torus
    out = {
        "command": "tile",
        "input": args.file,
        "shape": args.shape,
        "width": args.w,
        "height": args.h,
        "result": None,
        "grid": None,
    }
    try:
        grid = search(tiles, args.w, args.h, node_budget=budget)
    except oracle.ResourceLimit as exc:
        out["result"] = "resource-limit"
        out["nodes"] = exc.nodes
        return out, 1
    if grid is None:
        out["result"] = "none"
        # an exhausted rectangle search proves the set tiles nothing at all
        return out, 2 if args.shape == "rect" else 0
    out["result"] = "tiled"
    out["grid"] = grid_rows(grid)
    return out, 0


def cmd_freq(args):
    tiles = need_tiles(load_input(args.file), args.file)
    model.require_valid(tiles)
    budget = resolve_budget(args)
    out = {
        "command": "freq",
        "input": args.file,
        "width": args.w,
        "height": args.h,
        "found": False,
        "grid": None,
        "audit": None,
    }
    try:
        grid = oracle.tile_torus(tiles, args.w, args.h, node_budget=budget)
    except oracle.ResourceLimit as exc:
        out["result"] = "resource-limit"
        out["nodes"] = exc.nodes
        return out, 1
    if grid is None:
        return out, 2
    out["found"] = True
    out["grid"] = grid_rows(grid)
    report = oracle.folner_audit(grid, tiles, range(1, args.max_radius + 1))
    out["audit"] = [
        {
            "radius": e.radius,
            "bound": e.bound,
            "frequencies": e.frequencies,
            "defects": [
                {"generator": i, "color": c, "defect": v}
                for (i, c), v in sorted(e.defects.items())
            ],
        }
        for e in report.entries
    ]
    return out, 0


def cmd_counterexample(args):
    pres = model.load_presentation(args.file)
    model.require_valid(pres)
    family, tiles = cx.build_counterexample(pres, args.relator)
    report = cx.verify_counterexample(family, tiles, pres, args.relator)
    out_path = None
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(model.tiles_to_obj(tiles), fh, indent=2)
            fh.write("\n")
        out_path = args.out
    relator = pres.relators[args.relator]
    return {
        "command": "counterexample",
        "input": args.file,
        "relator": [model.side_key(s) for s in relator],
        "tiles": model.tiles_to_obj(tiles),
        "graphs": model.graphs_to_obj(family),
        "verification": {
            "star_full_alphabet": report.star_full_alphabet,
            "ss_feasible": report.ss_feasible,
            "ssp_feasible": report.ssp_feasible,
            "uniform_weight": report.uniform_weight,
            "forced_walk": list(report.forced_walk),
            "emptiness_witnessed": report.emptiness_witnessed,
            "rectangle_2x2": report.rectangle_2x2,
            "torus_upto_4": report.torus_upto_4,
        },
        "out": out_path,
    }, 0


def cmd_audit(args):
    tiles = need_tiles(load_input(args.file), args.file)
    violations = model.validate(tiles)
    if violations:
        return {
            "command": "audit",
            "input": args.file,
            "validation": [str(v) for v in violations],
        }, 1
    budget = resolve_budget(args)
    graphs = model.wang_to_graphs(tiles)
    star_frag = star_fragment(graphs)
    ssp_frag = ssp_fragment(tiles)
    ss_frag = ss_fragment(graphs)
    equivalence = conditions.check_equivalence(tiles)  # raises on any mismatch
    consistent = ss_frag["holds"] == ssp_frag["holds"]

    probes = {"rectangle": [], "torus": []}
    if tiles.generators == 2 and args.oracle:
        limit = min(args.w, args.h)
        for k in range(1, limit + 1):
            entry = {"width": k, "height": k}
            entry["result"] = _probe(oracle.tile_rectangle, tiles, k, k, budget)
            probes["rectangle"].append(entry)
            if entry["result"] == "none":
                break  # larger rectangles cannot tile either
        for w in range(1, args.w + 1):
            for h in range(1, args.h + 1):
                probes["torus"].append(
                    {
                        "width": w,
                        "height": h,
                        "result": _probe(oracle.tile_torus, tiles, w, h, budget),
                    }
                )

    holds = star_frag["holds"] and ss_frag["holds"] and ssp_frag["holds"]
    out = {
        "command": "audit",
        "input": args.file,
        "validation": [],
        "star": star_frag["holds"],
        "ss": ss_frag["holds"],
        "ssp": ssp_frag["holds"],
        "consistent": consistent,
        "detail": {"star": star_frag, "ss": ss_frag, "ssp": ssp_frag},
        "oracle": probes if (tiles.generators == 2 and args.oracle) else None,
        "equivalence_checked": equivalence is not None,
    }
    return out, 0 if holds else 2


def _probe(search, tiles, w, h, budget):
    try:
        grid = search(tiles, w, h, node_budget=budget)
    except oracle.ResourceLimit:
        return "resource-limit"
    return "none" if grid is None else "tiled"


# --- parser ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # the exit-code contract reserves 2 for failed conditions
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="tilecheck",
        description="Emptiness and periodicity heuristics for Wang tile sets "
        "and generator graph families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, func):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.set_defaults(func=func)
        return p

    p = add("star", "survivor-subalphabet condition", cmd_star)
    p.add_argument("file")

    p = add("cycles", "simple cycle classes per generator", cmd_cycles)
    p.add_argument("file")

    p = add("ss", "cycle-balance condition (graphs or tiles)", cmd_ss)
    p.add_argument("file")

    p = add("ssp", "color-balance condition (tiles)", cmd_ssp)
    p.add_argument("file")

    p = add("equiv", "cross-check both conditions and translate solutions", cmd_equiv)
    p.add_argument("file")

    p = add("tile", "search a rectangle or torus tiling", cmd_tile)
    p.add_argument("file")
    p.add_argument("--shape", choices=("rect", "torus"), default="rect")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--node-budget", type=int, default=None)

    p = add("freq", "torus tiling frequencies over growing boxes", cmd_freq)
    p.add_argument("file")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--max-radius", type=int, default=10)
    p.add_argument("--node-budget", type=int, default=None)

    p = add("counterexample", "tile set from a presentation relator", cmd_counterexample)
    p.add_argument("file")
    p.add_argument("--relator", type=int, default=0)
    p.add_argument("--out", default=None)

    p = add("audit", "full condition ladder plus bounded oracle probes", cmd_audit)
    p.add_argument("file")
    p.add_argument("--w", type=int, default=4)
    p.add_argument("--h", type=int, default=4)
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--no-oracle", dest="oracle", action="store_false")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.func(args)
    except (model.ParseError, model.InvalidInput) as exc:
        print(f"tilecheck: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"tilecheck: error: {exc}", file=sys.stderr)
        return 1
    except (cx.NotReduced, cx.CannotComplete, ValueError) as exc:
        print(f"tilecheck: error: {exc}", file=sys.stderr)
        return 1
    emit(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
