"""The two periodicity/tileability conditions and their solution translators.

The cycle-balance condition asks for nonnegative, not-all-zero weights on the
simple cycles of each generator graph making the per-letter weighted
abundances agree across generators.  The color-balance condition asks for
nonnegative, not-all-zero tile weights making, for each generator and color,
the weight showing that color forward equal the weight showing it backward.
The two are equivalent; both directions of the equivalence are constructive
and implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cycles as cyc
from .feasible import (
    Infeasible,
    LinearSystem,
    integer_scale,
    solve_nonneg_nontrivial,
)
from .model import GraphFamily, WangTileSet, color_class, require_valid, wang_to_graphs


class MismatchedInstance(ValueError):
    """The graph family is not the one obtained from the tile set."""


class NonIntegerSolution(ValueError):
    """Tile weights must be integers (use integer_scale first)."""


class EquivalenceViolation(RuntimeError):
    """The two conditions disagreed or a translation failed verification.

    This signals an implementation bug, never an expected outcome.
    """


@dataclass(frozen=True)
class SSSolution:
    """Cycle weights, keyed (generator, class position); class position j
    refers to the j-th entry (1-based) of the sorted class list per graph."""

    weights: dict[tuple[int, int], Fraction]
    classes: tuple[tuple[cyc.CycleClass, ...], ...]


@dataclass(frozen=True)
class SSPSolution:
    """Tile weights, keyed by tile id."""

    weights: dict[str, Fraction]


@dataclass(frozen=True)
class ConditionFailure:
    reason: str
    system: LinearSystem | None = None
    certificate: tuple[Fraction, ...] | None = None


def cycle_var(i: int, j: int) -> str:
    return f"x_{i}_{j}"


def cycle_balance_system(graphs: GraphFamily):
    """Build the per-letter balance system over cycle-class weights.

    Returns (system, classes) where classes[i-1] lists the cycle classes of
    graph i in canonical order.  One equation per letter and per generator
    i >= 2 equates the letter's weighted abundance in graph i with that in
    graph 1; vacuous equations (no coefficients) are dropped.
    """
    classes = tuple(cyc.enumerate_simple_cycles(g) for g in graphs.graphs)
    variables = tuple(
        cycle_var(i, j)
        for i, cls in enumerate(classes, 1)
        for j in range(1, len(cls) + 1)
    )
    abundances = [
        [cyc.abundance(c) for c in cls] for cls in classes
    ]
    equations = []
    for a in graphs.alphabet:
        for i in range(2, graphs.generators + 1):
            eq: dict[str, int] = {}
            for j, ab in enumerate(abundances[0], 1):
                if ab.get(a, 0):
                    eq[cycle_var(1, j)] = ab[a]
            for j, ab in enumerate(abundances[i - 1], 1):
                if ab.get(a, 0):
                    eq[cycle_var(i, j)] = eq.get(cycle_var(i, j), 0) - ab[a]
            if eq:
                equations.append(eq)
    return LinearSystem(variables, tuple(equations)), classes


def check_starstar(graphs: GraphFamily):
    """Decide the cycle-balance condition for a graph family.

    Fails outright when some graph has no cycle at all; otherwise delegates
    to the exact feasibility solver.
    """
    require_valid(graphs)
    system, classes = cycle_balance_system(graphs)
    for i, cls in enumerate(classes, 1):
        if not cls:
            return ConditionFailure(reason=f"graph {i} has no cycle")
    result = solve_nonneg_nontrivial(system)
    if isinstance(result, Infeasible):
        return ConditionFailure(
            reason="no nonnegative nontrivial solution",
            system=system,
            certificate=result.certificate,
        )
    weights = {}
    for i, cls in enumerate(classes, 1):
        for j in range(1, len(cls) + 1):
            weights[(i, j)] = result.solution[cycle_var(i, j)]
    sol = SSSolution(weights, classes)
    _verify_ss(sol, graphs)
    return sol


def color_balance_system(tiles: WangTileSet) -> LinearSystem:
    """One equation per (generator, color) pair balancing the two color
    classes; pairs with both classes empty are omitted."""
    variables = tiles.tile_ids()
    equations = []
    for i in range(1, tiles.generators + 1):
        for c in tiles.colors:
            fwd = color_class(tiles, c, (i, False))
            bwd = color_class(tiles, c, (i, True))
            if not fwd and not bwd:
                continue
            eq: dict[str, int] = {}
            for t in variables:
                co = (t in fwd) - (t in bwd)
                if co:
                    eq[t] = co
            if eq:
                equations.append(eq)
    return LinearSystem(variables, tuple(equations))


def check_starstar_prime(tiles: WangTileSet):
    """Decide the color-balance condition for a Wang tile set."""
    require_valid(tiles)
    system = color_balance_system(tiles)
    result = solve_nonneg_nontrivial(system)
    if isinstance(result, Infeasible):
        return ConditionFailure(
            reason="no nonnegative nontrivial solution",
            system=system,
            certificate=result.certificate,
        )
    sol = SSPSolution(dict(result.solution))
    _verify_ssp(sol, tiles)
    return sol


def _verify_ss(sol: SSSolution, graphs: GraphFamily):
    if all(v == 0 for v in sol.weights.values()):
        raise EquivalenceViolation("cycle weights are all zero")
    if any(v < 0 for v in sol.weights.values()):
        raise EquivalenceViolation("negative cycle weight")
    for a in graphs.alphabet:
        sums = []
        for i, cls in enumerate(sol.classes, 1):
            total = sum(
                sol.weights[(i, j)] * cyc.abundance(c).get(a, 0)
                for j, c in enumerate(cls, 1)
            )
            sums.append(total)
        if any(s != sums[0] for s in sums):
            raise EquivalenceViolation(f"letter {a!r}: abundance sums differ")


def _verify_ssp(sol: SSPSolution, tiles: WangTileSet):
    if all(v == 0 for v in sol.weights.values()):
        raise EquivalenceViolation("tile weights are all zero")
    if any(v < 0 for v in sol.weights.values()):
        raise EquivalenceViolation("negative tile weight")
    for eq in color_balance_system(tiles).equations:
        if sum(co * sol.weights[t] for t, co in eq.items()) != 0:
            raise EquivalenceViolation("tile weights do not balance colors")


def ss_to_ssp(sol: SSSolution, graphs: GraphFamily, tiles: WangTileSet) -> SSPSolution:
    """Translate cycle weights into tile weights.

    The weight of a tile is its weighted abundance over the cycles of the
    first generator graph; balance for every other generator follows from
    the cross-generator equalities of the input.  The output is verified
    exactly before it is returned.
    """
    if wang_to_graphs(tiles) != graphs:
        raise MismatchedInstance("graphs are not wang_to_graphs(tiles)")
    _verify_ss(sol, graphs)
    weights = {}
    for t in tiles.tile_ids():
        weights[t] = sum(
            (
                sol.weights[(1, j)] * cyc.abundance(c).get(t, 0)
                for j, c in enumerate(sol.classes[0], 1)
            ),
            Fraction(0),
        )
    out = SSPSolution(weights)
    _verify_ssp(out, tiles)
    return out


def ssp_to_ss(sol: SSPSolution, tiles: WangTileSet) -> SSSolution:
    """Translate integer tile weights into cycle weights.

    For each generator, an auxiliary permutation graph on weight-many copies
    of each tile is wired color by color (both sides sorted by tile then
    copy, matched in order).  Its unique cycle cover projects onto closed
    walks of the generator graph; decomposing those yields the class
    weights, which reconstruct every tile weight exactly.
    """
    require_valid(tiles)
    if any(w.denominator != 1 for w in sol.weights.values()):
        raise NonIntegerSolution("tile weights must be integers")
    if any(w < 0 for w in sol.weights.values()):
        raise ValueError("tile weights must be nonnegative")
    if all(w == 0 for w in sol.weights.values()):
        raise ValueError("tile weights must not all be zero")

    graphs = wang_to_graphs(tiles)
    classes = tuple(cyc.enumerate_simple_cycles(g) for g in graphs.graphs)
    counts = {t.id: int(sol.weights.get(t.id, 0)) for t in tiles.tiles}
    tile_pos = {t.id: k for k, t in enumerate(tiles.tiles)}
    vertices = [
        (tid, k) for tid in tiles.tile_ids() for k in range(1, counts[tid] + 1)
    ]

    weights: dict[tuple[int, int], Fraction] = {}
    for i in range(1, tiles.generators + 1):
        succ: dict[tuple[str, int], tuple[str, int]] = {}
        for c in tiles.colors:
            fwd = sorted(
                (v for v in vertices if v[0] in color_class(tiles, c, (i, False))),
                key=lambda v: (tile_pos[v[0]], v[1]),
            )
            bwd = sorted(
                (v for v in vertices if v[0] in color_class(tiles, c, (i, True))),
                key=lambda v: (tile_pos[v[0]], v[1]),
            )
            if len(fwd) != len(bwd):
                raise ValueError(
                    f"color {c!r} unbalanced for generator {i}: input weights are "
                    "not a color-balance solution"
                )
            for a, b in zip(fwd, bwd):
                succ[a] = b

        class_index = {c: j for j, c in enumerate(classes[i - 1], 1)}
        tally: dict[int, int] = {}
        visited = set()
        for start in vertices:
            if start in visited:
                continue
            orbit = [start]
            visited.add(start)
            v = succ[start]
            while v != start:
                orbit.append(v)
                visited.add(v)
                v = succ[v]
            walk = [tid for tid, _ in orbit]
            for cls, mult in cyc.decompose_cycle(walk, graphs.graph(i)).items():
                tally[class_index[cls]] = tally.get(class_index[cls], 0) + mult
        for j in range(1, len(classes[i - 1]) + 1):
            weights[(i, j)] = Fraction(tally.get(j, 0))

        # reconstruction identity: class weights recover each tile weight
        for tid in tiles.tile_ids():
            total = sum(
                weights[(i, j)] * cyc.abundance(c).get(tid, 0)
                for j, c in enumerate(classes[i - 1], 1)
            )
            if total != counts[tid]:
                raise EquivalenceViolation(
                    f"reconstruction failed for tile {tid!r}, generator {i}"
                )

    out = SSSolution(weights, classes)
    _verify_ss(out, graphs)
    return out


@dataclass(frozen=True)
class EquivalenceReport:
    holds: bool
    ss: object
    ssp: object
    tile_weights_from_cycles: SSPSolution | None
    cycle_weights_from_tiles: SSSolution | None


def check_equivalence(tiles: WangTileSet) -> EquivalenceReport:
    """Run both conditions on a tile set and cross-check the equivalence.

    Verdicts must agree; on the feasible side both translators run and their
    outputs are verified against the opposite condition.  Any mismatch
    raises EquivalenceViolation, which indicates a bug.
    """
    require_valid(tiles)
    graphs = wang_to_graphs(tiles)
    ss = check_starstar(graphs)
    ssp = check_starstar_prime(tiles)
    ss_ok = isinstance(ss, SSSolution)
    ssp_ok = isinstance(ssp, SSPSolution)
    if ss_ok != ssp_ok:
        raise EquivalenceViolation(
            f"verdicts disagree: cycle balance {ss_ok}, color balance {ssp_ok}"
        )
    if not ss_ok:
        return EquivalenceReport(False, ss, ssp, None, None)
    translated_ssp = ss_to_ssp(ss, graphs, tiles)
    scaled = {t: Fraction(v) for t, v in integer_scale(ssp.weights).items()}
    translated_ss = ssp_to_ss(SSPSolution(scaled), tiles)
    return EquivalenceReport(True, ss, ssp, translated_ssp, translated_ss)


def render_equation(eq: dict[str, int], variables) -> str:
    """Human-readable "lhs = rhs" form with positive terms on the left."""
    pos = [
        (v, co) for v in variables for co in [eq.get(v, 0)] if co > 0
    ]
    neg = [(v, -co) for v in variables for co in [eq.get(v, 0)] if co < 0]

    def term(v, co):
        return v if co == 1 else f"{co}*{v}"

    lhs = " + ".join(term(v, co) for v, co in pos) or "0"
    rhs = " + ".join(term(v, co) for v, co in neg) or "0"
    return f"{lhs} = {rhs}"
