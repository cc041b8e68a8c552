"""Brute-force ground truth at desk scale.

Exhaustive backtracking searches for rectangle and torus tilings of the
plane-like case (two generators), exhaustive labelings of free-group balls,
and exact frequency audits of torus tilings over growing centered boxes.
Searches are deterministic: cells in row-major order, tiles in declaration
order.  A node budget separates "no tiling exists" from "search truncated".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import GraphFamily, WangTileSet, color_class, require_valid
from .star import Word, iter_reduced_words

DEFAULT_NODE_BUDGET = 10_000_000


class ResourceLimit(RuntimeError):
    """Search stopped by the node budget, not by exhausting the space."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"node budget exhausted after {nodes} nodes")


class DefectBoundExceeded(RuntimeError):
    """A frequency defect exceeded its theoretical bound (a bug somewhere)."""


@dataclass(frozen=True)
class TilingGrid:
    """Assignment of tile ids to a width x height region.

    cells maps (col, row); on the torus topology the adjacency constraints
    wrap around in both directions.
    """

    width: int
    height: int
    topology: str  # "rectangle" | "torus"
    cells: dict[tuple[int, int], str]


def grid_violations(grid: TilingGrid, tiles: WangTileSet) -> list[str]:
    """Full independent re-validation of all adjacency constraints."""
    by_id = {t.id: t for t in tiles.tiles}
    out = []
    if tiles.generators != 2:
        return ["grid oracles require exactly 2 generators"]
    if grid.topology not in ("rectangle", "torus"):
        return [f"unknown topology {grid.topology!r}"]
    wrap = grid.topology == "torus"
    for (c, r), tid in grid.cells.items():
        if tid not in by_id:
            out.append(f"unknown tile {tid!r} at {(c, r)}")
    if set(grid.cells) != {(c, r) for c in range(grid.width) for r in range(grid.height)}:
        out.append("cells do not cover the region exactly")
    if out:
        return out
    for r in range(grid.height):
        for c in range(grid.width):
            here = by_id[grid.cells[(c, r)]]
            if c + 1 < grid.width or wrap:
                right = by_id[grid.cells[((c + 1) % grid.width, r)]]
                if here.sides[(1, False)] != right.sides[(1, True)]:
                    out.append(f"horizontal mismatch at {(c, r)}")
            if r + 1 < grid.height or wrap:
                up = by_id[grid.cells[(c, (r + 1) % grid.height)]]
                if here.sides[(2, False)] != up.sides[(2, True)]:
                    out.append(f"vertical mismatch at {(c, r)}")
    return out


def _search_grid(tiles: WangTileSet, w: int, h: int, wrap: bool, node_budget: int):
    require_valid(tiles)
    if tiles.generators != 2:
        raise ValueError("grid oracles require exactly 2 generators")
    if w < 1 or h < 1:
        raise ValueError("width and height must be >= 1")
    order = list(tiles.tiles)
    total = w * h
    assignment: list = [None] * total
    nodes = 0

    g1, g1i, g2, g2i = (1, False), (1, True), (2, False), (2, True)

    def fits(k: int, tile) -> bool:
        # check the cell against all already-placed neighbors (row-major
        # order means left and below, plus the wrap edges back to the first
        # column/row; width or height 1 makes a cell its own neighbor)
        c, r = k % w, k // w
        if c > 0:
            if assignment[k - 1].sides[g1] != tile.sides[g1i]:
                return False
        elif wrap and w == 1:
            if tile.sides[g1] != tile.sides[g1i]:
                return False
        if wrap and c == w - 1 and w > 1:
            if tile.sides[g1] != assignment[r * w].sides[g1i]:
                return False
        if r > 0:
            if assignment[k - w].sides[g2] != tile.sides[g2i]:
                return False
        elif wrap and h == 1:
            if tile.sides[g2] != tile.sides[g2i]:
                return False
        if wrap and r == h - 1 and h > 1:
            if tile.sides[g2] != assignment[c].sides[g2i]:
                return False
        return True

    k = 0
    choice = [0] * total
    while True:
        if k == total:
            cells = {
                (k2 % w, k2 // w): assignment[k2].id for k2 in range(total)
            }
            return TilingGrid(w, h, "torus" if wrap else "rectangle", cells)
        placed = False
        while choice[k] < len(order):
            tile = order[choice[k]]
            choice[k] += 1
            nodes += 1
            if nodes > node_budget:
                raise ResourceLimit(nodes)
            if fits(k, tile):
                assignment[k] = tile
                placed = True
                break
        if placed:
            k += 1
            if k < total:
                choice[k] = 0
        else:
            assignment[k] = None
            k -= 1
            if k < 0:
                return None
            assignment[k] = None


def tile_rectangle(
    tiles: WangTileSet, w: int, h: int, node_budget: int = DEFAULT_NODE_BUDGET
):
    """A free-boundary rectangle tiling, or None after exhaustive search."""
    return _search_grid(tiles, w, h, wrap=False, node_budget=node_budget)


def tile_torus(
    tiles: WangTileSet, w: int, h: int, node_budget: int = DEFAULT_NODE_BUDGET
):
    """A wrap-around tiling (a strongly periodic plane tiling), or None."""
    return _search_grid(tiles, w, h, wrap=True, node_budget=node_budget)


def tile_free_ball(
    graphs: GraphFamily, radius: int, node_budget: int = DEFAULT_NODE_BUDGET
):
    """Exhaustive search for a valid labeling of the radius-R free-group ball.

    Subtrees hanging off distinct ball nodes are independent, so the search
    memoizes per (letter, entering direction, remaining depth); the result
    is identical to full backtracking.  Returns a labeling dict or None.
    """
    require_valid(graphs)
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if not graphs.alphabet:
        return None
    d = graphs.generators
    directions = [(i, inv) for i in range(1, d + 1) for inv in (False, True)]
    nodes = 0

    def neighbors(letter: str, direction) -> tuple[str, ...]:
        i, inv = direction
        g = graphs.graph(i)
        return g.predecessors(letter) if inv else g.successors(letter)

    memo: dict = {}

    def can(letter: str, entered, depth: int) -> bool:
        nonlocal nodes
        if depth == 0:
            return True
        key = (letter, entered, depth)
        if key in memo:
            return memo[key]
        nodes += 1
        if nodes > node_budget:
            raise ResourceLimit(nodes)
        back = (entered[0], not entered[1])
        ok = all(
            any(can(b, t, depth - 1) for b in neighbors(letter, t))
            for t in directions
            if t != back
        )
        memo[key] = ok
        return ok

    root = None
    for a in graphs.alphabet:
        nodes += 1
        if nodes > node_budget:
            raise ResourceLimit(nodes)
        if radius == 0 or all(
            any(can(b, t, radius - 1) for b in neighbors(a, t)) for t in directions
        ):
            root = a
            break
    if root is None:
        return None

    labeling: dict[Word, str] = {(): root}
    for w in iter_reduced_words(d, radius):
        if not w:
            continue
        nodes += 1
        if nodes > node_budget:
            raise ResourceLimit(nodes)
        parent = labeling[w[:-1]]
        t = w[-1]
        depth_left = radius - len(w)
        labeling[w] = next(
            b for b in neighbors(parent, t) if can(b, t, depth_left)
        )
    return labeling


@dataclass(frozen=True)
class FrequencyEntry:
    radius: int
    frequencies: dict[str, Fraction]
    defects: dict[tuple[int, str], Fraction]  # (generator, color) -> defect
    bound: Fraction


@dataclass(frozen=True)
class FrequencyReport:
    entries: tuple[FrequencyEntry, ...]


def box_size(k: int, d: int = 2) -> int:
    """Number of lattice points of the centered box [-k, k]^d."""
    return (2 * k + 1) ** d


def shift_boundary(k: int, d: int = 2) -> int:
    """Size of the symmetric difference between [-k, k]^d and its unit shift."""
    return 2 * (2 * k + 1) ** (d - 1)


def folner_audit(grid: TilingGrid, tiles: WangTileSet, radii) -> FrequencyReport:
    """Empirical tile frequencies of a torus tiling over growing boxes.

    The torus tiling is read as a doubly periodic configuration of the
    plane; for each radius k the report holds the exact frequency vector
    over the box [-k, k]^2, the per-(generator, color) balance defects and
    the theoretical bound 4/(2k+1).  Every defect is checked against the
    bound, and frequencies always sum to exactly 1.
    """
    require_valid(tiles)
    if grid.topology != "torus":
        raise ValueError("frequency audit is defined for torus tilings only")
    bad = grid_violations(grid, tiles)
    if bad:
        raise ValueError("invalid tiling: " + "; ".join(bad))

    w, h = grid.width, grid.height
    entries = []
    for k in radii:
        if k < 0:
            raise ValueError("radii must be >= 0")
        side = 2 * k + 1
        col_count = [0] * w
        row_count = [0] * h
        for a in range(-k, k + 1):
            col_count[a % w] += 1
            row_count[a % h] += 1
        counts: dict[str, int] = {t.id: 0 for t in tiles.tiles}
        for (c, r), tid in grid.cells.items():
            counts[tid] += col_count[c] * row_count[r]
        total = side * side
        freqs = {tid: Fraction(n, total) for tid, n in counts.items()}
        if sum(freqs.values()) != 1:
            raise RuntimeError("frequency vector does not sum to 1")

        bound = Fraction(4, side)
        defects: dict[tuple[int, str], Fraction] = {}
        for i in (1, 2):
            for c in tiles.colors:
                fwd = color_class(tiles, c, (i, False))
                bwd = color_class(tiles, c, (i, True))
                if not fwd and not bwd:
                    continue
                defect = abs(
                    sum(freqs[t] for t in fwd) - sum(freqs[t] for t in bwd)
                )
                if defect > bound:
                    raise DefectBoundExceeded(
                        f"defect {defect} > {bound} at k={k}, generator {i}, "
                        f"color {c!r}"
                    )
                defects[(i, c)] = defect
        entries.append(FrequencyEntry(k, freqs, defects, bound))
    return FrequencyReport(tuple(entries))
