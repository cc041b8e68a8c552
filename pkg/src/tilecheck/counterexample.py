"""Tile sets that pass every condition yet cannot tile a non-free group.

Given a reduced relator w_1...w_n, build one graph per generator on the
vertices 0..n: letter w_i = g_j forces the edge i-1 -> i in graph j, and
w_i = g_j^(-1) forces i -> i-1.  Free reduction keeps those partial edges
functional and acyclic, so each graph completes to a single Hamiltonian
cycle; the functional tile set of the completed family satisfies all three
conditions, while walking the relator from tile 0 forces tile n at the same
group element, so no group in which the relator holds can be tiled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import conditions, cycles, oracle, star
from .model import (
    Digraph,
    GraphFamily,
    Presentation,
    Side,
    WangTileSet,
    graphs_to_wang_functional,
    is_reduced,
    require_valid,
    side_key,
)


class NotReduced(ValueError):
    """The chosen relator contains a cancelling factor."""


class CannotComplete(ValueError):
    """Partial edges violate the degree or acyclicity preconditions."""


class VerificationFailed(RuntimeError):
    """A generated instance failed one of its guaranteed properties."""


def complete_to_hamiltonian(n_vertices: int, partial_edges) -> list[tuple[int, int]]:
    """Extend a functional, acyclic partial edge set on 0..n-1 to one
    directed Hamiltonian cycle containing it.

    The maximal paths of the partial graph are chained in order of their
    least vertex, then the loop is closed.
    """
    succ: dict[int, int] = {}
    pred: dict[int, int] = {}
    for a, b in partial_edges:
        if a in succ or b in pred:
            raise CannotComplete(f"degree above 1 at edge {a}->{b}")
        if not (0 <= a < n_vertices and 0 <= b < n_vertices):
            raise CannotComplete(f"edge {a}->{b} out of range")
        succ[a] = b
        pred[b] = a

    paths = []
    seen = set()
    for v in range(n_vertices):
        if v in pred:
            continue
        path = [v]
        seen.add(v)
        while path[-1] in succ:
            nxt = succ[path[-1]]
            if nxt in seen:
                raise CannotComplete("partial edges contain a cycle")
            path.append(nxt)
            seen.add(nxt)
        paths.append(path)
    if len(seen) != n_vertices:
        # every unvisited vertex lies on a directed cycle of partial edges
        raise CannotComplete("partial edges contain a cycle")

    paths.sort(key=min)
    chain = [v for p in paths for v in p]
    return list(zip(chain, chain[1:])) + [(chain[-1], chain[0])]


def build_counterexample(pres: Presentation, relator_index: int = 0):
    """Graphs and tiles for one relator of a presentation.

    Returns (family, tiles); the family's letters and the tile ids are the
    decimal strings "0" .. "n" for a relator of length n.
    """
    if not 0 <= relator_index < len(pres.relators):
        raise ValueError(f"no relator with index {relator_index}")
    relator = pres.relators[relator_index]
    if not relator or not is_reduced(relator):
        raise NotReduced(f"relator {relator_index} is not a reduced nonempty word")
    require_valid(pres)

    n = len(relator)
    partial: dict[int, list[tuple[int, int]]] = {
        j: [] for j in range(1, pres.generator_count + 1)
    }
    for pos, (j, inv) in enumerate(relator, 1):
        if inv:
            partial[j].append((pos, pos - 1))
        else:
            partial[j].append((pos - 1, pos))

    alphabet = tuple(str(v) for v in range(n + 1))
    graphs = []
    for j in range(1, pres.generator_count + 1):
        edges = complete_to_hamiltonian(n + 1, partial[j])
        graphs.append(
            Digraph(alphabet, frozenset((str(a), str(b)) for a, b in edges))
        )
    family = GraphFamily(alphabet, tuple(graphs))
    tiles = graphs_to_wang_functional(family)
    return family, tiles


@dataclass(frozen=True)
class CounterexampleReport:
    star_full_alphabet: bool
    ss_feasible: bool
    ssp_feasible: bool
    uniform_weight: Fraction
    forced_walk: tuple[str, ...]
    emptiness_witnessed: bool
    rectangle_2x2: str | None  # "none" when searched and absent
    torus_upto_4: str | None


def _forced_walk(tiles: WangTileSet, relator) -> list[str]:
    """Tile ids forced at each relator prefix when tile "0" sits at the unit.

    At every step exactly one tile may be adjacent in the prescribed
    direction; a non-unique or impossible step raises VerificationFailed.
    """
    by_id = {t.id: t for t in tiles.tiles}
    walk = ["0"]
    current = by_id["0"]
    for j, inv in relator:
        if inv:
            # neighbor u in direction g_j^(-1): u's g_j color matches ours
            want = current.sides[(j, True)]
            candidates = [t.id for t in tiles.tiles if t.sides[(j, False)] == want]
        else:
            want = current.sides[(j, False)]
            candidates = [t.id for t in tiles.tiles if t.sides[(j, True)] == want]
        if len(candidates) != 1:
            raise VerificationFailed(
                f"step {side_key((j, inv))} from tile {current.id} is not forced: "
                f"{candidates}"
            )
        walk.append(candidates[0])
        current = by_id[candidates[0]]
    return walk


_COMMUTATOR: tuple[Side, ...] = ((1, False), (2, False), (1, True), (2, True))


def verify_counterexample(
    family: GraphFamily,
    tiles: WangTileSet,
    pres: Presentation,
    relator_index: int = 0,
) -> CounterexampleReport:
    """Check every guaranteed property of a generated instance.

    All three conditions must hold (uniform weights are verified exactly
    against the color-balance system), the relator walk from tile 0 must
    force tile n, and for the plane commutator the grid oracle must find
    neither a 2x2 rectangle nor any torus tiling up to 4x4.
    """
    relator = pres.relators[relator_index]
    n = len(relator)

    result = star.check_star(family)
    star_full = isinstance(result, star.StarWitness) and set(
        result.subalphabet
    ) == set(family.alphabet)
    if not star_full:
        raise VerificationFailed("survivor subalphabet is not the full alphabet")

    ss = conditions.check_starstar(family)
    if not isinstance(ss, conditions.SSSolution):
        raise VerificationFailed("cycle-balance condition failed")
    ssp = conditions.check_starstar_prime(tiles)
    if not isinstance(ssp, conditions.SSPSolution):
        raise VerificationFailed("color-balance condition failed")

    uniform = Fraction(1, len(tiles.tiles))
    for eq in conditions.color_balance_system(tiles).equations:
        if sum(co * uniform for co in eq.values()) != 0:
            raise VerificationFailed("uniform weights do not balance colors")

    walk = _forced_walk(tiles, relator)
    expected = [str(k) for k in range(n + 1)]
    if walk != expected:
        raise VerificationFailed(f"forced walk {walk} != {expected}")
    if walk[-1] == walk[0]:
        raise VerificationFailed("relator walk did not separate tiles")

    for j in range(1, family.generators + 1):
        classes = cycles.enumerate_simple_cycles(family.graph(j))
        if len(classes) != 1 or len(classes[0]) != n + 1:
            raise VerificationFailed(
                f"graph {j} is not a single Hamiltonian cycle"
            )

    rect = torus = None
    if pres.generator_count == 2 and relator == _COMMUTATOR:
        if oracle.tile_rectangle(tiles, 2, 2) is not None:
            raise VerificationFailed("2x2 rectangle tiling exists")
        rect = "none"
        for w in range(1, 5):
            for h in range(1, 5):
                if oracle.tile_torus(tiles, w, h) is not None:
                    raise VerificationFailed(f"{w}x{h} torus tiling exists")
        torus = "none"

    return CounterexampleReport(
        star_full_alphabet=True,
        ss_feasible=True,
        ssp_feasible=True,
        uniform_weight=uniform,
        forced_walk=tuple(walk),
        emptiness_witnessed=True,
        rectangle_2x2=rect,
        torus_upto_4=torus,
    )
