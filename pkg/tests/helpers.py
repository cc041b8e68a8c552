"""Independent brute-force oracles and random instance generators.

Everything here deliberately avoids the library's own algorithms: cycles come
from a plain restricted DFS, feasibility from subset Gaussian elimination, and
tilings from full cartesian-product enumeration, so the tests cross two
implementations rather than one.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from tilecheck.model import Digraph, GraphFamily, WangTile, WangTileSet


# --- naive cycle enumeration -------------------------------------------------


def naive_simple_cycles(graph: Digraph) -> set[tuple[str, ...]]:
    """All simple cycles up to rotation by restricted DFS (no Johnson)."""
    order = graph.order()
    out = set()

    def canon(seq):
        keyed = [tuple(order[v] for v in seq[r:] + seq[:r]) for r in range(len(seq))]
        best = min(range(len(seq)), key=keyed.__getitem__)
        return tuple(seq[best:] + seq[:best])

    def extend(start, path, used):
        for w in graph.successors(path[-1]):
            if w == start:
                out.add(canon(path))
            elif order[w] > order[start] and w not in used:
                extend(start, path + [w], used | {w})

    for start in graph.vertices:
        extend(start, [start], {start})
    return out


# --- exact feasibility by vertex enumeration ----------------------------------


def _solve_unique(rows, rhs):
    """Solve rows * x = rhs exactly; returns the solution list, None when
    inconsistent, or "nonunique" when underdetermined."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    a = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(rows, rhs)]
    pivots = []
    col = 0
    row = 0
    while row < m and col < n:
        piv = next((r for r in range(row, m) if a[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        a[row], a[piv] = a[piv], a[row]
        a[row] = [v / a[row][col] for v in a[row]]
        for r in range(m):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
        col += 1
    for r in range(row, m):
        if a[r][-1] != 0:
            return None
    if len(pivots) < n:
        return "nonunique"
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = a[r][-1]
    return x


def bruteforce_feasible(system) -> bool:
    """Existence of x >= 0, x != 0, A x = 0 by basic-solution enumeration.

    A nonempty polytope {A x = 0, sum x = 1, x >= 0} has a vertex, and a
    vertex is the unique solution of the system restricted to its support,
    so trying every support subset is exhaustive.
    """
    names = system.variables
    n = len(names)
    if n == 0:
        return False
    full_rows = []
    for eq in system.equations:
        full_rows.append([eq.get(v, 0) for v in names])
    full_rows.append([1] * n)
    rhs = [0] * len(system.equations) + [1]
    for size in range(1, n + 1):
        for support in itertools.combinations(range(n), size):
            rows = [[row[j] for j in support] for row in full_rows]
            x = _solve_unique(rows, rhs)
            if x is None or x == "nonunique":
                continue
            if all(v >= 0 for v in x):
                return True
    return False


# --- exhaustive tiling checks --------------------------------------------------


def brute_grid_exists(tiles: WangTileSet, w: int, h: int, wrap: bool) -> bool:
    """Try every assignment of tiles to the w x h region."""
    cells = [(c, r) for r in range(h) for c in range(w)]
    for combo in itertools.product(tiles.tiles, repeat=len(cells)):
        grid = dict(zip(cells, combo))
        ok = True
        for (c, r), t in grid.items():
            if c + 1 < w or wrap:
                nb = grid[((c + 1) % w, r)]
                if t.sides[(1, False)] != nb.sides[(1, True)]:
                    ok = False
                    break
            if r + 1 < h or wrap:
                nb = grid[(c, (r + 1) % h)]
                if t.sides[(2, False)] != nb.sides[(2, True)]:
                    ok = False
                    break
        if ok:
            return True
    return False


# --- random instances ----------------------------------------------------------


LETTERS = [str(i) for i in range(26)]
COLORS = ["a", "b", "c", "d", "e"]


def random_family(rng, nletters: int, d: int, p: float = 0.4) -> GraphFamily:
    alphabet = tuple(LETTERS[:nletters])
    graphs = []
    for _ in range(d):
        edges = frozenset(
            (a, b)
            for a in alphabet
            for b in alphabet
            if rng.random() < p
        )
        graphs.append(Digraph(alphabet, edges))
    return GraphFamily(alphabet, graphs=tuple(graphs))


def random_permutation_family(rng, nletters: int, d: int) -> GraphFamily:
    alphabet = tuple(LETTERS[:nletters])
    graphs = []
    for _ in range(d):
        targets = list(alphabet)
        rng.shuffle(targets)
        graphs.append(Digraph(alphabet, frozenset(zip(alphabet, targets))))
    return GraphFamily(alphabet, tuple(graphs))


def random_tiles(rng, ntiles: int, ncolors: int, d: int) -> WangTileSet:
    colors = tuple(COLORS[:ncolors])
    tiles = []
    for k in range(ntiles):
        side_map = {}
        for i in range(1, d + 1):
            for inv in (False, True):
                side_map[(i, inv)] = rng.choice(colors)
        tiles.append(WangTile(f"t{k}", side_map))
    return WangTileSet(d, colors, tuple(tiles))


def random_reduced_word(rng, d: int, length: int):
    word = []
    for _ in range(length):
        while True:
            letter = (rng.randrange(1, d + 1), rng.random() < 0.5)
            if word and word[-1] == (letter[0], not letter[1]):
                continue
            word.append(letter)
            break
    return tuple(word)


def random_closed_walk(rng, graph: Digraph, max_steps: int = 30):
    """A closed walk found by walking until the first vertex repetition;
    None when the walk dies out or never closes."""
    candidates = [v for v in graph.vertices if graph.successors(v)]
    if not candidates:
        return None
    v = rng.choice(candidates)
    path = [v]
    seen = {v: 0}
    for _ in range(max_steps):
        nxt = graph.successors(path[-1])
        if not nxt:
            return None
        v = rng.choice(nxt)
        if v in seen:
            return path[seen[v]:]
        seen[v] = len(path)
        path.append(v)
    return None
