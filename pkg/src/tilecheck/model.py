"""Core domain types: Wang tile sets, generator graph families, presentations.

A *side* of a Wang tile is addressed by the pair ``(i, inv)`` where ``i`` is a
1-based generator index and ``inv`` tells the forward direction ``g_i`` apart
from its inverse ``g_i^(-1)``.  The same pairs serve as letters of relator
words.  All values in this module are immutable after construction and every
operation is a pure function.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

# (generator index, inverse flag); also used as a relator letter.
Side = tuple[int, bool]


class InvalidInput(ValueError):
    """A domain value violates its invariants; carries the violation list."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class NotFunctional(ValueError):
    """Graph family is not a disjoint union of permutations where required."""


class ParseError(ValueError):
    """Malformed input file; message includes the offending field."""


@dataclass(frozen=True)
class Violation:
    invariant: str
    subject: str

    def __str__(self):
        return f"{self.invariant}: {self.subject}"


def sides(d: int) -> list[Side]:
    """All 2d side addresses in canonical order g1, g1_inv, g2, g2_inv, ..."""
    return [(i, inv) for i in range(1, d + 1) for inv in (False, True)]


def side_key(side: Side) -> str:
    i, inv = side
    return f"g{i}_inv" if inv else f"g{i}"


# Aliases for the square-tile picture, accepted on input when d = 2.
_SQUARE_ALIASES = {
    "right": (1, False),
    "left": (1, True),
    "top": (2, False),
    "bottom": (2, True),
}


def parse_side(key: str, d: int) -> Side:
    """Parse "g<i>" / "g<i>_inv" (or right/left/top/bottom when d = 2)."""
    if d == 2 and key in _SQUARE_ALIASES:
        return _SQUARE_ALIASES[key]
    body = key
    inv = False
    if key.endswith("_inv"):
        body = key[: -len("_inv")]
        inv = True
    if body.startswith("g") and body[1:].isdigit():
        i = int(body[1:])
        if 1 <= i <= d:
            return (i, inv)
    raise ParseError(f"unknown side name {key!r} for {d} generator(s)")


@dataclass(frozen=True)
class WangTile:
    """One tile: a total map from the 2d sides to colors."""

    id: str
    sides: dict[Side, str]


@dataclass(frozen=True)
class WangTileSet:
    generators: int
    colors: tuple[str, ...]
    tiles: tuple[WangTile, ...]

    def tile_ids(self) -> tuple[str, ...]:
        return tuple(t.id for t in self.tiles)


@dataclass(frozen=True)
class Digraph:
    """Directed graph on a fixed vertex tuple; no parallel edges."""

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    _succ: dict = field(default=None, compare=False, repr=False)
    _pred: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        order = {v: k for k, v in enumerate(self.vertices)}
        succ = {v: [] for v in self.vertices}
        pred = {v: [] for v in self.vertices}
        for a, b in self.edges:
            if a in succ and b in pred:
                succ[a].append(b)
                pred[b].append(a)
        key = order.get
        object.__setattr__(
            self, "_succ", {v: tuple(sorted(ws, key=key)) for v, ws in succ.items()}
        )
        object.__setattr__(
            self, "_pred", {v: tuple(sorted(ws, key=key)) for v, ws in pred.items()}
        )

    def successors(self, v: str) -> tuple[str, ...]:
        """Out-neighbors of v, in vertex-declaration order."""
        return self._succ[v]

    def predecessors(self, v: str) -> tuple[str, ...]:
        return self._pred[v]

    def has_edge(self, a: str, b: str) -> bool:
        return (a, b) in self.edges

    def order(self) -> dict[str, int]:
        return {v: k for k, v in enumerate(self.vertices)}


@dataclass(frozen=True)
class GraphFamily:
    """One directed graph per generator, all sharing the same vertex set."""

    alphabet: tuple[str, ...]
    graphs: tuple[Digraph, ...]

    @property
    def generators(self) -> int:
        return len(self.graphs)

    def graph(self, i: int) -> Digraph:
        """The graph of generator i (1-based)."""
        return self.graphs[i - 1]


def make_family(alphabet, edge_lists) -> GraphFamily:
    """Build a GraphFamily from per-generator edge lists (duplicates collapse)."""
    alphabet = tuple(alphabet)
    graphs = tuple(
        Digraph(alphabet, frozenset((str(a), str(b)) for a, b in edges))
        for edges in edge_lists
    )
    return GraphFamily(alphabet, graphs)


@dataclass(frozen=True)
class Presentation:
    """Generator count plus finitely many relator words."""

    generator_count: int
    relators: tuple[tuple[Side, ...], ...]


def is_reduced(word) -> bool:
    """True if no letter is adjacent to its own inverse."""
    for (i, inv), (j, jnv) in zip(word, word[1:]):
        if i == j and inv != jnv:
            return False
    return True


# --- validation ------------------------------------------------------------


def validate_tiles(ts: WangTileSet) -> list[Violation]:
    out = []
    if ts.generators < 1:
        out.append(Violation("generator count must be >= 1", str(ts.generators)))
        return out
    if len(set(ts.colors)) != len(ts.colors):
        out.append(Violation("duplicate color declaration", repr(ts.colors)))
    seen = set()
    expected = set(sides(ts.generators))
    palette = set(ts.colors)
    for tile in ts.tiles:
        if tile.id in seen:
            out.append(Violation("duplicate tile id", tile.id))
        seen.add(tile.id)
        have = set(tile.sides)
        if have != expected:
            missing = sorted(side_key(s) for s in expected - have)
            extra = sorted(side_key(s) for s in have - expected if isinstance(s, tuple))
            detail = f"tile {tile.id}"
            if missing:
                detail += f" missing {','.join(missing)}"
            if extra:
                detail += f" extra {','.join(extra)}"
            out.append(Violation("incomplete side map", detail))
        for s, c in tile.sides.items():
            if c not in palette:
                out.append(Violation("unknown color", f"tile {tile.id}: {c!r}"))
    return out


def validate_graphs(gf: GraphFamily) -> list[Violation]:
    out = []
    if len(gf.graphs) < 1:
        out.append(Violation("family must contain at least one graph", ""))
    if len(set(gf.alphabet)) != len(gf.alphabet):
        out.append(Violation("duplicate letter declaration", repr(gf.alphabet)))
    for i, g in enumerate(gf.graphs, 1):
        if g.vertices != gf.alphabet:
            out.append(Violation("graph vertex set differs from alphabet", f"graph {i}"))
        known = set(gf.alphabet)
        for a, b in g.edges:
            for v in (a, b):
                if v not in known:
                    out.append(Violation("unknown vertex", f"graph {i}: {v!r}"))
    return out


def validate_presentation(p: Presentation) -> list[Violation]:
    out = []
    if p.generator_count < 1:
        out.append(Violation("generator count must be >= 1", str(p.generator_count)))
    for k, word in enumerate(p.relators):
        if not word:
            out.append(Violation("empty relator", f"relator {k}"))
            continue
        for i, _ in word:
            if not 1 <= i <= p.generator_count:
                out.append(Violation("relator letter out of range", f"relator {k}: g{i}"))
        if not is_reduced(word):
            out.append(Violation("relator not freely reduced", f"relator {k}"))
    return out


def validate(obj) -> list[Violation]:
    """Invariant check for any of the three domain types."""
    if isinstance(obj, WangTileSet):
        return validate_tiles(obj)
    if isinstance(obj, GraphFamily):
        return validate_graphs(obj)
    if isinstance(obj, Presentation):
        return validate_presentation(obj)
    raise TypeError(f"cannot validate {type(obj).__name__}")


def require_valid(obj):
    violations = validate(obj)
    if violations:
        raise InvalidInput(violations)
    return obj


# --- conversions -----------------------------------------------------------


def wang_to_graphs(tiles: WangTileSet) -> GraphFamily:
    """Adjacency graphs of a tile set, one per generator.

    Vertices are tile ids; generator i has an edge a -> b exactly when the
    g_i color of a equals the g_i^(-1) color of b, i.e. b may sit in the
    g_i direction next to a.
    """
    require_valid(tiles)
    alphabet = tiles.tile_ids()
    graphs = []
    for i in range(1, tiles.generators + 1):
        fwd, bwd = (i, False), (i, True)
        edges = frozenset(
            (a.id, b.id)
            for a, b in itertools.product(tiles.tiles, repeat=2)
            if a.sides[fwd] == b.sides[bwd]
        )
        graphs.append(Digraph(alphabet, edges))
    return GraphFamily(alphabet, tuple(graphs))


def graphs_to_wang_functional(graphs: GraphFamily) -> WangTileSet:
    """Tile set for a family of permutation graphs.

    Only defined when every graph has in- and out-degree exactly 1 at every
    vertex.  The tile of letter v carries v on every inverse side and the
    unique successor of v in graph i on side g_i; converting the result back
    with wang_to_graphs reproduces the input family.
    """
    require_valid(graphs)
    bad = []
    for i, g in enumerate(graphs.graphs, 1):
        for v in g.vertices:
            if len(g.successors(v)) != 1 or len(g.predecessors(v)) != 1:
                bad.append(f"graph {i} vertex {v!r}")
    if bad:
        raise NotFunctional("not a permutation graph at " + ", ".join(bad))
    tiles = []
    for v in graphs.alphabet:
        side_map: dict[Side, str] = {}
        for i, g in enumerate(graphs.graphs, 1):
            side_map[(i, False)] = g.successors(v)[0]
            side_map[(i, True)] = v
        tiles.append(WangTile(v, side_map))
    return WangTileSet(graphs.generators, graphs.alphabet, tuple(tiles))


def color_class(tiles: WangTileSet, c: str, g: Side) -> frozenset[str]:
    """Ids of the tiles showing color c on side g."""
    if c not in tiles.colors:
        raise ValueError(f"unknown color {c!r}")
    if g not in sides(tiles.generators):
        raise ValueError(f"unknown side {g!r}")
    return frozenset(t.id for t in tiles.tiles if t.sides[g] == c)


# --- file formats ----------------------------------------------------------


def tiles_from_obj(obj) -> WangTileSet:
    if not isinstance(obj, dict):
        raise ParseError("tile set file: top level must be an object")
    try:
        d = int(obj["generators"])
        colors = tuple(str(c) for c in obj["colors"])
        raw_tiles = obj["tiles"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"tile set file: missing or bad field {exc}") from exc
    if d < 1:
        raise ParseError("tile set file: generators must be >= 1")
    tiles = []
    for k, entry in enumerate(raw_tiles):
        try:
            tid = str(entry["id"])
            raw_sides = entry["sides"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"tile {k}: missing or bad field {exc}") from exc
        if not isinstance(raw_sides, dict):
            raise ParseError(f"tile {tid}: sides must be an object")
        side_map: dict[Side, str] = {}
        for key, color in raw_sides.items():
            s = parse_side(str(key), d)
            if s in side_map:
                raise ParseError(f"tile {tid}: side {side_key(s)} given twice")
            side_map[s] = str(color)
        tiles.append(WangTile(tid, side_map))
    return WangTileSet(d, colors, tuple(tiles))


def tiles_to_obj(ts: WangTileSet) -> dict:
    return {
        "generators": ts.generators,
        "colors": list(ts.colors),
        "tiles": [
            {
                "id": t.id,
                "sides": {side_key(s): t.sides[s] for s in sides(ts.generators)},
            }
            for t in ts.tiles
        ],
    }


def graphs_from_obj(obj) -> GraphFamily:
    if not isinstance(obj, dict):
        raise ParseError("graph family file: top level must be an object")
    try:
        alphabet = tuple(str(a) for a in obj["alphabet"])
        raw_graphs = obj["graphs"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"graph family file: missing or bad field {exc}") from exc
    d = len(raw_graphs)
    if d < 1:
        raise ParseError("graph family file: needs at least one graph")
    by_gen: dict[int, frozenset] = {}
    for k, entry in enumerate(raw_graphs):
        try:
            gen = int(entry["generator"])
            raw_edges = entry["edges"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"graph {k}: missing or bad field {exc}") from exc
        if gen in by_gen:
            raise ParseError(f"graph family file: generator {gen} declared twice")
        edges = set()
        for e in raw_edges:
            if not isinstance(e, (list, tuple)) or len(e) != 2:
                raise ParseError(f"graph {k}: edge {e!r} is not a pair")
            edges.add((str(e[0]), str(e[1])))
        by_gen[gen] = frozenset(edges)
    if set(by_gen) != set(range(1, d + 1)):
        raise ParseError(
            f"graph family file: generators must be exactly 1..{d}, got {sorted(by_gen)}"
        )
    graphs = tuple(Digraph(alphabet, by_gen[i]) for i in range(1, d + 1))
    return GraphFamily(alphabet, graphs)


def graphs_to_obj(gf: GraphFamily) -> dict:
    out = []
    for i, g in enumerate(gf.graphs, 1):
        order = g.order()
        edges = sorted(g.edges, key=lambda e: (order[e[0]], order[e[1]]))
        out.append({"generator": i, "edges": [list(e) for e in edges]})
    return {"alphabet": list(gf.alphabet), "graphs": out}


def presentation_from_obj(obj) -> Presentation:
    if not isinstance(obj, dict):
        raise ParseError("presentation file: top level must be an object")
    try:
        d = int(obj["generators"])
        raw = obj["relators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"presentation file: missing or bad field {exc}") from exc
    if d < 1:
        raise ParseError("presentation file: generators must be >= 1")
    relators = []
    for k, word in enumerate(raw):
        letters = []
        for token in word:
            s = parse_side(str(token), d)
            letters.append(s)
        relators.append(tuple(letters))
    return Presentation(d, tuple(relators))


def presentation_to_obj(p: Presentation) -> dict:
    return {
        "generators": p.generator_count,
        "relators": [[side_key(s) for s in word] for word in p.relators],
    }


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def load_tiles(path) -> WangTileSet:
    return tiles_from_obj(load_json(path))


def load_graphs(path) -> GraphFamily:
    return graphs_from_obj(load_json(path))


def load_presentation(path) -> Presentation:
    return presentation_from_obj(load_json(path))
