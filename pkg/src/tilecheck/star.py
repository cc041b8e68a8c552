"""The subalphabet-survival condition and free-group ball labelings.

A nearest-neighbor subshift over the free group is nonempty exactly when some
nonempty subalphabet lets every letter pick a valid neighbor in every
direction.  We compute the greatest such subalphabet by synchronous removal of
letters that lack an out- or in-neighbor in some generator graph, and turn it
into an explicit witness plus arbitrarily large labeled balls.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import GraphFamily, Side, require_valid

# A reduced word over the generators, as a tuple of (index, inverse) letters.
Word = tuple[Side, ...]


@dataclass(frozen=True)
class StarWitness:
    """Survivor subalphabet plus deterministic neighbor choices.

    forward_choice maps (letter, generator) to an out-neighbor inside the
    subalphabet, backward_choice to an in-neighbor; both pick the least
    candidate in alphabet order.
    """

    subalphabet: tuple[str, ...]
    forward_choice: dict[tuple[str, int], str]
    backward_choice: dict[tuple[str, int], str]


@dataclass(frozen=True)
class StarFailure:
    """Empty fixpoint; records the round at which each letter was removed."""

    removed_round: dict[str, int]


def _fixpoint(graphs: GraphFamily, bidirectional: bool):
    alive = set(graphs.alphabet)
    removed_round: dict[str, int] = {}
    rnd = 0
    while True:
        rnd += 1
        deficient = set()
        for a in alive:
            for g in graphs.graphs:
                if not any(w in alive for w in g.successors(a)):
                    deficient.add(a)
                    break
                if bidirectional and not any(w in alive for w in g.predecessors(a)):
                    deficient.add(a)
                    break
        if not deficient:
            return alive, removed_round
        for a in deficient:
            removed_round[a] = rnd
        alive -= deficient


def prune_star(graphs: GraphFamily) -> frozenset[str]:
    """Greatest subalphabet whose letters keep an out- and an in-neighbor
    within it in every generator graph.  Empty means the condition fails."""
    require_valid(graphs)
    alive, _ = _fixpoint(graphs, bidirectional=True)
    return frozenset(alive)


def forward_fixpoint(graphs: GraphFamily) -> frozenset[str]:
    """Diagnostic variant pruning only on missing out-neighbors.

    Strictly weaker than prune_star: it always contains the bidirectional
    fixpoint but can be nonempty on families whose subshift is empty (a
    letter may keep successors everywhere yet be unreachable backwards).
    """
    require_valid(graphs)
    alive, _ = _fixpoint(graphs, bidirectional=False)
    return frozenset(alive)


def pruning_trace(graphs: GraphFamily) -> dict[str, int]:
    """Round at which each pruned letter was removed (1-based, synchronous)."""
    require_valid(graphs)
    _, removed_round = _fixpoint(graphs, bidirectional=True)
    return dict(removed_round)


def check_star(graphs: GraphFamily):
    """Witness over the pruned subalphabet, or the failure trace."""
    require_valid(graphs)
    alive, removed_round = _fixpoint(graphs, bidirectional=True)
    if not alive:
        return StarFailure(removed_round)
    order = {v: k for k, v in enumerate(graphs.alphabet)}
    sub = tuple(sorted(alive, key=order.get))
    forward = {}
    backward = {}
    for a in sub:
        for i, g in enumerate(graphs.graphs, 1):
            forward[(a, i)] = min(
                (w for w in g.successors(a) if w in alive), key=order.get
            )
            backward[(a, i)] = min(
                (w for w in g.predecessors(a) if w in alive), key=order.get
            )
    return StarWitness(sub, forward, backward)


def iter_reduced_words(d: int, radius: int):
    """All reduced words of length <= radius over d generators, shortest first."""
    frontier: list[Word] = [()]
    yield ()
    for _ in range(radius):
        nxt = []
        for u in frontier:
            for i in range(1, d + 1):
                for inv in (False, True):
                    if u and u[-1] == (i, not inv):
                        continue
                    w = u + ((i, inv),)
                    nxt.append(w)
                    yield w
        frontier = nxt


def build_free_ball(
    witness: StarWitness, graphs: GraphFamily, radius: int
) -> dict[Word, str]:
    """Labeling of the radius-R ball of the free group from a witness.

    The root gets the least surviving letter; every node one step further
    from the root extends by forward_choice along g_i and by backward_choice
    along g_i^(-1).  Every ball edge is then an edge of the matching graph.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    labeling: dict[Word, str] = {}
    for w in iter_reduced_words(graphs.generators, radius):
        if not w:
            labeling[w] = witness.subalphabet[0]
            continue
        parent = labeling[w[:-1]]
        i, inv = w[-1]
        if inv:
            labeling[w] = witness.backward_choice[(parent, i)]
        else:
            labeling[w] = witness.forward_choice[(parent, i)]
    return labeling


def ball_labeling_violations(labeling: dict[Word, str], graphs: GraphFamily) -> list[str]:
    """Re-check every edge of a labeled ball; empty list means valid."""
    out = []
    if () not in labeling:
        return ["missing root label"]
    for w, letter in labeling.items():
        if letter not in graphs.alphabet:
            out.append(f"unknown letter {letter!r} at {w}")
        if not w:
            continue
        parent = w[:-1]
        if parent not in labeling:
            out.append(f"missing parent of {w}")
            continue
        i, inv = w[-1]
        g = graphs.graph(i)
        if inv:
            # w g_i = parent, so the generator-i edge runs from w to its parent
            if not g.has_edge(labeling[w], labeling[parent]):
                out.append(f"invalid edge {labeling[w]}->{labeling[parent]} (g{i}) at {w}")
        else:
            if not g.has_edge(labeling[parent], labeling[w]):
                out.append(f"invalid edge {labeling[parent]}->{labeling[w]} (g{i}) at {w}")
    return out
