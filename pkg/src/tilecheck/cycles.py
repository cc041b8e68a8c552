"""Simple-cycle enumeration, abundance vectors, and cycle decomposition.

A cycle is handled as its cyclic vertex word: the sequence ``(a_1, ..., a_k)``
stands for the closed walk a_1 -> a_2 -> ... -> a_k -> a_1, so the word length
equals the number of edges and letter counts are taken over the word itself.
Simple cycles are kept up to rotation; the canonical representative of a class
is the least rotation under the graph's vertex-declaration order.
"""

from __future__ import annotations

from collections import Counter

from .model import Digraph

# A rotation class of a simple cycle, stored as its canonical vertex word.
CycleClass = tuple[str, ...]

# Per-letter occurrence counts of a cycle; values sum to the cycle length.
AbundanceVector = dict[str, int]


class InvalidWalk(ValueError):
    """The vertex word does not describe a closed walk of the graph."""


def canonical_rotation(cycle, order) -> CycleClass:
    """Least rotation of a cyclic vertex word under the given vertex order."""
    seq = tuple(cycle)
    if not seq:
        raise ValueError("empty cycle has no canonical rotation")
    keyed = [tuple(order[v] for v in seq[r:] + seq[:r]) for r in range(len(seq))]
    best = min(range(len(seq)), key=keyed.__getitem__)
    return seq[best:] + seq[:best]


def abundance(cycle) -> AbundanceVector:
    """Occurrence count of each letter of the cyclic word."""
    return dict(Counter(cycle))


def _tarjan_scc(vertices, succ):
    """Strongly connected components, each as a set of vertices."""
    index = {}
    low = {}
    on_stack = set()
    stack = []
    components = []
    counter = [0]

    def strongconnect(v):
        # iterative DFS to keep recursion depth independent of graph size
        work = [(v, iter(succ[v]))]
        index[v] = low[v] = counter[0]
        counter[0] += 1
        stack.append(v)
        on_stack.add(v)
        while work:
            node, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                elif w in on_stack:
                    low[node] = min(low[node], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == node:
                        break
                components.append(comp)

    for v in vertices:
        if v not in index:
            strongconnect(v)
    return components


def enumerate_simple_cycles(graph: Digraph) -> tuple[CycleClass, ...]:
    """All simple cycles of the graph, one canonical word per rotation class.

    Johnson's elementary-circuit search: self-loops are emitted directly,
    then each root vertex (in declaration order) is explored inside the
    strongly connected component of the not-yet-removed vertices, with the
    usual blocked-set bookkeeping.  Output is sorted by representative.
    """
    order = graph.order()
    found: list[tuple[str, ...]] = [(v,) for v in graph.vertices if graph.has_edge(v, v)]

    succ_all = {
        v: [w for w in graph.successors(v) if w != v] for v in graph.vertices
    }
    remaining = list(graph.vertices)
    while remaining:
        rem = set(remaining)
        comps = _tarjan_scc(
            remaining, {v: [w for w in succ_all[v] if w in rem] for v in remaining}
        )
        # pick the component containing the least remaining vertex
        least = remaining[0]
        comp = next(c for c in comps if least in c)
        if len(comp) < 2:
            remaining.remove(least)
            continue
        comp_succ = {v: [w for w in succ_all[v] if w in comp] for v in comp}
        root = least
        path = [root]
        blocked = {root}
        blocked_by: dict[str, set] = {v: set() for v in comp}
        stack = [iter(comp_succ[root])]
        closed = [False]

        def unblock(v):
            queue = [v]
            while queue:
                u = queue.pop()
                if u in blocked:
                    blocked.discard(u)
                    queue.extend(blocked_by[u])
                    blocked_by[u].clear()

        while stack:
            advanced = False
            for w in stack[-1]:
                if w == root:
                    found.append(tuple(path))
                    closed[-1] = True
                elif w not in blocked:
                    path.append(w)
                    blocked.add(w)
                    stack.append(iter(comp_succ[w]))
                    closed.append(False)
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            v = path.pop()
            if closed.pop():
                if closed:
                    closed[-1] = True
                unblock(v)
            else:
                for w in comp_succ[v]:
                    blocked_by[w].add(v)
        remaining.remove(root)

    classes = {canonical_rotation(c, order) for c in found}
    return tuple(sorted(classes, key=lambda c: tuple(order[v] for v in c)))


def _check_walk(walk, graph: Digraph):
    seq = list(walk)
    if not seq:
        raise InvalidWalk("empty walk")
    known = set(graph.vertices)
    for v in seq:
        if v not in known:
            raise InvalidWalk(f"unknown vertex {v!r}")
    for a, b in zip(seq, seq[1:]):
        if not graph.has_edge(a, b):
            raise InvalidWalk(f"no edge {a!r} -> {b!r}")
    if not graph.has_edge(seq[-1], seq[0]):
        raise InvalidWalk(
            f"walk does not close into a cycle: no edge {seq[-1]!r} -> {seq[0]!r}"
        )
    return seq


def decompose_cycle(walk, graph: Digraph) -> Counter:
    """Split a closed walk into simple cycles, multiset over rotation classes.

    Repeatedly excises the subwalk between the closest vertex repetition
    (leftmost such pair on ties) until the residue is simple.  The letter
    counts of the pieces add up exactly to those of the input word.
    """
    seq = _check_walk(walk, graph)
    order = graph.order()
    out: Counter = Counter()
    # explicit closing vertex; the wrap pair (0, len) is then an ordinary repetition
    seq = seq + [seq[0]]
    while len(seq) > 1:
        positions: dict[str, int] = {}
        best = None  # (distance, start)
        for j, v in enumerate(seq):
            if v in positions:
                i = positions[v]
                if best is None or (j - i, i) < best:
                    best = (j - i, i)
            positions[v] = j
        dist, i = best
        piece = seq[i : i + dist]
        out[canonical_rotation(piece, order)] += 1
        seq = seq[:i] + seq[i + dist :]
    return out
