import random

import pytest

from helpers import naive_simple_cycles, random_closed_walk, random_family
from tilecheck.cycles import (
    InvalidWalk,
    abundance,
    canonical_rotation,
    decompose_cycle,
    enumerate_simple_cycles,
)
from tilecheck.model import Digraph


def test_three_letter_example_cycles(three_letter_family):
    assert enumerate_simple_cycles(three_letter_family.graph(1)) == (("0", "1", "2"),)
    assert enumerate_simple_cycles(three_letter_family.graph(2)) == (("1",), ("2",))


def test_empty_graph_has_no_cycles():
    g = Digraph(("a", "b"), frozenset())
    assert enumerate_simple_cycles(g) == ()


def test_enumeration_matches_naive_oracle_on_random_graphs():
    rng = random.Random(30)
    for _ in range(60):
        fam = random_family(rng, nletters=6, d=1, p=rng.uniform(0.15, 0.6))
        g = fam.graph(1)
        assert set(enumerate_simple_cycles(g)) == naive_simple_cycles(g)


def test_enumeration_exhaustive_on_three_vertex_graphs():
    letters = ("0", "1", "2")
    pairs = [(a, b) for a in letters for b in letters]
    for mask in range(1 << len(pairs)):
        edges = frozenset(p for k, p in enumerate(pairs) if mask >> k & 1)
        g = Digraph(letters, edges)
        assert set(enumerate_simple_cycles(g)) == naive_simple_cycles(g)


def test_enumeration_sorted_and_canonical():
    g = Digraph(("0", "1", "2"), frozenset({("1", "2"), ("2", "1"), ("0", "0")}))
    out = enumerate_simple_cycles(g)
    assert out == (("0",), ("1", "2"))
    order = g.order()
    for c in out:
        assert canonical_rotation(c, order) == c


def test_canonical_rotation_uses_declared_order():
    # declared order b < a, so the representative starts at b
    order = {"b": 0, "a": 1}
    assert canonical_rotation(("a", "b"), order) == ("b", "a")


def test_abundance_worked_examples():
    assert abundance(("0", "1", "2")) == {"0": 1, "1": 1, "2": 1}
    assert abundance(("1",)) == {"1": 1}


def test_abundance_rotation_invariant():
    rng = random.Random(31)
    for _ in range(50):
        word = [rng.choice("abc") for _ in range(rng.randint(1, 8))]
        counts = abundance(word)
        assert sum(counts.values()) == len(word)
        for r in range(len(word)):
            assert abundance(word[r:] + word[:r]) == counts


def test_decompose_simple_triangle(three_letter_family):
    out = decompose_cycle(["0", "1", "2"], three_letter_family.graph(1))
    assert dict(out) == {("0", "1", "2"): 1}


def test_decompose_repeated_loop(three_letter_family):
    out = decompose_cycle(["1", "1", "1"], three_letter_family.graph(2))
    assert dict(out) == {("1",): 3}


def test_decompose_rejects_open_walk(three_letter_family):
    # the word is read cyclically, so 0,1,2,0 needs a closing edge 0 -> 0
    with pytest.raises(InvalidWalk):
        decompose_cycle(["0", "1", "2", "0"], three_letter_family.graph(1))
    with pytest.raises(InvalidWalk):
        decompose_cycle(["0", "1"], three_letter_family.graph(1))
    with pytest.raises(InvalidWalk):
        decompose_cycle([], three_letter_family.graph(1))
    with pytest.raises(InvalidWalk):
        decompose_cycle(["zz"], three_letter_family.graph(1))


def test_decompose_figure_eight():
    g = Digraph(("0", "1", "2"), frozenset({("0", "1"), ("1", "0"), ("0", "2"), ("2", "0")}))
    out = decompose_cycle(["0", "1", "0", "2"], g)
    assert dict(out) == {("0", "1"): 1, ("0", "2"): 1}


def test_decompose_abundance_identity_on_random_walks():
    rng = random.Random(32)
    done = 0
    while done < 200:
        fam = random_family(rng, nletters=rng.randint(2, 6), d=1, p=0.5)
        g = fam.graph(1)
        walk = random_closed_walk(rng, g)
        if walk is None:
            continue
        # repeat or splice to exercise nontrivial decompositions
        if rng.random() < 0.5:
            walk = walk * rng.randint(2, 3)
        out = decompose_cycle(walk, g)
        totals: dict = {}
        for cls, mult in out.items():
            for letter, cnt in abundance(cls).items():
                totals[letter] = totals.get(letter, 0) + mult * cnt
        assert totals == abundance(walk)
        # every piece is a simple cycle of the graph
        for cls in out:
            assert len(set(cls)) == len(cls)
            closed = list(cls) + [cls[0]]
            assert all(g.has_edge(a, b) for a, b in zip(closed, closed[1:]))
        done += 1


def test_decompose_deterministic_tie_break():
    # two equally close repetitions: the leftmost is excised first, which
    # fixes the multiset (here both give the same classes, the trace differs)
    g = Digraph(("a", "b"), frozenset({("a", "a"), ("a", "b"), ("b", "a")}))
    out = decompose_cycle(["a", "a", "b", "a", "b"], g)
    assert dict(out) == {("a",): 1, ("a", "b"): 2}
