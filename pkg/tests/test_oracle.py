import random
from fractions import Fraction

import pytest

from helpers import brute_grid_exists, random_family, random_tiles
from tilecheck.conditions import SSPSolution, check_starstar_prime
from tilecheck.counterexample import build_counterexample
from tilecheck.model import make_family
from tilecheck.oracle import (
    ResourceLimit,
    box_size,
    folner_audit,
    grid_violations,
    shift_boundary,
    tile_free_ball,
    tile_rectangle,
    tile_torus,
)
from tilecheck.star import ball_labeling_violations, prune_star


# --- rectangle search -----------------------------------------------------------


def test_single_tile_fills_any_rectangle(single_tile):
    grid = tile_rectangle(single_tile, 4, 3)
    assert grid is not None
    assert grid_violations(grid, single_tile) == []
    assert set(grid.cells.values()) == {"t"}


def test_counterexample_has_no_2x2_rectangle(commutator):
    _, tiles = build_counterexample(commutator)
    assert tile_rectangle(tiles, 2, 2) is None
    # independent check: tiles are functional, so a 2x2 square exists exactly
    # when the two successor permutations commute somewhere
    succ = {
        i: {t.id: t.sides[(i, False)] for t in tiles.tiles} for i in (1, 2)
    }
    commuting = [
        t for t in tiles.tile_ids()
        if succ[2][succ[1][t]] == succ[1][succ[2][t]]
    ]
    assert commuting == []
    assert brute_grid_exists(tiles, 2, 2, wrap=False) is False


def test_three_letter_tiles_rectangles_match_bruteforce(three_letter_tiles):
    for w, h in [(1, 1), (2, 2), (3, 2), (2, 3), (3, 3)]:
        found = tile_rectangle(three_letter_tiles, w, h) is not None
        assert found == brute_grid_exists(three_letter_tiles, w, h, wrap=False)
    # the worked set fills small squares but not 3x3
    assert tile_rectangle(three_letter_tiles, 2, 2) is not None
    assert tile_rectangle(three_letter_tiles, 3, 3) is None


def test_rectangle_search_respects_budget(three_letter_tiles):
    with pytest.raises(ResourceLimit):
        tile_rectangle(three_letter_tiles, 3, 3, node_budget=5)


def test_returned_rectangles_validate():
    rng = random.Random(60)
    found = 0
    for _ in range(30):
        tiles = random_tiles(rng, ntiles=rng.randint(1, 4), ncolors=2, d=2)
        grid = tile_rectangle(tiles, 3, 3)
        if grid is not None:
            assert grid_violations(grid, tiles) == []
            found += 1
    assert found > 0


def test_rectangle_requires_two_generators():
    tiles = random_tiles(random.Random(0), ntiles=2, ncolors=2, d=3)
    with pytest.raises(ValueError):
        tile_rectangle(tiles, 2, 2)


# --- torus search ----------------------------------------------------------------


def test_single_tile_torus(single_tile):
    grid = tile_torus(single_tile, 1, 1)
    assert grid is not None
    assert grid_violations(grid, single_tile) == []


def test_counterexample_has_no_small_torus(commutator):
    _, tiles = build_counterexample(commutator)
    for w in range(1, 5):
        for h in range(1, 5):
            assert tile_torus(tiles, w, h) is None
            if w * h <= 6:  # full enumeration only at 5^6 assignments
                assert brute_grid_exists(tiles, w, h, wrap=True) is False


def test_torus_matches_bruteforce_on_random_sets():
    rng = random.Random(61)
    for _ in range(25):
        tiles = random_tiles(rng, ntiles=rng.randint(1, 3), ncolors=2, d=2)
        for w, h in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2)]:
            found = tile_torus(tiles, w, h) is not None
            assert found == brute_grid_exists(tiles, w, h, wrap=True)


def test_torus_success_implies_color_balance_and_periodic_extension():
    rng = random.Random(62)
    seen = 0
    for _ in range(40):
        tiles = random_tiles(rng, ntiles=rng.randint(1, 4), ncolors=2, d=2)
        grid = None
        for w, h in [(1, 1), (2, 1), (1, 2), (2, 2)]:
            grid = tile_torus(tiles, w, h)
            if grid is not None:
                break
        if grid is None:
            continue
        seen += 1
        assert grid_violations(grid, tiles) == []
        assert isinstance(check_starstar_prime(tiles), SSPSolution)
        for m in (1, 2, 3):
            if grid.width * m > 6 or grid.height * m > 6:
                break
            rect = tile_rectangle(tiles, grid.width * m, grid.height * m)
            assert rect is not None
            assert grid_violations(rect, tiles) == []
    assert seen >= 5


# --- free-group ball -------------------------------------------------------------


def test_ball_radius_zero_labels_root():
    fam = make_family(["a"], [[]])
    assert tile_free_ball(fam, 0) == {(): "a"}


def test_worked_family_ball_radius_two(three_letter_family):
    ball = tile_free_ball(three_letter_family, 2)
    assert ball is not None
    assert ball_labeling_violations(ball, three_letter_family) == []
    assert len(ball) == 17


def test_pruned_empty_family_has_no_ball():
    fam = make_family(["a", "b"], [[("a", "b")]])
    assert prune_star(fam) == frozenset()
    assert tile_free_ball(fam, 2) is None


def test_ball_succeeds_iff_prune_nonempty_at_alphabet_radius():
    rng = random.Random(63)
    for _ in range(40):
        fam = random_family(rng, nletters=rng.randint(1, 5), d=rng.randint(1, 2), p=0.4)
        ball = tile_free_ball(fam, len(fam.alphabet))
        assert (ball is not None) == bool(prune_star(fam))
        if ball is not None:
            assert ball_labeling_violations(ball, fam) == []


def test_ball_matches_tiny_bruteforce():
    # radius-1 balls on two letters: compare the memoized search with a
    # full enumeration over all labelings
    import itertools

    rng = random.Random(64)
    for _ in range(40):
        fam = random_family(rng, nletters=2, d=2, p=0.5)
        nodes = [(), ((1, False),), ((1, True),), ((2, False),), ((2, True),)]
        exists = False
        for combo in itertools.product(fam.alphabet, repeat=len(nodes)):
            labeling = dict(zip(nodes, combo))
            if ball_labeling_violations(labeling, fam) == []:
                exists = True
                break
        assert (tile_free_ball(fam, 1) is not None) == exists


def test_ball_search_respects_budget(three_letter_family):
    with pytest.raises(ResourceLimit):
        tile_free_ball(three_letter_family, 3, node_budget=2)


# --- frequency audit --------------------------------------------------------------


def test_folner_box_formulas():
    for k in range(1, 6):
        pts = [(a, b) for a in range(-k, k + 1) for b in range(-k, k + 1)]
        assert box_size(k) == len(pts)
        shifted = {(a + 1, b) for a, b in pts}
        sym_diff = shifted.symmetric_difference(pts)
        assert shift_boundary(k) == len(sym_diff)
    assert box_size(2, d=3) == 125
    assert shift_boundary(2, d=3) == 50


def test_single_tile_torus_has_zero_defects(single_tile):
    grid = tile_torus(single_tile, 1, 1)
    report = folner_audit(grid, single_tile, range(1, 6))
    for entry in report.entries:
        assert entry.frequencies == {"t": Fraction(1)}
        assert all(v == 0 for v in entry.defects.values())
        assert entry.bound == Fraction(4, 2 * entry.radius + 1)


def test_frequencies_sum_to_one_and_respect_bound():
    rng = random.Random(65)
    audited = 0
    for _ in range(40):
        tiles = random_tiles(rng, ntiles=rng.randint(1, 4), ncolors=2, d=2)
        grid = None
        for w, h in [(2, 3), (3, 2), (2, 2), (3, 3)]:
            grid = tile_torus(tiles, w, h)
            if grid is not None:
                break
        if grid is None:
            continue
        audited += 1
        report = folner_audit(grid, tiles, range(1, 21))
        for entry in report.entries:
            assert sum(entry.frequencies.values()) == 1
            for defect in entry.defects.values():
                assert defect <= entry.bound
    assert audited >= 5


def test_defects_vanish_at_period_boundaries():
    rng = random.Random(66)
    audited = 0
    while audited < 6:
        tiles = random_tiles(rng, ntiles=3, ncolors=2, d=2)
        grid = tile_torus(tiles, 3, 3)
        if grid is None:
            continue
        audited += 1
        report = folner_audit(grid, tiles, range(1, 21))
        for entry in report.entries:
            side = 2 * entry.radius + 1
            if side % 3 == 0:
                assert all(v == 0 for v in entry.defects.values())


def test_audit_rejects_rectangle_grids(single_tile):
    grid = tile_rectangle(single_tile, 2, 2)
    with pytest.raises(ValueError):
        folner_audit(grid, single_tile, [1])
