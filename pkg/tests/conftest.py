import pytest

from tilecheck.model import (
    GraphFamily,
    Presentation,
    WangTile,
    WangTileSet,
    make_family,
)


@pytest.fixture
def three_letter_family() -> GraphFamily:
    """The worked three-letter family: a 3-cycle and a graph with two loops."""
    return make_family(
        ["0", "1", "2"],
        [
            [("0", "1"), ("1", "2"), ("2", "0")],
            [("1", "0"), ("0", "2"), ("1", "1"), ("2", "2")],
        ],
    )


def square_tile(tid, right, left, top, bottom) -> WangTile:
    return WangTile(
        tid,
        {(1, False): right, (1, True): left, (2, False): top, (2, True): bottom},
    )


@pytest.fixture
def three_letter_tiles() -> WangTileSet:
    """The Wang tile set conjugate to the three-letter family."""
    return WangTileSet(
        2,
        ("a", "b", "c"),
        (
            square_tile("t0", "b", "a", "b", "a"),
            square_tile("t1", "c", "b", "a", "a"),
            square_tile("t2", "a", "c", "b", "b"),
        ),
    )


@pytest.fixture
def five_cycle_family() -> GraphFamily:
    """Two 5-cycles on letters 0..4 (the worked functional example)."""
    return make_family(
        [str(i) for i in range(5)],
        [
            [("0", "1"), ("1", "4"), ("4", "3"), ("3", "2"), ("2", "0")],
            [("0", "1"), ("1", "2"), ("2", "4"), ("4", "3"), ("3", "0")],
        ],
    )


@pytest.fixture
def commutator() -> Presentation:
    return Presentation(2, (((1, False), (2, False), (1, True), (2, True)),))


@pytest.fixture
def single_tile() -> WangTileSet:
    """One tile with the same color on all four sides; tiles everything."""
    return WangTileSet(2, ("c",), (square_tile("t", "c", "c", "c", "c"),))
