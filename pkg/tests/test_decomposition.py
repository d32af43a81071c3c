import pytest

from durfee import (
    DurfeeDecomposition,
    Partition,
    compose,
    decompose,
    durfee_square_widths,
    partitions_of,
    profile,
)
from durfee.errors import InvalidDecomposition, NoSuchDecomposition

P = Partition
BIG = P([7, 7, 6, 6, 5, 4, 3, 3, 3, 2, 1, 1, 1, 1, 1])


def test_decompose_square_widths():
    assert decompose(BIG, 3, 0).widths == (5, 3, 2)


def test_decompose_one_rectangles():
    # rows 6..9 are (4,3,3,3), wide enough for a width-3 rectangle of
    # height 4, so the greedy second width is 3
    assert decompose(BIG, 3, 1).widths == (4, 3, 1)


def test_decompose_empty_positive_m():
    d = decompose(P([]), 3, 1)
    assert d.widths == (0, 0, 0)
    assert all(not s for s in d.sides)
    assert not d.below


def test_decompose_k2_example():
    d = decompose(P([9, 8, 8, 6, 5, 4, 3, 2, 2, 2, 1, 1, 1, 1, 1]), 2, 0)
    assert d.widths == (5, 2)
    assert d.sides == (P([4, 3, 3, 1]), P([2, 1]))
    assert d.below == P([2, 2, 2, 1, 1, 1, 1, 1])


def test_decompose_missing_rectangle():
    with pytest.raises(NoSuchDecomposition):
        decompose(P([1]), 2, 0)
    with pytest.raises(NoSuchDecomposition):
        decompose(P([]), 1, 0)
    with pytest.raises(NoSuchDecomposition):
        decompose(P([2, 2]), 1, -2)


def test_compose_round_trip_example():
    d = decompose(BIG, 3, 0)
    assert compose(d) == BIG


def test_compose_known_assembly():
    d = DurfeeDecomposition(
        0, 2, (5, 2), (P([5, 4, 3, 2]), P([3, 1])), P([2, 2, 1, 1, 1])
    )
    assert compose(d) == P([10, 9, 8, 7, 5, 5, 3, 2, 2, 1, 1, 1])


def test_compose_trivial_zero_width():
    d = DurfeeDecomposition(1, 1, (0,), (P([]),), P([]))
    assert compose(d) == P([])


def test_compose_rejects_bad_input():
    with pytest.raises(InvalidDecomposition):
        # widths must be weakly decreasing
        compose(DurfeeDecomposition(0, 2, (2, 3), (P([]), P([])), P([])))
    with pytest.raises(InvalidDecomposition):
        # below-partition wider than the last rectangle
        compose(DurfeeDecomposition(0, 1, (2,), (P([]),), P([3])))
    with pytest.raises(InvalidDecomposition):
        # side partition too wide for its gap
        compose(DurfeeDecomposition(0, 2, (3, 2), (P([]), P([2, 1])), P([])))
    with pytest.raises(InvalidDecomposition):
        # side partition has too many parts
        compose(DurfeeDecomposition(0, 1, (2,), (P([1, 1, 1]),), P([])))
    with pytest.raises(InvalidDecomposition):
        # zero-width rectangle of non-positive height
        compose(DurfeeDecomposition(0, 1, (0,), (P([]),), P([])))


def test_compose_rejects_non_maximal_widths():
    # (4,4) decomposes greedily with first square 2, not 1
    with pytest.raises(InvalidDecomposition):
        compose(DurfeeDecomposition(0, 2, (1, 1), (P([3]), P([3])), P([])))


def test_profile_examples():
    assert profile(decompose(BIG, 3, 0)) == (2, 1)
    d = DurfeeDecomposition(0, 3, (4, 4, 4), (P([]), P([]), P([])), P([]))
    assert profile(d) == (0, 0)
    assert profile(decompose(P([9, 8, 8, 6, 5, 4, 3, 2, 2, 2, 1, 1, 1, 1, 1]), 2, 0)) == (3,)


def test_round_trip_exhaustive_small():
    for n in range(15):
        for lam in partitions_of(n):
            for m in (-1, 0, 1, 2):
                for k in (1, 2, 3):
                    try:
                        d = decompose(lam, k, m)
                    except NoSuchDecomposition:
                        assert m <= 0
                        continue
                    assert compose(d) == lam


def test_matches_classical_squares():
    for n in range(15):
        for lam in partitions_of(n):
            squares = durfee_square_widths(lam)
            for k in range(1, len(squares) + 1):
                assert decompose(lam, k, 0).widths == squares[:k]


def test_monotone_nesting():
    for n in range(13):
        for lam in partitions_of(n):
            for m in (0, 1, 2):
                prev = None
                for k in (1, 2, 3):
                    try:
                        d = decompose(lam, k, m)
                    except NoSuchDecomposition:
                        break
                    if prev is not None:
                        assert d.widths[: k - 1] == prev
                    prev = d.widths


def test_json_round_trip():
    d = decompose(BIG, 3, 0)
    doc = d.to_json_dict()
    assert doc["widths"] == [5, 3, 2]
    assert DurfeeDecomposition.from_json_dict(doc) == d
