import pytest
from hypothesis import given
from hypothesis import strategies as st

from durfee import (
    Partition,
    durfee_square_widths,
    enumerate_partitions,
    p_table,
    partitions_of,
    q_table,
)
from durfee.decomposition import decompose
from durfee.errors import EmptyPartition, NoSuchDecomposition

partitions = st.lists(st.integers(1, 12), max_size=10).map(
    lambda xs: Partition(sorted(xs, reverse=True))
)


def conjugate_by_cells(parts):
    """Oracle: reflect the set of diagram cells across the main diagonal."""
    cells = {(i, j) for i, row in enumerate(parts) for j in range(row)}
    flipped = {(j, i) for i, j in cells}
    rows = []
    i = 0
    while any(a == i for a, _ in flipped):
        rows.append(sum(1 for a, _ in flipped if a == i))
        i += 1
    return tuple(rows)


def test_size_examples():
    assert Partition([5, 5, 4, 1]).size == 15
    assert Partition([]).size == 0
    big = Partition([7, 7, 6, 6, 5, 4, 3, 3, 3, 2, 1, 1, 1, 1, 1])
    assert big.size == sum(big.parts) == 51


def test_constructor_rejects_bad_parts():
    with pytest.raises(ValueError):
        Partition([3, 4])
    with pytest.raises(ValueError):
        Partition([2, 0])
    with pytest.raises(ValueError):
        Partition([-1])


def test_conjugate_examples():
    assert Partition([5, 5, 4, 1]).conjugate() == Partition([4, 3, 3, 3, 2])
    assert Partition([]).conjugate() == Partition([])
    assert Partition([3, 1]).conjugate() == Partition([2, 1, 1])


def test_conjugate_matches_cell_oracle():
    for n in range(11):
        for lam in partitions_of(n):
            assert lam.conjugate().parts == conjugate_by_cells(lam.parts)


@given(partitions)
def test_conjugate_involution(lam):
    assert lam.conjugate().conjugate() == lam


@given(partitions)
def test_conjugate_size_and_shape(lam):
    c = lam.conjugate()
    assert c.size == lam.size
    assert c.largest == len(lam)
    assert len(c) == lam.largest


def test_part_beyond_length_is_zero():
    lam = Partition([5, 5, 4, 1])
    assert lam.part(3) == 4
    assert lam.part(9) == 0
    assert Partition([]).part(1) == 0
    with pytest.raises(ValueError):
        lam.part(0)


def test_smallest_of_empty_raises():
    with pytest.raises(EmptyPartition):
        Partition([]).smallest


def test_enumerate_small_order():
    got = [p.parts for p in enumerate_partitions(4)]
    assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [p.parts for p in enumerate_partitions(0)] == [()]
    assert len(list(enumerate_partitions(5))) == 7


def test_enumerate_is_reverse_lexicographic_and_complete():
    for n in range(11):
        seen = [p.parts for p in enumerate_partitions(n)]
        assert seen == sorted(seen, reverse=True)
        assert len(set(seen)) == len(seen)
        assert all(sum(t) == n for t in seen)
        for t in seen:
            assert all(a >= b for a, b in zip(t, t[1:]))


def test_p_table_against_enumeration():
    pt = p_table(20)
    for n in range(21):
        assert pt[n] == len(partitions_of(n))


def test_p_table_examples():
    assert p_table(5) == [1, 1, 2, 3, 5, 7]
    assert p_table(0) == [1]
    assert p_table(10)[10] == 42


def test_q_table_small_values():
    # at most one Durfee square means nothing sits below the first square:
    # of the partitions of 4 only (4) and (2,2) qualify
    assert q_table(1, 4) == [1, 1, 1, 1, 2]
    assert q_table(1, 0) == [1]
    assert q_table(0, 3) == [1, 0, 0, 0]


def test_q_table_matches_rectangle_decomposition():
    # independent route: a partition has more than k squares exactly when
    # the general decomposition finds a (k+1)-th one
    for n in range(13):
        pt = len(partitions_of(n))
        for k in range(1, 4):
            count = 0
            for lam in partitions_of(n):
                try:
                    decompose(lam, k + 1, 0)
                except NoSuchDecomposition:
                    count += 1
            assert q_table(k, n)[n] == count
            assert q_table(k, n)[n] <= pt


def test_q_table_monotone_and_saturates():
    pt = p_table(12)
    for n in range(13):
        prev = 0
        for k in range(0, n + 2):
            qk = q_table(k, n)[n]
            assert qk >= prev
            prev = qk
        assert q_table(n, n)[n] == pt[n]


def test_durfee_square_widths_examples():
    widths = durfee_square_widths(Partition([7, 7, 6, 6, 5, 4, 3, 3, 3, 2, 1, 1, 1, 1, 1]))
    assert widths[:3] == (5, 3, 2)
    assert widths == (5, 3, 2) + (1,) * 5  # trailing unit rows give 1x1 squares
    assert durfee_square_widths(Partition([])) == ()
    assert durfee_square_widths(Partition([1, 1, 1])) == (1, 1, 1)


def test_text_form():
    assert Partition([5, 5, 4, 1]).text() == "5,5,4,1"
    assert Partition([]).text() == "-"
    assert Partition.from_text("5,5,4,1") == Partition([5, 5, 4, 1])
    assert Partition.from_text("-") == Partition([])
    assert Partition.from_text(" 3,1 ") == Partition([3, 1])
    with pytest.raises(ValueError):
        Partition.from_text("3,x")
    with pytest.raises(ValueError):
        Partition.from_text("1,3")


@given(partitions)
def test_text_round_trip(lam):
    assert Partition.from_text(lam.text()) == lam
