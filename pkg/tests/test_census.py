import pytest

from durfee import Partition, census, h_count, p_table, partitions_of, q_table, rank_km
from durfee.census import rank_census
from durfee.errors import NoSuchDecomposition

P = Partition


def test_census_classic_ranks_n4():
    table = census(4, 1, 0)
    assert table.rows == {3: 1, 1: 1, 0: 1, -1: 1, -3: 1}
    assert table.total == 5


def test_census_empty_partition():
    table = census(0, 1, 1)
    assert table.rows == {0: 1}


def test_census_totals():
    t = census(10, 2, 0)
    assert t.total == p_table(10)[10] - q_table(1, 10)[10]
    for m in (1, 2):
        assert census(9, 2, m).total == p_table(9)[9]


def test_h_count_modes():
    assert h_count(4, 1, 0, 0, "le") == 3
    assert h_count(4, 1, 0, 1, "ge") == 2
    assert h_count(4, 1, 0, 0, "eq") == 1
    assert h_count(-1, 1, 0, 0, "le") == 0
    with pytest.raises(ValueError):
        h_count(4, 1, 0, 0, "between")


def test_census_json_shape():
    doc = census(4, 1, 0).to_json_dict()
    assert doc["rows"] == {"-3": 1, "-1": 1, "0": 1, "1": 1, "3": 1}
    assert doc["total"] == 5


def test_workers_env_gives_same_counts(monkeypatch):
    baseline = dict(rank_census(12, 2, 0))
    monkeypatch.setenv("DURFEE_WORKERS", "2")
    rank_census.cache_clear()
    try:
        sharded = dict(rank_census(12, 2, 0))
    finally:
        rank_census.cache_clear()
    assert sharded == baseline


def test_half_line_shift_matches_at_m0():
    # moving from squares to 2-rectangles: counts with rank at most -r on
    # one side match counts with rank at least -r one step down
    for k in (1, 2):
        for r in (-1, 0, 1, 2):
            for n in range(15):
                n2 = n - r - k
                lhs = h_count(n, k, 0, -r, "le")
                rhs = h_count(n2, k, 2, -r, "ge") if n2 >= 0 else 0
                assert lhs == rhs, (k, r, n)


def test_half_line_shift_fails_below_m0():
    # the collapsed half-line identity is false at m=-1: partitions whose
    # shifted rectangles have width 0 (here (3), counted on the right) have
    # no preimage, since that preimage would need a height-0 rectangle
    k, m, r, n = 1, -1, 1, 4
    lhs = h_count(n, k, m, -r, "le")
    rhs = h_count(n - r - k * (m + 1), k, m + 2, -r, "ge")
    assert lhs == 2
    assert rhs == 3
    assert lhs != rhs


def test_half_line_shift_below_m0_with_width_filter():
    # restricting the right side to widths reachable from positive-height
    # rectangles (width >= -m) restores the bijection's count
    for k in (1, 2):
        m = -1
        for r in (0, 1, 2):
            for n in range(14):
                n2 = n - r - k * (m + 1)
                lhs = 0
                for lam in partitions_of(n):
                    try:
                        st = rank_km(lam, k, m)
                    except NoSuchDecomposition:
                        continue
                    if st.r <= -r and 0 not in st.widths:
                        lhs += 1
                rhs = 0
                if n2 >= 0:
                    for mu in partitions_of(n2):
                        try:
                            st = rank_km(mu, k, m + 2)
                        except NoSuchDecomposition:
                            continue
                        if st.r >= -r and all(w >= -m for w in st.widths):
                            rhs += 1
                assert lhs == rhs, (k, r, n)
