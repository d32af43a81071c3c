import pytest

from durfee import (
    QSeries,
    h_census_series,
    inv_euler,
    jacobi_specialization,
    multisum_lhs,
    p_table,
    partitions_of,
    pochhammer,
    q_table,
    rr_product,
    schur_rhs,
    verify_identity,
)
from durfee.errors import ImpracticalOrder, UnknownIdentity, UnsupportedRegion
from durfee.qseries import _first_mismatch


def geometric(order):
    return QSeries([1] * (order + 1), order)


def test_mul_basic_identities():
    one_minus_q = QSeries([1, -1], 10)
    assert one_minus_q * geometric(10) == QSeries.one(10)
    f = QSeries([3, 1, 4, 1, 5], 4)
    assert f * QSeries.one(4) == f
    assert (f + (-f)) == QSeries.zero(4)


def test_mixed_orders_truncate_to_smaller():
    a = QSeries([1, 1, 1, 1, 1, 1], 5)
    b = QSeries([1, 2], 1)
    assert (a * b).order == 1
    assert (a + b).order == 1


def test_coefficients_must_be_ints():
    with pytest.raises(TypeError):
        QSeries([1.0, 2])
    with pytest.raises(TypeError):
        QSeries([True])


def test_pochhammer_values():
    assert pochhammer(1, 3).coeffs == (1, -1, 0, 0)
    assert pochhammer(0, 5) == QSeries.one(5)
    assert pochhammer(None, 7).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)


def test_inv_euler_two_oracles():
    T = 16
    s = inv_euler(T)
    assert list(s.coeffs) == p_table(T)  # pentagonal recurrence route
    for n in range(T + 1):  # enumeration route
        assert s.coeffs[n] == len(partitions_of(n))
    assert s * pochhammer(None, T) == QSeries.one(T)
    assert inv_euler(10).coeffs[10] == 42


def test_multisum_examples():
    assert multisum_lhs(1, None, 12) == QSeries.one(12)
    ms = multisum_lhs(2, None, 4)
    assert list(ms.coeffs) == [1, 1, 1, 1, 2]
    T = 30
    assert list(multisum_lhs(2, None, T).coeffs) == q_table(1, T)
    assert list(multisum_lhs(3, None, T).coeffs) == q_table(2, T)


def test_multisum_shift_bounds():
    with pytest.raises(ValueError):
        multisum_lhs(2, 3, 10)
    assert multisum_lhs(3, 3, 15) == multisum_lhs(3, None, 15)


def test_schur_rhs_examples():
    assert schur_rhs(1, 20) == QSeries.one(20)
    assert schur_rhs(2, 25) == multisum_lhs(2, None, 25)


def residue_count_oracle(allowed_residues, mod, n):
    """Partitions of n into parts with allowed residues, by enumeration."""
    return sum(
        1
        for lam in partitions_of(n)
        if all(x % mod in allowed_residues for x in lam.parts)
    )


def test_rr_product_against_counting_oracle():
    s = rr_product(2, 2, 14)  # parts not 0, +-2 mod 5, i.e. 1 or 4 mod 5
    for n in range(15):
        assert s.coeffs[n] == residue_count_oracle({1, 4}, 5, n)
    assert list(s.coeffs[:7]) == [1, 1, 1, 1, 2, 2, 3]
    s2 = rr_product(2, 1, 14)  # parts 2 or 3 mod 5
    assert s2.coeffs[1] == 0
    for n in range(15):
        assert s2.coeffs[n] == residue_count_oracle({2, 3}, 5, n)


def test_rr_product_k1_empty():
    assert rr_product(1, 1, 20) == QSeries.one(20)


def test_jacobi_specialization_values():
    theta, prod = jacobi_specialization(1, 12)
    want = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]
    assert list(theta.coeffs) == want
    assert list(prod.coeffs) == want
    theta2, prod2 = jacobi_specialization(2, 11)
    want2 = [1, 0, -1, -1, 0, 0, 0, 0, 0, 1, 0, 1]
    assert list(theta2.coeffs) == want2
    assert theta2 == prod2


def test_jacobi_equality_medium():
    for k in range(1, 5):
        theta, prod = jacobi_specialization(k, 60)
        assert theta == prod


def test_h_census_series_values():
    s = h_census_series(1, 0, 0, "le", 6)
    # partitions of 4 with non-positive Dyson rank: (2,2), (2,1,1), (1,1,1,1)
    assert s.coeffs[4] == 3
    le = h_census_series(2, 1, 1, "le", 10)
    ge = h_census_series(2, 1, 2, "ge", 10)
    pt = p_table(10)
    for n in range(11):
        assert le.coeffs[n] + ge.coeffs[n] == pt[n]


def test_h_census_series_guards():
    with pytest.raises(ValueError):
        h_census_series(1, 0, 0, "<=", 5)
    with pytest.raises(ImpracticalOrder):
        h_census_series(1, 0, 0, "le", 70)


def test_verify_identity_reports():
    rep = verify_identity("schur", 30, k=2)
    assert rep.ok and rep.mismatch is None and rep.params == {"k": 2}
    rep = verify_identity("andrews", 25, k=2, a=1)
    assert rep.ok
    rep = verify_identity("pentagonal", 40)
    assert rep.ok
    rep = verify_identity("h_closed_form", 12, k=1, m=0, r=1)
    assert rep.ok


def test_verify_identity_errors():
    with pytest.raises(UnknownIdentity):
        verify_identity("fermat", 10)
    with pytest.raises(ValueError):
        verify_identity("schur", 10)  # k missing
    with pytest.raises(UnsupportedRegion):
        verify_identity("h_closed_form", 10, k=1, m=-1, r=1)
    with pytest.raises(UnsupportedRegion):
        verify_identity("h_closed_form", 10, k=1, m=1, r=0)


def test_first_mismatch_structure():
    a = QSeries([1, 2, 3], 2)
    b = QSeries([1, 5, 3], 2)
    assert _first_mismatch(a, b) == {"n": 1, "lhs": 2, "rhs": 5}
    assert _first_mismatch(a, a) is None
