import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopsym.band import (BandMatrix, ShapeError, band_mul, c_transform, curl, curl_product,
                          flow_atoms, identity, loop_e_from_matrix, loop_h_from_matrix, product,
                          unitriangular_inverse, whirl, whirl_product, window_for)
from loopsym.generators import loop_e, loop_h
from loopsym.poly import Ring


def atoms3():
    R = Ring(3, 1)
    return R, [R.var(1, 1), R.var(2, 1), R.var(3, 1)]


def test_whirl_shape():
    R, a = atoms3()
    M = whirl(a, 5)
    assert M.is_unitriangular()
    assert M[1, 2] == a[0] and M[2, 3] == a[1] and M[3, 4] == a[2] and M[4, 5] == a[0]
    assert M[1, 3].is_zero()
    assert M.period == 3


def test_whirl_rejects_empty_window():
    R, a = atoms3()
    with pytest.raises(ShapeError):
        whirl(a, 0)


def test_one_color_whirl_has_constant_superdiagonal():
    R = Ring(1, 1)
    x = R.var(1, 1)
    M = whirl([x], 4)
    assert all(M[i, i + 1] == x for i in range(1, 4))


def test_empty_product_is_identity():
    R = Ring(2, 2)
    assert product([], R, 4, 2) == identity(R, 4, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("K", [1, 4, 8])
def test_curl_matches_monomial_formula(n, K):
    R = Ring(n, 1)
    a = [R.var(i, 1) for i in range(1, n + 1)]
    N = curl(a, K)
    for i in range(1, K + 1):
        for j in range(1, K + 1):
            if j < i:
                assert N[i, j].is_zero()
                continue
            expected = R.one()
            for t in range(i, j):
                expected = expected * a[(t - 1) % n]
            assert N[i, j] == expected


def test_c_transform_basics():
    R, a = atoms3()
    I = identity(R, 5, 3)
    assert c_transform(I) == I
    M = whirl(a, 5)
    assert c_transform(c_transform(M)) == M
    assert c_transform(M)[1, 2] == -a[0]


def test_inverse_and_identity():
    R, a = atoms3()
    I = identity(R, 6, 3)
    assert unitriangular_inverse(I) == I
    M = whirl(a, 6)
    assert band_mul(M, unitriangular_inverse(M)) == I
    assert band_mul(M, I) == M


def test_inverse_rejects_non_unitriangular():
    R, a = atoms3()
    M = whirl(a, 3)
    rows = [list(r) for r in M.window]
    rows[1][1] = R.const(2)
    with pytest.raises(ShapeError):
        unitriangular_inverse(BandMatrix(tuple(tuple(r) for r in rows), 3))


def test_mul_size_mismatch():
    R, a = atoms3()
    with pytest.raises(ShapeError):
        band_mul(whirl(a, 3), whirl(a, 4))


def test_c_transform_is_multiplicative_symbolically():
    R = Ring(2, 3)
    A, B = whirl(flow_atoms(R, 1), 7), curl(flow_atoms(R, 2), 7)
    assert c_transform(band_mul(A, B)) == band_mul(c_transform(A), c_transform(B))


@settings(max_examples=30)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=2),
       st.lists(st.integers(-9, 9), min_size=2, max_size=2))
def test_c_transform_is_multiplicative_on_numeric_whirls(u, v):
    R = Ring(1, 2)
    A = whirl([R.const(c) for c in u], 6)
    B = whirl([R.const(c) for c in v], 6)
    assert c_transform(band_mul(A, B)) == band_mul(c_transform(A), c_transform(B))


@pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (2, 3)])
def test_truncation_consistency(m, n):
    R = Ring(m, n)
    big_e, big_h = whirl_product(R, 9), curl_product(R, 9)
    for k in range(1, 9):
        assert big_e.restrict(k) == whirl_product(R, k)
        assert big_h.restrict(k) == curl_product(R, k)


@pytest.mark.parametrize("m,n", [(2, 2), (3, 3)])
def test_operations_preserve_periodicity(m, n):
    R = Ring(m, n)
    A = whirl_product(R, 8)
    assert A.is_periodic()
    assert c_transform(A).is_periodic()
    assert unitriangular_inverse(A).is_periodic()
    assert band_mul(A, curl_product(R, 8)).is_periodic()


def test_whirl_product_first_row_three_flows_two_colors():
    R = Ring(3, 2)
    x = R.var
    A = whirl_product(R, 5)
    assert A[1, 2] == x(1, 1) + x(2, 1) + x(3, 1)
    assert A[1, 3] == x(1, 1) * x(2, 2) + x(2, 1) * x(3, 2) + x(1, 1) * x(3, 2)
    assert A[1, 4] == x(1, 1) * x(2, 2) * x(3, 1)
    assert A[1, 5].is_zero()


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_matrix_and_formula_agree(m, n):
    R = Ring(m, n)
    k_max = 6
    K = window_for(R, k_max)
    A, B = whirl_product(R, K), curl_product(R, K)
    for k in range(k_max + 1):
        for r in range(1, n + 1):
            assert A[r, r + k] == loop_e(R, k, r)
            assert B[r, r + k] == loop_h(R, k, r)


def test_single_entry_helpers():
    R = Ring(2, 2)
    assert loop_e_from_matrix(R, 2, 2) == loop_e(R, 2, 2)
    assert loop_h_from_matrix(R, 3, 1) == loop_h(R, 3, 1)


def test_dump_and_json_mention_entries():
    R, a = atoms3()
    M = whirl(a, 3)
    assert "x_1^(1)" in M.dump()
    assert '"period": 3' in M.to_json()
