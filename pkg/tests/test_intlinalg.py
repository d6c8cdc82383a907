from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from gradecs.intlinalg import (
    det,
    identity_matrix,
    integer_kernel_basis,
    invariant_factors,
    mat_mul,
    mat_vec,
    rational_kernel_basis,
    saturated_sublattice_basis,
    smith_normal_form,
    solve_fraction,
)


def test_smith_basic():
    A = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    D, U, V = smith_normal_form(A)
    assert mat_mul(mat_mul(U, A), V) == D
    assert [D[i][i] for i in range(3)] == [2, 2, 156]


def test_smith_rectangular_and_zero():
    A = [[0, 0], [0, 0], [0, 0]]
    D, U, V = smith_normal_form(A)
    assert D == A
    A = [[1, 2, 3]]
    D, U, V = smith_normal_form(A)
    assert mat_mul(mat_mul(U, A), V) == D
    assert D[0][0] == 1


@settings(max_examples=80, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=-9, max_value=9), min_size=4, max_size=4),
        min_size=3,
        max_size=3,
    )
)
def test_smith_properties(A):
    D, U, V = smith_normal_form(A)
    assert mat_mul(mat_mul(U, A), V) == D
    assert abs(det(U)) == 1
    assert abs(det(V)) == 1
    diag = [D[i][i] for i in range(3)]
    for i in range(2):
        if diag[i]:
            assert diag[i + 1] % diag[i] == 0
        else:
            assert diag[i + 1] == 0
    for i in range(3):
        for j in range(4):
            if i != j:
                assert D[i][j] == 0
    assert all(d >= 0 for d in diag)


def test_cartan_a3_center():
    A3 = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
    assert invariant_factors(A3) == [4]


def test_solve_and_inverse():
    A = [[2, 1], [1, 1]]
    x = solve_fraction(A, [3, 2])
    assert x == [Fraction(1), Fraction(1)]


def test_rational_kernel():
    A = [[1, 1, 0], [0, 1, 1]]
    K = rational_kernel_basis(A)
    assert len(K) == 1
    assert mat_vec(A, K[0]) == [0, 0]


def test_integer_kernel_is_saturated():
    eqs = [[Fraction(1, 2), Fraction(1, 2), 0]]
    K = integer_kernel_basis(eqs, 3)
    assert len(K) == 2
    for v in K:
        assert sum(Fraction(e) * x for e, x in zip(eqs[0], v)) == 0


def test_saturation():
    basis = saturated_sublattice_basis([[2, 0], [0, 4]], 2)
    assert sorted(map(abs, map(det, [basis]))) == [1]
    basis = saturated_sublattice_basis([[2, 2]], 2)
    assert len(basis) == 1
    assert basis[0] in ([1, 1], [-1, -1])
    assert saturated_sublattice_basis([], 3) == []
    full = saturated_sublattice_basis(identity_matrix(3), 3)
    assert abs(det(full)) == 1
