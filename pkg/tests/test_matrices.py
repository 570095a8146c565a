from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crg import (
    ExactMatrix,
    M,
    ParamPoly,
    char_poly,
    cyclotomic_field,
    evaluate,
    rank_and_kernel,
)

F = Fraction


def ones(n: int) -> ExactMatrix:
    return ExactMatrix(n, n, [F(1)] * (n * n))


def test_shape_checks():
    with pytest.raises(ValueError):
        ExactMatrix(2, 2, [1, 2, 3])
    with pytest.raises(ValueError):
        ExactMatrix.from_rows([[1, 2], [3]])


def test_matrix_algebra():
    a = ExactMatrix.from_rows([[F(1), F(2)], [F(3), F(4)]])
    b = ExactMatrix.identity(2)
    assert a * b == a and b * a == a
    assert (a + a) == 2 * a
    assert (a - a).is_zero()
    assert a.transpose().row(0) == (F(1), F(3))
    with pytest.raises(ValueError):
        a * ExactMatrix(3, 3, [F(0)] * 9)


def test_kron_shape_and_values():
    a = ExactMatrix.from_rows([[F(1), F(2)]])
    b = ExactMatrix.from_rows([[F(0)], [F(3)]])
    k = a.kron(b)
    assert (k.rows, k.cols) == (2, 2)
    assert k.to_lists() == [[F(0), F(0)], [F(3), F(6)]]


def test_char_poly_examples():
    assert char_poly(ExactMatrix(1, 1, [F(5)])) == -(M - 5)
    assert char_poly(ones(3)) == -(M ** 2) * (M - 3)
    two = ExactMatrix.from_rows([[F(1), F(2)], [F(2), F(1)]])
    assert char_poly(two) == (M - 3) * (M + 1)
    with pytest.raises(ValueError):
        char_poly(ExactMatrix(1, 2, [F(0), F(0)]))


def test_char_poly_leading_coefficient_sign():
    for n in (1, 2, 3, 4, 5):
        p = char_poly(ExactMatrix.identity(n))
        assert p.degree == n
        assert p.leading == (-1) ** n


def test_char_poly_krylov_route_matches_hand_result():
    # 70x70 all-ones: eigenvalues 70 and 0, so det(A - mI) = (m-70)m^69
    n = 70
    p = char_poly(ones(n))
    assert p == (M - n) * M ** (n - 1)


def test_char_poly_large_fallback_with_irrational_spectrum():
    # golden-ratio block embedded in an identity: Krylov route must hand over
    n = 70
    ent = [F(1) if i == j else F(0) for i in range(n) for j in range(n)]
    m = ExactMatrix(n, n, ent)
    lst = m.to_lists()
    lst[0][0], lst[0][1], lst[1][0], lst[1][1] = F(0), F(1), F(1), F(1)
    p = char_poly(ExactMatrix.from_rows(lst))
    assert p == (M ** 2 - M - 1) * (1 - M) ** (n - 2)


def test_char_poly_multiplicity_matches_rank_drop():
    mats = [
        [[2, 0, 0], [0, 2, 0], [0, 0, 5]],
        [[1, 1, 0], [1, 1, 0], [0, 0, 3]],
        [[0, 1, 1], [1, 0, 1], [1, 1, 0]],
    ]
    for rows in mats:
        mat = ExactMatrix.from_rows([[F(x) for x in r] for r in rows])
        factors, remainder, _ = integer_roots_of(mat)
        for root, mult in factors:
            shifted = mat - ExactMatrix.identity(3, F(root))
            rank, kernel = rank_and_kernel(shifted)
            assert mult == 3 - rank == len(kernel)


def integer_roots_of(mat):
    from crg import integer_roots

    factors, remainder, sign = integer_roots(char_poly(mat))
    return factors, remainder, sign


def test_rank_and_kernel_examples():
    rank, kernel = rank_and_kernel(ExactMatrix.identity(3))
    assert rank == 3 and kernel == []
    rank, kernel = rank_and_kernel(ones(3))
    assert rank == 1 and len(kernel) == 2
    for v in kernel:
        assert ones(3).apply(v) == [F(0)] * 3


def test_rank_and_kernel_over_cyclotomic_scalars():
    f = cyclotomic_field(5)
    z = f.zeta()
    mat = ExactMatrix.from_rows([[z, z ** 2], [z ** 3, z ** 4]])
    rank, kernel = rank_and_kernel(mat)
    assert rank == 1 and len(kernel) == 1
    assert all(e.is_zero() for e in mat.apply(kernel[0]))


def test_rank_rejects_polynomial_entries():
    with pytest.raises(TypeError):
        rank_and_kernel(ExactMatrix(1, 1, [M]))


def test_evaluate():
    d = ExactMatrix.from_rows([[M, ParamPoly()], [ParamPoly(), M]])
    assert evaluate(d, 3) == ExactMatrix.from_rows([[F(3), F(0)], [F(0), F(3)]])
    assert evaluate(ExactMatrix(1, 1, [1 - M]), 1)[0, 0] == 0
    assert evaluate(ExactMatrix(1, 1, [M ** 2 - 1]), F(3, 2))[0, 0] == F(5, 4)


@settings(max_examples=20, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=4, max_size=4
    )
)
def test_char_poly_symmetric_multiplicity_property(rows):
    # symmetrize so the matrix is diagonalizable over the rationals
    sym = [[F(rows[i][j] + rows[j][i]) for j in range(4)] for i in range(4)]
    mat = ExactMatrix.from_rows(sym)
    p = char_poly(mat)
    assert p.leading == 1
    factors, _, _ = integer_roots_of(mat)
    for root, mult in factors:
        rank, _ = rank_and_kernel(mat - ExactMatrix.identity(4, F(root)))
        assert mult == 4 - rank
