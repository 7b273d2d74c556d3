from fractions import Fraction as F

import pytest

from lefhopf.exactla import (
    Matrix,
    ModuloSolver,
    column_basis,
    det,
    in_span,
    rank,
    restricted_trace,
    rref,
    rref_decompose,
    solve_modulo,
    solve_modulo_many,
)
from lefhopf.homology import boundary_matrices
from lefhopf.scomplex import cycle

from oracles import leibniz_det, sym_det, sym_rank


def test_zero_matrix_decomposition():
    d = rref_decompose(Matrix.zeros(2, 3))
    assert d.rank == 0
    assert len(d.kernel_basis) == 3
    assert d.image_basis == ()


def test_proportional_rows():
    d = rref_decompose(Matrix([[1, 2], [2, 4]]))
    assert d.rank == 1
    assert d.kernel_basis == ((F(-2), F(1)),)
    assert d.pivot_cols == (0,)


def test_cycle3_boundary_rank():
    d1 = boundary_matrices(cycle(3)).boundary(1)
    assert d1.shape == (3, 3)
    assert rank(d1) == 2
    assert rank(d1) == sym_rank(d1.tolist())


def test_empty_matrices():
    assert rank(Matrix.zeros(0, 0)) == 0
    assert det(Matrix.zeros(0, 0)) == 1
    d = rref_decompose(Matrix.zeros(0, 4))
    assert d.rank == 0 and len(d.kernel_basis) == 4
    d = rref_decompose(Matrix.zeros(3, 0))
    assert d.rank == 0 and d.kernel_basis == ()


def test_matrix_validation():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        Matrix([])
    with pytest.raises(AttributeError):
        Matrix([[1]]).rows = ()


def test_matrix_arithmetic():
    A = Matrix([[1, 2], [3, 4]])
    B = Matrix([[0, 1], [1, 0]])
    assert (A @ B).tolist() == [[2, 1], [4, 3]]
    assert (A + B).tolist() == [[1, 3], [4, 4]]
    assert (A - A).is_zero()
    assert A.T.tolist() == [[1, 3], [2, 4]]
    assert A.trace() == 5
    assert A.apply((1, 1)) == (3, 7)
    assert A.scale(F(1, 2))[1, 1] == 2
    assert Matrix.identity(2) @ A.T.T == A
    with pytest.raises(ValueError):
        A @ Matrix.zeros(3, 1)
    with pytest.raises(ValueError):
        Matrix.zeros(2, 3).trace()


def test_rref_is_reduced():
    R, piv = rref(Matrix([[0, 2, 4], [1, 1, 1], [1, 3, 5]]))
    assert piv == [0, 1]
    assert R.tolist() == [[1, 0, -1], [0, 1, 2], [0, 0, 0]]


def test_solve_modulo_examples():
    assert solve_modulo((2, 3), [(1, 0)], [(0, 1)]) == (F(2),)
    assert solve_modulo((0, 1), [(1, 0)], [(0, 1)]) == (F(0),)
    assert solve_modulo((1, 1), [(1, 0)], []) is None


def test_solve_modulo_many_shares_elimination():
    sols = solve_modulo_many([(2, 3), (1, 1), (0, 5)], [(1, 0)], [(0, 1)])
    assert sols == [(F(2),), (F(1),), (F(0),)]
    with pytest.raises(ValueError):
        solve_modulo_many([(1, 2, 3)], [(1, 0)], [])


def test_modulo_solver_agrees():
    B = [(1, 1, 0), (0, 1, 1)]
    Q = [(1, 0, 1)]
    s = ModuloSolver(B, Q, 3)
    for v in [(1, 2, 1), (2, 0, 2), (0, 0, 1), (5, 5, 5)]:
        assert s.solve(v) == solve_modulo(v, B, Q)


def test_det_examples():
    assert det(Matrix.identity(3)) == 1
    assert det(Matrix([[0, 1], [1, 0]])) == -1
    assert det(Matrix([[2, 1], [1, 2]])) == 3
    with pytest.raises(ValueError):
        det(Matrix.zeros(2, 3))


def test_det_against_oracles():
    M = [[F(1, 2), 3, -1], [2, F(-1, 3), 4], [0, 5, F(7, 5)]]
    assert det(Matrix(M)) == leibniz_det(M) == sym_det(M)


def test_det_of_singular():
    assert det(Matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])) == 0


def test_in_span_and_column_basis():
    assert in_span((2, 4), [(1, 2)])
    assert not in_span((1, 0), [(1, 2)])
    assert in_span((0, 0), [])
    assert column_basis([(1, 2), (2, 4), (0, 1)], 2) == [(1, 2), (0, 1)]


def test_restricted_trace():
    T = Matrix([[2, 0, 0], [0, 3, 1], [0, 0, 5]])
    assert restricted_trace(T, [(1, 0, 0), (0, 1, 0)]) == 5
    assert restricted_trace(T, [(0, 0, 1)]) is None
    assert restricted_trace(T, []) == 0
