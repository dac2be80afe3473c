"""
    Tests for the homquiver package
    Released under The MIT License. See LICENSE file for details.

    Tests homquiver.linalg module. Requires "pytest" and "hypothesis" to run.
"""

import random
from fractions import Fraction
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from homquiver import linalg
from homquiver._linalg import SparseEchelon
from homquiver.linalg import Matrix


def _random_matrix(seed):
    rng = random.Random(seed)
    nrows, ncols = rng.randint(0, 5), rng.randint(1, 5)
    return Matrix([[rng.randint(-3, 3) for _ in range(ncols)] for _ in range(nrows)], ncols)


def test_matrix_shape1():
    with pytest.raises(ValueError):
        Matrix([])


def test_matrix_shape2():
    m = Matrix.zero(0, 3)
    assert m.shape == (0, 3)
    assert m.transpose().shape == (3, 0)


def test_matrix_shape3():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])


def test_matrix_multiply1():
    m1 = Matrix([[1, 2], [3, 4]])
    m2 = Matrix([[0, 1], [1, 0]])
    assert (m1 * m2).to_list() == [[2, 1], [4, 3]]


def test_matrix_multiply2():
    with pytest.raises(ValueError):
        linalg.matrix_multiply(Matrix([[1, 2]]), Matrix([[1, 2]]))


def test_matrix_multiply3():
    # (2 x 0) times (0 x 3) is the zero matrix of shape (2, 3)
    result = Matrix.zero(2, 0) * Matrix.zero(0, 3)
    assert result.shape == (2, 3)
    assert result.is_zero()


def test_matrix_scalar():
    m = linalg.matrix_scalar(Matrix([[1, 2]]), Fraction(1, 2))
    assert m.to_list() == [[Fraction(1, 2), 1]]


def test_matrix_identity():
    ident = linalg.matrix_identity(3)
    m = Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert ident * m == m
    assert m * ident == m


def test_rank1():
    assert linalg.rank(Matrix([[1, 2], [2, 4]])) == 1


def test_rank2():
    assert linalg.rank(Matrix.zero(3, 0)) == 0


def test_nullspace():
    m = Matrix([[1, 1, 0], [0, 0, 1]])
    basis = linalg.nullspace(m)
    assert len(basis) == 1
    assert m.apply(basis[0]) == [0, 0]


def test_solve1():
    m = Matrix([[2, 0], [0, 4]])
    assert linalg.solve(m, [1, 1]) == [Fraction(1, 2), Fraction(1, 4)]


def test_solve2():
    m = Matrix([[1, 1], [2, 2]])
    assert linalg.solve(m, [1, 3]) is None


def test_determinant1():
    assert linalg.determinant(Matrix([[1, 2], [3, 4]])) == -2


def test_determinant2():
    with pytest.raises(ValueError):
        linalg.determinant(Matrix([[1, 2, 3]]))


def test_complement_basis():
    keep, ech = linalg.complement_basis([[0, 1, 1]], 3)
    assert keep == [0, 1]
    assert len(ech) == 1


def test_independent_subset():
    vectors = [[1, 0], [2, 0], [0, 1], [1, 1]]
    assert linalg.independent_subset(vectors) == [0, 2]
    assert linalg.independent_subset(vectors, start=[[1, 0]]) == [2]


def test_block_diagonal():
    m = linalg.block_diagonal([Matrix([[1]]), Matrix([[2, 3], [4, 5]])])
    assert m.to_list() == [[1, 0, 0], [0, 2, 3], [0, 4, 5]]


def test_stack():
    top = Matrix([[1, 2]])
    bottom = Matrix([[3, 4]])
    assert linalg.vstack([top, bottom], 2).to_list() == [[1, 2], [3, 4]]
    assert linalg.hstack([top, bottom], 1).to_list() == [[1, 2, 3, 4]]


def test_sparse_echelon1():
    ech = SparseEchelon()
    assert ech.insert({0: 1, 1: 1})
    assert ech.insert({1: 1})
    assert not ech.insert({0: 3, 1: 5})
    assert ech.pivots == [0, 1]
    assert ech.row(0) == {0: 1}


def test_sparse_echelon2():
    with pytest.raises(ValueError):
        SparseEchelon(pivot='middle')


@settings(max_examples=100, derandomize=True, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_rank_nullity(seed):
    m = _random_matrix(seed)
    basis = linalg.nullspace(m)
    assert linalg.rank(m) + len(basis) == m.ncols
    for vec in basis:
        assert all(v == 0 for v in m.apply(vec))


@settings(max_examples=100, derandomize=True, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_rank_transpose(seed):
    m = _random_matrix(seed)
    assert linalg.rank(m) == linalg.rank(m.transpose())


@settings(max_examples=100, derandomize=True, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_solve_consistent(seed):
    m = _random_matrix(seed)
    rng = random.Random(seed + 1)
    x = [rng.randint(-3, 3) for _ in range(m.ncols)]
    sol = linalg.solve(m, m.apply(x))
    assert sol is not None
    assert m.apply(sol) == m.apply(x)
