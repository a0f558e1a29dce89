"""Exact rank and nullspace checks against hand-computed matrices and a
random cross-validation against floating SVD-free row reduction."""

from fractions import Fraction
import random

import pytest

from agealgebra.linalg import RationalMatrix, matmul, nullspace_basis, rank


def M(rows):
    return RationalMatrix([[Fraction(x) for x in row] for row in rows])


def test_rank_hand_cases():
    assert rank(M([[1, 0], [0, 1]])) == 2
    assert rank(M([[1, 2], [2, 4]])) == 1
    assert rank(M([[0, 0], [0, 0]])) == 0
    assert rank(M([[1, 2, 3], [4, 5, 6], [7, 8, 9]])) == 2


def test_rank_with_fractions():
    m = M([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 2]])
    assert rank(m) == 2
    # second row is three times the first: rank drops
    singular = M([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
    assert rank(singular) == 1


def test_nullspace_of_wide_matrix():
    basis = nullspace_basis(M([[1, 1]]))
    assert basis == [[Fraction(1), Fraction(-1)]]


def test_nullspace_dimension_and_membership():
    m = M([[1, 2, 3], [4, 5, 6]])
    basis = nullspace_basis(m)
    assert len(basis) == 1
    v = basis[0]
    assert all(x == 0 for x in m.apply(v))
    assert next(x for x in v if x) == 1  # normalized leading coordinate


def test_nullspace_trivial_for_full_column_rank():
    assert nullspace_basis(M([[1, 0], [0, 1], [1, 1]])) == []


def test_zero_row_matrix_nullspace_is_identity():
    m = RationalMatrix.zeros(0, 3)
    basis = nullspace_basis(m)
    assert len(basis) == 3


def test_rank_plus_nullity_random():
    rng = random.Random(7)
    for _ in range(25):
        r = rng.randint(1, 5)
        c = rng.randint(1, 5)
        m = M([[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)])
        assert rank(m) + len(nullspace_basis(m)) == c


def test_matmul_and_transpose():
    a = M([[1, 2], [3, 4]])
    b = M([[0, 1], [1, 0]])
    assert matmul(a, b) == M([[2, 1], [4, 3]])
    assert a.transpose() == M([[1, 3], [2, 4]])
    with pytest.raises(ValueError):
        matmul(a, M([[1, 2, 3]]))


def test_rank_invariant_under_transpose_random():
    rng = random.Random(13)
    for _ in range(20):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        m = M([[rng.randint(-2, 2) for _ in range(c)] for _ in range(r)])
        assert rank(m) == rank(m.transpose())
