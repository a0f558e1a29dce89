"""Containment matrices, rank laws, and the derivation/scaling identity."""

import random
from fractions import Fraction
from math import comb

from agealgebra.incidence import (
    check_commutation,
    derivation_matrix,
    inclusion_matrix,
    scaling_matrix,
    verify_kantor,
    weighted_kantor_check,
)
from agealgebra.linalg import matmul, rank
from agealgebra.setfuncs import SetFunction, singleton_ones
from agealgebra.subsets import Subset


def weight(l, values):
    return SetFunction(
        l, 1, {Subset.from_indices(l, [i]): Fraction(v) for i, v in values.items() if v}
    )


def test_inclusion_matrix_shape_and_entries():
    m = inclusion_matrix(4, 1, 1)
    assert len(m.entries) == 4 and len(m.entries[0]) == 6
    total = sum(sum(row) for row in m.entries)
    # each pair contains two singletons
    assert total == 12


def test_full_row_rank_inside_the_threshold():
    for l in range(1, 8):
        for n in range(l // 2 + 1):
            for m in range(l - 2 * n + 1):
                if n + m == 0:
                    continue
                assert verify_kantor(l, n, m), (l, n, m)


def test_rank_deficient_outside_the_threshold():
    # 2-subsets into 3-subsets of a 3-set: a single target row
    m = inclusion_matrix(3, 2, 1)
    assert rank(m) == 1 < comb(3, 2)


def test_weighted_rank_needs_enough_nonzero_points():
    l, n = 5, 2
    full = weight(l, {i: i + 1 for i in range(l)})
    assert weighted_kantor_check(full, n)
    # only 2n nonzero points: the rank argument breaks down
    sparse = weight(l, {0: 1, 1: 1, 2: 1, 3: 1})
    assert not weighted_kantor_check(sparse, n)


def test_commutation_for_all_ones_weight():
    for l in range(2, 6):
        for n in range(0, l - 1):
            assert check_commutation(singleton_ones(l), n)


def test_commutation_for_random_weights_with_zeros():
    rng = random.Random(23)
    for _ in range(30):
        l = rng.randint(2, 6)
        n = rng.randint(0, min(3, l - 1))
        f = weight(l, {i: rng.randint(-2, 2) for i in range(l)})
        assert check_commutation(f, n)


def test_derivation_matrix_column_sums_with_unit_weights():
    # replacing one point at a time: each 2-set feeds both its singletons
    d = derivation_matrix(singleton_ones(4), 1)
    for col in d.transpose().entries:
        assert sum(col) == 2


def test_scaling_matrix_is_diagonal_product():
    f = weight(3, {0: 2, 1: 3, 2: 5})
    s = scaling_matrix(f, 2)
    diag = [s.entries[i][i] for i in range(len(s.entries))]
    assert sorted(diag) == [Fraction(6), Fraction(10), Fraction(15)]
    for i, row in enumerate(s.entries):
        for j, v in enumerate(row):
            if i != j:
                assert v == 0


def test_commutation_identity_written_out():
    # both composites send a set Q to prod of its point weights when the
    # smaller set sits inside Q, independently of the path taken
    f = weight(4, {0: 1, 1: -2, 2: 3, 3: Fraction(1, 2)})
    n = 1
    e = singleton_ones(4)
    lhs = matmul(derivation_matrix(e, n), scaling_matrix(f, n + 1))
    rhs = matmul(scaling_matrix(f, n), derivation_matrix(f, n))
    assert lhs == rhs
