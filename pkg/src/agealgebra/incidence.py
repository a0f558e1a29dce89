"""Inclusion matrices, weighted derivations, and full-rank checks.

The unweighted inclusion matrix between n-subsets and (n+m)-subsets has
full row rank C(l, n) whenever 2n + m <= l.  The weighted analogues built
from a degree-1 function share that behaviour as soon as the function has
at least 2n+1 nonzero values, which is checked here through the kernel of
the multiplication operator.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .linalg import RationalMatrix, matmul, nullspace_basis, rank
from .setfuncs import SetFunction, mult_matrix, singleton_ones
from .subsets import Subset, ksubsets


def inclusion_matrix(ground_size: int, n: int, m: int) -> RationalMatrix:
    """0/1 matrix of the containment relation, n-subsets by (n+m)-subsets."""
    if n < 0 or m < 0:
        raise ValueError("sizes must be nonnegative")
    if n + m > ground_size:
        raise ValueError("column subsets exceed the ground set")
    rows = ksubsets(ground_size, n)
    cols = ksubsets(ground_size, n + m)
    entries = [
        [1 if b.mask & ~q.mask == 0 else 0 for q in cols]
        for b in rows
    ]
    return RationalMatrix(entries, row_labels=rows, col_labels=cols)


def verify_kantor(ground_size: int, n: int, m: int) -> bool:
    """True iff the inclusion matrix reaches full row rank C(l, n)."""
    return rank(inclusion_matrix(ground_size, n, m)) == comb(ground_size, n)


def derivation_matrix(f: SetFunction, n: int) -> RationalMatrix:
    """Weighted one-step contraction from degree n+1 down to degree n.

    Entry at (B, Q) is f(Q minus B) when B is inside Q; the removed part is
    a single element, so only the degree-1 values of f matter.
    """
    if f.degree != 1:
        raise ValueError("derivation needs a degree-1 weight function")
    if n < 0 or n + 1 > f.n:
        raise ValueError("degree out of range for the ground set")
    rows = ksubsets(f.n, n)
    cols = ksubsets(f.n, n + 1)
    zero = Fraction(0)
    entries = []
    for b in rows:
        bm = b.mask
        row = []
        for q in cols:
            if bm & ~q.mask:
                row.append(zero)
            else:
                row.append(f.coeffs.get(Subset(f.n, q.mask ^ bm), zero))
        entries.append(row)
    return RationalMatrix(entries, row_labels=rows, col_labels=cols)


def scaling_matrix(f: SetFunction, n: int) -> RationalMatrix:
    """Diagonal rescaling of n-subsets by the product of their point weights."""
    if f.degree != 1:
        raise ValueError("scaling needs a degree-1 weight function")
    if n < 0 or n > f.n:
        raise ValueError("degree out of range for the ground set")
    labels = ksubsets(f.n, n)
    size = len(labels)
    entries = [[Fraction(0)] * size for _ in range(size)]
    for i, b in enumerate(labels):
        w = Fraction(1)
        for x in b.elements():
            w *= f.coeffs.get(Subset(f.n, 1 << x), Fraction(0))
        entries[i][i] = w
    return RationalMatrix(entries, row_labels=labels, col_labels=labels)


def check_commutation(f: SetFunction, n: int) -> bool:
    """Exact matrix identity: unweighted contraction after rescaling equals
    rescaling after weighted contraction, from degree n+1 to degree n."""
    if f.degree != 1:
        raise ValueError("commutation check needs a degree-1 weight function")
    ones = singleton_ones(f.n)
    lhs = matmul(derivation_matrix(ones, n), scaling_matrix(f, n + 1))
    rhs = matmul(scaling_matrix(f, n), derivation_matrix(f, n))
    return lhs == rhs


def weighted_kantor_check(f: SetFunction, n: int) -> bool:
    """True iff multiplication by the degree-1 f is injective on degree n."""
    if f.degree != 1:
        raise ValueError("weighted check needs a degree-1 function")
    op = mult_matrix(f, n)
    return nullspace_basis(op.matrix) == []


def e_regular_on_invariants(structure, n: int) -> bool:
    """True iff multiplying by the all-ones degree-1 function is injective
    on the span of the isomorphism-invariant indicator functions.

    An empty invariant basis (n larger than the base) is vacuously regular.
    """
    from .relational import invariant_basis

    basis = invariant_basis(structure, n)
    if not basis:
        return True
    ground = structure.base_size
    if n + 1 > ground:
        raise ValueError("image degree exceeds the base")
    op = mult_matrix(singleton_ones(ground), n)
    images = [op.apply_to(h) for h in basis]
    rows = ksubsets(ground, n + 1)
    entries = [[img.value(q) for img in images] for q in rows]
    return nullspace_basis(RationalMatrix(entries)) == []
