"""Branch-and-bound minimum hitting set, cross-checked by brute force."""

import random
from itertools import combinations

import pytest

from agealgebra.hitting import (
    NoTransversalError,
    is_minimal_transversal,
    is_transversal,
    tau,
)
from agealgebra.subsets import SetFamily, Subset


def family(l, members):
    return SetFamily(l, [Subset.from_indices(l, m) for m in members])


def brute_tau(fam):
    l = fam.n
    masks = [s.mask for s in fam]
    if not masks:
        return 0
    for k in range(l + 1):
        for combo in combinations(range(l), k):
            cm = 0
            for x in combo:
                cm |= 1 << x
            if all(cm & m for m in masks):
                return k
    return None


def test_empty_family_needs_nothing():
    res = tau(family(4, []))
    assert res.size == 0 and len(res.witness) == 0


def test_single_member():
    res = tau(family(4, [[1, 2]]))
    assert res.size == 1
    assert is_transversal(res.witness, family(4, [[1, 2]]))


def test_empty_member_blocks_everything():
    with pytest.raises(NoTransversalError):
        tau(family(3, [[]]))


def test_disjoint_members_force_one_each():
    fam = family(6, [[0, 1], [2, 3], [4, 5]])
    assert tau(fam).size == 3


def test_star_is_cheap():
    fam = family(5, [[0, 1], [0, 2], [0, 3], [0, 4]])
    assert tau(fam).size == 1


def test_complete_graph_cover():
    # pairs of a 6-clique: covering needs all but one point
    fam = family(6, [list(p) for p in combinations(range(6), 2)])
    assert tau(fam).size == 5


def test_witness_and_bounds_consistent():
    fam = family(7, [[0, 1, 2], [2, 3], [4, 5], [1, 5, 6], [0, 6]])
    res = tau(fam)
    assert is_transversal(res.witness, fam)
    assert res.root_lower_bound <= res.size <= res.root_upper_bound
    assert res.size == brute_tau(fam)


def test_random_families_match_brute_force():
    rng = random.Random(11)
    for trial in range(40):
        l = rng.randint(1, 9)
        k = rng.randint(0, 7)
        members = set()
        for _ in range(k):
            size = rng.randint(1, min(4, l))
            members.add(tuple(sorted(rng.sample(range(l), size))))
        fam = family(l, [list(m) for m in members])
        assert tau(fam).size == brute_tau(fam), f"trial {trial}"


def test_larger_random_instances_solve_exactly():
    rng = random.Random(5)
    for _ in range(8):
        l = 12
        members = set()
        for _ in range(18):
            size = rng.randint(2, 4)
            members.add(tuple(sorted(rng.sample(range(l), size))))
        fam = family(l, [list(m) for m in members])
        assert tau(fam).size == brute_tau(fam)


def test_minimality_predicate():
    fam = family(4, [[0, 1], [1, 2], [2, 3]])
    assert is_minimal_transversal(Subset.from_indices(4, [1, 2]), fam)
    assert not is_minimal_transversal(Subset.from_indices(4, [0, 1, 2]), fam)
    assert not is_minimal_transversal(Subset.from_indices(4, [0]), fam)
