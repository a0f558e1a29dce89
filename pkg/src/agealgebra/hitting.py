"""Exact minimum transversals (hitting sets) of finite set families.

Branch and bound over bitmasks: each node carries a set of chosen elements
and a set of banned elements, branches on an uncovered member with the
fewest allowed elements, and prunes with a greedy incumbent from above and
a disjoint-subfamily packing bound from below.  Determinism: members are
scanned in colex order and elements in increasing index order, so the
reported witness never depends on hash order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .subsets import SetFamily, Subset


class NoTransversalError(ValueError):
    pass


@dataclass(frozen=True)
class TransversalResult:
    size: int
    witness: Subset
    nodes_expanded: int
    root_lower_bound: int
    root_upper_bound: int


def is_transversal(candidate: Subset, family: SetFamily) -> bool:
    if candidate.n != family.n:
        raise ValueError("ground-set mismatch")
    cm = candidate.mask
    return all(cm & s.mask for s in family.sets)


def is_minimal_transversal(candidate: Subset, family: SetFamily) -> bool:
    """True when candidate hits everything but no proper subset does."""
    if not is_transversal(candidate, family):
        return False
    cm = candidate.mask
    masks = family.masks()
    for i in candidate.elements():
        reduced = cm & ~(1 << i)
        if all(reduced & m for m in masks):
            return False
    return True


def _minimal_members(masks: list[int]) -> list[int]:
    """Drop any member that contains another; hitting the rest hits it too."""
    masks = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in masks:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _greedy_transversal(masks: list[int], ground_size: int) -> int:
    """Greedy cover (max coverage, lowest index on ties), then pruned."""
    chosen = 0
    uncovered = list(masks)
    while uncovered:
        counts = [0] * ground_size
        for m in uncovered:
            while m:
                low = m & -m
                counts[low.bit_length() - 1] += 1
                m ^= low
        best = max(range(ground_size), key=lambda i: (counts[i], -i))
        chosen |= 1 << best
        uncovered = [m for m in uncovered if not m >> best & 1]
    for i in range(ground_size):
        bit = 1 << i
        if chosen & bit:
            reduced = chosen ^ bit
            if all(reduced & m for m in masks):
                chosen = reduced
    return chosen


def _packing_bound(uncovered: list[int], banned: int) -> int:
    """Size of a greedy family of pairwise disjoint allowed parts.

    Any transversal needs one fresh element per member of a disjoint
    subfamily, so this lower-bounds the number of elements still missing.
    """
    used = 0
    count = 0
    for m in uncovered:
        a = m & ~banned
        if not a & used:
            count += 1
            used |= a
    return count


def tau(family: SetFamily) -> TransversalResult:
    """Exact minimum transversal size with an optimal witness.

    Raises NoTransversalError when the family contains the empty set.
    The empty family has the empty transversal.
    """
    n = family.n
    raw = family.masks()
    if any(m == 0 for m in raw):
        raise NoTransversalError("no transversal exists: family contains the empty set")
    if not raw:
        return TransversalResult(0, Subset(n, 0), 0, 0, 0)
    masks = _minimal_members(raw)
    masks.sort(key=lambda m: (m.bit_count(), m))
    greedy = _greedy_transversal(masks, n)
    root_upper = greedy.bit_count()
    root_lower = _packing_bound(masks, 0)
    best_size = root_upper
    best_mask = greedy
    nodes = 0

    def search(uncovered: list[int], chosen: int, banned: int, nchosen: int) -> None:
        nonlocal best_size, best_mask, nodes
        nodes += 1
        while True:
            if not uncovered:
                if nchosen < best_size:
                    best_size = nchosen
                    best_mask = chosen
                return
            forced = 0
            for m in uncovered:
                a = m & ~banned
                if a == 0:
                    return
                if a & (a - 1) == 0:
                    forced |= a
            if not forced:
                break
            chosen |= forced
            nchosen = chosen.bit_count()
            if nchosen >= best_size:
                return
            uncovered = [m for m in uncovered if not m & chosen]
        if nchosen + _packing_bound(uncovered, banned) >= best_size:
            return
        branch = min(uncovered, key=lambda m: ((m & ~banned).bit_count(), m))
        allowed = branch & ~banned
        new_banned = banned
        while allowed:
            bit = allowed & -allowed
            allowed ^= bit
            sub = [m for m in uncovered if not m & bit]
            search(sub, chosen | bit, new_banned, nchosen + 1)
            new_banned |= bit

    search(masks, 0, 0, 0)
    witness = Subset(n, best_mask)
    if not is_transversal(witness, family):
        raise AssertionError("search returned a non-transversal")
    if not root_lower <= best_size <= root_upper:
        raise AssertionError("bounds disagree with the optimum")
    return TransversalResult(best_size, witness, nodes, root_lower, root_upper)
