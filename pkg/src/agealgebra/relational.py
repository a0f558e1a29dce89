"""Finite relational structures, isomorphism types, and profiles.

Canonicalization is the brute-force permutation minimum, valid for bases
of at most 8 points; results are memoized on the raw encoding, which makes
profile sweeps over thousands of restrictions cheap.  The profile of a
structure counts isomorphism types of its n-point restrictions; indicator
functions of those types span the invariant functions of each degree.
"""

from __future__ import annotations

import json
import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product as iproduct
from typing import Iterable, Sequence

from .setfuncs import SetFunction
from .subsets import Subset, ksubsets

MAX_CANON_BASE = 8

_PERMS: dict[int, list[tuple[int, ...]]] = {}
_CANON_CACHE: dict[tuple, "IsoType"] = {}


def _perms(n: int) -> list[tuple[int, ...]]:
    cached = _PERMS.get(n)
    if cached is None:
        cached = list(permutations(range(n)))
        _PERMS[n] = cached
    return cached


class RelStructure:
    """A finite base {0..l-1} with one tuple set per signature symbol."""

    __slots__ = ("base_size", "signature", "relations")

    def __init__(
        self,
        base_size: int,
        signature: Sequence[int],
        relations: Sequence[Iterable[tuple[int, ...]]],
    ):
        if base_size < 0:
            raise ValueError("base size must be nonnegative")
        sig = tuple(int(a) for a in signature)
        if any(a < 1 for a in sig):
            raise ValueError("arities must be positive")
        if len(relations) != len(sig):
            raise ValueError("one tuple set per signature symbol required")
        rels = []
        for arity, tuples in zip(sig, relations):
            clean = set()
            for t in tuples:
                t = tuple(int(x) for x in t)
                if len(t) != arity:
                    raise ValueError(f"tuple {t} does not match arity {arity}")
                if any(not 0 <= x < base_size for x in t):
                    raise ValueError(f"tuple {t} leaves the base")
                clean.add(t)
            rels.append(frozenset(clean))
        self.base_size = base_size
        self.signature = sig
        self.relations = tuple(rels)

    @classmethod
    def graph(cls, base_size: int, edges: Iterable[tuple[int, int]]) -> "RelStructure":
        """Simple graph as one symmetric binary relation."""
        tuples = []
        for a, b in edges:
            if a == b:
                raise ValueError("no loops in a simple graph")
            tuples.append((a, b))
            tuples.append((b, a))
        return cls(base_size, (2,), (tuples,))

    def encode(self) -> tuple:
        return tuple(tuple(sorted(rel)) for rel in self.relations)

    def apply_permutation(self, perm: Sequence[int]) -> "RelStructure":
        if sorted(perm) != list(range(self.base_size)):
            raise ValueError("not a permutation of the base")
        return RelStructure(
            self.base_size,
            self.signature,
            [
                [tuple(perm[x] for x in t) for t in rel]
                for rel in self.relations
            ],
        )

    def restriction(self, points: Subset) -> "RelStructure":
        """Induced substructure, re-indexed to 0..|points|-1 in point order."""
        if points.n != self.base_size:
            raise ValueError("point set is not over this base")
        order = {p: i for i, p in enumerate(points.elements())}
        keep = points.mask
        rels = []
        for rel in self.relations:
            kept = [
                tuple(order[x] for x in t)
                for t in rel
                if all(keep >> x & 1 for x in t)
            ]
            rels.append(kept)
        return RelStructure(len(points), self.signature, rels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RelStructure):
            return NotImplemented
        return (
            self.base_size == other.base_size
            and self.signature == other.signature
            and self.relations == other.relations
        )

    def __hash__(self) -> int:
        return hash((self.base_size, self.signature, self.relations))

    def __repr__(self) -> str:
        counts = ",".join(str(len(r)) for r in self.relations)
        return f"RelStructure(base={self.base_size}, sig={self.signature}, tuples=[{counts}])"


@dataclass(frozen=True)
class IsoType:
    """Permutation-minimal encoding; equal types mean isomorphic structures."""

    base_size: int
    signature: tuple[int, ...]
    encoding: tuple


def canonical_form(r: RelStructure) -> IsoType:
    if r.base_size > MAX_CANON_BASE:
        raise ValueError("base too large for exhaustive canonicalization")
    key = (r.base_size, r.signature, r.encode())
    cached = _CANON_CACHE.get(key)
    if cached is not None:
        return cached
    best = None
    for perm in _perms(r.base_size):
        enc = tuple(
            tuple(sorted(tuple(perm[x] for x in t) for t in rel))
            for rel in r.relations
        )
        if best is None or enc < best:
            best = enc
    iso = IsoType(r.base_size, r.signature, best)
    _CANON_CACHE[key] = iso
    return iso


def is_isomorphic(r: RelStructure, s: RelStructure) -> bool:
    if r.base_size != s.base_size or r.signature != s.signature:
        return False
    if tuple(len(rel) for rel in r.relations) != tuple(len(rel) for rel in s.relations):
        return False
    return canonical_form(r) == canonical_form(s)


def profile(r: RelStructure, n: int) -> int:
    """Number of isomorphism types among restrictions to n-point subsets."""
    if not 0 <= n <= r.base_size:
        raise ValueError("profile degree out of range")
    seen = set()
    for points in ksubsets(r.base_size, n):
        seen.add(canonical_form(r.restriction(points)))
    return len(seen)


def profile_sequence(r: RelStructure) -> tuple[int, ...]:
    """Profile at every degree from 0 to the base size."""
    return tuple(profile(r, n) for n in range(r.base_size + 1))


def invariant_indicator(r: RelStructure, t: IsoType, n: int) -> SetFunction:
    """Indicator of the n-subsets whose restriction has type t.

    Unrealized types give the zero function and a warning.
    """
    if not 0 <= n <= r.base_size:
        raise ValueError("degree out of range")
    coeffs = {
        points: Fraction(1)
        for points in ksubsets(r.base_size, n)
        if canonical_form(r.restriction(points)) == t
    }
    if not coeffs:
        warnings.warn(f"type not realized at size {n}; returning the zero function")
    return SetFunction(r.base_size, n, coeffs)


def invariant_basis(r: RelStructure, n: int) -> list[SetFunction]:
    """Indicators of the realized types, ordered by first colex occurrence."""
    if not 0 <= n <= r.base_size:
        raise ValueError("degree out of range")
    order: list[IsoType] = []
    buckets: dict[IsoType, dict[Subset, Fraction]] = {}
    for points in ksubsets(r.base_size, n):
        t = canonical_form(r.restriction(points))
        if t not in buckets:
            buckets[t] = {}
            order.append(t)
        buckets[t][points] = Fraction(1)
    return [SetFunction(r.base_size, n, buckets[t]) for t in order]


class ProfileInequalityError(ValueError):
    def __init__(self, kind: str, n: int, m: int, lhs: int, rhs: int):
        self.kind = kind
        self.n = n
        self.m = m
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f"{kind} fails at (n={n}, m={m}): {lhs} > {rhs}")


@dataclass
class ProfileReport:
    base_size: int
    values: list[int]
    checks: list[dict]

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.checks)


def check_profile_inequalities(r: RelStructure) -> ProfileReport:
    """Both profile growth laws at every applicable (n, m).

    Ratio law: profile(n) <= (n+1) * profile(n+1) for n < base.
    Monotone law: profile(n) <= profile(n+m) whenever 2n+m <= base.
    A violation raises; it would mean the implementation is broken.
    """
    l = r.base_size
    values = [profile(r, n) for n in range(l + 1)]
    checks = []
    for n in range(l):
        lhs, rhs = values[n], (n + 1) * values[n + 1]
        checks.append(
            {"kind": "ratio", "n": n, "m": 1, "lhs": lhs, "rhs": rhs, "pass": lhs <= rhs}
        )
        if lhs > rhs:
            raise ProfileInequalityError("ratio", n, 1, lhs, rhs)
    for n in range(l + 1):
        for m in range(l + 1):
            if 2 * n + m > l:
                break
            lhs, rhs = values[n], values[n + m]
            checks.append(
                {"kind": "monotone", "n": n, "m": m, "lhs": lhs, "rhs": rhs, "pass": lhs <= rhs}
            )
            if lhs > rhs:
                raise ProfileInequalityError("monotone", n, m, lhs, rhs)
    return ProfileReport(l, values, checks)


def disjoint_embedding_check(r: RelStructure, k: int) -> bool:
    """True iff every restriction of at most k points has a disjoint
    isomorphic copy elsewhere in the structure."""
    if 2 * k > r.base_size:
        raise ValueError("need 2k points in the base")
    for size in range(k + 1):
        for points in ksubsets(r.base_size, size):
            t = canonical_form(r.restriction(points))
            found = False
            for other in ksubsets(r.base_size, size):
                if other.isdisjoint(points) and canonical_form(r.restriction(other)) == t:
                    found = True
                    break
            if not found:
                return False
    return True


def kernel_zero_divisor(r: RelStructure, f_set: Subset) -> SetFunction:
    """Square-zero invariant indicator built from the type of one subset.

    Requires that no two disjoint subsets share that type; then the
    indicator f of the type satisfies f * f = 0, which is re-verified.
    """
    from .setfuncs import product

    t = canonical_form(r.restriction(f_set))
    size = len(f_set)
    realizations = [
        p for p in ksubsets(r.base_size, size)
        if canonical_form(r.restriction(p)) == t
    ]
    for a, b in combinations(realizations, 2):
        if a.isdisjoint(b):
            raise ValueError("type admits disjoint embedding; f² ≠ 0 not guaranteed")
    f = SetFunction(r.base_size, size, {p: Fraction(1) for p in realizations})
    if not product(f, f).is_zero:
        raise AssertionError("indicator square is nonzero despite no disjoint pair")
    return f


def hilbert_inequality_check(h: Sequence[int], upto: int) -> bool:
    """Superadditivity-minus-one of a candidate Hilbert sequence:
    h[n] + h[m] - 1 <= h[n+m] for all n + m <= upto."""
    if upto >= len(h):
        raise ValueError("sequence too short for the requested range")
    for n in range(upto + 1):
        for m in range(upto + 1 - n):
            if h[n] + h[m] - 1 > h[n + m]:
                return False
    return True


# Serialization: {base_size, signature, relations}, tuples as index lists.

def structure_to_dict(r: RelStructure) -> dict:
    return {
        "base_size": r.base_size,
        "signature": list(r.signature),
        "relations": [[list(t) for t in sorted(rel)] for rel in r.relations],
    }


def structure_from_dict(data: dict) -> RelStructure:
    return RelStructure(
        int(data["base_size"]),
        [int(a) for a in data["signature"]],
        [[tuple(t) for t in rel] for rel in data["relations"]],
    )


def structure_from_json(text: str) -> RelStructure:
    return structure_from_dict(json.loads(text))


# Deterministic corpora for sweeps.

def _pair_table(l: int) -> list[tuple[int, int]]:
    return list(combinations(range(l), 2))


def graph_from_edge_mask(l: int, mask: int) -> RelStructure:
    pairs = _pair_table(l)
    return RelStructure.graph(l, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def all_graph_classes(l: int) -> list[RelStructure]:
    """One representative per isomorphism class of graphs on l vertices.

    Walks all 2^C(l,2) edge masks, expanding each unseen mask's orbit under
    the vertex permutations; the orbit minimum is the representative.
    """
    pairs = _pair_table(l)
    npairs = len(pairs)
    index = {p: i for i, p in enumerate(pairs)}
    tables = []
    for perm in _perms(l):
        tables.append(
            [index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs]
        )
    seen = bytearray(1 << npairs)
    reps = []
    for mask in range(1 << npairs):
        if seen[mask]:
            continue
        orbit = set()
        for table in tables:
            img = 0
            rest = mask
            while rest:
                low = rest & -rest
                img |= 1 << table[low.bit_length() - 1]
                rest ^= low
            orbit.add(img)
        for img in orbit:
            seen[img] = 1
        reps.append(min(orbit))
    return [graph_from_edge_mask(l, mask) for mask in sorted(reps)]


def random_structure(rng: random.Random, base_size: int, signature: Sequence[int]) -> RelStructure:
    rels = []
    for arity in signature:
        tuples = [t for t in iproduct(range(base_size), repeat=arity) if rng.random() < 0.5]
        rels.append(tuples)
    return RelStructure(base_size, signature, rels)


def random_structures(
    seed: int, count: int, max_base: int, max_arity: int
) -> list[RelStructure]:
    """Deterministic corpus of random structures; signature sizes 1 or 2."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        base = rng.randint(1, max_base)
        sig = [rng.randint(1, max_arity) for _ in range(rng.randint(1, 2))]
        out.append(random_structure(rng, base, sig))
    return out
