"""Explicit zero-divisor pairs, their certificates, and symbolic bounds.

Constructions:
  * gadget_tau1n: the signed transversal pair on 2n points whose support
    needs all 2n elements to hit, matching the exact value tau(1,n) = 2n.
  * gadget_full_support: a mate for the all-ones degree-1 function that is
    nonzero on every n-subset of a 2n-point ground set.
  * gadget_lower: the block direct sum realizing the general lower bound
    (m+1)(n+1) - 2 on a ground set of 2nm points.
  * two_squares: the degree-(2,2) pair on 8 points with transversality 7.

Verification recomputes the product by the defining per-subset sums (not
by the support convolution the constructors use) and runs the exact
transversal solver on the union of supports, so a certificate never
depends on the code path that built the witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .hitting import TransversalResult, is_transversal, tau
from .linalg import nullspace_basis
from .setfuncs import (
    SetFunction,
    cofactor,
    dumps_canonical,
    mult_matrix,
    product,
    product_by_splits,
    set_function_to_dict,
    singleton_ones,
)
from .subsets import Subset, ksubsets


class NotAZeroDivisorPairError(ValueError):
    def __init__(self, offending: Subset, value: Fraction):
        self.offending = offending
        self.value = value
        super().__init__(
            f"product is {value} at {sorted(offending.elements())}, expected 0"
        )


@dataclass(frozen=True)
class WitnessPair:
    """Two nonzero functions whose product vanishes identically."""

    f: SetFunction
    g: SetFunction

    @property
    def ground_size(self) -> int:
        return self.f.n

    @property
    def m(self) -> int:
        return self.f.degree

    @property
    def n(self) -> int:
        return self.g.degree


@dataclass(frozen=True)
class WitnessCertificate:
    pair: WitnessPair
    transversal: TransversalResult
    formula_expected: int | None
    match: bool


def pair_index(half: int, column: int) -> int:
    """Flat index of grid point (half, column): columns are consecutive pairs."""
    return 2 * column + half


def gadget_tau1n(n: int) -> WitnessPair:
    """Signed pair on 2n points: one element per column pair, sign by the
    parity of bottom-half picks.  Together with the all-ones degree-1
    function this realizes transversality exactly 2n."""
    if n < 1:
        raise ValueError("need at least one column")
    ground = 2 * n
    coeffs: dict[Subset, Fraction] = {}
    for picks in range(1 << n):
        mask = 0
        bottoms = 0
        for col in range(n):
            half = picks >> col & 1
            mask |= 1 << pair_index(half, col)
            if half == 0:
                bottoms += 1
        coeffs[Subset(ground, mask)] = Fraction(-1 if bottoms & 1 else 1)
    return WitnessPair(singleton_ones(ground), SetFunction(ground, n, coeffs))


def gadget_full_support(n: int) -> SetFunction:
    """A degree-n mate for the all-ones function, nonzero on every n-subset.

    The kernel of multiplication by the all-ones function on 2n points is
    not covered by the coordinate hyperplanes, so some combination
    sum_j t^j v_j of a kernel basis avoids all of them; the first integer
    t that works is taken.
    """
    if n < 1:
        raise ValueError("need at least one column")
    ground = 2 * n
    op = mult_matrix(singleton_ones(ground), n)
    basis = nullspace_basis(op.matrix)
    if not basis:
        raise AssertionError("kernel unexpectedly trivial")
    ncols = len(basis[0])
    for t in range(1, 1000):
        vec = [Fraction(0)] * ncols
        scale = Fraction(1)
        for b in basis:
            for i, x in enumerate(b):
                if x:
                    vec[i] += scale * x
            scale *= t
        if all(vec):
            g = SetFunction(ground, n, dict(zip(op.matrix.col_labels, vec)))
            if not product(singleton_ones(ground), g).is_zero:
                raise AssertionError("combination left the kernel")
            return g
    raise AssertionError("no full-support combination found")


def _embed(f: SetFunction, ground: int, offset: int) -> SetFunction:
    """Shift a function onto indices [offset, offset + f.n) of a larger ground."""
    if offset < 0 or offset + f.n > ground:
        raise ValueError("window does not fit in the ground set")
    return SetFunction(
        ground, f.degree, {Subset(ground, s.mask << offset): v for s, v in f.coeffs.items()}
    )


def gadget_lower(m: int, n: int) -> WitnessPair:
    """Block direct sum on 2nm points realizing tau = (m+1)(n+1) - 2.

    f is the indicator of m-subsets meeting every one of the m blocks of
    size 2n; g places a full-support mate inside each block.  Hitting the
    union of supports forces one whole block plus n+1 points in each other
    block: 2n + (n+1)(m-1) elements.
    """
    if m < 1 or n < 1:
        raise ValueError("need positive degrees")
    ground = 2 * n * m
    if ground > 64:
        raise ValueError("ground set exceeds 64 points")
    block_masks = [((1 << (2 * n)) - 1) << (2 * n * i) for i in range(m)]
    f_coeffs: dict[Subset, Fraction] = {}
    for a in ksubsets(ground, m):
        if all(a.mask & bm for bm in block_masks):
            f_coeffs[a] = Fraction(1)
    inner = gadget_full_support(n)
    g = SetFunction(ground, n, {})
    for i in range(m):
        g = g + _embed(inner, ground, 2 * n * i)
    return WitnessPair(SetFunction(ground, m, f_coeffs), g)


def lower_bound_formula(m: int, n: int) -> int:
    return (m + 1) * (n + 1) - 2


def two_squares() -> WitnessPair:
    """The 8-point pair of degree (2, 2): sides at -1/2 and diagonals at 1
    inside each square, against the indicator of cross pairs.

    Every pair of points lands in one support or the other, so the
    transversality of the union is 7, witnessed by the 8 complements of a
    single point.
    """
    ground = 8
    squares = [(0, 1, 2, 3), (4, 5, 6, 7)]
    f_coeffs: dict[Subset, Fraction] = {}
    for a, b, c, d in squares:
        for side in ((a, b), (b, c), (c, d), (d, a)):
            f_coeffs[Subset.from_indices(ground, side)] = Fraction(-1, 2)
        for diag in ((a, c), (b, d)):
            f_coeffs[Subset.from_indices(ground, diag)] = Fraction(1)
    g_coeffs = {
        Subset.from_indices(ground, (x, y)): Fraction(1)
        for x in squares[0]
        for y in squares[1]
    }
    return WitnessPair(SetFunction(ground, 2, f_coeffs), SetFunction(ground, 2, g_coeffs))


def verify(pair: WitnessPair, formula_expected: int | None = None) -> WitnessCertificate:
    """Re-check a pair from scratch and measure its transversality.

    The product is recomputed by the per-subset defining sums; the first
    subset with a nonzero value (in colex order) is reported on failure.
    """
    f, g = pair.f, pair.g
    if f.is_zero or g.is_zero:
        raise ValueError("witness functions must be nonzero")
    prod = product_by_splits(f, g)
    if not prod.is_zero:
        offender = min(prod.coeffs, key=lambda s: s.mask)
        raise NotAZeroDivisorPairError(offender, prod.coeffs[offender])
    support = f.support().union(g.support())
    result = tau(support)
    match = formula_expected is None or result.size == formula_expected
    return WitnessCertificate(pair, result, formula_expected, match)


def certificate_to_dict(cert: WitnessCertificate) -> dict:
    return {
        "f": set_function_to_dict(cert.pair.f),
        "g": set_function_to_dict(cert.pair.g),
        "tau": cert.transversal.size,
        "tau_witness": list(cert.transversal.witness.elements()),
        "formula_expected": cert.formula_expected,
        "match": cert.match,
    }


def certificate_to_json(cert: WitnessCertificate) -> str:
    return dumps_canonical(certificate_to_dict(cert))


# Symbolic upper bounds.  The recurrence produces integer combinations of
# Ramsey numbers for colorings of r-tuples with 5**s colors; the numbers
# are never evaluated, only carried symbolically.

@dataclass(frozen=True)
class RamseySymbol:
    arity: int
    colors_exponent: int
    target: int

    def render(self) -> str:
        return f"R^{self.arity}_{{5^{self.colors_exponent}}}({self.target})"


@dataclass
class LinearBound:
    """Integer constant plus integer combination of Ramsey symbols."""

    constant: int = 0
    terms: dict[RamseySymbol, int] = field(default_factory=dict)

    def add_term(self, sym: RamseySymbol, coeff: int) -> None:
        if coeff:
            self.terms[sym] = self.terms.get(sym, 0) + coeff
            if not self.terms[sym]:
                del self.terms[sym]

    def add(self, other: "LinearBound") -> None:
        self.constant += other.constant
        for sym, c in other.terms.items():
            self.add_term(sym, c)

    @property
    def is_constant(self) -> bool:
        return not self.terms

    def render(self) -> str:
        if not self.terms:
            return str(self.constant)
        coeffs = [abs(c) for c in self.terms.values()]
        if self.constant:
            coeffs.append(abs(self.constant))
        g = 0
        for c in coeffs:
            g = c if g == 0 else _gcd(g, c)
        parts_count = len(self.terms) + (1 if self.constant else 0)
        if g > 1 and parts_count > 1:
            inner = LinearBound(self.constant // g, {s: c // g for s, c in self.terms.items()})
            return f"{g}*({inner.render()})"
        chunks = []
        for sym, c in self.terms.items():
            body = sym.render() if c == 1 else f"{c}*{sym.render()}"
            chunks.append(body if not chunks else f"+ {body}")
        if self.constant:
            chunks.append(f"+ {self.constant}")
        return " ".join(chunks)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class BoundExpression:
    """Symbolic upper bound for the transversality of degree-(m, n) pairs.

    `exact_value` is filled for min(m, n) <= 1, where the bound collapses
    to a known integer.  `recurrence_forms` records the two circulating
    spellings of the bound statement; the expansion follows the first.
    """

    m: int
    n: int
    expression: LinearBound
    exact_value: int | None
    recurrence_forms: tuple[str, str] = ("phi(m,n)", "phi(m,m)")

    def render(self) -> str:
        return self.expression.render()


def _ramsey_for(m: int, n: int) -> RamseySymbol:
    r = max(m, n)
    s = comb(m * r + n, m) + comb(m * r + n, n)
    return RamseySymbol(r, s, n + m)


def _phi(m: int, n: int) -> LinearBound:
    """n + m*(nu(n+m) - 1) + tau(m-1, n), with the known exact tails."""
    out = LinearBound(n - m)
    out.add_term(_ramsey_for(m, n), m)
    if m - 1 >= 2:
        out.add(_phi(m - 1, n))
    elif m - 1 == 1:
        out.constant += 2 * n
    return out


def tau_upper_expr(m: int, n: int) -> BoundExpression:
    if m < 0 or n < 0:
        raise ValueError("degrees must be nonnegative")
    lo, hi = (m, n) if m <= n else (n, m)
    if lo == 0:
        return BoundExpression(m, n, LinearBound(0), 0)
    if lo == 1:
        return BoundExpression(m, n, _phi(1, hi), 2 * hi)
    return BoundExpression(m, n, _phi(lo, hi), None)


# Search over candidate pairs for a given ground set.

def search_best(
    m: int, n: int, ground_size: int, strategy: str = "all", seed: int = 0
) -> WitnessCertificate | None:
    """Best verified certificate (largest transversality) found, or None.

    Strategies: "gadget" embeds the block construction when it fits,
    "random" draws seeded supports for f and solves for a mate through the
    multiplication kernel, "all" tries both.
    """
    if strategy not in ("gadget", "random", "all"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if m < 1 or n < 1 or m + n > ground_size:
        raise ValueError("degrees do not fit the ground set")
    candidates: list[WitnessCertificate] = []
    if strategy in ("gadget", "all") and 2 * n * m <= ground_size:
        pair = gadget_lower(m, n)
        f = _embed(pair.f, ground_size, 0)
        g = _embed(pair.g, ground_size, 0)
        candidates.append(verify(WitnessPair(f, g), lower_bound_formula(m, n)))
    if strategy in ("random", "all"):
        rng = random.Random(seed)
        shapes = ksubsets(ground_size, m)
        for _ in range(8):
            size = rng.randint(2, min(6, len(shapes)))
            chosen = rng.sample(shapes, size)
            f = SetFunction(
                ground_size, m, {s: Fraction(rng.choice((-2, -1, 1, 2))) for s in chosen}
            )
            if f.is_zero:
                continue
            mate = cofactor(f, n)
            if mate is None:
                continue
            candidates.append(verify(WitnessPair(f, mate)))
    if not candidates:
        return None
    return max(candidates, key=lambda c: c.transversal.size)


# Checkable set-system forms of the two auxiliary reduction arguments.

def discharging_check(pair: WitnessPair, a: Subset, inner_tau: int) -> dict:
    """From a transversal A of supp(f), build a transversal B of supp(g)
    adding at most inner_tau fresh elements, and re-check every step.

    Either A plus a least-overlap member of supp(f) already works, or the
    pair is contracted through one shared element and a transversal of the
    contracted supports is grafted on.
    """
    f, g = pair.f, pair.g
    if not is_transversal(a, f.support()):
        raise ValueError("A must be a transversal of supp(f)")
    p0 = min(f.coeffs, key=lambda p: (len(p & a), p.mask))
    if is_transversal(a | p0, g.support()):
        b = a | p0
        case = "augment"
    else:
        shared = p0 & a
        if len(shared) == 0:
            raise AssertionError("transversal misses a support member")
        x0 = min(shared.elements())
        keep = (~a.mask & ((1 << f.n) - 1)) | (shared.mask & ~(1 << x0))
        window = Subset(f.n, keep)
        f_contract = SetFunction(
            f.n,
            f.degree - 1,
            {
                Subset(f.n, p.mask ^ (1 << x0)): v
                for p, v in f.coeffs.items()
                if x0 in p and (p.mask ^ (1 << x0)) & ~window.mask == 0
            },
        )
        g_window = g.restrict(window)
        if f_contract.is_zero or g_window.is_zero:
            raise AssertionError("contracted pair degenerated")
        if not product(f_contract, g_window).is_zero:
            raise AssertionError("contracted pair is not a zero-divisor pair")
        sub = tau(f_contract.support().union(g_window.support()))
        if sub.size > inner_tau:
            raise AssertionError("contracted transversal exceeds the inner bound")
        b = a | sub.witness
        case = "contract"
    if not is_transversal(b, g.support()):
        raise AssertionError("constructed B misses supp(g)")
    added = len(b - a)
    if added > max(pair.m - 1, inner_tau):
        raise AssertionError("B adds more elements than the bound allows")
    return {"case": case, "b": b, "added": added}


def max_disjoint_packing(sets: list[Subset]) -> int:
    """Exact maximum number of pairwise disjoint members (small inputs)."""
    masks = sorted({s.mask for s in sets})

    def go(i: int, used: int) -> int:
        best = 0
        for j in range(i, len(masks)):
            if not masks[j] & used:
                best = max(best, 1 + go(j + 1, used | masks[j]))
        return best

    return go(0, 0)


def disjoint_family_check(pair: WitnessPair, fan_out: int, inner_tau: int) -> bool:
    """When the pair's transversality beats n + m*(fan_out-1) + inner_tau,
    every member of supp(g) must leave fan_out pairwise disjoint members
    of supp(f) untouched.  Raises if the hypothesis itself fails."""
    f, g = pair.f, pair.g
    t = tau(f.support().union(g.support())).size
    if not t > pair.n + pair.m * (fan_out - 1) + inner_tau:
        raise ValueError("transversality hypothesis not met")
    for member in g.coeffs:
        clear = [p for p in f.coeffs if p.isdisjoint(member)]
        if max_disjoint_packing(clear) < fan_out:
            return False
    return True
