"""Layered ground sets, word codings, shuffles, and leading-term checks.

A layered ground set is F together with V x C for a chain C of columns.
A subset is coded by its F-part plus the word of nonempty column traces
read along the chain.  The radix order on words (length first, then
letterwise) combined with a cardinality-descending order on F-parts turns
codes into the leading-term device: the lead of a product of two suitably
invariant functions is the max shuffle of their leads, and in particular
the product cannot vanish.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Mapping

from .setfuncs import SetFunction, block_of, product
from .subsets import Subset, ksubsets


def letter_key(mask: int) -> tuple[int, int]:
    """Alphabet order on nonempty subsets of V: cardinality, then mask."""
    return (mask.bit_count(), mask)


class Word:
    """Sequence of letters; each letter a nonempty bitmask over V."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        ls = tuple(int(x) for x in letters)
        if any(x <= 0 for x in ls):
            raise ValueError("letters must be nonempty masks")
        self.letters = ls

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def sort_key(self) -> tuple:
        return (len(self.letters), tuple(letter_key(x) for x in self.letters))

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        body = ",".join("{" + ",".join(map(str, _bits(x))) + "}" for x in self.letters)
        return f"Word({body})"


def _bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


EMPTY_WORD = Word()


def radix_compare(u: Word, v: Word) -> int:
    """-1, 0, or +1: shorter words first, then letterwise alphabet order."""
    ku, kv = u.sort_key(), v.sort_key()
    return -1 if ku < kv else (1 if ku > kv else 0)


def lex_less_same_length(u: Word, v: Word) -> bool:
    if len(u) != len(v):
        raise ValueError("lexicographic comparison needs equal lengths")
    return u.sort_key() < v.sort_key()


def shuffle(u: Word, positions: Iterable[int], v: Word) -> Word:
    """The word of length |u|+|v| carrying u at the given positions, in
    order, and v at the remaining positions."""
    pos = sorted(set(int(p) for p in positions))
    total = len(u) + len(v)
    if len(pos) != len(u):
        raise ValueError("position count must equal |u|")
    if pos and (pos[0] < 0 or pos[-1] >= total):
        raise ValueError("positions leave the result word")
    out: list[int | None] = [None] * total
    for letter, p in zip(u.letters, pos):
        out[p] = letter
    vi = iter(v.letters)
    for i in range(total):
        if out[i] is None:
            out[i] = next(vi)
    return Word(out)


def max_shuffle(u: Word, v: Word) -> Word:
    """Lexicographically largest interleaving of u and v."""
    total = len(u) + len(v)
    best: Word | None = None
    for pos in combinations(range(total), len(u)):
        w = shuffle(u, pos, v)
        if best is None or best.sort_key() < w.sort_key():
            best = w
    if best is None:
        raise AssertionError("no interleaving produced")
    return best


def subwords(w: Word) -> set[Word]:
    """All scattered subwords, the empty word and w itself included."""
    out = set()
    for k in range(len(w) + 1):
        for pos in combinations(range(len(w)), k):
            out.add(Word(w.letters[p] for p in pos))
    return out


class _LeadBottom:
    """Explicit bottom element below every coded set."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "-inf"

    def __lt__(self, other) -> bool:
        return not isinstance(other, _LeadBottom)

    def __gt__(self, other) -> bool:
        return False

    def __eq__(self, other) -> bool:
        return isinstance(other, _LeadBottom)

    def __hash__(self) -> int:
        return hash("_LeadBottom")


LEAD_BOTTOM = _LeadBottom()


class CodedSet:
    """F-part plus column word; the code w(Q) of a subset Q.

    Order: F-parts first (cardinality DESCENDING, ties by mask, so the
    empty F-part is the largest), then words in radix order.
    """

    __slots__ = ("f_mask", "word")

    def __init__(self, f_mask: int, word: Word):
        if f_mask < 0:
            raise ValueError("negative F-part mask")
        self.f_mask = f_mask
        self.word = word

    def sort_key(self) -> tuple:
        return ((-self.f_mask.bit_count(), self.f_mask), self.word.sort_key())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, _LeadBottom):
            return False
        if not isinstance(other, CodedSet):
            return NotImplemented
        return self.f_mask == other.f_mask and self.word == other.word

    def __hash__(self) -> int:
        return hash((self.f_mask, self.word))

    def __lt__(self, other) -> bool:
        if isinstance(other, _LeadBottom):
            return False
        return self.sort_key() < other.sort_key()

    def __gt__(self, other) -> bool:
        if isinstance(other, _LeadBottom):
            return True
        return self.sort_key() > other.sort_key()

    def __repr__(self) -> str:
        return f"CodedSet(F={_bits(self.f_mask)}, {self.word!r})"


class LayeredGround:
    """Ground set F plus V x C, flattened as F first, then (v, c) with the
    chain position as the major index."""

    __slots__ = ("f_size", "v_size", "chain_size")

    def __init__(self, f_size: int, v_size: int, chain_size: int):
        if f_size < 0 or v_size < 1 or chain_size < 0:
            raise ValueError("need nonnegative F, nonempty V, nonnegative chain")
        if f_size + v_size * chain_size > 64:
            raise ValueError("flat ground set exceeds 64 points")
        self.f_size = f_size
        self.v_size = v_size
        self.chain_size = chain_size

    @property
    def flat_size(self) -> int:
        return self.f_size + self.v_size * self.chain_size

    def flat_of(self, v: int, c: int) -> int:
        if not 0 <= v < self.v_size or not 0 <= c < self.chain_size:
            raise ValueError("grid point outside V x C")
        return self.f_size + c * self.v_size + v

    def column_letter(self, q_mask: int, c: int) -> int:
        return q_mask >> (self.f_size + c * self.v_size) & ((1 << self.v_size) - 1)

    def subset(self, f_part: Iterable[int] = (), columns: Mapping[int, int] | None = None) -> Subset:
        """Build a flat subset from F-indices and a column -> letter map."""
        mask = 0
        for i in f_part:
            if not 0 <= i < self.f_size:
                raise ValueError("F-index out of range")
            mask |= 1 << i
        for c, letter in (columns or {}).items():
            if letter >> self.v_size:
                raise ValueError("letter leaves V")
            mask |= letter << (self.f_size + c * self.v_size)
        return Subset(self.flat_size, mask)


def code(q: Subset, layered: LayeredGround) -> CodedSet:
    """F-part и column-trace word of a flat subset, empty columns skipped."""
    if q.n != layered.flat_size:
        raise ValueError("subset is not over this layered ground")
    f_mask = q.mask & ((1 << layered.f_size) - 1)
    letters = []
    for c in range(layered.chain_size):
        letter = layered.column_letter(q.mask, c)
        if letter:
            letters.append(letter)
    return CodedSet(f_mask, Word(letters))


def lead(f: SetFunction, layered: LayeredGround):
    """Largest code in the support; the explicit bottom for the zero map."""
    if f.is_zero:
        return LEAD_BOTTOM
    best = None
    for s in f.coeffs:
        c = code(s, layered)
        if best is None or best < c:
            best = c
    return best


class InvStructure:
    """The layered ground set colored by the signs of two set functions."""

    __slots__ = ("layered", "m", "n", "f_colors", "g_colors")

    def __init__(
        self,
        layered: LayeredGround,
        m: int,
        n: int,
        f_colors: Mapping[int, int],
        g_colors: Mapping[int, int],
    ):
        for colors, deg in ((f_colors, m), (g_colors, n)):
            for mask, sign in colors.items():
                if mask.bit_count() != deg:
                    raise ValueError("colored mask has the wrong cardinality")
                if sign not in (-1, 1):
                    raise ValueError("colors are the two sign blocks")
        self.layered = layered
        self.m = m
        self.n = n
        self.f_colors = dict(f_colors)
        self.g_colors = dict(g_colors)

    @classmethod
    def from_pair(cls, layered: LayeredGround, f: SetFunction, g: SetFunction) -> "InvStructure":
        if f.n != layered.flat_size or g.n != layered.flat_size:
            raise ValueError("functions are not over this layered ground")
        return cls(
            layered,
            f.degree,
            g.degree,
            {s.mask: block_of(v) for s, v in f.coeffs.items()},
            {s.mask: block_of(v) for s, v in g.coeffs.items()},
        )


def _columns_equivalent(h: InvStructure, x: tuple[int, ...], x0: tuple[int, ...]) -> bool:
    L = h.layered
    mapping = {i: i for i in range(L.f_size)}
    for c, c0 in zip(x, x0):
        for v in range(L.v_size):
            mapping[L.flat_of(v, c)] = L.flat_of(v, c0)
    dom = sorted(mapping)
    for deg, colors in ((h.m, h.f_colors), (h.n, h.g_colors)):
        for combo in combinations(dom, deg):
            mask = 0
            img = 0
            for i in combo:
                mask |= 1 << i
                img |= 1 << mapping[i]
            if colors.get(mask, 0) != colors.get(img, 0):
                return False
    return True


def check_invariance(h: InvStructure, r: int) -> bool:
    """True iff all r-subsets of the chain look alike through the induced
    order-isomorphism maps (colors of both functions preserved)."""
    if not 0 <= r <= h.layered.chain_size:
        raise ValueError("r exceeds the chain")
    cols = list(combinations(range(h.layered.chain_size), r))
    x0 = cols[0]
    return all(_columns_equivalent(h, x, x0) for x in cols[1:])


def check_invariance_all(h: InvStructure) -> bool:
    return all(check_invariance(h, r) for r in range(h.layered.chain_size + 1))


def code_determined(f: SetFunction, layered: LayeredGround) -> bool:
    """Whether f takes equal values on subsets with equal codes; this is
    the working form of invariance for structures on a layered ground."""
    seen: dict[CodedSet, Fraction] = {}
    for s in ksubsets(layered.flat_size, f.degree):
        c = code(s, layered)
        v = f.value(s)
        if c in seen:
            if seen[c] != v:
                return False
        else:
            seen[c] = v
    return True


class HypothesisError(ValueError):
    def __init__(self, hypothesis: str):
        self.hypothesis = hypothesis
        super().__init__(f"hypothesis failed: {hypothesis}")


@dataclass
class LeadingReport:
    q0: Subset
    lead_f: CodedSet
    lead_g: CodedSet
    lead_product: object
    support_pair_count: int
    splitter_count: int
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def leading_product_check(f: SetFunction, g: SetFunction, h: InvStructure) -> LeadingReport:
    """Verify the leading-term equations on a concrete invariant pair.

    Hypotheses checked up front (each failure raises HypothesisError):
    the colored structure is invariant at every chain size, both functions
    are determined by codes and match the structure's colors, the chain is
    at least as long as the total degree, and f has support clear of F.
    """
    L = h.layered
    if f.n != L.flat_size or g.n != L.flat_size:
        raise ValueError("functions are not over the structure's ground")
    if f.is_zero or g.is_zero:
        raise ValueError("functions must be nonzero")
    if L.chain_size < f.degree + g.degree:
        raise HypothesisError("chain_at_least_total_degree")
    if not check_invariance_all(h):
        raise HypothesisError("structure_invariant_at_all_chain_sizes")
    if not code_determined(f, L):
        raise HypothesisError("f_code_determined")
    if not code_determined(g, L):
        raise HypothesisError("g_code_determined")
    if {s.mask: block_of(v) for s, v in f.coeffs.items()} != h.f_colors:
        raise HypothesisError("structure_colors_match_f")
    if {s.mask: block_of(v) for s, v in g.coeffs.items()} != h.g_colors:
        raise HypothesisError("structure_colors_match_g")
    f_all = (1 << L.f_size) - 1
    if not any(s.mask & f_all == 0 for s in f.coeffs):
        raise HypothesisError("f_support_meets_pure_columns")

    pairs = [(a, b) for a in f.coeffs for b in g.coeffs if a.isdisjoint(b)]
    checks: dict[str, bool] = {"support_pairs_nonempty": bool(pairs)}
    lead_f = lead(f, L)
    lead_g = lead(g, L)
    if not pairs:
        return LeadingReport(Subset(L.flat_size, 0), lead_f, lead_g, LEAD_BOTTOM, 0, 0, checks)

    q0 = None
    best = None
    for a, b in pairs:
        u = a | b
        cu = code(u, L)
        if best is None or best < cu:
            best = cu
            q0 = u
    splitters = sorted(
        ((a, b) for a, b in pairs if (a.mask | b.mask) == q0.mask),
        key=lambda ab: (ab[0].mask, ab[1].mask),
    )
    a0, b0 = splitters[0]
    checks["lead_f_avoids_f_part"] = code(a0, L).f_mask == 0
    checks["splitter_codes_are_leads"] = all(
        code(a, L) == lead_f and code(b, L) == lead_g for a, b in splitters
    )
    checks["splitter_values_constant"] = all(
        (f.value(a), g.value(b)) == (f.value(a0), g.value(b0)) for a, b in splitters
    )
    prod = product(f, g)
    expected_q0 = len(splitters) * f.value(a0) * g.value(b0)
    checks["value_at_q0_is_count_times_leads"] = prod.value(q0) == expected_q0
    lead_prod = lead(prod, L)
    checks["product_lead_is_best_pair_code"] = lead_prod == best
    shuffled = CodedSet(q0.mask & f_all, max_shuffle(code(a0, L).word, code(b0, L).word))
    checks["product_lead_is_max_shuffle_of_leads"] = lead_prod == shuffled
    checks["product_nonzero_at_q0"] = prod.value(q0) != 0
    checks["product_nonzero"] = not prod.is_zero
    return LeadingReport(q0, lead_f, lead_g, lead_prod, len(pairs), len(splitters), checks)


class WordFunction:
    """Finitely supported rational function on words."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Word, Fraction | int] | None = None):
        clean: dict[Word, Fraction] = {}
        if coeffs:
            for w, v in coeffs.items():
                fv = Fraction(v)
                if fv:
                    clean[w] = fv
        self.coeffs = clean

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def value(self, w: Word) -> Fraction:
        return self.coeffs.get(w, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WordFunction):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: "WordFunction") -> "WordFunction":
        out = dict(self.coeffs)
        for w, v in other.coeffs.items():
            out[w] = out.get(w, Fraction(0)) + v
        return WordFunction(out)

    def scale(self, c) -> "WordFunction":
        c = Fraction(c)
        return WordFunction({w: c * v for w, v in self.coeffs.items()})

    def lead_word(self):
        if not self.coeffs:
            return LEAD_BOTTOM
        return max(self.coeffs, key=Word.sort_key)

    def __repr__(self) -> str:
        return f"WordFunction({len(self.coeffs)} terms)"


def word_indicator(w: Word, value=1) -> WordFunction:
    return WordFunction({w: Fraction(value)})


def shuffle_product(f: WordFunction, g: WordFunction) -> WordFunction:
    """Sum of f(u) g(v) over every interleaving of every support pair."""
    out: dict[Word, Fraction] = {}
    for u, fu in f.coeffs.items():
        for v, gv in g.coeffs.items():
            c = fu * gv
            for pos in combinations(range(len(u) + len(v)), len(u)):
                w = shuffle(u, pos, v)
                out[w] = out.get(w, Fraction(0)) + c
    return WordFunction(out)


def final_segment_ideal_check(
    down_closed: Callable[[Word], bool], f: WordFunction, g: WordFunction
) -> bool:
    """If supp(f) avoids the down-closed set, so must supp(f * g).

    The predicate is first checked to be subword-closed on every word in
    sight (supports plus all their scattered subwords); a violation there
    is an error, not a False.  A premise that already fails makes the
    implication vacuously true.
    """
    prod = shuffle_product(f, g)
    universe: set[Word] = set()
    for fn in (f, g, prod):
        for w in fn.coeffs:
            universe |= subwords(w)
    for w in universe:
        if down_closed(w):
            for s in subwords(w):
                if not down_closed(s):
                    raise ValueError("predicate not closed under subwords on the tested universe")
    if any(down_closed(w) for w in f.coeffs):
        return True
    return not any(down_closed(w) for w in prod.coeffs)


def code_blind_function(
    layered: LayeredGround, degree: int, seed: int, need_pure_column_support: bool = False
) -> SetFunction:
    """Random nonzero function whose value depends only on the code.

    Such functions are invariant by construction.  Optionally forces some
    support on subsets disjoint from F (a hypothesis of the leading-term
    equations)."""
    rng = random.Random(seed)
    values: dict[CodedSet, Fraction] = {}
    coeffs: dict[Subset, Fraction] = {}
    shapes = ksubsets(layered.flat_size, degree)
    for s in shapes:
        c = code(s, layered)
        if c not in values:
            values[c] = Fraction(rng.choice((-1, 0, 0, 1)))
        if values[c]:
            coeffs[s] = values[c]
    f_all = (1 << layered.f_size) - 1

    def force_class(predicate) -> None:
        target = None
        for s in shapes:
            if predicate(s):
                target = code(s, layered)
                break
        if target is None:
            raise ValueError("no subset matches the forced class")
        for s in shapes:
            if code(s, layered) == target:
                coeffs[s] = Fraction(1)

    if need_pure_column_support and not any(s.mask & f_all == 0 for s in coeffs):
        force_class(lambda s: s.mask & f_all == 0)
    if not coeffs:
        force_class(lambda s: True)
    return SetFunction(layered.flat_size, degree, coeffs)
