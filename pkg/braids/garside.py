"""
Garside structure of the positive braid monoid B_n^+.

Simple elements (left divisors of the half twist Delta) are stored as
permutations: ``perm[a]`` is the final position of the strand starting at
position ``a`` (0-based). Two strands a < b have crossed in a simple x iff
``x.perm[a] > x.perm[b]``; left divisibility of simples is containment of
these crossing sets.

Normal forms are computed by right multiplication with simples followed by a
right-to-left pass that makes every adjacent pair left-weighted.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from braids.words import BraidWord, exponent_sum
from models.errors import InvalidWordError, StrandMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimpleFactor:
    """A permutation braid, i.e. a left divisor of Delta."""

    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        if sorted(self.perm) != list(range(len(self.perm))):
            raise InvalidWordError(f"Not a permutation: {self.perm}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def length(self) -> int:
        """Number of crossings, i.e. the norm of the simple."""
        p = self.perm
        return sum(1 for a, b in itertools.combinations(range(self.n), 2) if p[a] > p[b])

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.perm))

    @property
    def is_delta(self) -> bool:
        n = self.n
        return all(x == n - 1 - i for i, x in enumerate(self.perm))

    def arrangement(self) -> tuple[int, ...]:
        """Inverse permutation: ``arrangement()[pos]`` is the strand ending at ``pos``."""
        inverse = [0] * self.n
        for strand, position in enumerate(self.perm):
            inverse[position] = strand
        return tuple(inverse)

    def left_descents(self) -> frozenset[int]:
        """Generators sigma_i with sigma_i <=_L self."""
        p = self.perm
        return frozenset(i for i in range(1, self.n) if p[i - 1] > p[i])

    def right_descents(self) -> frozenset[int]:
        """Generators sigma_i with sigma_i <=_R self."""
        q = self.arrangement()
        return frozenset(i for i in range(1, self.n) if q[i - 1] > q[i])

    def word(self) -> tuple[int, ...]:
        """A shortest positive word, peeling the smallest left descent first."""
        perm = list(self.perm)
        letters = []
        while True:
            for i in range(1, self.n):
                if perm[i - 1] > perm[i]:
                    letters.append(i)
                    perm[i - 1], perm[i] = perm[i], perm[i - 1]
                    break
            else:
                return tuple(letters)

    def oneline(self) -> str:
        """1-based one-line notation of the strand permutation."""
        return "[" + ",".join(str(x + 1) for x in self.perm) + "]"

    def __str__(self) -> str:
        if self.is_delta:
            return "D"
        return ",".join(str(x) for x in self.word()) or "e"


@dataclass(frozen=True)
class PositiveBraid:
    """A positive word; its letter count is the norm nu."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter < 1 or letter > self.strands - 1:
                raise InvalidWordError(
                    f"Positive letter {letter} out of range for {self.strands} strands"
                )

    @property
    def norm(self) -> int:
        return len(self.letters)

    @classmethod
    def from_word(cls, w: BraidWord) -> "PositiveBraid":
        if not w.is_positive:
            raise InvalidWordError(f"Word is not positive: {w}")
        return cls(w.strands, w.letters)

    def to_word(self) -> BraidWord:
        return BraidWord(self.strands, self.letters)


@dataclass(frozen=True)
class GarsideNormalForm:
    """
    Group normal form a^-1 b with a and b left-coprime.

    ``negative`` is listed in written order a_p, ..., a_1 (so the element reads
    a_p^-1 ... a_1^-1 b_1 ... b_q); ``positive`` is b_1, ..., b_q.
    """

    strands: int
    negative: tuple[SimpleFactor, ...] = ()
    positive: tuple[SimpleFactor, ...] = ()

    @property
    def is_identity(self) -> bool:
        return not self.negative and not self.positive

    def to_word(self) -> BraidWord:
        letters: list[int] = []
        for factor in self.negative:
            letters.extend(-x for x in reversed(factor.word()))
        for factor in self.positive:
            letters.extend(factor.word())
        return BraidWord(self.strands, tuple(letters))


# Simple elements

def identity_simple(n: int) -> SimpleFactor:
    return SimpleFactor(tuple(range(n)))


def delta(n: int) -> SimpleFactor:
    """The half twist."""
    return SimpleFactor(tuple(n - 1 - a for a in range(n)))


def atom(n: int, i: int) -> SimpleFactor:
    """The generator sigma_i as a simple."""
    if not 1 <= i <= n - 1:
        raise InvalidWordError(f"Generator index {i} out of range for {n} strands")
    perm = list(range(n))
    perm[i - 1], perm[i] = i, i - 1
    return SimpleFactor(tuple(perm))


def simple_elements(n: int) -> list[SimpleFactor]:
    """All n! simple elements, ordered by length then permutation."""
    simples = [SimpleFactor(p) for p in itertools.permutations(range(n))]
    return sorted(simples, key=lambda x: (x.length, x.perm))


def reverse(x: SimpleFactor) -> SimpleFactor:
    """Image under the word-reversing anti-automorphism."""
    return SimpleFactor(x.arrangement())


def tau(x: SimpleFactor) -> SimpleFactor:
    """Conjugation by Delta: sigma_i -> sigma_{n-i}."""
    n = x.n
    return SimpleFactor(tuple(n - 1 - x.perm[n - 1 - a] for a in range(n)))


def right_complement(x: SimpleFactor) -> SimpleFactor:
    """The simple d with x d = Delta."""
    n = x.n
    return SimpleFactor(tuple(n - 1 - q for q in x.arrangement()))


def left_complement(x: SimpleFactor) -> SimpleFactor:
    """The simple y with y x = Delta."""
    n = x.n
    q = x.arrangement()
    return SimpleFactor(tuple(q[n - 1 - a] for a in range(n)))


def _same_n(x: SimpleFactor, y: SimpleFactor):
    if x.n != y.n:
        raise StrandMismatchError(f"Simples on {x.n} and {y.n} strands")


def compose(x: SimpleFactor, y: SimpleFactor) -> Optional[SimpleFactor]:
    """The braid product x y when it is simple, else None."""
    _same_n(x, y)
    product = SimpleFactor(tuple(y.perm[x.perm[a]] for a in range(x.n)))
    if product.length != x.length + y.length:
        return None
    return product


def is_left_divisor(x: SimpleFactor, y: SimpleFactor) -> bool:
    """x <=_L y: every crossing of x is a crossing of y."""
    _same_n(x, y)
    px, py = x.perm, y.perm
    return all(
        py[a] > py[b]
        for a, b in itertools.combinations(range(x.n), 2)
        if px[a] > px[b]
    )


def is_right_divisor(x: SimpleFactor, y: SimpleFactor) -> bool:
    return is_left_divisor(reverse(x), reverse(y))


def _mul_atom(x: SimpleFactor, i: int) -> SimpleFactor:
    """x sigma_i, assuming sigma_i is not a right descent of x."""
    q = x.arrangement()
    perm = list(x.perm)
    perm[q[i - 1]], perm[q[i]] = i, i - 1
    return SimpleFactor(tuple(perm))


def _div_atom(y: SimpleFactor, i: int) -> SimpleFactor:
    """sigma_i^-1 y, assuming sigma_i is a left descent of y."""
    perm = list(y.perm)
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return SimpleFactor(tuple(perm))


def left_meet(x: SimpleFactor, y: SimpleFactor) -> SimpleFactor:
    """
    Greatest common left divisor of two simples.

    Climbs from 1 one atom at a time while staying below both x and y; the
    common left divisors form an interval, so the climb ends at its top.
    """
    _same_n(x, y)
    z = identity_simple(x.n)
    px, py = x.perm, y.perm
    grown = True
    while grown:
        grown = False
        q = z.arrangement()
        for i in range(1, x.n):
            a, b = q[i - 1], q[i]
            if a < b and px[a] > px[b] and py[a] > py[b]:
                z = _mul_atom(z, i)
                grown = True
                break
    return z


def right_meet(x: SimpleFactor, y: SimpleFactor) -> SimpleFactor:
    """Greatest common right divisor of two simples."""
    return reverse(left_meet(reverse(x), reverse(y)))


def left_join(x: SimpleFactor, y: SimpleFactor) -> SimpleFactor:
    """Least common right multiple (join for <=_L), via complement duality."""
    return left_complement(right_meet(right_complement(x), right_complement(y)))


def right_join(x: SimpleFactor, y: SimpleFactor) -> SimpleFactor:
    """Least common left multiple (join for <=_R)."""
    return right_complement(left_meet(left_complement(x), left_complement(y)))


def simple_from_word(w: PositiveBraid) -> Optional[SimpleFactor]:
    """
    The simple represented by a positive word, or None when the word is not
    simple (some pair of strands crosses twice).
    """
    z = identity_simple(w.strands)
    for i in w.letters:
        if i in z.right_descents():
            return None
        z = _mul_atom(z, i)
    return z


# Normal forms

def is_left_weighted(f: SimpleFactor, g: SimpleFactor) -> bool:
    """True iff pi_L(f g) = f, i.e. every left descent of g is a right descent of f."""
    _same_n(f, g)
    return g.left_descents() <= f.right_descents()


def left_weight(f: SimpleFactor, g: SimpleFactor) -> tuple[SimpleFactor, SimpleFactor]:
    """The left-weighted pair (f', g') with f' g' = f g."""
    _same_n(f, g)
    while movable := g.left_descents() - f.right_descents():
        i = min(movable)
        f = _mul_atom(f, i)
        g = _div_atom(g, i)
    return f, g


def multiply_normal(factors: Sequence[SimpleFactor], y: SimpleFactor) -> list[SimpleFactor]:
    """Normal form of (factors) * y, where ``factors`` is already normal."""
    out = list(factors) + [y]
    for i in range(len(out) - 2, -1, -1):
        f, g = left_weight(out[i], out[i + 1])
        if f == out[i]:
            break
        out[i], out[i + 1] = f, g
    return [x for x in out if not x.is_identity]


def normalize(factors: Iterable[SimpleFactor]) -> list[SimpleFactor]:
    """Left normal form of an arbitrary product of simples."""
    out: list[SimpleFactor] = []
    for factor in factors:
        out = multiply_normal(out, factor)
    return out


def normal_form_positive(a: PositiveBraid) -> list[SimpleFactor]:
    """pi_L(a), pi_L(d_L(a)), ... until the remainder is trivial."""
    out: list[SimpleFactor] = []
    for i in a.letters:
        out = multiply_normal(out, atom(a.strands, i))
    return out


def pi_L(a: PositiveBraid) -> SimpleFactor:
    """Maximal simple left divisor Delta ^_L a."""
    factors = normal_form_positive(a)
    return factors[0] if factors else identity_simple(a.strands)


def partial_L(a: PositiveBraid) -> PositiveBraid:
    """The positive braid d_L(a) with a = pi_L(a) d_L(a)."""
    factors = normal_form_positive(a)
    letters: list[int] = []
    for factor in factors[1:]:
        letters.extend(factor.word())
    return PositiveBraid(a.strands, tuple(letters))


def _delta_fraction(w: BraidWord) -> tuple[int, list[SimpleFactor]]:
    """Write w = Delta^-r P with P a product of simples; returns (r, P)."""
    n = w.strands
    items: list[SimpleFactor] = []
    after = 0
    for letter in reversed(w.letters):
        if letter > 0:
            z = atom(n, letter)
        else:
            # sigma_i^-1 = Delta^-1 y with y sigma_i = Delta
            z = left_complement(atom(n, -letter))
        if after % 2:
            z = tau(z)
        items.append(z)
        if letter < 0:
            after += 1
    items.reverse()
    return after, items


def delta_normal_form(w: BraidWord) -> tuple[int, list[SimpleFactor]]:
    """
    Classical form Delta^p x_1 ... x_r with no x_i equal to Delta.

    Returns (p, [x_1, ..., x_r]); p is the infimum and r the canonical length.
    """
    r, items = _delta_fraction(w)
    factors = normalize(items)
    lead = 0
    while lead < len(factors) and factors[lead].is_delta:
        lead += 1
    return lead - r, factors[lead:]


def canonical_length(w: BraidWord) -> int:
    return len(delta_normal_form(w)[1])


def _left_divide(factors: list[SimpleFactor], m: SimpleFactor) -> list[SimpleFactor]:
    """m^-1 * (factors), for m a left divisor of the first factor."""
    first = factors[0]
    inverse_m = m.arrangement()
    quotient = SimpleFactor(tuple(first.perm[inverse_m[b]] for b in range(first.n)))
    return normalize([quotient, *factors[1:]])


def group_normal_form(w: BraidWord) -> GarsideNormalForm:
    """
    Normal form a^-1 b of an arbitrary braid word, with a ^_L b = 1 and both
    factor lists left-weighted.
    """
    n = w.strands
    r, items = _delta_fraction(w)
    positive = normalize(items)

    # Cancel Delta powers shared by both sides before the gcd loop.
    while r and positive and positive[0].is_delta:
        positive = positive[1:]
        r -= 1
    negative = [delta(n)] * r

    while negative and positive:
        m = left_meet(negative[0], positive[0])
        if m.is_identity:
            break
        negative = _left_divide(negative, m)
        positive = _left_divide(positive, m)

    return GarsideNormalForm(n, tuple(reversed(negative)), tuple(positive))


def equals(u: BraidWord, v: BraidWord) -> bool:
    """Word problem in B_n: compare canonical forms."""
    if u.strands != v.strands:
        raise StrandMismatchError(f"Cannot compare words on {u.strands} and {v.strands} strands")
    if exponent_sum(u) != exponent_sum(v):
        return False
    return group_normal_form(u) == group_normal_form(v)


def delta_power(n: int, k: int) -> BraidWord:
    """Delta^k as a braid word."""
    word = delta(n).word()
    letters = word * k if k >= 0 else tuple(-x for x in reversed(word)) * (-k)
    return BraidWord(n, letters)
