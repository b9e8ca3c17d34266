"""
Algebraic Nielsen-Thurston classification of braids.

A braid is periodic when some power is central (a power of Delta^2) and
reducible when it has a finite orbit on the proper nontrivial parabolic
subgroups g (B_n)_X g^-1. Reducibility is searched for with conjugators of
bounded canonical length, so a failed search is reported as such rather than
as pseudo-Anosov.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from braids import garside
from braids.words import BraidWord, concat_all, exponent_sum, generator, identity, invert, power
from config.settings import settings
from models.errors import InvalidWordError, StrandMismatchError
from models.schemas import ClassVerdict, PeriodicWitness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParabolicRep:
    """The parabolic subgroup g (B_n)_X g^-1."""

    conjugator: BraidWord
    support: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))
        n = self.conjugator.strands
        full = set(range(1, n))
        if not self.support or not self.support <= full or self.support == full:
            raise InvalidWordError(
                f"Support {sorted(self.support)} must be a nonempty proper subset of 1..{n - 1}"
            )

    @property
    def strands(self) -> int:
        return self.conjugator.strands

    def __str__(self) -> str:
        return f"g=[{self.conjugator}] X={{{','.join(str(x) for x in sorted(self.support))}}}"


def parabolic_membership(h: BraidWord, X: Iterable[int]) -> bool:
    """
    True iff h lies in the standard parabolic subgroup (B_n)_X.

    Every factor of the normal form of such an element lies in the parabolic,
    which for a permutation braid means no strand crosses a gap i not in X.
    """
    X = set(X)
    n = h.strands
    gaps = [i for i in range(1, n) if i not in X]
    form = garside.group_normal_form(h)
    for factor in form.negative + form.positive:
        perm = factor.perm
        for i in gaps:
            if any(perm[a] >= i for a in range(i)):
                return False
    return True


def _conjugate(g: BraidWord, h: BraidWord) -> BraidWord:
    """g^-1 h g."""
    return concat_all((invert(g), h, g), h.strands)


def normalizes(h: BraidWord, p: ParabolicRep) -> bool:
    """True iff h g (B_n)_X g^-1 h^-1 = g (B_n)_X g^-1."""
    if h.strands != p.strands:
        raise StrandMismatchError(f"Braid on {h.strands} strands, parabolic on {p.strands}")
    n = h.strands
    c = _conjugate(p.conjugator, h)
    c_inv = invert(c)
    for x in sorted(p.support):
        sigma = generator(n, x)
        if not parabolic_membership(concat_all((c, sigma, c_inv), n), p.support):
            return False
        if not parabolic_membership(concat_all((c_inv, sigma, c), n), p.support):
            return False
    return True


def is_periodic(f: BraidWord) -> Optional[PeriodicWitness]:
    """
    Smallest m in 1..n(n-1) with f^m = Delta^(2k), or None.

    Comparing exponent sums forces k = m e(f) / (n(n-1)).
    """
    n = f.strands
    e = exponent_sum(f)
    bound = n * (n - 1)
    for m in range(1, bound + 1):
        if (m * e) % bound:
            continue
        k = m * e // bound
        if garside.equals(power(f, m), garside.delta_power(n, 2 * k)):
            logger.debug(f"Periodic witness m={m}, k={k}")
            return PeriodicWitness(m=m, k=k)
    return None


def conjugator_candidates(n: int, radius: int) -> list[BraidWord]:
    """
    Positive braids that are products of at most ``radius`` simples, one
    representative per element, ordered by canonical length then word.
    """
    simples = [x for x in garside.simple_elements(n) if not x.is_identity]
    seen = {garside.group_normal_form(identity(n))}
    candidates = [identity(n)]
    layer = [identity(n)]
    for _ in range(radius):
        next_layer = []
        for g in layer:
            for x in simples:
                word = BraidWord(n, g.letters + x.word())
                form = garside.group_normal_form(word)
                if form in seen:
                    continue
                seen.add(form)
                next_layer.append(form.to_word())
        candidates.extend(next_layer)
        layer = next_layer
    return sorted(candidates, key=lambda g: (garside.canonical_length(g), len(g), g.letters))


def _supports(n: int) -> list[frozenset[int]]:
    generators = range(1, n)
    subsets = []
    for size in range(1, n - 1):
        subsets.extend(frozenset(c) for c in itertools.combinations(generators, size))
    return subsets


def _orbit_length(f: BraidWord, p: ParabolicRep) -> Optional[int]:
    """Smallest j <= n with f^j normalizing p."""
    for j in range(1, f.strands + 1):
        if normalizes(power(f, j), p):
            return j
    return None


def classify(f: BraidWord, radius: Optional[int] = None, jobs: Optional[int] = None) -> ClassVerdict:
    """Periodic, Reducible (with a parabolic witness) or NoWitnessFound."""
    radius = settings.classify_radius if radius is None else radius
    jobs = settings.jobs if jobs is None else jobs
    logger.info("=== Braid classification ===")

    witness = is_periodic(f)
    if witness is not None:
        return ClassVerdict(kind="periodic", periodic=witness, radius=radius)

    n = f.strands
    tasks = [
        ParabolicRep(g, X)
        for g in conjugator_candidates(n, radius)
        for X in _supports(n)
    ]
    logger.debug(f"Searching {len(tasks)} parabolic candidates at radius {radius}")

    def check(p: ParabolicRep) -> Optional[int]:
        return _orbit_length(f, p)

    if jobs > 1:
        batch = jobs * 4
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for start in range(0, len(tasks), batch):
                chunk = tasks[start:start + batch]
                for p, j in zip(chunk, pool.map(check, chunk)):
                    if j is not None:
                        return ClassVerdict(kind="reducible", witness=p, orbit_length=j, radius=radius)
    else:
        for p in tasks:
            j = check(p)
            if j is not None:
                return ClassVerdict(kind="reducible", witness=p, orbit_length=j, radius=radius)

    logger.info(f"No reduction witness within radius {radius}")
    return ClassVerdict(kind="no_witness_found", radius=radius)
