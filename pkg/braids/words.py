"""
Braid words: data model, parsing and free-group word algebra.

A letter is a nonzero signed integer: ``k`` stands for sigma_k and ``-k``
for its inverse. Braid-relation rewriting lives in ``braids.garside``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from models.errors import InvalidWordError, StrandMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators sigma_1..sigma_{n-1} of the braid group B_n."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise InvalidWordError(f"Braid groups need at least 2 strands, got {self.strands}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise InvalidWordError(
                    f"Generator index {letter} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    @property
    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    @property
    def top_index(self) -> int:
        """Largest generator index occurring in the word, 0 for the empty word."""
        return max((abs(x) for x in self.letters), default=0)


def parse_braid(text: str, n: int) -> BraidWord:
    """
    Parse whitespace-separated signed integers into a braid word.

    Args:
        text: e.g. ``"1 -2 1"`` for sigma_1 sigma_2^-1 sigma_1
        n: strand count

    Returns:
        The corresponding BraidWord

    Raises:
        InvalidWordError: malformed token, index out of range, or n < 2
    """
    if n < 2:
        raise InvalidWordError(f"Braid groups need at least 2 strands, got {n}")
    letters = []
    for token in text.split():
        try:
            value = int(token)
        except ValueError:
            raise InvalidWordError(f"Malformed braid token: {token!r}") from None
        if value == 0 or abs(value) > n - 1:
            raise InvalidWordError(f"Generator index {value} out of range for {n} strands")
        letters.append(value)
    return BraidWord(n, tuple(letters))


def format_word(u: BraidWord) -> str:
    """Canonical text form, the inverse of parse_braid."""
    return " ".join(str(x) for x in u.letters)


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def generator(n: int, i: int, sign: int = 1) -> BraidWord:
    """The single-letter word sigma_i^sign."""
    return BraidWord(n, (i if sign > 0 else -i,))


def _check_strands(u: BraidWord, v: BraidWord):
    if u.strands != v.strands:
        raise StrandMismatchError(
            f"Cannot combine words on {u.strands} and {v.strands} strands"
        )


def concat(u: BraidWord, v: BraidWord) -> BraidWord:
    _check_strands(u, v)
    return BraidWord(u.strands, u.letters + v.letters)


def concat_all(words: Iterable[BraidWord], n: int) -> BraidWord:
    letters: list[int] = []
    for word in words:
        if word.strands != n:
            raise StrandMismatchError(f"Cannot combine words on {n} and {word.strands} strands")
        letters.extend(word.letters)
    return BraidWord(n, tuple(letters))


def invert(u: BraidWord) -> BraidWord:
    """Reverse the word and flip every sign."""
    return BraidWord(u.strands, tuple(-x for x in reversed(u.letters)))


def free_reduce(u: BraidWord) -> BraidWord:
    """Cancel adjacent x x^-1 pairs until none remain."""
    stack: list[int] = []
    for letter in u.letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(u.strands, tuple(stack))


def power(u: BraidWord, k: int) -> BraidWord:
    """u^k for any integer k."""
    base = u if k >= 0 else invert(u)
    return BraidWord(u.strands, base.letters * abs(k))


def exponent_sum(u: BraidWord) -> int:
    """Sum of the letter signs; invariant under the braid relations."""
    return sum(1 if x > 0 else -1 for x in u.letters)


def strand_permutation(u: BraidWord) -> tuple[int, ...]:
    """
    Image of the braid in the symmetric group.

    Returns a 0-based tuple ``p`` where ``p[a]`` is the final position of the
    strand that starts at position ``a``.
    """
    arrangement = list(range(u.strands))
    for letter in u.letters:
        i = abs(letter)
        arrangement[i - 1], arrangement[i] = arrangement[i], arrangement[i - 1]
    image = [0] * u.strands
    for position, strand in enumerate(arrangement):
        image[strand] = position
    return tuple(image)
