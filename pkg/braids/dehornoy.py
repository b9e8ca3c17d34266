"""
Dehornoy ordering of B_n by handle reduction.

The main generator of a word is its largest index k. A sigma_k-handle is a
subword sigma_k^e v sigma_k^-e where v only uses generators of index < k.
Reducing every handle leaves a word in which sigma_k occurs with one sign
only (or not at all), which decides membership in P_k, P_k^- or B_k.
"""

import logging
from enum import Enum
from functools import cmp_to_key
from typing import Iterable, Optional

from braids import garside
from braids.words import BraidWord, concat, invert
from config.settings import settings
from models.errors import ConsistencyError, HandleBudgetExceeded, StrandMismatchError
from models.schemas import SigmaVerdict

logger = logging.getLogger(__name__)


class Order(str, Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"


def _find_handle(letters: list[int], start: int) -> Optional[tuple[int, int]]:
    """Handle whose right end is leftmost, scanning right ends from ``start``."""
    for j in range(start, len(letters)):
        y = letters[j]
        k = abs(y)
        for i in range(j - 1, -1, -1):
            x = letters[i]
            if abs(x) >= k:
                if x == -y:
                    return i, j
                break
    return None


def reduce_handles(w: BraidWord, budget: Optional[int] = None) -> tuple[BraidWord, int]:
    """
    Reduce handles until none is left.

    The leftmost-ending handle never contains another handle, so each step is
    a permitted reduction and the process terminates.

    Returns:
        (handle-free word, number of reductions)

    Raises:
        HandleBudgetExceeded: more than ``budget`` reductions were needed
    """
    budget = settings.handle_budget if budget is None else budget
    letters = list(w.letters)
    steps = 0
    start = 0
    while (handle := _find_handle(letters, start)) is not None:
        steps += 1
        if steps > budget:
            raise HandleBudgetExceeded(
                f"Handle reduction exceeded {budget} steps on a word of length {len(w)}"
            )
        i, j = handle
        e = 1 if letters[i] > 0 else -1
        k = abs(letters[i])
        middle: list[int] = []
        for y in letters[i + 1:j]:
            if abs(y) == k - 1:
                d = 1 if y > 0 else -1
                middle.extend((-e * (k - 1), d * k, e * (k - 1)))
            else:
                middle.append(y)
        letters[i:j + 1] = middle
        start = i
    logger.debug(f"Reduced word of length {len(w)} in {steps} handle steps to length {len(letters)}")
    return BraidWord(w.strands, tuple(letters)), steps


def main_verdict(w: BraidWord) -> SigmaVerdict:
    """Identity, Positive(k) or Negative(k) with k the main generator index."""
    reduced, steps = reduce_handles(w)
    if reduced.is_empty:
        return SigmaVerdict(kind="identity", index=0, certificate=(), steps=steps)
    k = reduced.top_index
    sign = next(x for x in reduced.letters if abs(x) == k) > 0
    return SigmaVerdict(
        kind="positive" if sign else "negative",
        index=k,
        certificate=reduced.letters,
        steps=steps,
    )


def is_dehornoy_positive(w: BraidWord) -> bool:
    return main_verdict(w).is_positive


def compare_with_certificate(u: BraidWord, v: BraidWord) -> tuple[Order, SigmaVerdict]:
    """
    Compare u and v; the certificate is the verdict on u^-1 v.

    Raises:
        ConsistencyError: handle reduction and normal forms disagree on equality
    """
    if u.strands != v.strands:
        raise StrandMismatchError(f"Cannot compare braids on {u.strands} and {v.strands} strands")
    verdict = main_verdict(concat(invert(u), v))
    same = garside.equals(u, v)
    if same != (verdict.kind == "identity"):
        raise ConsistencyError(
            f"Ordering says {verdict.kind} but normal forms say equal={same} for {u} vs {v}"
        )
    if verdict.kind == "identity":
        return Order.EQ, verdict
    return (Order.LT if verdict.is_positive else Order.GT), verdict


def compare(u: BraidWord, v: BraidWord) -> Order:
    """LT iff u^-1 v is Dehornoy-positive, EQ iff u = v, GT otherwise."""
    return compare_with_certificate(u, v)[0]


def sort_braids(words: Iterable[BraidWord]) -> list[BraidWord]:
    """Stable ascending sort under the Dehornoy ordering."""
    order_value = {Order.LT: -1, Order.EQ: 0, Order.GT: 1}
    return sorted(words, key=cmp_to_key(lambda a, b: order_value[compare(a, b)]))
