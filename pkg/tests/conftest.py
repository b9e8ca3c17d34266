"""
Shared fixtures and independent oracles for the test suite.

Two oracles are kept deliberately independent of the Garside machinery:

* ``positive_class``: every positive word reachable from a positive word by the
  braid relations (the relations are homogeneous, so the class is finite);
* ``burau``: the unreduced Burau matrix over Z[t], faithful on B_3;
* ``sigma_form``: a bounded search through equal words for one in which the
  main generator occurs with a single sign.
"""

from collections import deque
from pathlib import Path
from typing import Optional

import pytest
from sympy import ZZ, ring

from braids.words import BraidWord
from coxeter.graph import CoxeterGraph, dihedral, triangle, type_a, type_b

R, t = ring("t", ZZ)


def positive_class(word: tuple[int, ...], n: int) -> set[tuple[int, ...]]:
    """All positive words equal to ``word`` in the monoid B_n^+."""
    seen = {tuple(word)}
    queue = deque(seen)
    while queue:
        w = queue.popleft()
        images = []
        for p in range(len(w) - 1):
            i, j = w[p], w[p + 1]
            if abs(i - j) >= 2:
                images.append(w[:p] + (j, i) + w[p + 2:])
            if p + 2 < len(w) and w[p + 2] == i and abs(i - j) == 1:
                images.append(w[:p] + (j, i, j) + w[p + 3:])
        for image in images:
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return seen


def rewrites(w: tuple[int, ...], n: int, max_length: int) -> list[tuple[int, ...]]:
    """Words equal to ``w`` in B_n one relation, cancellation or insertion away."""
    images = []
    for p in range(len(w) - 1):
        x, y = w[p], w[p + 1]
        if x == -y:
            images.append(w[:p] + w[p + 2:])
        if abs(abs(x) - abs(y)) >= 2:
            images.append(w[:p] + (y, x) + w[p + 2:])
        if p + 2 < len(w) and abs(abs(x) - abs(y)) == 1:
            z = w[p + 2]
            e = 1 if x > 0 else -1
            f = 1 if y > 0 else -1
            i, j = abs(x), abs(y)
            if z == x and e == f:
                images.append(w[:p] + (y, x, y) + w[p + 3:])
            if z == -x:
                # x^e y^f x^-e = y^-e x^f y^e
                images.append(w[:p] + (-e * j, f * i, e * j) + w[p + 3:])
    if len(w) + 2 <= max_length:
        for p in range(len(w) + 1):
            for i in range(1, n):
                for letter in (i, -i):
                    images.append(w[:p] + (letter, -letter) + w[p:])
    return images


def sigma_form(word: BraidWord, slack: int = 2, limit: int = 400) -> Optional[tuple[str, int]]:
    """
    (kind, index) when some word equal to ``word`` (found within ``limit``
    rewrites, at most ``slack`` letters longer) has its main generator with
    one sign only; None when the search gives up.
    """
    max_length = len(word.letters) + slack
    seen = {tuple(word.letters)}
    queue = deque(seen)
    while queue and len(seen) <= limit:
        w = queue.popleft()
        if not w:
            return "identity", 0
        k = max(abs(x) for x in w)
        signs = {x > 0 for x in w if abs(x) == k}
        if len(signs) == 1:
            return ("positive" if signs.pop() else "negative"), k
        for image in rewrites(w, word.strands, max_length):
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return None


def burau(word: BraidWord):
    """
    Unreduced Burau matrix of ``word`` multiplied by t^s, where s is the
    number of inverse letters. Returns (rows, s).
    """
    n = word.strands
    rows = [[R(1) if i == j else R(0) for j in range(n)] for i in range(n)]
    shift = 0
    for letter in word.letters:
        i = abs(letter) - 1
        if letter > 0:
            block, scale = ((1 - t, t), (R(1), R(0))), R(1)
        else:
            block, scale = ((R(0), t), (R(1), t - 1)), t
            shift += 1
        updated = []
        for row in rows:
            new = [c * scale for c in row]
            a, b = row[i], row[i + 1]
            new[i] = a * block[0][0] + b * block[1][0]
            new[i + 1] = a * block[0][1] + b * block[1][1]
            updated.append(new)
        rows = updated
    return rows, shift


def burau_equal(u: BraidWord, v: BraidWord) -> bool:
    (pu, su), (pv, sv) = burau(u), burau(v)
    return all(
        a * t ** sv == b * t ** su
        for row_u, row_v in zip(pu, pv)
        for a, b in zip(row_u, row_v)
    )


@pytest.fixture
def a2() -> CoxeterGraph:
    return type_a(2)


@pytest.fixture
def a3() -> CoxeterGraph:
    return type_a(3)


@pytest.fixture
def b2() -> CoxeterGraph:
    return type_b(2)


@pytest.fixture
def affine_a1() -> CoxeterGraph:
    return dihedral(float("inf"))


@pytest.fixture
def tri334() -> CoxeterGraph:
    return triangle(3, 3, 4)


@pytest.fixture
def graph_file(tmp_path: Path):
    """Write a graph to a temporary file and return its path."""

    def write(graph: CoxeterGraph, name: str = "graph.cox") -> Path:
        path = tmp_path / name
        path.write_text(graph.to_text(), encoding="utf-8")
        return path

    return write
