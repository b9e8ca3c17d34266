"""
Canonical representation of a Coxeter group and its root system.

Vectors are coefficient tuples over the simple roots. The system works with
twice the canonical form, G = 2B, so G_ss = 2 and G_st = -2cos(pi/m_st); in
rational mode every coordinate then stays an integer.

Group words act right to left: the word s_1 ... s_k acts as
rho_{s_1} o ... o rho_{s_k}.

Coordinates are stored at full precision. Equality and hashing go through
``Root.key``, the coordinates passed through ``ScalarField.key``; in float
mode that rounds, so drifted copies of one root compare equal.
"""

import logging
from collections import deque
from dataclasses import dataclass, field, replace
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from config.settings import ScalarMode
from coxeter.classification import CoxeterType, classify_type
from coxeter.graph import CoxeterGraph, GroupWord
from coxeter.scalars import FloatField, Scalar, ScalarField, field_for
from models.errors import InfiniteTypeError, InvalidWordError, RootNormError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Root:
    """A vector over the simple-root basis, with its BFS depth when known."""

    coeffs: tuple = field(compare=False)
    depth: Optional[int] = field(default=None, compare=False)
    key: tuple = field(default=(), repr=False)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.key:
            object.__setattr__(self, "key", self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)


class CoxeterSystem:
    """
    Coxeter group W of a graph acting on its canonical representation.

    Args:
        graph: Coxeter graph
        mode: scalar mode; defaults to ``settings.scalar_mode``
    """

    def __init__(self, graph: CoxeterGraph, mode: Optional[ScalarMode] = None):
        self.graph = graph
        self.field: ScalarField = field_for(graph.labels, mode)
        f = self.field
        n = graph.rank
        self.rank = n
        self._weights = [
            [f.weight(graph.m(s, t)) if s != t else f.zero() for t in graph.vertices]
            for s in graph.vertices
        ]
        self.gram = [
            [f.from_int(2) if i == j else f.zero() - self._weights[i][j] for j in range(n)]
            for i in range(n)
        ]
        self._simple = tuple(self.simple_root(s) for s in graph.vertices)

    def __repr__(self):
        return f"CoxeterSystem({list(self.graph.vertices)}, mode={self.field.mode.value})"

    @cached_property
    def coxeter_type(self) -> CoxeterType:
        return classify_type(self.graph, self.field.mode)

    @property
    def is_finite(self) -> bool:
        return self.coxeter_type == CoxeterType.FINITE

    # Vectors

    def vector(self, coeffs: Iterable[Scalar], depth: Optional[int] = None) -> Root:
        coeffs = tuple(coeffs)
        if len(coeffs) != self.rank:
            raise InvalidWordError(f"Vector of length {len(coeffs)} for a graph of rank {self.rank}")
        return Root(coeffs, depth, self._key(coeffs))

    def _key(self, coeffs: Iterable[Scalar]) -> tuple:
        return tuple(self.field.key(c) for c in coeffs)

    def zero(self) -> Root:
        return self.vector(self.field.zero() for _ in range(self.rank))

    def simple_root(self, s: str) -> Root:
        i = self.graph.index(s)
        f = self.field
        return self.vector((f.one() if j == i else f.zero() for j in range(self.rank)), 1)

    def simple_roots(self) -> tuple[Root, ...]:
        return self._simple

    def is_simple(self, x: Root) -> bool:
        return x in self._simple

    def add(self, x: Root, y: Root) -> Root:
        return self.vector(a + b for a, b in zip(x.coeffs, y.coeffs))

    def scale(self, c: Scalar, x: Root) -> Root:
        return self.vector(c * a for a in x.coeffs)

    def negate(self, x: Root) -> Root:
        return self.vector(-a for a in x.coeffs)

    def signs(self, x: Root) -> set[int]:
        return {self.field.sign(c) for c in x.coeffs}

    def is_positive(self, x: Root) -> bool:
        s = self.signs(x)
        return 1 in s and -1 not in s

    def is_negative(self, x: Root) -> bool:
        s = self.signs(x)
        return -1 in s and 1 not in s

    def sign(self, x: Root) -> int:
        """+1 for positive, -1 for negative, 0 for zero or mixed vectors."""
        if self.is_positive(x):
            return 1
        if self.is_negative(x):
            return -1
        return 0

    def positive_part(self, x: Root) -> Root:
        """The representative of {x, -x} with nonnegative coordinates."""
        return self.negate(x) if self.is_negative(x) else x

    def height(self, x: Root) -> float:
        return abs(float(sum(x.coeffs, self.field.zero())))

    def sort_key(self, x: Root) -> tuple:
        return tuple(float(c) for c in x.coeffs)

    def sort_roots(self, roots: Iterable[Root]) -> list[Root]:
        return sorted(roots, key=lambda r: (self.height(r), self.sort_key(r)))

    def format_root(self, x: Root) -> str:
        return "(" + ",".join(self.field.format(c) for c in x.coeffs) + ")"

    # Bilinear form

    def twice_inner(self, x: Root, y: Root) -> Scalar:
        total = self.field.zero()
        for i, a in enumerate(x.coeffs):
            if self.field.sign(a) == 0:
                continue
            row = self.gram[i]
            for j, b in enumerate(y.coeffs):
                total = total + a * row[j] * b
        return total

    def inner(self, x: Root, y: Root) -> Scalar:
        """Canonical form <x, y>."""
        half = 0.5 if isinstance(self.field, FloatField) else Fraction(1, 2)
        return self.twice_inner(x, y) * half

    def canonical_form(self) -> list[list[Scalar]]:
        """Gram matrix B with B_ss = 1 and B_st = -cos(pi/m_st)."""
        half = 0.5 if isinstance(self.field, FloatField) else Fraction(1, 2)
        return [[entry * half for entry in row] for row in self.gram]

    # Action

    def apply_generator(self, s: str, x: Root) -> Root:
        """rho_s(x) = x - 2<x, alpha_s> alpha_s; only coordinate s changes."""
        i = self.graph.index(s)
        weights = self._weights[i]
        value = -x.coeffs[i]
        for j, c in enumerate(x.coeffs):
            if j != i:
                value = value + weights[j] * c
        coeffs = list(x.coeffs)
        coeffs[i] = value
        return self.vector(coeffs)

    def act(self, w: Sequence[str], x: Root) -> Root:
        for s in reversed(w):
            x = self.apply_generator(s, x)
        return x

    def reflection_in_root(self, beta: Root, x: Root) -> Root:
        """
        r_beta(x) = x - 2<x, beta> beta.

        Raises:
            RootNormError: beta does not have canonical norm 1
        """
        norm = self.twice_inner(beta, beta)
        if self.field.sign(norm - self.field.from_int(2)) != 0:
            raise RootNormError(f"Vector {self.format_root(beta)} has canonical norm {norm}/2, not 1")
        c = self.twice_inner(x, beta)
        return self.vector(a - c * b for a, b in zip(x.coeffs, beta.coeffs))

    def matrix(self, w: Sequence[str]) -> tuple[tuple, ...]:
        """Columns are the images of the simple roots."""
        return tuple(self.act(w, a).coeffs for a in self._simple)

    def matrix_key(self, columns: tuple[tuple, ...]) -> tuple[tuple, ...]:
        """Hashable element key for a column matrix."""
        return tuple(self._key(column) for column in columns)

    def _mul_right(self, columns: tuple[tuple, ...], s: str) -> tuple[tuple, ...]:
        """Columns of v s given the columns of v."""
        out = []
        for alpha in self._simple:
            y = self.apply_generator(s, alpha).coeffs
            image = [self.field.zero()] * self.rank
            for t, coefficient in enumerate(y):
                if self.field.sign(coefficient) == 0:
                    continue
                for r in range(self.rank):
                    image[r] = image[r] + coefficient * columns[t][r]
            out.append(tuple(image))
        return tuple(out)

    # Roots

    def positive_roots(self, depth: Optional[int] = None) -> list[Root]:
        """
        Positive roots of BFS depth <= depth (simple roots have depth 1).

        ``depth=None`` enumerates all of Phi^+, which is only allowed on
        finite type.

        Raises:
            InfiniteTypeError: full enumeration on a non-finite graph
        """
        if depth is None:
            kind = self.coxeter_type
            if kind != CoxeterType.FINITE:
                raise InfiniteTypeError(f"Root system of a {kind.value} graph is infinite")
        elif depth < 1:
            return []
        found: dict[Root, Root] = {}
        frontier = []
        for alpha in self._simple:
            found[alpha] = alpha
            frontier.append(alpha)
        level = 1
        while frontier and (depth is None or level < depth):
            level += 1
            next_frontier = []
            for beta in frontier:
                for s in self.graph.vertices:
                    image = self.apply_generator(s, beta)
                    if image in found or not self.is_positive(image):
                        continue
                    root = replace(image, depth=level)
                    found[root] = root
                    next_frontier.append(root)
            frontier = next_frontier
        logger.debug(f"positive_roots: {len(found)} roots up to depth {level}")
        return list(found.values())

    def root_depth(self, beta: Root) -> int:
        """Depth of a positive root: 1 + number of simple reflections down to Pi."""
        if not self.is_positive(beta):
            raise InvalidWordError(f"Depth is defined for positive roots, got {self.format_root(beta)}")
        depth = 1
        while not self.is_simple(beta):
            for alpha, s in zip(self._simple, self.graph.vertices):
                if self.field.sign(self.twice_inner(beta, alpha)) > 0:
                    beta = self.apply_generator(s, beta)
                    break
            else:
                raise RootNormError(f"{self.format_root(beta)} is not a root")
            depth += 1
        return depth

    def inversion_set(self, w: Sequence[str]) -> frozenset[Root]:
        """Phi_w = {beta > 0 : w beta < 0}, built letter by letter."""
        current: set[Root] = set()
        for s in w:
            alpha = self._simple[self.graph.index(s)]
            if alpha in current:
                current.discard(alpha)
                current = {self.apply_generator(s, beta) for beta in current}
            else:
                current = {self.apply_generator(s, beta) for beta in current}
                current.add(alpha)
        return frozenset(current)

    def length(self, w: Sequence[str]) -> int:
        return len(self.inversion_set(w))

    def descent_step(self, w: Sequence[str], s: str) -> int:
        """+1 if l(ws) = l(w) + 1, i.e. w alpha_s is positive; else -1."""
        image = self.act(w, self._simple[self.graph.index(s)])
        return 1 if self.is_positive(image) else -1

    def length_by_descents(self, w: Sequence[str]) -> int:
        """Length through l(ws) = l(w) +- 1, independent of inversion sets."""
        total = 0
        for i, s in enumerate(w):
            total += self.descent_step(w[:i], s)
        return total

    def reduced_word(self, w: Sequence[str]) -> GroupWord:
        """A reduced expression, peeling right descents in vertex order."""
        columns = self.matrix(w)
        stripped = []
        while True:
            for t, s in enumerate(self.graph.vertices):
                if self.is_negative(self.vector(columns[t])):
                    stripped.append(s)
                    columns = self._mul_right(columns, s)
                    break
            else:
                return tuple(reversed(stripped))

    def support(self, w: Sequence[str]) -> frozenset[str]:
        """Vertices occurring in a reduced word of w."""
        return frozenset(self.reduced_word(w))

    def is_identity(self, w: Sequence[str]) -> bool:
        return all(self.act(w, alpha) == alpha for alpha in self._simple)

    def elements(self) -> list[GroupWord]:
        """
        All elements of a finite W as shortlex-first words, by BFS on the
        action on simple roots.

        Raises:
            InfiniteTypeError: W is infinite
        """
        kind = self.coxeter_type
        if kind != CoxeterType.FINITE:
            raise InfiniteTypeError(f"A {kind.value} Coxeter group has infinitely many elements")
        start = self.matrix(())
        seen = {self.matrix_key(start): ()}
        queue = deque([start])
        while queue:
            columns = queue.popleft()
            word = seen[self.matrix_key(columns)]
            for s in self.graph.vertices:
                image = self._mul_right(columns, s)
                key = self.matrix_key(image)
                if key not in seen:
                    seen[key] = word + (s,)
                    queue.append(image)
        return list(seen.values())
