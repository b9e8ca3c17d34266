"""
Coxeter graphs: data model, builders for the classical families, the graph
file format and presentation words.

Graph file format::

    # comment
    vertices: a b c
    bond a b 3
    bond b c inf

Bonds that are not listed default to m = 2.
"""

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import networkx as nx

from models.errors import GraphFormatError, InvalidWordError

logger = logging.getLogger(__name__)

INF = math.inf

Bond = Union[int, float]
GroupWord = tuple[str, ...]


def format_bond(m: Bond) -> str:
    return "inf" if m == INF else str(int(m))


@dataclass(frozen=True, eq=False)
class CoxeterGraph:
    """
    Coxeter matrix over an ordered vertex set.

    ``bonds`` holds only the labels m_st != 2, keyed by vertex pairs in
    vertex order.
    """

    vertices: tuple[str, ...]
    bonds: dict = field(default_factory=dict, compare=False, hash=False)
    _key: tuple = field(default=(), repr=False)

    def __post_init__(self):
        vertices = tuple(str(v) for v in self.vertices)
        if len(set(vertices)) != len(vertices):
            raise GraphFormatError(f"Duplicate vertex labels in {vertices}")
        index = {v: i for i, v in enumerate(vertices)}
        bonds = {}
        for (s, t), m in self.bonds.items():
            s, t = str(s), str(t)
            if s not in index or t not in index:
                raise GraphFormatError(f"Bond {s}-{t} mentions an unknown vertex")
            if s == t:
                raise GraphFormatError(f"Bond {s}-{t} is a loop")
            if m != INF and (int(m) != m or m < 2):
                raise GraphFormatError(f"Bond label {m} for {s}-{t} must be an integer >= 2 or inf")
            if index[s] > index[t]:
                s, t = t, s
            if (s, t) in bonds and bonds[(s, t)] != m:
                raise GraphFormatError(f"Conflicting labels for bond {s}-{t}")
            if m != 2:
                bonds[(s, t)] = m if m == INF else int(m)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "bonds", bonds)
        object.__setattr__(self, "_key", (vertices, tuple(sorted(
            (s, t, format_bond(m)) for (s, t), m in bonds.items()
        ))))

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def index(self, s: str) -> int:
        try:
            return self.vertices.index(s)
        except ValueError:
            raise InvalidWordError(f"Unknown vertex {s!r}") from None

    def m(self, s: str, t: str) -> Bond:
        if s == t:
            return 1
        if self.index(s) > self.index(t):
            s, t = t, s
        return self.bonds.get((s, t), 2)

    def matrix(self) -> list[list[Bond]]:
        return [[self.m(s, t) for t in self.vertices] for s in self.vertices]

    def edges(self) -> list[tuple[str, str, Bond]]:
        """Bonds with m != 2, in vertex order."""
        return sorted(
            ((s, t, m) for (s, t), m in self.bonds.items()),
            key=lambda e: (self.index(e[0]), self.index(e[1])),
        )

    @property
    def labels(self) -> set:
        return set(self.bonds.values())

    @property
    def is_small_type(self) -> bool:
        return self.labels <= {3}

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for s, t, m in self.edges():
            graph.add_edge(s, t, m=m)
        return graph

    def subgraph(self, vertices: Iterable[str]) -> "CoxeterGraph":
        keep = set(vertices)
        ordered = tuple(v for v in self.vertices if v in keep)
        return CoxeterGraph(
            ordered,
            {(s, t): m for (s, t), m in self.bonds.items() if s in keep and t in keep},
        )

    def components(self) -> list["CoxeterGraph"]:
        """Connected components, ordered by their first vertex."""
        parts = nx.connected_components(self.to_networkx())
        graphs = [self.subgraph(part) for part in parts]
        return sorted(graphs, key=lambda g: self.index(g.vertices[0]))

    @property
    def is_connected(self) -> bool:
        return self.rank > 0 and nx.is_connected(self.to_networkx())

    def reordered(self, order: Sequence[str]) -> "CoxeterGraph":
        """The same Coxeter matrix over a different vertex order."""
        if sorted(order) != sorted(self.vertices):
            raise GraphFormatError(f"Order {list(order)} is not a permutation of {list(self.vertices)}")
        return CoxeterGraph(tuple(order), dict(self.bonds))

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(self.vertices)]
        lines += [f"bond {s} {t} {format_bond(m)}" for s, t, m in self.edges()]
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        return isinstance(other, CoxeterGraph) and self._key == other._key

    def __hash__(self):
        return hash(self._key)


# File format

def _parse_bond(token: str, line_no: int) -> Bond:
    if token.lower() in ("inf", "infinity", "oo"):
        return INF
    try:
        value = int(token)
    except ValueError:
        raise GraphFormatError(f"Line {line_no}: bad bond label {token!r}") from None
    if value < 2:
        raise GraphFormatError(f"Line {line_no}: bond label must be >= 2, got {value}")
    return value


def parse_graph(text: str) -> CoxeterGraph:
    """Parse the graph file format."""
    vertices: Optional[list[str]] = None
    bonds: dict = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if vertices is not None:
                raise GraphFormatError(f"Line {line_no}: repeated vertices line")
            vertices = line[len("vertices:"):].split()
            continue
        tokens = line.split()
        if tokens[0] != "bond" or len(tokens) != 4:
            raise GraphFormatError(f"Line {line_no}: expected 'bond a b m', got {line!r}")
        if vertices is None:
            raise GraphFormatError(f"Line {line_no}: bond before the vertices line")
        _, s, t, label = tokens
        m = _parse_bond(label, line_no)
        key = (s, t) if s <= t else (t, s)
        if key in bonds and bonds[key] != m:
            raise GraphFormatError(f"Line {line_no}: conflicting label for bond {s}-{t}")
        bonds[key] = m
    if not vertices:
        raise GraphFormatError("Graph file has no vertices line")
    return CoxeterGraph(tuple(vertices), bonds)


def load_graph(path: Union[str, Path]) -> CoxeterGraph:
    text = Path(path).read_text(encoding="utf-8")
    graph = parse_graph(text)
    logger.debug(f"Loaded graph {path} with {graph.rank} vertices and {len(graph.bonds)} bonds")
    return graph


def parse_word(g: CoxeterGraph, text: str) -> GroupWord:
    """
    Parse a whitespace-separated group word.

    Tokens are vertex labels; a token that is not a label is read as a
    1-based vertex index.
    """
    letters = []
    for token in text.replace(",", " ").split():
        if token in g.vertices:
            letters.append(token)
            continue
        try:
            position = int(token)
        except ValueError:
            raise InvalidWordError(f"Unknown vertex {token!r}") from None
        if not 1 <= position <= g.rank:
            raise InvalidWordError(f"Vertex index {position} out of range 1..{g.rank}")
        letters.append(g.vertices[position - 1])
    return tuple(letters)


# Presentations

def relation_word(a, b, m: Bond) -> tuple:
    """The alternating word aba... of length m."""
    if m == INF:
        raise GraphFormatError("No relation word for m = inf")
    if int(m) != m or m < 2:
        raise GraphFormatError(f"Relation length must be an integer >= 2, got {m}")
    return tuple(a if i % 2 == 0 else b for i in range(int(m)))


def coxeter_relations(g: CoxeterGraph) -> list[tuple[GroupWord, GroupWord]]:
    """Relations s^2 = 1 and w(s,t:m) = w(t,s:m) of the Coxeter presentation."""
    relations: list[tuple[GroupWord, GroupWord]] = [((s, s), ()) for s in g.vertices]
    return relations + artin_relations(g)


def artin_relations(g: CoxeterGraph) -> list[tuple[GroupWord, GroupWord]]:
    """Braid relations w(s,t:m) = w(t,s:m) for all pairs with finite m."""
    relations = []
    for i, s in enumerate(g.vertices):
        for t in g.vertices[i + 1:]:
            m = g.m(s, t)
            if m != INF:
                relations.append((relation_word(s, t, m), relation_word(t, s, m)))
    return relations


# Builders

def _numbered(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(1, n + 1))


def type_a(n: int) -> CoxeterGraph:
    """A_n: the path 1 - 2 - ... - n."""
    v = _numbered(n)
    return CoxeterGraph(v, {(v[i], v[i + 1]): 3 for i in range(n - 1)})


def type_b(n: int) -> CoxeterGraph:
    """B_n: a path whose last bond is 4."""
    graph = type_a(n)
    bonds = dict(graph.bonds)
    bonds[(str(n - 1), str(n))] = 4
    return CoxeterGraph(graph.vertices, bonds)


def type_d(n: int) -> CoxeterGraph:
    """D_n: path 1..n-1 with n attached to n-2."""
    v = _numbered(n)
    bonds = {(v[i], v[i + 1]): 3 for i in range(n - 2)}
    bonds[(v[n - 3], v[n - 1])] = 3
    return CoxeterGraph(v, bonds)


def type_e(n: int) -> CoxeterGraph:
    """E_n (n = 6, 7, 8): path 1..n-1 with n attached to 3."""
    if n not in (6, 7, 8):
        raise GraphFormatError(f"E_{n} is not a Coxeter graph of the E series")
    v = _numbered(n)
    bonds = {(v[i], v[i + 1]): 3 for i in range(n - 2)}
    bonds[(v[2], v[n - 1])] = 3
    return CoxeterGraph(v, bonds)


def type_f4() -> CoxeterGraph:
    return CoxeterGraph(_numbered(4), {("1", "2"): 3, ("2", "3"): 4, ("3", "4"): 3})


def type_h(n: int) -> CoxeterGraph:
    """H_3 / H_4: path with first bond 5."""
    graph = type_a(n)
    bonds = dict(graph.bonds)
    bonds[("1", "2")] = 5
    return CoxeterGraph(graph.vertices, bonds)


def dihedral(m: Bond) -> CoxeterGraph:
    """I_2(m) on two vertices; m = inf gives the affine A~_1."""
    return CoxeterGraph(("1", "2"), {("1", "2"): m})


def triangle(p: Bond, q: Bond, r: Bond) -> CoxeterGraph:
    """Triangle group with m_12 = p, m_23 = q, m_13 = r."""
    return CoxeterGraph(("1", "2", "3"), {("1", "2"): p, ("2", "3"): q, ("1", "3"): r})


def from_matrix(vertices: Sequence[str], matrix: Sequence[Sequence[Bond]]) -> CoxeterGraph:
    """Build a graph from a full symmetric Coxeter matrix."""
    n = len(vertices)
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise GraphFormatError("Coxeter matrix must be square and match the vertex list")
    bonds = {}
    for i in range(n):
        if matrix[i][i] != 1:
            raise GraphFormatError(f"Diagonal entry m_{vertices[i]}{vertices[i]} must be 1")
        for j in range(i + 1, n):
            if matrix[i][j] != matrix[j][i]:
                raise GraphFormatError(f"Coxeter matrix is not symmetric at ({vertices[i]}, {vertices[j]})")
            bonds[(vertices[i], vertices[j])] = matrix[i][j]
    return CoxeterGraph(tuple(vertices), bonds)
