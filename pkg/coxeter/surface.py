"""
Monodromy surface of a small-type Coxeter graph.

Each vertex s contributes an annulus An_s = R/2kZ x [0, 1] cut into 2k unit
squares, k = |St_s|. For every bond m_st = 3 with s < t, square 2 pos(t:s)
of An_s is identified with square 2 pos(s:t) of An_t by the quarter turn
(x, y) -> (1 - y, x). The quotient is handled as a square complex: cells are
merged with a union-find, boundary edges are those bounding a single face.

The core curves a_s of the annuli give a lattice with antisymmetric form J;
sigma_s acts on it by the transvection x -> x + J(x, e_s) e_s.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

import networkx as nx
import sympy
from networkx.utils import UnionFind

from coxeter.graph import CoxeterGraph, relation_word
from models.errors import ConsistencyError, InvalidWordError, NotSmallTypeError
from models.schemas import RelationReport, SurfaceReport

logger = logging.getLogger(__name__)

ArtinWord = tuple[tuple[str, int], ...]


def _check_small(g: CoxeterGraph):
    if not g.is_small_type:
        bad = sorted(str(m) for m in g.labels - {3})
        raise NotSmallTypeError(f"Surface needs all bonds in {{2, 3}}, found {', '.join(bad)}")


def _resolve_order(g: CoxeterGraph, order: Optional[Sequence[str]]) -> tuple[str, ...]:
    if order is None:
        return g.vertices
    order = tuple(order)
    if sorted(order) != sorted(g.vertices):
        raise InvalidWordError(f"Order {list(order)} is not a permutation of {list(g.vertices)}")
    return order


def star_positions(
    g: CoxeterGraph, order: Optional[Sequence[str]], s: str
) -> tuple[tuple[str, ...], dict[str, int]]:
    """St_s sorted by the order, and pos(t:s) = i - j where t = t_i and s = t_j."""
    _check_small(g)
    order = _resolve_order(g, order)
    rank = {v: i for i, v in enumerate(order)}
    star = tuple(sorted((t for t in g.vertices if t == s or g.m(s, t) == 3), key=rank.__getitem__))
    j = star.index(s)
    return star, {t: i - j for i, t in enumerate(star)}


@dataclass(frozen=True)
class Gluing:
    """Square ``square_s`` of An_s identified with ``square_t`` of An_t."""

    s: str
    square_s: int
    t: str
    square_t: int


@dataclass(frozen=True)
class SurfaceModel:
    graph: CoxeterGraph
    order: tuple[str, ...]
    stars: dict = field(compare=False, hash=False)
    gluings: tuple[Gluing, ...] = ()
    vertices: int = 0
    edges: int = 0
    faces: int = 0
    boundary: int = 0
    components: int = 0

    @property
    def k(self) -> dict[str, int]:
        return {s: len(star) for s, star in self.stars.items()}

    @property
    def euler(self) -> int:
        return self.vertices - self.edges + self.faces

    @property
    def euler_formula(self) -> int:
        return -sum(1 for _, _, m in self.graph.edges() if m == 3)

    @property
    def genus(self) -> int:
        return (2 * self.components - self.euler - self.boundary) // 2

    @property
    def h1_rank(self) -> int:
        return self.components - self.euler


def build_surface(g: CoxeterGraph, order: Optional[Sequence[str]] = None) -> SurfaceModel:
    """
    Glue the annuli and compute V, E, F, boundary components and genus.

    Raises:
        NotSmallTypeError: a bond is not in {2, 3}
        ConsistencyError: traced Euler characteristic differs from -#bonds
    """
    _check_small(g)
    order = _resolve_order(g, order)
    rank = {v: i for i, v in enumerate(order)}
    stars = {}
    positions = {}
    for s in order:
        stars[s], positions[s] = star_positions(g, order, s)
    size = {s: 2 * len(stars[s]) for s in order}

    vertex_uf, edge_uf, face_uf = UnionFind(), UnionFind(), UnionFind()
    all_vertices, all_edges, all_faces = [], [], []
    for s in order:
        for c in range(size[s]):
            all_faces.append(("F", s, c))
            all_edges.append(("V", s, c))
            for y in (0, 1):
                all_vertices.append(("P", s, c, y))
                all_edges.append(("H", s, c, y))
    for cell in all_vertices:
        vertex_uf[cell]
    for cell in all_edges:
        edge_uf[cell]
    for cell in all_faces:
        face_uf[cell]

    def corner(s: str, c: int, x: int, y: int):
        return ("P", s, (c + x) % size[s], y)

    gluings = []
    for s, t, m in g.edges():
        if rank[s] > rank[t]:
            s, t = t, s
        a = (2 * positions[s][t]) % size[s]
        b = (2 * positions[t][s]) % size[t]
        gluings.append(Gluing(s, a, t, b))
        face_uf.union(("F", s, a), ("F", t, b))
        for x, y in ((0, 0), (1, 0), (1, 1), (0, 1)):
            vertex_uf.union(corner(s, a, x, y), corner(t, b, 1 - y, x))
        b_next = (b + 1) % size[t]
        edge_uf.union(("H", s, a, 0), ("V", t, b_next))
        edge_uf.union(("H", s, a, 1), ("V", t, b))
        edge_uf.union(("V", s, a), ("H", t, b, 0))
        edge_uf.union(("V", s, (a + 1) % size[s]), ("H", t, b, 1))

    # incidence of edge classes with face classes, one representative square per face
    incidence: Counter = Counter()
    representatives = {}
    for cell in all_faces:
        representatives.setdefault(face_uf[cell], cell)
    for _, s, c in representatives.values():
        for cell in (("H", s, c, 0), ("H", s, c, 1), ("V", s, c), ("V", s, (c + 1) % size[s])):
            incidence[edge_uf[cell]] += 1

    boundary_graph = nx.MultiGraph()
    for cell in all_edges:
        root = edge_uf[cell]
        if cell != root or incidence[root] != 1:
            continue
        if cell[0] == "H":
            _, s, c, y = cell
            ends = (("P", s, c, y), ("P", s, (c + 1) % size[s], y))
        else:
            _, s, c = cell
            ends = (("P", s, c, 0), ("P", s, c, 1))
        boundary_graph.add_edge(vertex_uf[ends[0]], vertex_uf[ends[1]])

    model = SurfaceModel(
        graph=g,
        order=order,
        stars=stars,
        gluings=tuple(gluings),
        vertices=len({vertex_uf[c] for c in all_vertices}),
        edges=len({edge_uf[c] for c in all_edges}),
        faces=len(representatives),
        boundary=nx.number_connected_components(boundary_graph),
        components=len(g.components()),
    )
    if model.euler != model.euler_formula:
        raise ConsistencyError(
            f"Traced Euler characteristic {model.euler} differs from {model.euler_formula}"
        )
    logger.debug(
        f"Surface: V={model.vertices} E={model.edges} F={model.faces} "
        f"b={model.boundary} g={model.genus}"
    )
    return model


def intersection_counts(model: SurfaceModel) -> dict[tuple[str, str], int]:
    """|a_s cap a_t|: each glued square carries exactly one crossing."""
    counts: Counter = Counter()
    for gluing in model.gluings:
        counts[(gluing.s, gluing.t)] += 1
        counts[(gluing.t, gluing.s)] += 1
    return dict(counts)


def intersection_matrix(g: CoxeterGraph, order: Optional[Sequence[str]] = None) -> sympy.Matrix:
    """Antisymmetric J in the basis ``order``: +1 at (s, t) for bonded s < t."""
    _check_small(g)
    order = _resolve_order(g, order)
    n = len(order)

    def entry(i: int, j: int) -> int:
        if i == j or g.m(order[i], order[j]) != 3:
            return 0
        return 1 if i < j else -1

    return sympy.Matrix(n, n, entry)


def transvection(
    g: CoxeterGraph, order: Optional[Sequence[str]], s: str, sign: int = 1
) -> sympy.Matrix:
    """Matrix of x -> x + sign J(x, e_s) e_s."""
    order = _resolve_order(g, order)
    J = intersection_matrix(g, order)
    i = order.index(s)
    T = sympy.eye(len(order))
    for a in range(len(order)):
        T[i, a] += sign * J[a, i]
    return T


def parse_artin_word(g: CoxeterGraph, text: str) -> ArtinWord:
    """
    Tokens are vertex labels or 1-based vertex indices; a leading ``-``
    marks an inverse generator.
    """
    letters = []
    for token in text.replace(",", " ").split():
        sign = -1 if token.startswith("-") else 1
        name = token.lstrip("-")
        if name in g.vertices:
            letters.append((name, sign))
            continue
        try:
            position = int(name)
        except ValueError:
            raise InvalidWordError(f"Unknown generator {token!r}") from None
        if not 1 <= position <= g.rank:
            raise InvalidWordError(f"Generator index {position} out of range 1..{g.rank}")
        letters.append((g.vertices[position - 1], sign))
    return tuple(letters)


def homological_rep(
    g: CoxeterGraph, order: Optional[Sequence[str]], w: ArtinWord
) -> sympy.Matrix:
    """Product of the transvections of the letters of w, left to right."""
    _check_small(g)
    order = _resolve_order(g, order)
    cache = {}
    result = sympy.eye(len(order))
    for s, sign in w:
        if (s, sign) not in cache:
            cache[(s, sign)] = transvection(g, order, s, sign)
        result = result * cache[(s, sign)]
    return result


def verify_artin_relations(g: CoxeterGraph, order: Optional[Sequence[str]] = None) -> RelationReport:
    """Check w(s,t:m) = w(t,s:m) on transvections for every pair of vertices."""
    _check_small(g)
    order = _resolve_order(g, order)
    failures = []
    checked = 0
    for i, s in enumerate(order):
        for t in order[i + 1:]:
            m = g.m(s, t)
            lhs = homological_rep(g, order, tuple((x, 1) for x in relation_word(s, t, m)))
            rhs = homological_rep(g, order, tuple((x, 1) for x in relation_word(t, s, m)))
            checked += 1
            if lhs != rhs:
                failures.append(f"{s},{t} (m={m})")
    if failures:
        logger.warning(f"Artin relations failing on transvections: {failures}")
    return RelationReport(checked=checked, failures=failures)


def surface_report(g: CoxeterGraph, order: Optional[Sequence[str]] = None) -> SurfaceReport:
    model = build_surface(g, order)
    J = intersection_matrix(g, model.order)
    return SurfaceReport(
        order=model.order,
        genus=model.genus,
        boundary=model.boundary,
        euler_traced=model.euler,
        euler_formula=model.euler_formula,
        h1_rank=model.h1_rank,
        form_rank=J.rank(),
    )
