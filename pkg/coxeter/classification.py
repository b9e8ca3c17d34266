"""
Finite / affine / indefinite classification of Coxeter graphs.

Exact modes decide definiteness from principal minors of the canonical form
computed with sympy; float mode uses numpy eigenvalues and cross-checks the
answer against the catalog of connected finite and affine Coxeter graphs.
"""

import itertools
import logging
from enum import Enum
from fractions import Fraction
from typing import Optional

import networkx as nx
import numpy as np
import sympy

from config.settings import ScalarMode
from coxeter.graph import (
    INF,
    CoxeterGraph,
    dihedral,
    type_a,
    type_b,
    type_d,
    type_e,
    type_f4,
    type_h,
)
from coxeter.scalars import FloatField, QuadraticNumber, ScalarField, field_for
from models.errors import ClassificationMismatch

logger = logging.getLogger(__name__)


class CoxeterType(str, Enum):
    FINITE = "Finite"
    AFFINE = "Affine"
    INDEFINITE = "Indefinite"


_SEVERITY = {CoxeterType.FINITE: 0, CoxeterType.AFFINE: 1, CoxeterType.INDEFINITE: 2}


def _path(n: int, labels: list) -> CoxeterGraph:
    """Path 1 - 2 - ... - n with the given bond labels."""
    v = tuple(str(i) for i in range(1, n + 1))
    return CoxeterGraph(v, {(v[i], v[i + 1]): labels[i] for i in range(n - 1)})


def _star(arms: list[int]) -> CoxeterGraph:
    """A center vertex "0" with simply laced arms of the given lengths."""
    vertices = ["0"]
    bonds = {}
    for a, length in enumerate(arms):
        previous = "0"
        for step in range(length):
            name = f"{a}.{step}"
            vertices.append(name)
            bonds[(previous, name)] = 3
            previous = name
    return CoxeterGraph(tuple(vertices), bonds)


def _catalog(rank: int, labels: set) -> list[tuple[str, CoxeterType, CoxeterGraph]]:
    """Connected finite and affine Coxeter graphs on ``rank`` vertices."""
    entries: list[tuple[str, CoxeterType, CoxeterGraph]] = []
    finite = CoxeterType.FINITE
    affine = CoxeterType.AFFINE
    n = rank
    if n == 1:
        entries.append(("A1", finite, type_a(1)))
    if n == 2:
        for m in labels or {3}:
            if m == INF:
                entries.append(("A~1", affine, dihedral(INF)))
            else:
                entries.append((f"I2({int(m)})", finite, dihedral(m)))
    if n >= 2:
        entries.append((f"A{n}", finite, type_a(n)))
        entries.append((f"B{n}", finite, type_b(n)))
    if n >= 4:
        entries.append((f"D{n}", finite, type_d(n)))
    if n in (6, 7, 8):
        entries.append((f"E{n}", finite, type_e(n)))
    if n == 4:
        entries.append(("F4", finite, type_f4()))
    if n in (3, 4):
        entries.append((f"H{n}", finite, type_h(n)))
    # affine graphs have rank l + 1
    l = n - 1
    if l >= 2:
        v = tuple(str(i) for i in range(1, n + 1))
        cycle = {(v[i], v[(i + 1) % n]): 3 for i in range(n)}
        entries.append((f"A~{l}", affine, CoxeterGraph(v, cycle)))
        entries.append((f"C~{l}", affine, _path(n, [4] + [3] * (n - 3) + [4])))
    if l >= 3:
        d = type_d(n)
        bonds = dict(d.bonds)
        bonds[("1", "2")] = 4
        entries.append((f"B~{l}", affine, CoxeterGraph(d.vertices, bonds)))
    if l >= 4:
        d = type_d(n - 1)
        v = d.vertices + (str(n),)
        bonds = dict(d.bonds)
        bonds[("2", str(n))] = 3
        entries.append((f"D~{l}", affine, CoxeterGraph(v, bonds)))
    if n == 7:
        entries.append(("E~6", affine, _star([2, 2, 2])))
    if n == 8:
        entries.append(("E~7", affine, _star([3, 3, 1])))
    if n == 9:
        entries.append(("E~8", affine, _star([5, 2, 1])))
    if n == 5:
        entries.append(("F~4", affine, _path(5, [3, 3, 4, 3])))
    if n == 3:
        entries.append(("G~2", affine, _path(3, [3, 6])))
    return entries


def catalog_type(component: CoxeterGraph) -> Optional[tuple[str, CoxeterType]]:
    """
    Name and class of a connected graph if it is a finite or affine Coxeter
    graph, else None.
    """
    graph = component.to_networkx()
    match = nx.algorithms.isomorphism.categorical_edge_match("m", 2)
    for name, kind, candidate in _catalog(component.rank, component.labels):
        if len(candidate.bonds) != len(component.bonds):
            continue
        if nx.is_isomorphic(graph, candidate.to_networkx(), edge_match=match):
            return name, kind
    return None


def _exact_sign(value) -> int:
    """Sign of an expanded sympy number living in Q(sqrt2, sqrt3, sqrt5)."""
    value = sympy.expand(value)
    if value.is_Rational:
        return int(sympy.sign(value))
    terms = {}
    for term, coefficient in value.as_coefficients_dict().items():
        radicand = int(term ** 2)
        terms[radicand] = terms.get(radicand, 0) + sympy.Rational(coefficient)
    number = QuadraticNumber({
        r: Fraction(int(c.p), int(c.q)) for r, c in terms.items()
    })
    return number.sign()


def canonical_matrix(component: CoxeterGraph, field: ScalarField) -> sympy.Matrix:
    """Exact canonical form B as a sympy matrix."""
    n = component.rank
    half = sympy.Rational(1, 2)
    entries = [
        [
            sympy.Integer(1) if i == j
            else -half * field.to_sympy(field.weight(component.m(s, t)))
            for j, t in enumerate(component.vertices)
        ]
        for i, s in enumerate(component.vertices)
    ]
    return sympy.Matrix(n, n, lambda i, j: entries[i][j])


def _classify_exact(component: CoxeterGraph, field: ScalarField) -> CoxeterType:
    b = canonical_matrix(component, field)
    n = component.rank
    leading = [_exact_sign(b[:k, :k].det(method="berkowitz")) for k in range(1, n + 1)]
    if all(sign > 0 for sign in leading):
        return CoxeterType.FINITE
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            minor = b.extract(list(subset), list(subset)).det(method="berkowitz")
            if _exact_sign(minor) < 0:
                return CoxeterType.INDEFINITE
    return CoxeterType.AFFINE


def _classify_float(component: CoxeterGraph, field: FloatField) -> CoxeterType:
    n = component.rank
    b = np.array([
        [1.0 if s == t else -0.5 * field.weight(component.m(s, t)) for t in component.vertices]
        for s in component.vertices
    ])
    smallest = float(np.linalg.eigvalsh(b).min())
    if smallest > field.tolerance:
        kind = CoxeterType.FINITE
    elif smallest >= -field.tolerance:
        kind = CoxeterType.AFFINE
    else:
        kind = CoxeterType.INDEFINITE

    catalogued = catalog_type(component)
    expected = catalogued[1] if catalogued else CoxeterType.INDEFINITE
    if expected != kind:
        raise ClassificationMismatch(
            f"Eigenvalues give {kind.value} (min {smallest:.3g}, rank {n}) but the catalog says "
            f"{catalogued[0] if catalogued else 'not finite/affine'}"
        )
    return kind


def classify_component(component: CoxeterGraph, mode: Optional[ScalarMode] = None) -> CoxeterType:
    field = field_for(component.labels, mode)
    if isinstance(field, FloatField):
        return _classify_float(component, field)
    return _classify_exact(component, field)


def classify_type(g: CoxeterGraph, mode: Optional[ScalarMode] = None) -> CoxeterType:
    """Componentwise classification; the worst class wins."""
    kinds = [classify_component(c, mode) for c in g.components()]
    if not kinds:
        return CoxeterType.FINITE
    kind = max(kinds, key=_SEVERITY.__getitem__)
    logger.debug(f"classify_type: components {[k.value for k in kinds]} -> {kind.value}")
    return kind
