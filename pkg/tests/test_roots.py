import itertools
import random
from collections import deque

import pytest

from config.settings import ScalarMode
from coxeter.graph import CoxeterGraph, coxeter_relations, dihedral, triangle, type_a, type_b, type_d, type_e, type_h
from coxeter.roots import CoxeterSystem
from coxeter.scalars import QuadraticNumber
from models.errors import InfiniteTypeError, RootNormError


def coeffs(roots):
    return {tuple(r.coeffs) for r in roots}


def test_canonical_form(a2, affine_a1):
    assert CoxeterSystem(a2).canonical_form()[0][1] == -0.5
    assert CoxeterSystem(affine_a1).canonical_form()[0][1] == -1
    assert CoxeterSystem(type_a(1).subgraph(["1"])).canonical_form() == [[1]]
    system = CoxeterSystem(triangle(2, 3, 3))
    assert system.canonical_form()[0][1] == 0


def test_apply_generator(a2, affine_a1):
    system = CoxeterSystem(a2)
    a1, a2_root = system.simple_roots()
    assert system.apply_generator("1", a1) == system.negate(a1)
    assert system.apply_generator("1", a2_root).coeffs == (1, 1)
    assert CoxeterSystem(affine_a1).act(("2",), CoxeterSystem(affine_a1).simple_root("1")).coeffs == (1, 2)
    # words act right to left
    assert system.act(("1", "2"), a1).coeffs == (0, 1)


def test_presentation_is_respected():
    for graph in (type_a(3), type_b(3), type_h(3), triangle(3, 3, 4), dihedral(float("inf"))):
        system = CoxeterSystem(graph)
        for lhs, rhs in coxeter_relations(graph):
            for alpha in system.simple_roots():
                assert system.act(lhs, alpha) == system.act(rhs, alpha)


def test_form_is_preserved(tri334):
    system = CoxeterSystem(tri334)
    basis = system.simple_roots()
    for s in tri334.vertices:
        for x, y in itertools.product(basis, repeat=2):
            lhs = system.twice_inner(system.apply_generator(s, x), system.apply_generator(s, y))
            assert lhs == system.twice_inner(x, y)


def test_positive_roots_examples(a2, affine_a1):
    assert coeffs(CoxeterSystem(a2).positive_roots()) == {(1, 0), (0, 1), (1, 1)}
    commuting = CoxeterSystem(CoxeterGraph(("1", "2")))
    assert coeffs(commuting.positive_roots()) == {(1, 0), (0, 1)}
    depth_two = CoxeterSystem(affine_a1).positive_roots(2)
    assert coeffs(depth_two) == {(1, 0), (0, 1), (1, 2), (2, 1)}
    assert coeffs(CoxeterSystem(affine_a1).positive_roots(3)) == {
        (1, 0), (0, 1), (1, 2), (2, 1), (3, 2), (2, 3)
    }
    with pytest.raises(InfiniteTypeError):
        CoxeterSystem(affine_a1).positive_roots()


@pytest.mark.parametrize("graph, count", [
    (type_a(3), 6),
    (type_b(2), 4),
    (type_b(3), 9),
    (type_d(4), 12),
    (type_e(6), 36),
    (type_h(3), 15),
])
def test_root_counts(graph, count):
    system = CoxeterSystem(graph)
    roots = system.positive_roots()
    assert len(roots) == count
    assert all(system.is_positive(r) for r in roots)
    assert all(system.root_depth(r) == r.depth for r in roots)


def test_bfs_roots_are_sign_coherent(tri334):
    system = CoxeterSystem(tri334)
    for root in system.positive_roots(8):
        assert system.is_positive(root)
        assert system.twice_inner(root, root) == 2


def test_inversion_set_examples(a2):
    system = CoxeterSystem(a2)
    assert coeffs(system.inversion_set(("1",))) == {(1, 0)}
    assert coeffs(system.inversion_set(("1", "2"))) == {(0, 1), (1, 1)}
    assert system.inversion_set(()) == frozenset()
    assert system.length(("1", "2", "1")) == 3
    assert system.length(("1", "1")) == 0
    assert system.descent_step((), "2") == 1
    assert system.descent_step(("1", "2", "1"), "1") == -1


def test_reflection_in_root(a2, tri334):
    system = CoxeterSystem(a2)
    a1, a2_root = system.simple_roots()
    beta = system.add(a1, a2_root)
    assert system.reflection_in_root(beta, a1) == system.negate(a2_root)
    assert system.reflection_in_root(beta, beta) == system.negate(beta)
    for x in system.simple_roots():
        assert system.reflection_in_root(a1, x) == system.apply_generator("1", x)
    with pytest.raises(RootNormError):
        system.reflection_in_root(system.scale(2, a1), a1)

    big = CoxeterSystem(tri334)
    for beta in big.positive_roots(5):
        for x in big.simple_roots():
            assert big.reflection_in_root(beta, big.reflection_in_root(beta, x)) == x


def _presentation_lengths(system):
    """Word length of every element by BFS over the Coxeter presentation quotient."""
    start = system.matrix(())
    lengths = {start: 0}
    queue = deque([start])
    while queue:
        columns = queue.popleft()
        for s in system.graph.vertices:
            image = system._mul_right(columns, s)
            if image not in lengths:
                lengths[image] = lengths[columns] + 1
                queue.append(image)
    return lengths


@pytest.mark.parametrize("graph, order", [(type_a(2), 6), (type_a(3), 24), (type_b(2), 8)])
def test_lengths_on_finite_groups(graph, order):
    system = CoxeterSystem(graph)
    elements = system.elements()
    assert len(elements) == order
    lengths = _presentation_lengths(system)
    for word in elements:
        expected = lengths[system.matrix(word)]
        assert len(word) == expected
        assert system.length(word) == expected
        assert system.length_by_descents(word) == expected


def test_lengths_on_triangle_group(tri334):
    system = CoxeterSystem(tri334)
    rng = random.Random(334)
    for _ in range(100):
        word = tuple(rng.choice(tri334.vertices) for _ in range(rng.randint(0, 12)))
        reduced = system.reduced_word(word)
        assert system.length(word) == system.length_by_descents(word) == len(reduced)
        assert system.is_identity(word + tuple(reversed(reduced)))
    for word in itertools.product(tri334.vertices, repeat=4):
        assert system.length(word) == system.length_by_descents(word)


def test_support(tri334):
    system = CoxeterSystem(tri334)
    assert system.support(("1", "2", "2", "3")) == {"1", "3"}
    assert system.support(("1", "2", "3")) == {"1", "2", "3"}


def test_scalar_modes(tri334, a2):
    quadratic = CoxeterSystem(tri334)
    assert quadratic.field.mode == ScalarMode.QUADRATIC
    assert quadratic.apply_generator("3", quadratic.simple_root("1")).coeffs == (1, 0, QuadraticNumber.sqrt(2))
    floating = CoxeterSystem(tri334, ScalarMode.FLOAT)
    assert len(floating.positive_roots(6)) == len(quadratic.positive_roots(6))
    assert CoxeterSystem(a2).field.mode == ScalarMode.RATIONAL
    assert CoxeterSystem(triangle(2, 3, 7)).field.mode == ScalarMode.FLOAT


def test_float_roots_match_exact_roots(tri334):
    quadratic = CoxeterSystem(tri334)
    floating = CoxeterSystem(tri334, ScalarMode.FLOAT)
    exact = {tuple(round(float(c), 6) for c in r.coeffs) for r in quadratic.positive_roots(6)}
    approx = floating.positive_roots(6)
    assert {tuple(round(c, 6) + 0.0 for c in r.coeffs) for r in approx} == exact
    assert len(approx) == len(exact) == 35
    assert all(c >= -floating.field.tolerance for r in approx for c in r.coeffs)
    alpha3 = floating.simple_root("3")
    assert alpha3 in set(approx)
    # coordinates keep full precision; only the key is rounded
    beta = floating.act(("1", "2", "1", "3"), floating.simple_root("2"))
    assert beta.key == tuple(round(c, 6) + 0.0 for c in beta.coeffs)
