import pytest

from config.settings import ScalarMode
from coxeter.classification import CoxeterType, catalog_type, classify_component, classify_type
from coxeter.graph import (
    CoxeterGraph,
    dihedral,
    triangle,
    type_a,
    type_b,
    type_d,
    type_e,
    type_f4,
    type_h,
)

INF = float("inf")


@pytest.mark.parametrize("graph, expected", [
    (type_a(2), CoxeterType.FINITE),
    (type_a(5), CoxeterType.FINITE),
    (type_b(4), CoxeterType.FINITE),
    (type_d(5), CoxeterType.FINITE),
    (type_e(8), CoxeterType.FINITE),
    (type_f4(), CoxeterType.FINITE),
    (type_h(4), CoxeterType.FINITE),
    (dihedral(6), CoxeterType.FINITE),
    (dihedral(INF), CoxeterType.AFFINE),
    (triangle(3, 3, 3), CoxeterType.AFFINE),
    (triangle(2, 4, 4), CoxeterType.AFFINE),
    (triangle(2, 3, 6), CoxeterType.AFFINE),
    (triangle(3, 3, 4), CoxeterType.INDEFINITE),
    (triangle(2, 3, 7), CoxeterType.INDEFINITE),
    (triangle(INF, INF, INF), CoxeterType.INDEFINITE),
])
def test_classify_type(graph, expected):
    assert classify_type(graph) == expected


def test_components_take_the_worst_class():
    g = CoxeterGraph(("1", "2", "3", "4"), {("1", "2"): 3, ("3", "4"): INF})
    assert classify_type(g) == CoxeterType.AFFINE
    assert classify_type(CoxeterGraph(("1", "2"))) == CoxeterType.FINITE


def test_float_mode_agrees_with_exact_mode():
    for graph in (type_a(4), type_b(3), triangle(3, 3, 3), triangle(3, 3, 4), type_e(6)):
        exact = classify_type(graph)
        assert classify_type(graph, ScalarMode.FLOAT) == exact


def test_catalog_lookup():
    assert catalog_type(type_e(7)) == ("E7", CoxeterType.FINITE)
    assert catalog_type(dihedral(INF)) == ("A~1", CoxeterType.AFFINE)
    assert catalog_type(triangle(3, 3, 4)) is None
    # isomorphic relabelling of B3
    relabelled = CoxeterGraph(("x", "y", "z"), {("x", "y"): 4, ("y", "z"): 3})
    assert catalog_type(relabelled) == ("B3", CoxeterType.FINITE)


def test_classify_component_modes():
    assert classify_component(type_h(3), ScalarMode.QUADRATIC) == CoxeterType.FINITE
    assert classify_component(type_h(3), ScalarMode.FLOAT) == CoxeterType.FINITE
