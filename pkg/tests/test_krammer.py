import pytest

from coxeter import krammer
from coxeter.graph import CoxeterGraph, type_a, type_b
from coxeter.krammer import closure, essential_certificate, odd_roots, orbit_classify, separates
from coxeter.roots import CoxeterSystem
from models.errors import UnsupportedGraphError

COXETER_ELEMENT = ("1", "2", "3")


def test_separates(affine_a1, a2):
    system = CoxeterSystem(a2)
    alpha = system.simple_root("1")
    assert separates(system, alpha, (), ("1",))
    assert not separates(system, alpha, ("2",), ("2",))
    affine = CoxeterSystem(affine_a1)
    assert separates(affine, affine.simple_root("1"), (), ("2", "1"))


def test_orbits_in_finite_type_are_periodic(a2):
    system = CoxeterSystem(a2)
    a1, a2_root = system.simple_roots()
    assert orbit_classify(system, ("1",), a1).period == 2
    v = orbit_classify(system, ("1", "2"), a1)
    assert (v.kind, v.period) == ("periodic", 3)
    for alpha in CoxeterSystem(type_b(3)).positive_roots():
        assert orbit_classify(CoxeterSystem(type_b(3)), ("1", "2", "3"), alpha).kind == "periodic"


def test_identity_orbit_has_period_one(tri334):
    system = CoxeterSystem(tri334)
    for alpha in system.positive_roots(3):
        v = orbit_classify(system, (), alpha)
        assert (v.kind, v.period) == ("periodic", 1)


def test_affine_orbit_parity(affine_a1):
    system = CoxeterSystem(affine_a1)
    v = orbit_classify(system, ("1", "2"), system.simple_root("1"))
    assert v.kind == "odd"
    assert v.events == (-1,)
    assert v.is_decisive
    v = orbit_classify(system, ("1", "2"), system.simple_root("2"))
    assert (v.kind, v.events) == ("odd", (0,))
    # alpha_1 + 2 alpha_2 lies in the window and changes sign once
    v = orbit_classify(system, ("1", "2"), system.vector((1, 2)))
    assert v.kind == "odd"


def test_unknown_when_the_bound_is_too_small(affine_a1):
    system = CoxeterSystem(affine_a1)
    v = orbit_classify(system, ("1", "2"), system.simple_root("1"), m_max=2)
    assert v.kind == "unknown"
    assert not v.is_decisive


def test_odd_roots(affine_a1, a2, tri334):
    scan = odd_roots(CoxeterSystem(affine_a1), ("1", "2"), depth=3)
    odd = {tuple(r.coeffs) for r in scan.odd}
    assert {(1, 0), (0, 1)} <= odd
    assert scan.unknown == 0
    assert odd_roots(CoxeterSystem(a2), ("1", "2"), depth=3).odd == ()
    assert odd_roots(CoxeterSystem(tri334), ("2",), depth=4).odd == ()


def test_closure_reaches_simple_roots(a2):
    system = CoxeterSystem(a2)
    reached = closure(system, [system.simple_root("1"), system.add(*system.simple_roots())])
    assert set(system.simple_roots()) <= reached
    only_first = closure(system, [system.simple_root("1")])
    assert only_first == {system.simple_root("1")}


def test_coxeter_element_is_certified(tri334):
    verdict = essential_certificate(tri334, COXETER_ELEMENT, depth=8)
    assert verdict.kind == "certified_essential"
    assert verdict.reached == ("1", "2", "3")
    assert verdict.witnesses
    system = CoxeterSystem(tri334)
    for root in verdict.witnesses:
        assert orbit_classify(system, COXETER_ELEMENT, root).kind == "odd"


def test_square_of_coxeter_element_is_certified(tri334):
    verdict = essential_certificate(tri334, COXETER_ELEMENT * 2, depth=8)
    assert verdict.kind == "certified_essential"


def test_not_essential(tri334):
    verdict = essential_certificate(tri334, ("1",))
    assert (verdict.kind, verdict.reason) == ("not_essential", "proper-support")
    assert verdict.support == ("1",)
    reflection = ("3", "2", "1", "2", "3")
    verdict = essential_certificate(tri334, reflection, depth=4)
    assert (verdict.kind, verdict.reason) == ("not_essential", "finite-order")
    assert verdict.support == ("1", "2", "3")


def test_unsupported_graphs(a2, affine_a1):
    with pytest.raises(UnsupportedGraphError):
        essential_certificate(a2, ("1", "2"))
    with pytest.raises(UnsupportedGraphError):
        essential_certificate(affine_a1, ("1", "2"))
    split = CoxeterGraph(("1", "2", "3"), {("1", "2"): float("inf")})
    with pytest.raises(UnsupportedGraphError):
        essential_certificate(split, ("1", "2", "3"))


def test_scan_keeps_every_verdict(affine_a1):
    system = CoxeterSystem(affine_a1)
    scan = krammer.odd_roots(system, ("1", "2"), depth=2)
    assert len(scan.verdicts) == 4
    assert all(v.is_decisive for v in scan.verdicts.values())


def power(w, e):
    """Word for w^e; negative exponents use the reversed word."""
    return tuple(w) * e if e >= 0 else tuple(reversed(w)) * -e


@pytest.mark.parametrize("w", [COXETER_ELEMENT, COXETER_ELEMENT * 2, ("1", "2", "1", "3")])
def test_events_lie_in_the_window(tri334, w):
    system = CoxeterSystem(tri334)
    window = system.inversion_set(w)
    decided = 0
    for alpha in system.positive_roots(4):
        v = orbit_classify(system, w, alpha, m_max=64)
        decided += v.is_decisive
        for m in v.events:
            assert separates(system, alpha, power(w, m), power(w, m + 1))
            image = system.act(power(w, m), alpha)
            assert image in window or system.negate(image) in window
    assert decided > 0


def test_zero_bounds_are_not_replaced_by_defaults(affine_a1):
    system = CoxeterSystem(affine_a1)
    v = orbit_classify(system, ("1", "2"), system.simple_root("1"), m_max=0)
    assert (v.kind, v.events) == ("unknown", ())
    assert odd_roots(system, ("1", "2"), depth=0).verdicts == {}
    assert closure(system, system.simple_roots(), limit=0) == set()


@pytest.mark.slow
def test_default_bounds_certify_coxeter_element_and_square(tri334):
    system = CoxeterSystem(tri334)
    for w in (COXETER_ELEMENT, COXETER_ELEMENT * 2):
        verdict = essential_certificate(tri334, w, depth=20, m_max=512, system=system)
        assert verdict.kind == "certified_essential"
        assert verdict.reached == ("1", "2", "3")
        assert verdict.bounds["depth"] == 20
        assert verdict.bounds["m_max"] == 512
