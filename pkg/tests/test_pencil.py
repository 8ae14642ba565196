from __future__ import annotations

import pytest

from arrangetop.arrangement import build_arrangement, builtin
from arrangetop.cyclo import CycNumber, MultiPoly
from arrangetop.errors import (
    NonIsolatedSingularity,
    NotAPencil,
    PropositionHypothesesNotMet,
    ValidationError,
)
from arrangetop.pencil import (
    BINARY,
    LiftedCurve,
    base_locus,
    curve_mhs,
    lift_pencil,
    milnor_algebra,
    pencil_from_net,
    pullback_E,
)
from arrangetop.resonance import NetPartition

u = MultiPoly.var(BINARY, "u")
v = MultiPoly.var(BINARY, "v")


def ceva_pencil(ceva):
    return pencil_from_net(ceva, NetPartition(((1, 2, 3), (7, 8, 9), (4, 5, 6))))


def test_ceva_pencil_coordinates(ceva):
    P = ceva_pencil(ceva)
    assert [str(q) for q in P.Q] == ["x^3 - y^3", "y^3 - z^3", "x^3 - z^3"]
    assert P.coords == ((1, 1),)
    assert P.punctures()[2] == (-1, 1)


def test_ceva_base_locus(ceva):
    report = base_locus(ceva_pencil(ceva))
    assert len(report.points) == 9
    assert report.simple_point_exists
    assert report.bezout_total() == 9


def test_ceva_lift_is_certified(ceva):
    L = lift_pencil(ceva_pencil(ceva))
    assert L.certified
    assert L.g == u * v * (u + v)
    assert L.equation() == "u*v*(u + v) = 1"


def test_milnor_algebras():
    alg = milnor_algebra(u * v * (u + v))
    assert alg.graded_dims == (1, 2, 1)
    assert alg.generators[0] == 2 * u * v + v * v
    assert alg.generators[1] == u * u + 2 * u * v
    assert milnor_algebra(u**3 + v**3).graded_dims == (1, 2, 1)
    assert milnor_algebra(u * v).graded_dims == (1,)
    with pytest.raises(NonIsolatedSingularity):
        milnor_algebra(u * u * v)
    with pytest.raises(NonIsolatedSingularity):
        milnor_algebra(u * v * v)


def test_curve_invariants():
    c3 = curve_mhs(u * v * (u + v))
    assert (c3.chi, c3.genus, c3.dims) == (-3, 1, (2, 1, 1))
    c4 = curve_mhs(u * v * (u + v) * (u - v))
    assert (c4.chi, c4.genus, c4.dims) == (-8, 3, (3, 3, 3))
    assert c4.extrapolated and not c3.extrapolated
    c2 = curve_mhs(u * v)
    assert c2.chi == 0 and not c2.general_type


def test_pullback_requires_certified_lift(ceva):
    L = lift_pencil(ceva_pencil(ceva))
    assert pullback_E(curve_mhs(L), L).dims == (2, 1, 1)
    fake = LiftedCurve(L.g, L.pencil, False)
    with pytest.raises(PropositionHypothesesNotMet):
        pullback_E(curve_mhs(L), fake)


def test_not_a_pencil():
    with pytest.raises(NotAPencil):
        pencil_from_net(builtin("triangle"), NetPartition(((1,), (2,), (3,))))
    with pytest.raises(NotAPencil):
        pencil_from_net(builtin("central(4)"), NetPartition(((1,), (2,), (3, 4))))


def test_exponent_two_fiber_is_refused():
    A = builtin("central(4)")
    P = pencil_from_net(A, NetPartition(((1,), (2,), (3, 4))), {1: 2, 2: 2})
    assert P.coords == ((1, -1),)
    assert not P.reduced
    with pytest.raises(PropositionHypothesesNotMet):
        lift_pencil(P)


def test_no_simple_base_point():
    A = build_arrangement([(1, 0, 0), (0, 1, 0), (1, -1, 0), (1, 1, 0), (1, 2, 0), (2, -1, 0)])
    P = pencil_from_net(A, NetPartition(((1, 2), (3, 4), (5, 6))))
    assert P.coords[0] == (CycNumber.rational(3) / 2, 1)
    assert not base_locus(P).simple_point_exists
    with pytest.raises(PropositionHypothesesNotMet):
        lift_pencil(P)


def test_partial_cover_is_refused(ceva):
    A = builtin("central(4)")
    P = pencil_from_net(A, NetPartition(((1,), (2,), (3,))))
    with pytest.raises(PropositionHypothesesNotMet):
        lift_pencil(P)


def test_central_pencil_lift():
    A = builtin("central(4)")
    L = lift_pencil(pencil_from_net(A, NetPartition(((1,), (2,), (3,), (4,)))))
    assert curve_mhs(L).dims == (3, 3, 3)


def test_bad_blocks():
    with pytest.raises(ValidationError):
        pencil_from_net(builtin("triangle"), NetPartition(((1,), (1,), (3,))))
    with pytest.raises(ValidationError):
        pencil_from_net(builtin("triangle"), NetPartition(((1,), (2,), (7,))))
