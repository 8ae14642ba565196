from __future__ import annotations

import pytest

from arrangetop.arrangement import builtin
from arrangetop.errors import InconsistentSpectrum, NotGeneralType
from arrangetop.formality import (
    INCONCLUSIVE,
    NOT_1_FORMAL,
    FiberMHS,
    TangentConeComponent,
    fiber_mhs,
    formality_report,
    obstruction_test,
)
from arrangetop.milnorfiber import Spectrum

from conftest import cached_arrangement, cached_spectrum

CEVA_FIBER = FiberMHS(8, 4, 2, 9, (3, 6))


def test_fiber_mhs_ceva():
    fm = fiber_mhs(cached_spectrum("ceva3"))
    assert (fm.h11F, fm.w1F, fm.w1_h10) == (8, 4, 2)
    assert fm.single_conjugate_pair()


def test_fiber_mhs_triangle():
    fm = fiber_mhs(cached_spectrum("triangle"))
    assert (fm.h11F, fm.w1F) == (2, 0)


def test_odd_weight_one_part():
    with pytest.raises(InconsistentSpectrum):
        fiber_mhs(Spectrum(2, {0: 1, 1: 1}, 2))


def test_obstruction_ceva_dimensions():
    rep = obstruction_test(TangentConeComponent((2, 1, 1)), CEVA_FIBER)
    assert rep.verdict == NOT_1_FORMAL
    assert rep.witness["inequality"] == "2 > 1"
    assert all(cite for _rule, cite in rep.assumptions)


def test_obstruction_without_weight_one():
    rep = obstruction_test(TangentConeComponent((2, 1, 1)), FiberMHS(2, 0, 0, 3, ()))
    assert rep.verdict == INCONCLUSIVE


def test_obstruction_boundary_case():
    rep = obstruction_test(TangentConeComponent((3, 3, 3)), FiberMHS(3, 6, 3, 4, (1, 3)))
    assert rep.verdict == INCONCLUSIVE
    assert rep.witness["inequality"] == "3 <= 3"


def test_not_general_type():
    with pytest.raises(NotGeneralType):
        obstruction_test(TangentConeComponent((1, 0, 0)), CEVA_FIBER)


def test_reports():
    rep = formality_report(cached_arrangement("ceva3"), cached_spectrum("ceva3"))
    assert rep.verdict == NOT_1_FORMAL
    assert rep.E.dims == (2, 1, 1)
    assert rep.fiber.w1F == 4
    assert len(rep.candidates) == 4
    assert formality_report(builtin("triangle")).verdict == INCONCLUSIVE
    assert formality_report(builtin("generic(5)")).verdict == INCONCLUSIVE
    central = formality_report(builtin("central(4)"))
    assert central.verdict == INCONCLUSIVE and central.E.dims == (3, 3, 3)


def test_reordered_ceva_still_obstructed():
    A = cached_arrangement("ceva3").reordered([4, 0, 7, 2, 8, 1, 5, 3, 6])
    assert formality_report(A, cached_spectrum("ceva3")).verdict == NOT_1_FORMAL
