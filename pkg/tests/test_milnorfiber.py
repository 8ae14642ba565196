from __future__ import annotations

from fractions import Fraction

import pytest

from arrangetop.arrangement import CATALOG, build_arrangement, builtin
from arrangetop.braid import BraidWord
from arrangetop.cyclo import rank
from arrangetop.milnorfiber import (
    Character,
    GroupPresentation,
    braid_action,
    cover_b1,
    fox_jacobian,
    local_system_h1,
    milnor_spectrum,
    presentation_for,
    spectrum_crosscheck,
)

from conftest import cached_spectrum


def test_artin_action_preserves_boundary():
    boundary = (3, 2, 1)
    for letter in (1, -1, 2, -2):
        assert braid_action(BraidWord(3, (letter,)), boundary) == boundary


def test_node_presentation_is_commutator():
    p = presentation_for(builtin("triangle"), 3)
    assert p.n == 2 and p.s == 1
    assert sorted(abs(a) for a in p.relators[0]) == [1, 1, 2, 2]


def test_commutator_fox_row():
    p = GroupPresentation(2, ((1, 2, -1, -2),))
    J = fox_jacobian(p, Character(3, 1))
    lam = Character(3, 1).value
    assert J.entries[0] == (1 - lam, lam - 1)
    assert rank(fox_jacobian(p, Character(3, 0))) == 0


def test_triple_point_presentation():
    A = build_arrangement([(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)])
    p = presentation_for(A, 4)
    assert (p.n, p.s) == (3, 2)
    assert all(sum(1 if a > 0 else -1 for a in r if abs(a) == j) == 0 for r in p.relators for j in (1, 2, 3))


def test_ceva_presentation():
    p = presentation_for(builtin("ceva3"))
    assert (p.n, p.s) == (8, 16)
    assert rank(fox_jacobian(p, Character(9, 3))) == 5


def test_ceva_local_systems():
    p = presentation_for(builtin("ceva3"))
    assert local_system_h1(p, Character(9, 0)) == 8
    assert local_system_h1(p, Character(9, 1)) == 0
    assert local_system_h1(p, Character(9, 3)) == 2


def test_ceva_spectrum():
    s = cached_spectrum("ceva3")
    assert s.dims == {0: 8, 1: 0, 2: 0, 3: 2, 4: 0, 5: 0, 6: 2, 7: 0, 8: 0}
    assert s.b1F == 12 and s.monodromy_order == 9


def test_small_spectra():
    assert milnor_spectrum(builtin("triangle")).dims == {0: 2, 1: 0, 2: 0}
    assert milnor_spectrum(builtin("line")).dims == {0: 0}
    assert milnor_spectrum(builtin("central(4)")).dims == {0: 3, 1: 2, 2: 2, 3: 2}


@pytest.mark.parametrize("name", CATALOG)
def test_spectrum_symmetry(name):
    s = cached_spectrum(name)
    d = s.d
    assert s.dims[0] == d - 1
    for e in range(d):
        assert s.dims[e] == s.dims[(-e) % d]


@pytest.mark.parametrize("name", [n for n in CATALOG if builtin(n).d <= 6])
def test_crosscheck_small(name):
    assert spectrum_crosscheck(builtin(name))


def test_crosscheck_two_lines():
    A = build_arrangement([(1, 0, 0), (0, 1, 0)])
    assert spectrum_crosscheck(A, 2)
    assert milnor_spectrum(A, 2).dims == {0: 1, 1: 0}


def test_ceva_cover_oracle():
    p = presentation_for(builtin("ceva3"))
    assert cover_b1(p, 9) == 12


def test_ceva_other_basepoint():
    s = milnor_spectrum(builtin("ceva3"), 4, direction_skip=1, basepoint_shift=Fraction(3, 2))
    assert s.dims == cached_spectrum("ceva3").dims


def test_threads_do_not_change_result(monkeypatch):
    monkeypatch.setenv("ARRANGETOP_THREADS", "2")
    assert milnor_spectrum(builtin("central(4)")).dims == {0: 3, 1: 2, 2: 2, 3: 2}
