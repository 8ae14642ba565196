from __future__ import annotations

from fractions import Fraction

import pytest

from arrangetop.arrangement import CATALOG, build_arrangement, builtin, intersection_lattice
from arrangetop.braid import BraidWord, braid_monodromy, decone, total_exponent_sum
from arrangetop.errors import ValidationError

from conftest import cached_monodromy


def affine_sum(name, infinity=1):
    A = builtin(name)
    if A.d == 1:
        return 0
    L = intersection_lattice(A)
    return sum(p.multiplicity * (p.multiplicity - 1) for p in L.points if infinity not in p.incident)


def test_decone_ceva(ceva):
    aa = decone(ceva, 1)
    assert aa.n == 8
    assert len(aa.parallel_classes) == 4
    assert all(len(c) == 2 for c in aa.parallel_classes)
    assert len(aa.points) == 8


def test_decone_small():
    assert decone(builtin("triangle"), 3).n == 2
    aa = decone(build_arrangement([(1, 0, 0), (0, 1, 0)]), 2)
    assert aa.n == 1 and aa.points == ()
    with pytest.raises(ValidationError):
        decone(builtin("triangle"), 4)


def test_node_gives_full_twist():
    md = braid_monodromy(decone(builtin("triangle"), 3))
    assert len(md.events) == 1
    assert md.events[0].local.letters == (1, 1)


def test_triple_point_full_twist():
    A = build_arrangement([(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)])
    md = braid_monodromy(decone(A, 4))
    (ev,) = md.events
    assert ev.multiplicity == 3
    assert ev.braid.exponent_sum() == 6
    assert ev.braid.is_pure()


def test_ceva_monodromy():
    md = cached_monodromy("ceva3")
    assert len(md.events) == 8
    for ev in md.events:
        assert ev.multiplicity == 3
        assert ev.braid.is_pure()
        assert ev.braid.exponent_sum() == 6
    assert total_exponent_sum(md) == 48


@pytest.mark.parametrize("name", CATALOG)
def test_catalog_braids_pure_with_expected_exponent_sum(name):
    if builtin(name).d == 1:
        return
    md = cached_monodromy(name)
    assert all(ev.braid.is_pure() for ev in md.events)
    assert total_exponent_sum(md) == affine_sum(name)


def test_determinism():
    A = builtin("generic(4)")
    assert braid_monodromy(decone(A, 2)) == braid_monodromy(decone(A, 2))


def test_other_basepoint_keeps_invariants():
    md = braid_monodromy(decone(builtin("ceva3"), 1), direction_skip=2, basepoint_shift=Fraction(7, 3))
    assert total_exponent_sum(md) == 48
    assert all(ev.braid.is_pure() for ev in md.events)


def test_braid_word_invariants():
    w = BraidWord(3, (1, 2, -1))
    assert w.exponent_sum() == 1
    assert (w * w.inverse()).exponent_sum() == 0
    assert BraidWord(3, (1, 2, 1, 2, 1, 2)).is_pure()
    assert not BraidWord(3, (1,)).is_pure()
    with pytest.raises(ValueError):
        BraidWord(2, (2,))
