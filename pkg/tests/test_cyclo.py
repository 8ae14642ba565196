from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrangetop.cyclo import (
    CycMatrix,
    CycNumber,
    MultiPoly,
    compare_real,
    cyclotomic_poly,
    euler_phi,
    kernel,
    parse_polynomial,
    parse_scalar,
    rank,
    render,
    sign_real,
    solve,
)
from arrangetop.cyclo.sign import positive_rational_below, rational_bounds
from arrangetop.errors import DivisionByZero, NotReal, ParseError

CONDUCTORS = [1, 3, 4, 9, 12]
z3 = CycNumber.zeta(3)
z5 = CycNumber.zeta(5)


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert [euler_phi(n) for n in (1, 3, 4, 9, 12)] == [1, 2, 2, 6, 4]


def test_inverse_of_one_plus_zeta3():
    assert (1 + z3).inv() == -z3
    assert (1 + z3) * (-z3) == 1


def test_conjugation_and_real_sign():
    assert z5.conj() == CycNumber.zeta(5, 4)
    assert sign_real(z5 + z5.conj()) == 1
    assert sign_real(CycNumber.zeta(5, 2) + CycNumber.zeta(5, 3)) == -1
    assert sign_real(z3 + z3.conj() + 1) == 0


def test_sign_rejects_non_real():
    with pytest.raises(NotReal):
        sign_real(z3)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        CycNumber.zero(3).inv()
    with pytest.raises(ZeroDivisionError):
        z3 / 0


def test_equality_across_conductors():
    assert CycNumber.zeta(3) == CycNumber.zeta(12, 4)
    assert CycNumber.zeta(4) ** 2 == -1
    assert hash(CycNumber.zeta(3)) == hash(CycNumber.zeta(9, 3))
    assert (CycNumber.zeta(3) + CycNumber.zeta(4)).conductor == 12


def test_real_and_imaginary_parts():
    a = z3 * 2 + Fraction(1, 2)
    re, im = a.real_part(), a.imag_part()
    assert re.is_real() and im.is_real()
    assert re + CycNumber.zeta(4) * im == a
    assert re == Fraction(-1, 2)


def test_rational_bounds_enclose():
    r = z5 + z5.conj()  # 2 cos(2 pi / 5) = 0.618...
    lo, hi = rational_bounds(r)
    assert Fraction(618033, 10**6) <= lo <= hi <= Fraction(618034, 10**6)
    eps = positive_rational_below(r)
    assert 0 < eps and compare_real(r, CycNumber.rational(eps)) == 1


def test_literal_round_trip():
    a = parse_scalar("1/2*z^2 - 3", 5)
    assert render(a) == "1/2*z^2 - 3"
    assert parse_scalar(render(a), 5) == a
    assert parse_scalar("(1 + z)^3", 3) == (1 + z3) ** 3
    assert parse_scalar("−1", 1) == -1


@pytest.mark.parametrize("text,col", [("1 + $", 5), ("(1 + z", 7), ("1 / (z - z)", 3), ("", 1)])
def test_literal_errors_have_positions(text, col):
    with pytest.raises(ParseError) as err:
        parse_scalar(text, 3, line=4, col=1)
    assert err.value.line == 4
    assert err.value.col == col


def test_polynomial_partial_derivative():
    g = parse_polynomial("u*v*(u + v)", ("u", "v"))
    assert g.partial("u") == parse_polynomial("2*u*v + v^2", ("u", "v"))
    assert str(g) == "u^2*v + u*v^2"
    assert g.is_homogeneous() and g.degree() == 3


def test_polynomial_substitute():
    x = MultiPoly.var(("x", "y"), "x")
    y = MultiPoly.var(("x", "y"), "y")
    g = parse_polynomial("u*v", ("u", "v"))
    assert g.substitute({"u": x + y, "v": x - y}) == x * x - y * y


def test_rank_kernel_solve():
    m = CycMatrix.from_rows([[1, z3, z3**2], [z3, z3**2, 1], [1, 1, 1]])
    assert rank(m) == 2
    for v in kernel(m):
        assert all(c == 0 for c in m @ v)
    assert solve(CycMatrix.from_rows([[1, 1], [1, -1]]), [2, 0]) == [1, 1]
    assert solve(CycMatrix.from_rows([[1, 1], [1, 1]]), [1, 2]) is None


def cyc_numbers(n: int):
    q = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.lists(q, min_size=euler_phi(n), max_size=euler_phi(n)).map(lambda c: CycNumber(n, c))


triples = st.sampled_from(CONDUCTORS).flatmap(lambda n: st.tuples(cyc_numbers(n), cyc_numbers(n), cyc_numbers(n)))


@settings(max_examples=1200, deadline=None)
@given(triples)
def test_field_axioms(t):
    a, b, c = t
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert (a * b).conj() == a.conj() * b.conj()
    if a:
        assert a * a.inv() == 1
        assert (b / a) * a == b
    assert parse_scalar(render(a), a.conductor) == a
