import pytest
from hypothesis import given, strategies as st

from cfkinf.laurent import (
    LaurentPoly,
    StaircaseError,
    cable_alexander,
    staircase_exponents,
    torus_alexander,
)

t = LaurentPoly.monomial(1)


def poly(d):
    return LaurentPoly(d)


polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=6).map(poly)


def test_arithmetic_by_hand():
    f = t + 1
    g = t - 1
    assert f * g == t**2 - 1
    assert str(f * g) == "t^2 - 1"
    assert (t**3 - 1).exact_divide(t - 1) == t**2 + t + 1
    assert str(LaurentPoly({-2: 3, 1: -1})) == "-t + 3*t^-2"
    assert LaurentPoly({0: 0}).is_zero()


def test_exact_divide_rejects_remainder():
    with pytest.raises(ArithmeticError):
        (t**2 + 1).exact_divide(t - 1)
    with pytest.raises(ZeroDivisionError):
        t.exact_divide(LaurentPoly())


def test_torus_by_hand():
    # (t^6 - 1)(t - 1) / ((t^2 - 1)(t^3 - 1)) = t^2 - t + 1, shifted by t^-1.
    assert torus_alexander(2, 3) == t - 1 + LaurentPoly.monomial(-1)
    assert str(torus_alexander(4, 5)) == "t^6 - t^5 + t^2 - 1 + t^-2 - t^-5 + t^-6"


@pytest.mark.parametrize("p,q", [(2, 4), (1, 3), (3, 3), (0, 5)])
def test_torus_rejects(p, q):
    with pytest.raises(ValueError):
        torus_alexander(p, q)


def test_torus_size_bound():
    with pytest.raises(ValueError, match="exceeds"):
        torus_alexander(101, 103)


def test_cable():
    assert str(cable_alexander(2, 5, torus_alexander(2, 3))) == "t^4 - t^3 + 1 - t^-3 + t^-4"
    with pytest.raises(ValueError):
        cable_alexander(2, 4, torus_alexander(2, 3))


def test_staircase_exponents():
    assert staircase_exponents(torus_alexander(4, 5)) == (6, 5, 2, 0, -2, -5, -6)
    assert staircase_exponents(LaurentPoly.one()) == (0,)
    with pytest.raises(StaircaseError, match="alternat"):
        staircase_exponents(torus_alexander(2, 3) ** 2)
    with pytest.raises(StaircaseError):
        staircase_exponents(t - 1)
    with pytest.raises(StaircaseError, match="symmetric"):
        staircase_exponents(t**2 - t + LaurentPoly.monomial(-3))


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == 0


@given(polys, st.integers(-4, 4), st.integers(0, 4))
def test_exact_divide_roundtrip(f, shift, n):
    divisor = (t - 1) ** n * LaurentPoly.monomial(shift)
    assert (f * divisor).exact_divide(divisor) == f


@given(st.integers(2, 12), st.integers(2, 12))
def test_torus_properties(p, q):
    from math import gcd
    if gcd(p, q) != 1:
        return
    d = torus_alexander(p, q)
    assert d(1) == 1
    assert d.is_symmetric()
    assert d.degree == (p - 1) * (q - 1) // 2
    assert torus_alexander(q, p) == d
    staircase_exponents(d)
