from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from normcurves.cubicfield import ONE, CubicField, FieldElem, field_check, field_inv, field_mul, norm
from normcurves.errors import Reducible, ZeroElement
from normcurves.exactmath import MPoly

rats = st.fractions(min_value=-20, max_value=20, max_denominator=20)
elems = st.tuples(rats, rats, rats).map(lambda v: FieldElem(*v))
fields = st.tuples(rats, rats).map(lambda ab: CubicField(*ab))

F2 = CubicField(0, 2)


def sympy_norm(F, e):
    """Resultant oracle: Norm(x + y alpha + z alpha^2) = Res(minpoly, element)."""
    x = sympy.Symbol("x")
    R = lambda q: sympy.Rational(q.numerator, q.denominator)
    m = x ** 3 + R(F.a) * x + R(F.b)
    h = R(e.x) + R(e.y) * x + R(e.z) * x ** 2
    r = sympy.resultant(m, h, x)
    return Fraction(int(sympy.numer(r)), int(sympy.denom(r)))


def test_field_check():
    assert field_check(0, 2) == F2
    assert field_check(1, 1) == CubicField(1, 1)
    with pytest.raises(Reducible):
        field_check(0, 8)
    with pytest.raises(Reducible):
        field_check(-3, 2)  # (x - 1)^2 (x + 2)
    with pytest.raises(Reducible):
        field_check(0, 0)


def test_mul_examples():
    e = FieldElem.of(3, -1, Fraction(2, 5))
    assert field_mul(ONE, e, F2) == e
    assert field_mul((0, 1, 0), (0, 1, 0), F2) == (0, 0, 1)
    assert field_mul((0, 1, 0), (0, 0, 1), F2) == (-2, 0, 0)


def test_inverse_examples():
    assert field_inv(FieldElem.of(1, 0, 0), F2) == (1, 0, 0)
    assert field_inv(FieldElem.of(1, 1, 1), F2) == (Fraction(1, 3), Fraction(-1, 3), 0)
    assert field_inv(FieldElem.of(0, 1, 0), F2) == (0, 0, Fraction(-1, 2))
    assert norm((Fraction(1, 3), Fraction(-1, 3), 0), F2) == Fraction(1, 9)
    with pytest.raises(ZeroElement):
        field_inv(FieldElem.of(0, 0, 0), F2)


def test_norm_examples():
    assert norm((1, 0, 0), F2) == 1
    assert norm((0, 1, 0), F2) == -2
    assert norm((1, 1, 1), F2) == 9


def test_pure_norm_form_explicit():
    X1, X2, X3 = (MPoly.var(v, ("X1", "X2", "X3")) for v in ("X1", "X2", "X3"))
    b = 2
    assert F2.norm_form() == X1 ** 3 - b * X2 ** 3 + b ** 2 * X3 ** 3 + 3 * b * X1 * X2 * X3


@settings(max_examples=1000)
@given(fields, elems, elems)
def test_norm_multiplicative(F, e1, e2):
    assert F.norm(F.mul(e1, e2)) == F.norm(e1) * F.norm(e2)


@settings(max_examples=1000)
@given(fields, elems)
def test_norm_formula_matches_determinant(F, e):
    assert F.norm(e) == F.norm_det(e)


@settings(max_examples=150)
@given(fields, elems)
def test_norm_matches_resultant(F, e):
    assert F.norm(e) == sympy_norm(F, e)


@settings(max_examples=500)
@given(fields.filter(lambda F: F.discriminant != 0), elems)
def test_inverse_round_trip(F, e):
    if F.norm(e) == 0:
        return
    inv = F.inv(e)
    assert F.mul(e, inv) == ONE
    assert F.norm(inv) * F.norm(e) == 1


@settings(max_examples=200)
@given(fields, elems, elems, elems)
def test_ring_axioms(F, e1, e2, e3):
    assert F.mul(e1, e2) == F.mul(e2, e1)
    assert F.mul(F.mul(e1, e2), e3) == F.mul(e1, F.mul(e2, e3))
