from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from normcurves.exactmath import (
    MPoly,
    RatFunc,
    UPoly,
    compose,
    format_rational,
    integer_cube_root,
    parse_rational,
    poly_gcd,
    poly_lcm,
    rational_cube_root,
    rational_roots,
    squarefree_part,
)

T = sympy.Symbol("t")

rats = st.fractions(min_value=-50, max_value=50, max_denominator=20)
small_polys = st.lists(rats, min_size=0, max_size=7).map(lambda cs: UPoly(cs, "t"))


def to_sympy(p: UPoly):
    return sum((sympy.Rational(c.numerator, c.denominator) * T ** i for i, c in enumerate(p.coeffs)),
               sympy.Integer(0))


def from_sympy(expr) -> UPoly:
    poly = sympy.Poly(expr, T)
    cs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    return UPoly(cs, "t")


# -- rationals ---------------------------------------------------------------------

def test_parse_and_format_rational():
    assert parse_rational(" -3/6 ") == Fraction(-1, 2)
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(9)) == "9"
    with pytest.raises(ValueError):
        parse_rational("1.5")
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


@given(st.integers(min_value=0, max_value=10 ** 30))
def test_integer_cube_root_is_floor(n):
    r = integer_cube_root(n)
    assert r ** 3 <= n < (r + 1) ** 3


def test_integer_cube_root_rejects_negative():
    with pytest.raises(ValueError):
        integer_cube_root(-1)


@given(rats)
def test_rational_cube_root(q):
    assert rational_cube_root(q ** 3) == q
    r = rational_cube_root(q)
    if r is not None:
        assert r ** 3 == q


def test_two_is_not_a_cube():
    assert rational_cube_root(Fraction(2)) is None
    assert rational_cube_root(Fraction(-27, 8)) == Fraction(-3, 2)


# -- univariate polynomials ------------------------------------------------------------------

def test_arith_examples():
    t = UPoly.x("t")
    assert (t + 1) * (t - 1) == t ** 2 - 1
    p = UPoly([1, 2, 3], "t")
    assert (p + (-p)).is_zero()
    assert p ** 2 == UPoly([1, 4, 10, 12, 9], "t")
    assert UPoly([1, 0, 1], "t").eval(2) == 5


@settings(max_examples=200)
@given(small_polys, small_polys)
def test_mul_matches_sympy(p, q):
    assert p * q == from_sympy(sympy.expand(to_sympy(p) * to_sympy(q))) if not (p * q).is_zero() \
        else sympy.expand(to_sympy(p) * to_sympy(q)) == 0


@settings(max_examples=200)
@given(small_polys, small_polys.filter(lambda q: not q.is_zero()))
def test_divmod_identity(p, q):
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree


@settings(max_examples=200)
@given(small_polys, small_polys, small_polys)
def test_gcd_matches_sympy(p, q, r):
    a, b = p * r, q * r
    if a.is_zero() and b.is_zero():
        with pytest.raises(ValueError):
            poly_gcd(a, b)
        return
    g = poly_gcd(a, b)
    expected = sympy.gcd(to_sympy(a), to_sympy(b))
    assert g == from_sympy(sympy.Poly(expected, T).monic().as_expr())


def test_gcd_examples():
    t = UPoly.x("t")
    assert poly_gcd(t ** 2 - 1, t ** 3 - 1) == t - 1
    p = UPoly([4, 2], "t")
    assert poly_gcd(p, UPoly((), "t")) == t + 2
    assert poly_gcd((t + 2) ** 2 * (t - 3), (t + 2) * (t + 5)) == t + 2


def test_lcm_and_squarefree():
    t = UPoly.x("t")
    assert poly_lcm([t ** 2 - 1, t - 1, t + 3]) == (t ** 2 - 1) * (t + 3)
    assert squarefree_part((t - 1) ** 3 * (t + 2)) == (t - 1) * (t + 2)


@settings(max_examples=200)
@given(st.lists(rats, min_size=0, max_size=5), small_polys)
def test_rational_roots_match_sympy(roots, extra):
    t = UPoly.x("t")
    p = UPoly([1], "t")
    for r in roots:
        p = p * (t - r)
    if not extra.is_zero():
        p = p * extra
    found = rational_roots(p)
    expected = sorted({Fraction(int(r.p), int(r.q)) for r in sympy.roots(to_sympy(p), filter="Q")}) \
        if p.degree else []
    assert found == expected
    assert set(roots) <= set(found)


def test_rational_roots_large_leading_coefficient():
    t = UPoly.x("t")
    p = (t * 7 ** 5 * 2 ** 9 - 3) * (t * 6 + 35) * (t ** 2 + 1)
    assert rational_roots(p) == [Fraction(-35, 6), Fraction(3, 7 ** 5 * 2 ** 9)]


@given(small_polys, rats, rats)
def test_shift_scale_reverse(p, s, x):
    assert p.taylor_shift(s).eval(x) == p.eval(x + s)
    assert p.scale_arg(s).eval(x) == p.eval(s * x)
    if x != 0 and p.degree is not None:
        assert p.reverse(6 + p.degree).eval(x) == x ** (6 + p.degree) * p.eval(1 / x)


@given(small_polys, small_polys, rats)
def test_compose_and_derivative(p, q, x):
    assert p.compose(q).eval(x) == p.eval(q.eval(x))
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


# -- multivariate ---------------------------------------------------------------------------

V = ("X1", "X2", "X3")


def test_mpoly_substitute_norm_form_at_unit():
    X1, X2, X3 = (MPoly.var(v, V) for v in V)
    b = 2
    N = X1 ** 3 - b * X2 ** 3 + b ** 2 * X3 ** 3 + 3 * b * X1 * X2 * X3
    assert N.eval({"X1": 1, "X2": 0, "X3": 0}) == 1


def test_mpoly_substitute_monomial():
    """X2 -> r(u) T^2 with r = -2u^2/3 in b X2^3 gives b (-8u^6/27) T^6."""
    W = ("X2",)
    expr = MPoly.var("X2", W) ** 3 * 2
    TU = ("T", "u")
    r_num = MPoly(TU, {(2, 2): -2})
    num, den = expr.substitute({"X2": (r_num, UPoly([3], "u"))})
    assert den.is_constant()
    assert num.embed(TU) * (1 / den.lc) == MPoly(TU, {(6, 6): Fraction(-16, 27)})


def test_mpoly_universe_mismatch():
    with pytest.raises(ValueError):
        MPoly.var("X1", ("X1",)) + MPoly.var("t", ("t",))


@settings(max_examples=100)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), rats), max_size=6),
       rats, rats, rats)
def test_mpoly_eval_matches_sympy(terms, x, y, z):
    P = MPoly(V, {})
    for i, j, k, c in terms:
        P = P + MPoly(V, {(i, j, k): c})
    sx, sy, sz = sympy.symbols("X1 X2 X3")
    expr = sum((sympy.Rational(c.numerator, c.denominator) * sx ** i * sy ** j * sz ** k
                for i, j, k, c in terms), sympy.Integer(0))
    val = expr.subs({sx: sympy.Rational(x.numerator, x.denominator),
                     sy: sympy.Rational(y.numerator, y.denominator),
                     sz: sympy.Rational(z.numerator, z.denominator)})
    got = P.eval({"X1": x, "X2": y, "X3": z})
    assert got == Fraction(int(sympy.numer(val)), int(sympy.denom(val)))


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), rats), min_size=1, max_size=5),
       small_polys.map(lambda p: p.with_var("u")),
       small_polys.map(lambda p: p.with_var("u")).filter(lambda d: not d.is_zero()),
       rats)
def test_substitute_agrees_with_evaluation(terms, num, den, u):
    W = ("X1", "t")
    P = MPoly(W, {})
    for i, j, c in terms:
        P = P + MPoly(W, {(i, j): c})
    if den.eval(u) == 0:
        return
    # X1 -> num/den, t -> u
    n, d = P.substitute({"X1": (MPoly.from_upoly(num, ("u",)), den),
                         "t": (MPoly.from_upoly(UPoly.x("u"), ("u",)), UPoly([1], "u"))})
    lhs = n.embed(("u",)).to_upoly("u").eval(u) / d.eval(u)
    assert lhs == P.eval({"X1": num.eval(u) / den.eval(u), "t": u})


# -- rational functions ---------------------------------------------------------------------

def test_ratfunc_basics():
    u = RatFunc.x("u")
    assert u * (1 / u) == RatFunc.const(1)
    r = RatFunc(UPoly([-1, 0, 1], "u"), UPoly([-1, 1], "u"))
    assert r == u + 1
    assert r.den.lc == 1
    g = UPoly([1, 0, 1], "T")
    assert compose(g, 1 / u) == RatFunc(UPoly([1, 0, 1], "u"), UPoly([0, 0, 1], "u"))
    with pytest.raises(ZeroDivisionError):
        (1 / u).eval(0)
    with pytest.raises(ZeroDivisionError):
        RatFunc.const(0).inverse()


@settings(max_examples=100)
@given(small_polys, small_polys.filter(lambda d: not d.is_zero()), small_polys,
       small_polys.filter(lambda d: not d.is_zero()), rats)
def test_ratfunc_field_ops(n1, d1, n2, d2, x):
    r1 = RatFunc(n1.with_var("u"), d1.with_var("u"))
    r2 = RatFunc(n2.with_var("u"), d2.with_var("u"))
    try:
        v1, v2 = r1.eval(x), r2.eval(x)
    except ZeroDivisionError:
        return
    assert (r1 + r2).eval(x) == v1 + v2
    assert (r1 * r2).eval(x) == v1 * v2
    assert (r1 - r2).eval(x) == v1 - v2
    assert poly_gcd(r1.num, r1.den).is_constant() if not r1.num.is_zero() else True
