"""Rational curves on S_f, one builder per construction.

Every builder returns a :class:`RationalCurve` whose components are rational
functions of ``u`` on a model surface, plus the chain back to the equation
the caller started from.  Builders that eliminate coefficients also return a
:class:`ConstructionReport` with the cleared residual polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Optional, Sequence, Tuple

from .cubicfield import CubicField, FieldElem
from .errors import (
    ConditionFailed,
    DegenerateDenominator,
    ExceptionalForm,
    NoApplicableMethod,
    NormCurveError,
    ResidualDegreeError,
    TrivialPoint,
    UsePureCubicMethod,
    ZeroA1,
    ZeroCoefficient,
    ZeroParameter,
)
from .exactmath import (
    MPoly,
    RatFunc,
    UPoly,
    integer_cube_root,
    poly_lcm,
    rational_roots,
    to_rational,
)
from .normform import (
    BackTransform,
    GenForm,
    Invert,
    KnownPoint,
    ProblemInstance,
    ScaleT,
    build_G,
    implicit_point,
    monicize_deg6,
    normalize,
)

U = RatFunc.x("u")
TU = ("t", "u")


@dataclass
class RationalCurve:
    x1: RatFunc
    x2: RatFunc
    x3: RatFunc
    t: RatFunc
    back: BackTransform = field(default_factory=BackTransform)
    method: str = ""

    @property
    def components(self) -> Tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
        return self.x1, self.x2, self.x3, self.t

    @cached_property
    def original(self) -> Tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
        """Components on the equation the construction started from."""
        return tuple(self.back.apply(self.components))

    def point_at(self, u) -> Tuple[Fraction, ...]:
        """Exact point on the original surface; raises ZeroDivisionError at a pole."""
        u = to_rational(u)
        return tuple(c.eval(u) for c in self.original)

    @cached_property
    def poles(self) -> Tuple[Fraction, ...]:
        """Rational u where some component of the original curve is undefined.

        Irrational poles exist too; evaluation detects those only if hit
        exactly, which never happens at rational u.
        """
        dens = [c.den for c in self.original if not c.den.is_constant()]
        if not dens:
            return ()
        return tuple(rational_roots(poly_lcm(dens)))

    def with_back(self, outer: BackTransform) -> "RationalCurve":
        return RationalCurve(self.x1, self.x2, self.x3, self.t,
                             self.back.then(outer), self.method)


@dataclass
class AnsatzCoefficients:
    p: object
    q: object
    r: Optional[RatFunc] = None
    s: Optional[RatFunc] = None


@dataclass
class ConstructionReport:
    method: str
    residual: Dict[str, UPoly] = field(default_factory=dict)
    D: Optional[UPoly] = None
    ansatz: Optional[AnsatzCoefficients] = None
    conic: Optional[dict] = None
    extra: Dict[str, object] = field(default_factory=dict)


# -- helpers -------------------------------------------------------------------

def _pad(cs, n=6) -> Tuple[Fraction, ...]:
    cs = tuple(to_rational(c) for c in cs)
    return cs + (Fraction(0),) * max(0, n - len(cs))


def _as_pair(r: RatFunc, t_coeffs: Sequence[RatFunc] = None):
    """Binding (numerator MPoly over (t, u), denominator UPoly) for sum_k t_coeffs[k] t^k."""
    if t_coeffs is None:
        t_coeffs = [r]
    den = poly_lcm([c.den for c in t_coeffs])
    num = MPoly(TU, {})
    for k, c in enumerate(t_coeffs):
        scaled = c.num * den.exact_div(c.den)
        num = num + MPoly(TU, {(k, i): v for i, v in enumerate(scaled.coeffs)})
    return num, den


def _t_coefficients(G: MPoly, bindings) -> Tuple[Dict[int, UPoly], UPoly]:
    """Substitute and collect by powers of t; values are numerators over the returned denominator."""
    num, den = G.substitute(bindings)
    num = num.embed(TU)
    coeffs = {k: c.to_upoly("u") for k, c in num.coefficients_in("t").items()}
    return coeffs, den.with_var("u")


def _cleared(coeffs: Dict[int, UPoly], den: UPoly, D: UPoly) -> Dict[int, UPoly]:
    return {k: (c * D).exact_div(den) for k, c in coeffs.items()}


def _residual_denominator(coeffs: Dict[int, UPoly], den: UPoly) -> UPoly:
    """Monic lcm of the reduced denominators of the residual coefficients."""
    dens = [RatFunc(c, den).den for c in coeffs.values() if not c.is_zero()]
    return poly_lcm(dens) if dens else UPoly([1], "u")


# -- condition (c2, c4, c5) --------------------------------------------------------

def forced_family(c1, c3) -> Tuple[Fraction, Fraction, Fraction]:
    """(c2, c4, c5) values on which the main construction degenerates."""
    c1, c3 = to_rational(c1), to_rational(c3)
    return (Fraction(5, 12) * c1 ** 2,
            -c1 * (5 * c1 ** 3 - 72 * c3) / 144,
            -c1 ** 2 * (c1 ** 3 - 12 * c3) / 144)


def except_condition(c) -> bool:
    """True when (c2, c4, c5) avoids the degenerate family (the construction applies)."""
    c1, c2, c3, c4, c5 = _pad(c, 5)[:5]
    return (c2, c4, c5) != forced_family(c1, c3)


def reducible_factorization(c1, c3) -> Tuple[UPoly, UPoly]:
    """Factors of g on the degenerate family: g = -(1/144) * quadratic * cubic."""
    c1, c3 = to_rational(c1), to_rational(c3)
    quad = UPoly([12, 6 * c1, c1 ** 2], "t")
    cub = UPoly([-12, -6 * c1, -c1 ** 2, c1 ** 3 - 12 * c3], "t")
    return quad, cub


# -- pure cubic, deg g <= 6 ------------------------------------------------------------

def pure6_ansatz(b, c) -> AnsatzCoefficients:
    b = to_rational(b)
    c1, c2, c3, c4 = _pad(c)[:4]
    K = 5 * c1 ** 3 - 18 * c1 * c2 + 27 * c3
    p = (3 * c2 - c1 ** 2) / 9
    q = c1 / 3
    r = RatFunc(UPoly([K, 0, 0, -27 * b ** 2]), UPoly([0, 81 * b]))
    s = RatFunc(
        UPoly([0, -5 * c1 ** 4 + 27 * c2 * c1 ** 2 - 27 * c3 * c1 - 27 * c2 ** 2 + 81 * c4,
               0, 0, 27 * b ** 2 * c1]),
        UPoly([3 * K, 0, 0, 162 * b ** 2]),
    )
    return AnsatzCoefficients(p, q, r, s)


def pure6_D(b, c) -> UPoly:
    b = to_rational(b)
    c1, c2, c3 = _pad(c)[:3]
    K = 5 * c1 ** 3 - 18 * c1 * c2 + 27 * c3
    return UPoly([0, 0, 0, 3 ** 12 * b ** 2]) * UPoly([K, 0, 0, 54 * b ** 2]) ** 3


def pure6_residual(F: CubicField, c) -> Tuple[UPoly, UPoly, AnsatzCoefficients, UPoly]:
    """(A5, A6, ansatz, D) with D * G(X(T), T) = A5 T^5 + A6 T^6, no condition check."""
    c = _pad(c)[:6]
    b = F.b
    ans = pure6_ansatz(b, c)
    p, q, r, s = ans.p, ans.q, ans.r, ans.s
    g = UPoly((1,) + c, "t")
    G = build_G(ProblemInstance(F, g))
    bindings = {
        "X1": MPoly(TU, {(2, 0): p, (1, 0): q, (0, 0): 1}),
        "X2": _as_pair(r, [RatFunc.const(0), RatFunc.const(0), r]),
        "X3": _as_pair(s, [RatFunc.const(0), U, s]),
    }
    coeffs, den = _t_coefficients(G, bindings)
    for k in range(5):
        if k in coeffs and not coeffs[k].is_zero():
            raise DegenerateDenominator(f"coefficient of t^{k} did not vanish")
    D = pure6_D(b, c)
    A = _cleared(coeffs, den, D)
    return A.get(5, UPoly((), "u")), A.get(6, UPoly((), "u")), ans, D


def curve_pure_cubic_deg6(F: CubicField, c) -> Tuple[RationalCurve, ConstructionReport]:
    """Curve on N(X) = 1 + sum c_i t^i for a pure cubic field (a = 0)."""
    if not F.is_pure:
        raise ValueError("curve_pure_cubic_deg6 needs a = 0")
    c = _pad(c)
    if len(c) > 6 and any(c[6:]):
        raise ValueError("g must have degree at most 6")
    c = c[:6]
    if F.b == 0:
        raise DegenerateDenominator("b = 0")
    if not except_condition(c):
        raise ConditionFailed(
            "(c2, c4, c5) lies on the degenerate family; g factors, see reducible_factorization")
    A5, A6, ans, D = pure6_residual(F, c)
    if A6.is_zero():
        raise DegenerateDenominator("A6 vanished")
    if A5.is_zero():
        raise ConditionFailed("A5 vanished identically")
    p, q, r, s = ans.p, ans.q, ans.r, ans.s
    phi = RatFunc(-A5, A6)
    x1 = phi * phi * p + phi * q + 1
    x2 = phi * phi * r
    x3 = phi * phi * s + U * phi
    curve = RationalCurve(x1, x2, x3, phi, method="pure6")
    report = ConstructionReport("pure6", {"A5": A5, "A6": A6}, D, ans)
    return curve, report


# -- deg f = 4 -----------------------------------------------------------------------

EXCEPTIONAL_QUARTIC = UPoly([1, 3, 3], "t") ** 2


def curve_deg4(F: CubicField, c) -> Tuple[RationalCurve, ConstructionReport]:
    """Curve on N(X) = 1 + c1 t + ... + c4 t^4 with c4 != 0."""
    c1, c2, c3, c4 = _pad(c, 4)[:4]
    if any(_pad(c, 4)[4:]):
        raise ValueError("curve_deg4 takes c1..c4 only")
    if c4 == 0:
        raise ValueError("c4 must be nonzero")
    cs = (c1, c2, c3, c4, Fraction(0), Fraction(0))
    if except_condition(cs):
        curve, report = curve_pure_cubic_deg6(F, cs)
        curve.method = report.method = "deg4"
        return curve, report
    # degenerate family: t -> 6t/c1 turns g into (3t^2 + 3t + 1)^2
    lam = 6 / c1
    g = UPoly((1,) + cs, "t")
    if g.scale_arg(lam) != EXCEPTIONAL_QUARTIC:
        raise DegenerateDenominator("rescaled quartic is not (3t^2+3t+1)^2")
    b = F.b
    p = RatFunc(UPoly([1]), UPoly([0, 4 * b]))
    q = Fraction(1, 2)
    T = RatFunc(UPoly([1, 0, 0, -32 * b, 0, 0, -64 * b ** 2]), UPoly([0, 0, 0, 36 * b]))
    curve = RationalCurve(T + 1, U * T, p * T, T * q, BackTransform((ScaleT(lam),)), "deg4")
    report = ConstructionReport("deg4", ansatz=AnsatzCoefficients(p, q),
                                extra={"T": T, "lambda": lam, "exceptional": True})
    return curve, report


# -- deg f = 6 through inversion ---------------------------------------------------------

def inverted_coefficients(h: UPoly) -> Tuple[Fraction, ...]:
    """c1..c6 of g(T) = T^6 h(1/T) for monic h of degree 6."""
    g = h.reverse(6)
    assert g.coeff(0) == 1
    return _pad(g.coeffs[1:])


def curve_deg6_monic(inst: ProblemInstance) -> Tuple[RationalCurve, ConstructionReport]:
    """Degree-6 f with a known point (finite, or at infinity)."""
    if inst.f.degree != 6:
        raise ValueError("curve_deg6_monic needs deg f = 6")
    if not inst.field.is_pure:
        raise ValueError("curve_deg6_monic needs a pure cubic field")
    if inst.point is None:
        raise TrivialPoint("no known point")
    h_inst, back = monicize_deg6(inst)
    c = inverted_coefficients(h_inst.f)
    if c[1] == 0 and c[3] == 0 and c[4] == 0:
        raise ExceptionalForm(
            "after normalization only exponents divisible by 3 remain (h(t) = h(zeta_3 t))")
    curve, report = curve_pure_cubic_deg6(inst.field, c)
    curve = curve.with_back(BackTransform((Invert(),)).then(back))
    curve.method = report.method = "deg6"
    report.extra["h"] = h_inst.f
    return curve, report


# -- approximation by norms ---------------------------------------------------------------

def _nearest_cube_root(x: Fraction, scale: int) -> Fraction:
    """Rational m/scale whose cube is closest to x (ties go down)."""
    target = abs(x) * scale ** 3
    m = integer_cube_root(int(target))
    if abs((m + 1) ** 3 - target) < abs(target - m ** 3):
        m += 1
    return Fraction(m if x > 0 else -m, scale)


def _nearest_power_of_two(x: Fraction) -> Fraction:
    """2^k closest to x > 0 on a log scale."""
    k = x.numerator.bit_length() - x.denominator.bit_length()
    while Fraction(2) ** k > x:
        k -= 1
    while Fraction(2) ** (k + 1) <= x:
        k += 1
    # 2^k <= x < 2^(k+1); geometric midpoint is 2^(k + 1/2)
    if x * x > Fraction(2) ** (2 * k + 1):
        k += 1
    return Fraction(2) ** k


@dataclass
class ApproxResult:
    g: UPoly
    witness: FieldElem

    @property
    def descending_coefficients(self) -> Tuple[Fraction, ...]:
        """(c0, ..., c6) with c_i the coefficient of t^(6-i)."""
        return tuple(self.g.coeff(6 - i) for i in range(7))

    def instance(self, F: CubicField) -> ProblemInstance:
        return ProblemInstance(F, self.g, KnownPoint(*self.witness, None))


def approx_coeffs(f: UPoly, eps, F: CubicField) -> ApproxResult:
    """Perturb f (deg <= 6, no t^5 term) by less than eps so that S_g has a curve.

    The t^6 coefficient is replaced by a nearby cube u^3 = Norm(u, 0, 0); if the
    t^4, t^2 and t coefficients all vanish, t^4 and t^2 get a small common value.
    """
    eps = to_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if not F.is_pure:
        raise ValueError("approx_coeffs needs a pure cubic field")
    f = f.with_var("t")
    if f.degree is None or f.degree > 6 or f.coeff(5) != 0:
        raise ValueError("f must have degree <= 6 and no t^5 term")
    lead = f.coeff(6)
    if lead == 0:
        raise ValueError("the t^6 coefficient must be nonzero")
    scale = 1
    while True:
        w = _nearest_cube_root(lead, scale)
        if w != 0 and abs(w ** 3 - lead) < eps:
            break
        scale *= 10
    cs = [f.coeff(i) for i in range(7)]
    cs[6] = w ** 3
    if cs[4] == 0 and cs[2] == 0 and cs[1] == 0:
        small = _nearest_power_of_two(eps / 2)
        cs[4] = cs[2] = small
    return ApproxResult(UPoly(cs, "t"), FieldElem(w, Fraction(0), Fraction(0)))


# -- trinomial t^(3m) + a2 t^m + a1 t + a0 ---------------------------------------------------

def trinomial_f(m: int, a2, a1, a0) -> UPoly:
    cs = [Fraction(0)] * (3 * m + 1)
    cs[3 * m] += 1
    cs[m] += to_rational(a2)
    cs[1] += to_rational(a1)
    cs[0] += to_rational(a0)
    return UPoly(cs, "t")


def curve_trinomial(F: CubicField, m: int, a2, a1, a0) -> RationalCurve:
    """Curve on N(X) = t^(3m) + a2 t^m + a1 t + a0 (pure cubic field)."""
    if not F.is_pure:
        raise ValueError("curve_trinomial needs a = 0")
    if m < 1:
        raise ValueError("m must be a positive integer")
    a2, a1, a0 = map(to_rational, (a2, a1, a0))
    if a1 == 0:
        raise ZeroA1("a1 = 0")
    b = F.b
    phi = RatFunc(UPoly([a2 ** 3, 0, 0, -27 * b * a0, 0, 0, -27 * b ** 2]),
                  UPoly([0, 0, 0, 27 * b * a1]))
    x3 = RatFunc(UPoly([a2]), UPoly([0, 3 * b]))
    return RationalCurve(phi ** m, U, x3, phi, method="trinomial")


# -- general cubic field, f = t^6 + a4 t^4 + a1 t + a0 -------------------------------------------

def conic_parametrization(F: CubicField, a4):
    """(X2(u), X3(u), p(u)) on (2a^2 X3 - 9b X2)^2 = 4a^2 a4^2 + 3(4a^3 + 27b^2) X2^2."""
    a, b, a4 = F.a, F.b, to_rational(a4)
    delta = 3 * (4 * a ** 3 + 27 * b ** 2)
    x2 = RatFunc(UPoly([0, 4 * a * a4]), UPoly([delta, 0, -1]))
    x3 = RatFunc(UPoly([a4 * delta, 18 * b * a4, a4]), UPoly([a * delta, 0, -a]))
    p = (x3 * (2 * a) + a4) / 3
    return x2, x3, p


def conic_equation(F: CubicField, a4) -> MPoly:
    a, b, a4 = F.a, F.b, to_rational(a4)
    V = ("X2", "X3")
    X2, X3 = MPoly.var("X2", V), MPoly.var("X3", V)
    lhs = (X3 * (2 * a ** 2) - X2 * (9 * b)) ** 2
    return lhs - (X2 * X2 * (3 * (4 * a ** 3 + 27 * b ** 2)) + 4 * a ** 2 * a4 ** 2)


def general_D(F: CubicField) -> UPoly:
    a, b = F.a, F.b
    return UPoly([27 * a ** 3]) * UPoly([12 * a ** 3 + 81 * b ** 2, 0, -1]) ** 3


def curve_general_cubic(F: CubicField, a4, a1, a0) -> Tuple[RationalCurve, ConstructionReport]:
    """Curve on N(X) = t^6 + a4 t^4 + a1 t + a0 for x^3 + a x + b with a != 0."""
    a4, a1, a0 = map(to_rational, (a4, a1, a0))
    if F.a == 0:
        raise UsePureCubicMethod("a = 0: use the pure cubic constructions")
    if a1 * a4 == 0:
        raise ZeroCoefficient("need a1 * a4 != 0")
    if 4 * F.a ** 3 + 27 * F.b ** 2 == 0:
        raise DegenerateDenominator("4a^3 + 27b^2 = 0")
    x2, x3, p = conic_parametrization(F, a4)
    f = UPoly([a0, a1, 0, 0, a4, 0, 1], "t")
    G = build_G(ProblemInstance(F, f))
    one = RatFunc.const(1)
    zero = RatFunc.const(0)
    bindings = {
        "X1": _as_pair(p, [p, zero, one]),
        "X2": _as_pair(x2),
        "X3": _as_pair(x3),
    }
    coeffs, den = _t_coefficients(G, bindings)
    if any(not coeffs[k].is_zero() for k in coeffs if k >= 2):
        raise ResidualDegreeError("t-coefficients of degree >= 2 survive the substitution")
    D = general_D(F)
    A = _cleared(coeffs, den, D)
    A0 = A.get(0, UPoly((), "u"))
    A1 = A.get(1, UPoly((), "u"))
    phi = RatFunc(-A0, A1)
    if phi.is_constant():
        raise ConditionFailed("t(u) is constant")
    curve = RationalCurve(phi * phi + p, x2, x3, phi, method="general")
    c3 = coeffs.get(3, UPoly((), "u"))
    report = ConstructionReport(
        "general", {"A0": A0, "A1": A1, "C3": c3}, D,
        AnsatzCoefficients(p, None),
        conic={"equation": conic_equation(F, a4), "base_point": (Fraction(0), a4 / F.a),
               "X2": x2, "X3": x3},
        extra={"residual_denominator": _residual_denominator(coeffs, den)},
    )
    return curve, report


# -- general cubic form X1^3 + a X2^3 + b X3^3 + (c X1 + d X2 + e X3) X2 X3 ----------------------

def genform_D(form: GenForm, a3) -> UPoly:
    b, c, a3 = form.b, form.c, to_rational(a3)
    return UPoly([0, 0, 0, 27 * c ** 3]) * UPoly([a3, 0, 0, 2 * b]) ** 3


def genform_substitution(form: GenForm, a):
    """(X1 constant part, X2(u), X3 constant part w(u)); X1 = t^2 + a4/3 and X3 = u t + w."""
    a0, a1, a2, a3, a4 = _pad(a, 5)[:5]
    b, c, e = form.b, form.c, form.e
    x2 = RatFunc(UPoly([a3, 0, 0, -b]), UPoly([0, c]))
    w = RatFunc(UPoly([0, 3 * a2 * c - a4 ** 2 * c, -3 * a3 * e, 0, 0, 3 * b * e]),
                UPoly([3 * c * a3, 0, 0, 6 * c * b]))
    return a4 / 3, x2, w


def curve_genform(form: GenForm, a) -> Tuple[RationalCurve, ConstructionReport]:
    """Curve on Form(X) = t^6 + a4 t^4 + a3 t^3 + a2 t^2 + a1 t + a0; ``a = (a0, ..., a4)``."""
    a0, a1, a2, a3, a4 = _pad(a, 5)[:5]
    if form.a * form.b * form.c * form.e * a3 == 0:
        raise ZeroParameter("need a*b*c*e*a3 != 0")
    x1c, x2, w = genform_substitution(form, (a0, a1, a2, a3, a4))
    f = UPoly([a0, a1, a2, a3, a4, 0, 1], "t")
    G = build_G(ProblemInstance(form, f))
    bindings = {
        "X1": MPoly(TU, {(2, 0): 1, (0, 0): x1c}),
        "X2": _as_pair(x2),
        "X3": _as_pair(w, [w, U]),
    }
    coeffs, den = _t_coefficients(G, bindings)
    bad = sorted(k for k in coeffs if k >= 2 and not coeffs[k].is_zero())
    if bad:
        raise ResidualDegreeError(f"substituted residual keeps t^{bad[-1]}")
    D = genform_D(form, a3)
    C = _cleared(coeffs, den, D)
    C0 = C.get(0, UPoly((), "u"))
    C1 = C.get(1, UPoly((), "u"))
    if C1.is_zero() or C0.is_zero():
        raise ConditionFailed("C0 * C1 vanishes identically")
    phi = RatFunc(-C0, C1)
    if phi.is_constant():
        raise ConditionFailed("t(u) is constant")
    curve = RationalCurve(phi * phi + x1c, x2, U * phi + w, phi, method="genform")
    report = ConstructionReport(
        "genform", {"C0": C0, "C1": C1}, D,
        extra={"residual_denominator": _residual_denominator(coeffs, den)},
    )
    return curve, report


# -- dispatch ----------------------------------------------------------------------------

METHODS = ("auto", "pure6", "deg4", "deg6", "trinomial", "general", "genform")


def trinomial_shape(f: UPoly, a2=None):
    """(m, a2, a1, a0) if f = t^(3m) + a2 t^m + a1 t + a0 with a1 != 0, else None.

    For m = 1 the t coefficient is split as a2 (default 0) plus a1.
    """
    n = f.degree
    if n is None or n < 3 or n % 3 or f.lc != 1:
        return None
    m = n // 3
    allowed = {n, m, 1, 0}
    if any(f.coeff(i) for i in range(n + 1) if i not in allowed):
        return None
    if m == 1:
        a2 = to_rational(a2) if a2 is not None else Fraction(0)
        a1 = f.coeff(1) - a2
    else:
        a2, a1 = f.coeff(m), f.coeff(1)
    if a1 == 0:
        return None
    return m, a2, a1, f.coeff(0)


def _with_point(inst: ProblemInstance) -> ProblemInstance:
    if inst.point is not None:
        return inst
    P = implicit_point(inst)
    if P is None:
        raise TrivialPoint("no known point given and none can be read off f")
    return inst.with_point(P)


def construct_pure6(inst: ProblemInstance):
    inst = _with_point(inst)
    target = normalize(inst)
    curve, report = curve_pure_cubic_deg6(inst.field, target.c)
    return curve.with_back(target.back), report


def construct_deg4(inst: ProblemInstance):
    if inst.f.degree != 4:
        raise ValueError("deg4 needs deg f = 4")
    inst = _with_point(inst)
    target = normalize(inst)
    curve, report = curve_deg4(inst.field, target.c[:4])
    return curve.with_back(target.back), report


def construct_deg6(inst: ProblemInstance):
    return curve_deg6_monic(_with_point(inst))


def construct_trinomial(inst: ProblemInstance, m: int = None, a2=None):
    shape = trinomial_shape(inst.f, a2)
    if shape is None or (m is not None and shape[0] != m):
        raise NoApplicableMethod("f is not of the form t^(3m) + a2 t^m + a1 t + a0 with a1 != 0")
    m, a2, a1, a0 = shape
    curve = curve_trinomial(inst.field, m, a2, a1, a0)
    report = ConstructionReport("trinomial", extra={"m": m, "a2": a2, "a1": a1, "a0": a0})
    return curve, report


def construct_general(inst: ProblemInstance):
    f = inst.f
    if f.degree != 6 or f.lc != 1 or any(f.coeff(i) for i in (2, 3, 5)):
        raise NoApplicableMethod("general needs f = t^6 + a4 t^4 + a1 t + a0")
    return curve_general_cubic(inst.field, f.coeff(4), f.coeff(1), f.coeff(0))


def construct_genform(inst: ProblemInstance):
    f = inst.f
    if not isinstance(inst.form, GenForm):
        raise NoApplicableMethod("genform needs a form X1^3 + a X2^3 + b X3^3 + (c X1 + d X2 + e X3) X2 X3")
    if f.degree != 6 or f.lc != 1 or f.coeff(5) != 0:
        raise NoApplicableMethod("genform needs monic f of degree 6 without a t^5 term")
    return curve_genform(inst.form, [f.coeff(i) for i in range(5)])


def _candidates(inst: ProblemInstance):
    if isinstance(inst.form, GenForm):
        return ["genform"]
    F = inst.form
    deg = inst.f.degree
    if not F.is_pure:
        return ["general"]
    out = []
    if deg == 4:
        out.append("deg4")
    if trinomial_shape(inst.f) is not None:
        out.append("trinomial")
    if deg == 6:
        out.append("deg6")
    if deg is not None and deg <= 6:
        out.append("pure6")
    return out


def construct(inst: ProblemInstance, method: str = "auto", m: int = None, a2=None):
    """Build a curve on S_f; returns (curve, report) with the curve mapped to S_f.

    ``auto`` tries deg4, trinomial, deg6, pure6 (pure cubic fields) or general /
    genform in that order and reports the first error if none applies.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method != "auto":
        return _run(inst, method, m, a2)
    names = _candidates(inst)
    if not names:
        raise NoApplicableMethod(f"no construction handles deg f = {inst.f.degree}")
    first = None
    for name in names:
        try:
            return _run(inst, name, m, a2)
        except NormCurveError as exc:
            first = first or exc
    raise first


def _run(inst, method, m, a2):
    if method == "genform":
        return construct_genform(inst)
    if isinstance(inst.form, GenForm):
        raise NoApplicableMethod(f"{method} needs a norm form")
    if method == "general":
        return construct_general(inst)
    if not inst.field.is_pure:
        raise NoApplicableMethod(f"{method} needs a pure cubic field (a = 0)")
    if method == "trinomial":
        return construct_trinomial(inst, m, a2)
    if method == "deg4":
        return construct_deg4(inst)
    if method == "deg6":
        return construct_deg6(inst)
    return construct_pure6(inst)
