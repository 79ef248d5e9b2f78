from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from normcurves.cubicfield import CubicField, FieldElem
from normcurves.errors import PointNotOnSurface, TrivialPoint
from normcurves.exactmath import MPoly, UPoly
from normcurves.normform import (
    G_VARS,
    BackTransform,
    FieldScale,
    GenForm,
    Invert,
    KnownPoint,
    ProblemInstance,
    ScaleT,
    ShiftT,
    build_G,
    implicit_point,
    monicize_deg6,
    normalize,
)
from normcurves.polyparse import parse_poly

F2 = CubicField(0, 2)
rats = st.fractions(min_value=-20, max_value=20, max_denominator=20)


def test_build_G_examples():
    X1, X2, X3, t = (MPoly.var(v, G_VARS) for v in G_VARS)
    G = build_G(ProblemInstance(F2, UPoly([1], "t")))
    assert G == X1 ** 3 - 2 * X2 ** 3 + 4 * X3 ** 3 + 6 * X1 * X2 * X3 - 1
    G = build_G(ProblemInstance(CubicField(1, 1), UPoly([0, 1], "t")))
    assert G.eval({"X1": 1, "X2": 0, "X3": 0, "t": 1}) == 0


def test_point_validation():
    with pytest.raises(PointNotOnSurface):
        ProblemInstance(F2, parse_poly("t^4+9"), KnownPoint.of(1, 1, 0, 0))
    with pytest.raises(TrivialPoint):
        ProblemInstance(F2, parse_poly("t^4-1"), KnownPoint.of(0, 0, 0, 1))
    with pytest.raises(PointNotOnSurface):
        ProblemInstance(F2, parse_poly("t^4+1"), KnownPoint.of(1, 0, 0))
    ProblemInstance(F2, parse_poly("2t^6+1"), KnownPoint.of(0, -1, 0))


def test_normalize_example():
    inst = ProblemInstance(F2, parse_poly("t^4+9"), KnownPoint.of(1, 1, 1, 0))
    target = normalize(inst)
    assert target.g == UPoly([1, 0, 0, 0, Fraction(1, 9)], "t")
    (step,) = target.back.steps
    assert isinstance(step, FieldScale)
    assert step.e == (Fraction(1, 3), Fraction(-1, 3), 0)


def test_normalize_identity_and_trivial():
    inst = ProblemInstance(F2, parse_poly("1 + t^2"), KnownPoint.of(1, 0, 0, 0))
    assert normalize(inst).back.is_identity()
    with pytest.raises(TrivialPoint):
        normalize(ProblemInstance(F2, parse_poly("t^2 - 1")))


@settings(max_examples=100)
@given(rats, rats, rats, rats.filter(bool), st.lists(rats, min_size=1, max_size=6), rats, rats)
def test_normalize_maps_points(x, y, z, t0, cs, u1, tt):
    """The chain sends the base point to the known point and scales norms by Norm(e)."""
    e = FieldElem(x, y, z)
    if F2.norm(e) == 0:
        return
    f = UPoly(cs, "t")
    f = f + (F2.norm(e) - f.eval(t0))
    inst = ProblemInstance(F2, f, KnownPoint(x, y, z, t0))
    target = normalize(inst)
    P = target.back.apply((Fraction(1), Fraction(0), Fraction(0), Fraction(0)))
    assert P == (x, y, z, t0)
    Q = (u1, Fraction(0), Fraction(0), tt)
    lhs = F2.norm(FieldElem(*target.back.apply(Q)[:3]))
    assert lhs == F2.norm(FieldElem(*Q[:3])) * F2.norm(e)


def test_implicit_point():
    assert implicit_point(ProblemInstance(F2, parse_poly("t^5+8"))) == KnownPoint.of(2, 0, 0, 0)
    assert implicit_point(ProblemInstance(F2, parse_poly("-27t^6+t+2"))) == KnownPoint.of(-3, 0, 0)
    assert implicit_point(ProblemInstance(F2, parse_poly("2t^6+t+2"))) is None


def test_steps_round_trip():
    P = (Fraction(2), Fraction(-1, 3), Fraction(5), Fraction(7, 2))
    chain = BackTransform((ShiftT(Fraction(1, 2)), Invert(), FieldScale.by(F2, (1, 1, 1)),
                           ScaleT(Fraction(-3))))
    assert chain.invert(chain.apply(P)) == P
    assert Invert().apply(Invert().apply(P)) == P


def test_invert_maps_surfaces():
    """Point on S_g with g(T) = T^6 f(1/T) maps to a point on S_f."""
    f = parse_poly("t^6 + t^4 + 1")
    g = f.reverse(6)
    T = Fraction(2, 3)
    # (X, 0, 0) with X^3 = g(T) needs a cube; use the field instead
    inst_f = ProblemInstance(F2, f)
    Y = (Fraction(1), Fraction(0), Fraction(0), Fraction(0))  # on S_g since g(0) = 1
    assert ProblemInstance(F2, g).contains(*Y)
    # T = 0 maps to infinity, so check a generic identity instead
    lhs = F2.norm(FieldElem(*Invert().apply((Fraction(1), Fraction(1), Fraction(0), T))[:3]))
    assert lhs == F2.norm(FieldElem(1, 1, 0)) / T ** 6
    assert inst_f.f.eval(1 / T) == g.eval(T) / T ** 6


def test_monicize_examples():
    F = F2
    f = parse_poly("t^6 + t^4 + 1")
    h_inst, back = monicize_deg6(ProblemInstance(F, f, KnownPoint.of(1, 0, 0)))
    assert h_inst.f == f and back.is_identity()
    f = parse_poly("t^6 + 6t^5 + 1")
    h_inst, back = monicize_deg6(ProblemInstance(F, f, KnownPoint.of(1, 0, 0)))
    assert back.steps == (ShiftT(Fraction(-1)),)
    assert h_inst.f == f.taylor_shift(-1)
    assert h_inst.f.coeff(5) == 0 and h_inst.f.lc == 1


@settings(max_examples=60)
@given(st.lists(rats, min_size=6, max_size=6), rats, rats, rats, rats, rats)
def test_monicize_chain_maps_points(cs, x, y, z, t0, tt):
    e = FieldElem(x, y, z)
    N = F2.norm(e)
    if N == 0:
        return
    f = UPoly(cs + [Fraction(1)], "t")
    f = f + (N - f.eval(t0))
    inst = ProblemInstance(F2, f, KnownPoint(x, y, z, t0))
    h_inst, back = monicize_deg6(inst)
    h = h_inst.f
    assert h.lc == 1 and h.coeff(5) == 0
    # Norm(out) - f(t_out) = k(T) * (Norm(Y) - h(T)) with k independent of Y,
    # so the chain carries S_h into S_f
    if tt == 0:
        return
    ratios = set()
    for Y in ((Fraction(1), Fraction(2), Fraction(-1)), (Fraction(-3), Fraction(0), Fraction(1, 2))):
        try:
            out = back.apply(Y + (tt,))
        except ZeroDivisionError:
            return
        rhs = F2.norm(FieldElem(*Y)) - h.eval(tt)
        if rhs == 0:
            return
        ratios.add((F2.norm(FieldElem(*out[:3])) - f.eval(out[3])) / rhs)
    assert len(ratios) == 1 and 0 not in ratios


def test_genform_protocol():
    form = GenForm(1, 2, 3, 4, 5)
    assert form.form((1, 1, 1)) == 1 + 1 + 2 + (3 + 4 + 5)
    assert form.form_mpoly().eval({"X1": 1, "X2": 1, "X3": 1}) == 16
