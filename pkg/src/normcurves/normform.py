"""Defining polynomial of S_f, the transforms between models, and normalization.

A model change is recorded as a chain of steps.  Each step maps a point
(X1, X2, X3, t) on an inner model to the next model outward; a chain is
stored innermost first.  The steps only use ring operations, so the same
chain maps rational points and rational-function curves alike.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

from .cubicfield import NORM_VARS, CubicField, FieldElem
from .errors import PointNotOnSurface, TrivialPoint
from .exactmath import MPoly, UPoly, format_rational, rational_cube_root, to_rational

G_VARS = NORM_VARS + ("t",)


@dataclass(frozen=True)
class GenForm:
    """X1^3 + a X2^3 + b X3^3 + (c X1 + d X2 + e X3) X2 X3."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    def __post_init__(self):
        for name in "abcde":
            object.__setattr__(self, name, to_rational(getattr(self, name)))

    def form(self, vec):
        X1, X2, X3 = vec
        return (X1 ** 3 + self.a * X2 ** 3 + self.b * X3 ** 3
                + (self.c * X1 + self.d * X2 + self.e * X3) * X2 * X3)

    def form_mpoly(self) -> MPoly:
        return self.form([MPoly.var(v, NORM_VARS) for v in NORM_VARS])

    def as_dict(self) -> dict:
        return {k: format_rational(getattr(self, k)) for k in "abcde"}


# CubicField speaks the same protocol
CubicField.form = CubicField.norm
CubicField.form_mpoly = CubicField.norm_form

Form = Union[CubicField, GenForm]


@dataclass(frozen=True)
class KnownPoint:
    """A rational point; ``t is None`` marks the point at infinity.

    At infinity the triple satisfies Norm(x, y, z) = leading coefficient of f.
    """

    x: Fraction
    y: Fraction
    z: Fraction
    t: Optional[Fraction] = None

    @classmethod
    def of(cls, x, y, z, t=None) -> "KnownPoint":
        return cls(to_rational(x), to_rational(y), to_rational(z),
                   None if t is None else to_rational(t))

    @property
    def at_infinity(self) -> bool:
        return self.t is None

    @property
    def elem(self) -> FieldElem:
        return FieldElem(self.x, self.y, self.z)

    def as_list(self):
        return [format_rational(v) for v in (self.x, self.y, self.z)] + [
            "inf" if self.t is None else format_rational(self.t)]


@dataclass(frozen=True)
class ProblemInstance:
    form: Form
    f: UPoly
    point: Optional[KnownPoint] = None

    def __post_init__(self):
        if self.f.var != "t":
            object.__setattr__(self, "f", self.f.with_var("t"))
        if self.point is not None:
            self.check_point(self.point)

    @property
    def field(self) -> CubicField:
        if not isinstance(self.form, CubicField):
            raise TypeError("instance is not a norm-form equation")
        return self.form

    def check_point(self, P: KnownPoint):
        value = self.form.form(P.elem)
        if P.at_infinity:
            deg = self.f.degree
            if deg is None or deg % 3:
                raise PointNotOnSurface("a point at infinity needs deg f divisible by 3")
            if value != self.f.lc:
                raise PointNotOnSurface(
                    f"form value {value} differs from the leading coefficient {self.f.lc}")
            return
        ft = self.f.eval(P.t)
        if value != ft:
            raise PointNotOnSurface(f"form value {value} differs from f(t0) = {ft}")
        if ft == 0:
            raise TrivialPoint("f(t0) = 0: the point is trivial")

    def with_point(self, P: Optional[KnownPoint]) -> "ProblemInstance":
        return ProblemInstance(self.form, self.f, P)

    def contains(self, X1, X2, X3, t) -> bool:
        return self.form.form((X1, X2, X3)) == self.f.eval(t)


def build_G(inst: ProblemInstance) -> MPoly:
    """Form(X1, X2, X3) - f(t) as an MPoly in X1, X2, X3, t."""
    F = inst.form.form_mpoly().embed(G_VARS)
    return F - MPoly.from_upoly(inst.f, G_VARS)


def implicit_point(inst: ProblemInstance) -> Optional[KnownPoint]:
    """A point read off f alone: a cube f(0), or a cube leading coefficient."""
    f = inst.f
    if f.is_zero():
        return None
    r = rational_cube_root(f.coeff(0))
    if r:
        return KnownPoint(r, Fraction(0), Fraction(0), Fraction(0))
    if f.degree % 3 == 0:
        r = rational_cube_root(f.lc)
        if r:
            return KnownPoint(r, Fraction(0), Fraction(0), None)
    return None


# -- back-transform steps -----------------------------------------------------------

@dataclass(frozen=True)
class ShiftT:
    """Outer t = inner t + s."""

    s: Fraction

    def apply(self, P):
        X1, X2, X3, t = P
        return X1, X2, X3, t + self.s

    def invert(self, P):
        X1, X2, X3, t = P
        return X1, X2, X3, t - self.s

    def as_dict(self):
        return {"step": "shift_t", "s": format_rational(self.s)}


@dataclass(frozen=True)
class ScaleT:
    """Outer t = lam * inner t."""

    lam: Fraction

    def apply(self, P):
        X1, X2, X3, t = P
        return X1, X2, X3, t * self.lam

    def invert(self, P):
        X1, X2, X3, t = P
        return X1, X2, X3, t / self.lam

    def as_dict(self):
        return {"step": "scale_t", "lambda": format_rational(self.lam)}


@dataclass(frozen=True)
class FieldScale:
    """Inner Y = e * X, so outer X = e^-1 * Y; the inner f is the outer f times Norm(e)."""

    field: CubicField
    e: FieldElem
    e_inv: FieldElem

    @classmethod
    def by(cls, field: CubicField, e) -> "FieldScale":
        e = FieldElem.of(*e)
        return cls(field, e, field.inv(e))

    @classmethod
    def dividing_by(cls, field: CubicField, e0) -> "FieldScale":
        """Step whose inner model is the outer one divided by Norm(e0)."""
        e0 = FieldElem.of(*e0)
        return cls(field, field.inv(e0), e0)

    def apply(self, P):
        X1, X2, X3, t = P
        return (*self.field.mul(self.e_inv, FieldElem(X1, X2, X3)), t)

    def invert(self, P):
        X1, X2, X3, t = P
        return (*self.field.mul(self.e, FieldElem(X1, X2, X3)), t)

    def as_dict(self):
        return {"step": "field_scale", "e": [format_rational(v) for v in self.e]}


@dataclass(frozen=True)
class Invert:
    """Outer t = 1/T and X = Y * t^2 (i.e. Y / T^2).  An involution."""

    def apply(self, P):
        Y1, Y2, Y3, T = P
        t = Fraction(1) / T
        t2 = t * t
        return Y1 * t2, Y2 * t2, Y3 * t2, t

    invert = apply

    def as_dict(self):
        return {"step": "invert"}


Step = Union[ShiftT, ScaleT, FieldScale, Invert]


@dataclass(frozen=True)
class BackTransform:
    steps: Tuple[Step, ...] = ()

    def apply(self, P):
        for step in self.steps:
            P = step.apply(P)
        return tuple(P)

    def invert(self, P):
        for step in reversed(self.steps):
            P = step.invert(P)
        return tuple(P)

    def then(self, outer: "BackTransform") -> "BackTransform":
        """This chain followed by ``outer`` (which sits further out)."""
        return BackTransform(self.steps + outer.steps)

    def is_identity(self) -> bool:
        return not self.steps

    def as_list(self):
        return [s.as_dict() for s in self.steps]


@dataclass(frozen=True)
class NormalizedTarget:
    c: Tuple[Fraction, ...]
    back: BackTransform = field(default_factory=BackTransform)

    @property
    def g(self) -> UPoly:
        return UPoly((1,) + tuple(self.c), "t")


def _pad(cs, n=6):
    cs = tuple(to_rational(c) for c in cs)
    return cs + (Fraction(0),) * max(0, n - len(cs))


def normalize(inst: ProblemInstance) -> NormalizedTarget:
    """Move a finite known point to (1, 0, 0, 0) so that g(0) = 1."""
    P = inst.point
    if P is None or P.at_infinity:
        raise TrivialPoint("normalization needs a finite nontrivial point")
    F = inst.field
    c0 = inst.f.eval(P.t)
    if c0 == 0:
        raise TrivialPoint("f(t0) = 0")
    g = inst.f.taylor_shift(P.t) / c0
    steps = []
    if P.elem != (1, 0, 0):
        steps.append(FieldScale.dividing_by(F, P.elem))
    if P.t != 0:
        steps.append(ShiftT(P.t))
    return NormalizedTarget(_pad(g.coeffs[1:]), BackTransform(tuple(steps)))


def monicize_deg6(inst: ProblemInstance):
    """Return (instance with monic h free of t^5, chain from S_h back to S_f).

    The new instance carries the point (1, 0, 0) at infinity.
    """
    if inst.f.degree != 6:
        raise ValueError("monicize_deg6 needs deg f = 6")
    P = inst.point
    if P is None:
        raise TrivialPoint("no known point")
    F = inst.field
    f = inst.f
    outer_to_inner = []
    if not P.at_infinity:
        if f.eval(P.t) == 0:
            raise TrivialPoint("f(t0) = 0")
        if P.t != 0:
            f = f.taylor_shift(P.t)
            outer_to_inner.append(ShiftT(P.t))
        f = f.reverse(6)
        outer_to_inner.append(Invert())
    if P.elem != (1, 0, 0):
        f = f / F.norm(P.elem)
        outer_to_inner.append(FieldScale.dividing_by(F, P.elem))
    assert f.lc == 1
    sigma = -f.coeff(5) / 6
    if sigma:
        f = f.taylor_shift(sigma)
        outer_to_inner.append(ShiftT(sigma))
    back = BackTransform(tuple(reversed(outer_to_inner)))
    h_inst = ProblemInstance(F, f, KnownPoint.of(1, 0, 0, None))
    return h_inst, back
