"""Exact certification of curves and generation of rational points."""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .constructions import RationalCurve
from .errors import IdentityFailed, PoleExhaustion
from .exactmath import MPoly, UPoly, format_rational, poly_lcm
from .normform import ProblemInstance, build_G

# u = n/d with |n|, d <= height; the height grows as attempts pile up
_START_HEIGHT = 12
_MAX_ATTEMPTS_PER_POINT = 400


@dataclass
class Certificate:
    cleared_residual: UPoly
    denominator: UPoly
    method: str
    checked_at: List[Fraction] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.cleared_residual.is_zero()

    def digest(self) -> str:
        h = hashlib.sha256()
        for part in (self.method, repr(self.cleared_residual.coeffs), repr(self.denominator.coeffs),
                     ",".join(map(format_rational, self.checked_at))):
            h.update(part.encode())
            h.update(b"\0")
        return h.hexdigest()


@dataclass
class PointRecord:
    u: Fraction
    point: Tuple[Fraction, Fraction, Fraction, Fraction]
    norm_value: Fraction


def cleared_residual(curve: RationalCurve, inst: ProblemInstance) -> Tuple[UPoly, UPoly]:
    """Numerator and denominator of G(X1(u), X2(u), X3(u), t(u)).

    X1..X3 share the lcm L of their denominators, t keeps its own; the
    denominator is L^3 * den(t)^deg f (degrees as demanded by G).
    """
    x1, x2, x3, t = curve.original
    L = poly_lcm([x1.den, x2.den, x3.den]).with_var("u")
    bindings = {}
    for name, c in zip(("X1", "X2", "X3"), (x1, x2, x3)):
        num = (c.num * L.exact_div(c.den)).with_var("u")
        bindings[name] = (MPoly.from_upoly(num, ("u",)), L)
    bindings["t"] = (MPoly.from_upoly(t.num.with_var("u"), ("u",)), t.den.with_var("u"))
    num, den = build_G(inst).substitute(bindings)
    return num.embed(("u",)).to_upoly("u"), den


def _u_stream(seed: int):
    rng = random.Random(seed)
    height = _START_HEIGHT
    tries = 0
    while True:
        tries += 1
        if tries % 64 == 0:
            height *= 2
        yield Fraction(rng.randint(-height, height), rng.randint(1, height))


def _spot_values(curve: RationalCurve, inst: ProblemInstance, count: int, seed: int):
    out = []
    seen = set()
    stream = _u_stream(seed)
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > _MAX_ATTEMPTS_PER_POINT * (count + 1):
            raise PoleExhaustion("could not find enough non-pole parameter values")
        u = next(stream)
        if u in seen:
            continue
        seen.add(u)
        try:
            P = curve.point_at(u)
        except ZeroDivisionError:
            continue
        out.append((u, P))
    return out


def verify_curve_identity(curve: RationalCurve, inst: ProblemInstance,
                          spot_checks: int = 10, seed: int = 0) -> Certificate:
    """Certify that the curve lies on S_f: cleared residual is the zero polynomial."""
    residual, den = cleared_residual(curve, inst)
    if not residual.is_zero():
        raise IdentityFailed(f"nonzero residual of degree {residual.degree}", residual)
    checked = []
    for u, P in _spot_values(curve, inst, spot_checks, seed):
        if not inst.contains(*P):
            raise IdentityFailed(f"point at u = {u} is off the surface")
        checked.append(u)
    return Certificate(residual, den, curve.method, checked)


def fiber_check(curve: RationalCurve) -> bool:
    """True iff t(u) is non-constant, i.e. the curve is not inside a fiber t = const."""
    t = curve.original[3] if curve.back.steps else curve.t
    return not t.is_constant()


def sample_points(curve: RationalCurve, inst: ProblemInstance, count: int,
                  seed: int = 0) -> List[PointRecord]:
    """``count`` exact points on S_f at distinct u with pairwise distinct t."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    records: List[PointRecord] = []
    seen_u = set()
    seen_t = set()
    stream = _u_stream(seed)
    attempts = 0
    while len(records) < count:
        attempts += 1
        if attempts > _MAX_ATTEMPTS_PER_POINT * (count + 1):
            raise PoleExhaustion("could not find enough usable parameter values")
        u = next(stream)
        if u in seen_u:
            continue
        seen_u.add(u)
        try:
            P = curve.point_at(u)
        except ZeroDivisionError:
            continue
        X1, X2, X3, t = P
        if t in seen_t:
            continue
        value = inst.form.form((X1, X2, X3))
        if value != inst.f.eval(t):
            raise IdentityFailed(f"point at u = {u} is off the surface")
        if value == 0:
            continue
        seen_t.add(t)
        records.append(PointRecord(u, P, value))
    return records
