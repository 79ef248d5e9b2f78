"""Random valid parameter draws (numerators and denominators bounded by HEIGHT)."""
import random
from fractions import Fraction

from normcurves.constructions import EXCEPTIONAL_QUARTIC, except_condition, trinomial_f
from normcurves.cubicfield import CubicField, FieldElem
from normcurves.exactmath import UPoly, is_rational_cube, rational_roots
from normcurves.normform import GenForm, KnownPoint, ProblemInstance

HEIGHT = 20


def rat(rng, height=HEIGHT, nonzero=False):
    while True:
        q = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if q or not nonzero:
            return q


def pure_field(rng):
    while True:
        b = rat(rng, nonzero=True)
        if not is_rational_cube(b):
            return CubicField(0, b)


def general_field(rng):
    while True:
        a, b = rat(rng, nonzero=True), rat(rng)
        F = CubicField(a, b)
        if F.discriminant != 0 and not rational_roots(F.minimal_polynomial):
            return F


def nonzero_elem(rng, height=5):
    while True:
        e = FieldElem(rat(rng, height), rat(rng, height), rat(rng, height))
        if any(e):
            return e


def draw_pure6(rng):
    """(field, c1..c6) with the non-degeneracy condition."""
    F = pure_field(rng)
    while True:
        c = tuple(rat(rng) for _ in range(6))
        if except_condition(c):
            return F, c


def draw_deg4(rng, exceptional=False):
    F = pure_field(rng)
    if exceptional:
        c1 = rat(rng, nonzero=True)
        g = EXCEPTIONAL_QUARTIC.scale_arg(c1 / 6)
        return F, tuple(g.coeffs[1:])
    while True:
        c = tuple(rat(rng) for _ in range(3)) + (rat(rng, nonzero=True),)
        if except_condition(c + (0, 0)):
            return F, c


def draw_deg6(rng):
    """Degree-6 instance with a known point, finite or at infinity."""
    F = pure_field(rng)
    while True:
        e = nonzero_elem(rng)
        cs = [rat(rng) for _ in range(6)] + [rat(rng, nonzero=True)]
        if rng.random() < 0.5:
            cs[6] = F.norm(e)
            P = KnownPoint(*e, None)
        else:
            t0 = rat(rng, 4)
            f = UPoly(cs, "t")
            cs[0] += F.norm(e) - f.eval(t0)
            P = KnownPoint(*e, t0)
        f = UPoly(cs, "t")
        h = _normalized_h(F, f, P)
        if h is not None:
            return ProblemInstance(F, f, P)


def _normalized_h(F, f, P):
    from normcurves.normform import monicize_deg6
    try:
        h_inst, _ = monicize_deg6(ProblemInstance(F, f, P))
    except Exception:
        return None
    g = h_inst.f.reverse(6)
    if g.coeff(2) == 0 and g.coeff(4) == 0 and g.coeff(5) == 0:
        return None
    return g


def draw_trinomial(rng):
    F = pure_field(rng)
    m = rng.randint(1, 3)
    a2, a1, a0 = rat(rng), rat(rng, nonzero=True), rat(rng)
    return F, m, a2, a1, a0


def trinomial_instance(F, m, a2, a1, a0):
    return ProblemInstance(F, trinomial_f(m, a2, a1, a0))


def draw_general(rng):
    F = general_field(rng)
    return F, rat(rng, nonzero=True), rat(rng, nonzero=True), rat(rng)


def draw_genform(rng):
    vals = [rat(rng, nonzero=True) for _ in range(5)]
    vals[3] = rat(rng)  # d may vanish
    form = GenForm(*vals)
    a = [rat(rng) for _ in range(5)]
    a[3] = rat(rng, nonzero=True)
    return form, tuple(a)


def genform_instance(form, a):
    return ProblemInstance(form, UPoly(list(a) + [0, 1], "t"))


def make_rng(seed):
    return random.Random(seed)
