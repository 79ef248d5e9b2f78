"""Arithmetic in K = Q(alpha) with alpha**3 + a*alpha + b = 0."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import Reducible, ZeroElement
from .exactmath import MPoly, UPoly, rational_roots, to_rational

NORM_VARS = ("X1", "X2", "X3")


class FieldElem(NamedTuple):
    """x + y*alpha + z*alpha**2.  Entries may be any ring elements."""

    x: object
    y: object
    z: object

    @classmethod
    def of(cls, x, y, z) -> "FieldElem":
        return cls(to_rational(x), to_rational(y), to_rational(z))

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0


ONE = FieldElem(Fraction(1), Fraction(0), Fraction(0))


@dataclass(frozen=True)
class CubicField:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", to_rational(self.a))
        object.__setattr__(self, "b", to_rational(self.b))

    @property
    def is_pure(self) -> bool:
        return self.a == 0

    @property
    def discriminant(self) -> Fraction:
        return -4 * self.a ** 3 - 27 * self.b ** 2

    @property
    def minimal_polynomial(self) -> UPoly:
        return UPoly([self.b, self.a, 0, 1], "x")

    def mul(self, e1: FieldElem, e2: FieldElem) -> FieldElem:
        x1, y1, z1 = e1
        x2, y2, z2 = e2
        c0 = x1 * x2
        c1 = x1 * y2 + y1 * x2
        c2 = x1 * z2 + y1 * y2 + z1 * x2
        c3 = y1 * z2 + z1 * y2
        c4 = z1 * z2
        # alpha^3 = -a alpha - b, alpha^4 = -a alpha^2 - b alpha
        a, b = self.a, self.b
        return FieldElem(c0 - b * c3, c1 - a * c3 - b * c4, c2 - a * c4)

    def scale(self, e: FieldElem, vec) -> FieldElem:
        """e * (X1 + X2 alpha + X3 alpha^2) for generic-ring coordinates."""
        return self.mul(FieldElem(*e), FieldElem(*vec))

    def multiplication_matrix(self, e: FieldElem):
        """Columns are e*1, e*alpha, e*alpha^2 in the basis (1, alpha, alpha^2)."""
        cols = [self.mul(e, FieldElem.of(*basis)) for basis in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
        return [[cols[j][i] for j in range(3)] for i in range(3)]

    def norm(self, e) -> object:
        """Norm form evaluated at (x, y, z); works for any commutative ring entries."""
        X1, X2, X3 = e
        a, b = self.a, self.b
        val = X1 ** 3 - b * X2 ** 3 + b ** 2 * X3 ** 3 + 3 * b * X1 * X2 * X3
        if a:
            val = (val + a * X1 * X2 ** 2
                   - (2 * a * X1 ** 2 - a ** 2 * X1 * X3 + a * b * X2 * X3) * X3)
        return val

    def norm_det(self, e: FieldElem) -> Fraction:
        """Determinant of multiplication by e; independent of :meth:`norm`."""
        m = self.multiplication_matrix(FieldElem.of(*e))
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    def inv(self, e: FieldElem) -> FieldElem:
        e = FieldElem.of(*e)
        if e.is_zero():
            raise ZeroElement("zero element has no inverse")
        m = self.multiplication_matrix(e)
        det = self.norm_det(e)
        # Cramer's rule for m @ v = (1, 0, 0)
        rhs = (Fraction(1), Fraction(0), Fraction(0))
        out = []
        for col in range(3):
            mm = [[rhs[i] if j == col else m[i][j] for j in range(3)] for i in range(3)]
            d = (mm[0][0] * (mm[1][1] * mm[2][2] - mm[1][2] * mm[2][1])
                 - mm[0][1] * (mm[1][0] * mm[2][2] - mm[1][2] * mm[2][0])
                 + mm[0][2] * (mm[1][0] * mm[2][1] - mm[1][1] * mm[2][0]))
            out.append(d / det)
        return FieldElem(*out)

    def norm_form(self) -> MPoly:
        xs = [MPoly.var(v, NORM_VARS) for v in NORM_VARS]
        return self.norm(xs)

    def as_dict(self) -> dict:
        from .exactmath import format_rational
        return {"a": format_rational(self.a), "b": format_rational(self.b)}


def field_check(a, b) -> CubicField:
    """Validate that x^3 + a x + b is irreducible over Q."""
    F = CubicField(a, b)
    roots = rational_roots(F.minimal_polynomial)
    if roots:
        raise Reducible(f"x^3 + ({F.a})x + ({F.b}) has the rational root {roots[0]}")
    if F.discriminant == 0:
        raise Reducible("x^3 + a x + b has a repeated root")
    return F


def field_mul(e1, e2, F: CubicField) -> FieldElem:
    return F.mul(FieldElem(*e1), FieldElem(*e2))


def field_inv(e, F: CubicField) -> FieldElem:
    return F.inv(e)


def norm(e, F: CubicField) -> Fraction:
    return F.norm(FieldElem.of(*e))
