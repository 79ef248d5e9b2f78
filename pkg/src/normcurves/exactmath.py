"""Exact polynomial and rational-function arithmetic over Q.

Scalars are :class:`fractions.Fraction`.  Three containers are provided:

* :class:`UPoly` -- dense univariate polynomial, coefficients ascending.
* :class:`MPoly` -- sparse multivariate polynomial over a named variable list.
* :class:`RatFunc` -- reduced quotient of two :class:`UPoly` in one variable,
  denominator monic.

All objects are immutable.  Multiplication clears denominators and convolves
integer vectors, which keeps the Fraction overhead linear in the output size.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

Rational = Fraction
Scalar = Union[int, Fraction]


def to_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def parse_rational(s: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; decimals and floats are refused."""
    s = s.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not an exact rational: {s!r}") from None
    if d == 0:
        raise ZeroDivisionError(f"zero denominator in {s!r}")
    return Fraction(n, d)


def format_rational(x: Fraction) -> str:
    x = to_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def integer_cube_root(n: int) -> int:
    """Largest integer r with r**3 <= n (n >= 0), by bisection."""
    if n < 0:
        raise ValueError("negative argument")
    lo, hi = 0, 1
    while hi ** 3 <= n:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid ** 3 <= n:
            lo = mid
        else:
            hi = mid
    return lo


def rational_cube_root(x: Fraction):
    """Exact cube root of a rational, or None if x is not a cube in Q."""
    x = to_rational(x)
    sign = -1 if x < 0 else 1
    n, d = abs(x.numerator), x.denominator
    rn, rd = integer_cube_root(n), integer_cube_root(d)
    if rn ** 3 != n or rd ** 3 != d:
        return None
    return sign * Fraction(rn, rd)


def is_rational_cube(x) -> bool:
    return rational_cube_root(x) is not None


# -- integer-vector helpers ---------------------------------------------------

def _clear(coeffs: Sequence[Fraction]) -> Tuple[list, int]:
    den = 1
    for c in coeffs:
        if c.denominator != 1:
            den = lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _conv(a: Sequence[int], b: Sequence[int]) -> list:
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return out


def _content(v: Sequence[int]) -> int:
    return reduce(gcd, v, 0)


def _primitive(v: Sequence[int]) -> list:
    g = _content(v)
    if g == 0:
        return list(v)
    if v[-1] < 0:
        g = -g
    return [c // g for c in v]


def _strip(v: list) -> list:
    while v and not v[-1]:
        v.pop()
    return v


def _int_prem(a: list, b: list) -> list:
    """Pseudo-remainder of integer vectors (ascending), b nonzero."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for i, bc in enumerate(b):
            a[i + shift] -= la * bc
        _strip(a)
        if a:
            a = _primitive(a)
    return a


class UPoly:
    """Dense univariate polynomial with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``var**i``.  The zero polynomial has
    an empty coefficient tuple and ``degree`` equal to ``None``.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "u"):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)
        self.var = var

    @classmethod
    def const(cls, c, var: str = "u") -> "UPoly":
        return cls([c], var)

    @classmethod
    def x(cls, var: str = "u") -> "UPoly":
        return cls([0, 1], var)

    @classmethod
    def monomial(cls, c, n: int, var: str = "u") -> "UPoly":
        return cls([0] * n + [c], var)

    @classmethod
    def _from_ints(cls, ints: Sequence[int], den: int, var: str) -> "UPoly":
        p = cls.__new__(cls)
        v = _strip(list(ints))
        p.coeffs = tuple(Fraction(c, den) for c in v)
        p.var = var
        return p

    # -- basic queries
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            if self.is_constant() and other.is_constant():
                return self.coeffs == other.coeffs
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.coeff(0) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.var if not self.is_constant() else None, self.coeffs))

    def __repr__(self):
        return f"UPoly({[format_rational(c) for c in self.coeffs]!r}, var={self.var!r})"

    def __str__(self):
        from .polyparse import format_poly
        return format_poly(self)

    # -- arithmetic
    def _coerce(self, other) -> "UPoly":
        if isinstance(other, UPoly):
            if other.var != self.var and not (other.is_constant() or self.is_constant()):
                raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return UPoly([other], self.var)
        return NotImplemented

    def _var_with(self, other: "UPoly") -> str:
        if self.is_constant() and not other.is_constant():
            return other.var
        return self.var

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UPoly([self.coeff(i) + o.coeff(i) for i in range(n)], self._var_with(o))

    __radd__ = __add__

    def __neg__(self):
        return UPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UPoly([c * other for c in self.coeffs], self.var)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        var = self._var_with(o)
        if not self.coeffs or not o.coeffs:
            return UPoly((), var)
        a, da = _clear(self.coeffs)
        b, db = _clear(o.coeffs)
        return UPoly._from_ints(_conv(a, b), da * db, var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = UPoly([1], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return UPoly([c / other for c in self.coeffs], self.var)
        return NotImplemented

    def __divmod__(self, other: "UPoly"):
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return UPoly((), self.var), self
        quo = [Fraction(0)] * (dq + 1)
        inv = 1 / o.lc
        m = len(o.coeffs) - 1
        for k in range(dq, -1, -1):
            c = rem[k + m] * inv
            quo[k] = c
            if c:
                for i, oc in enumerate(o.coeffs):
                    rem[k + i] -= c * oc
        var = self._var_with(o)
        return UPoly(quo, var), UPoly(rem[:m], var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UPoly") -> "UPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element (Fraction, UPoly, RatFunc)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc if not isinstance(acc, int) else Fraction(acc)

    def eval(self, x) -> Fraction:
        x = to_rational(x)
        if not self.coeffs:
            return Fraction(0)
        cs, den = _clear(self.coeffs)
        n, d = x.numerator, x.denominator
        # homogeneous Horner: sum c_i n^i d^(m-i)
        acc = 0
        dp = 1
        for c in reversed(cs):
            acc = acc * n + c * dp
            dp *= d
        m = len(cs) - 1
        return Fraction(acc, den * d ** m)

    # -- transformations
    def derivative(self) -> "UPoly":
        return UPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        return self / self.lc

    def with_var(self, var: str) -> "UPoly":
        return UPoly(self.coeffs, var)

    def taylor_shift(self, s) -> "UPoly":
        """Return p(x + s)."""
        s = to_rational(s)
        out = UPoly((), self.var)
        lin = UPoly([s, 1], self.var)
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def scale_arg(self, lam) -> "UPoly":
        """Return p(lam * x)."""
        lam = to_rational(lam)
        return UPoly([c * lam ** i for i, c in enumerate(self.coeffs)], self.var)

    def reverse(self, n: int = None) -> "UPoly":
        """Return x**n * p(1/x); n defaults to the degree."""
        if n is None:
            n = self.degree or 0
        if self.degree is not None and self.degree > n:
            raise ValueError("reversal length below degree")
        cs = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return UPoly(reversed(cs), self.var)

    def compose(self, other: "UPoly") -> "UPoly":
        """Return self(other)."""
        out = UPoly((), other.var)
        for c in reversed(self.coeffs):
            out = out * other + c
        return out

    def integer_primitive(self) -> list:
        """Primitive integer coefficient vector with positive leading entry."""
        ints, _ = _clear(self.coeffs)
        return _primitive(ints)

    def rational_roots(self) -> list:
        return rational_roots(self)


def poly_gcd(p: UPoly, q: UPoly) -> UPoly:
    """Monic gcd over Q (modular algorithm, see :func:`_int_gcd`)."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials")
    var = p._var_with(q) if isinstance(q, UPoly) else p.var
    if p.is_zero():
        return q.monic().with_var(var)
    if q.is_zero():
        return p.monic().with_var(var)
    if p.is_constant() or q.is_constant():
        return UPoly([1], var)
    g = _int_gcd(p.integer_primitive(), q.integer_primitive())
    return UPoly._from_ints(g, 1, var).monic()


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    bases = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in bases:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _large_primes():
    n = (1 << 62) - 1
    while True:
        if _is_prime(n):
            yield n
        n -= 2


_PRIMES: list = []
_PRIME_SOURCE = _large_primes()


def _prime(i: int) -> int:
    while len(_PRIMES) <= i:
        _PRIMES.append(next(_PRIME_SOURCE))
    return _PRIMES[i]


def _int_gcd(a: list, b: list) -> list:
    """Primitive integer gcd of primitive integer vectors (ascending).

    Gcds modulo word-size primes are scaled to leading coefficient
    gcd(lc a, lc b) and combined by CRT; a candidate is accepted once it
    divides both inputs.  Primes dividing a leading coefficient are skipped,
    and a modular gcd of higher degree than seen before marks an unlucky prime.
    """
    gamma = gcd(a[-1], b[-1])
    best = None  # (degree, residues, modulus)
    last = None
    i = 0
    while True:
        p = _prime(i)
        i += 1
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        g = _modp_gcd([c % p for c in a], [c % p for c in b], p)
        if len(g) == 1:
            return [1]
        scale = gamma * pow(g[-1], -1, p) % p
        g = [c * scale % p for c in g]
        if best is None or len(g) < len(best[1]):
            best = (len(g), g, p)
            last = None
        elif len(g) > len(best[1]):
            continue
        else:
            _, h, m = best
            inv = pow(m, -1, p)
            h = [hc + m * ((gc - hc) * inv % p) for hc, gc in zip(h, g)]
            best = (len(h), h, m * p)
        _, h, m = best
        cand = [c - m if c > m // 2 else c for c in h]
        if cand == last:
            cand = _primitive(cand)
            if not _int_prem(a, cand) and not _int_prem(b, cand):
                return cand
        last = [c - m if c > m // 2 else c for c in h]


def squarefree_part(p: UPoly) -> UPoly:
    if p.is_constant():
        return p.monic() if not p.is_zero() else p
    return p.exact_div(poly_gcd(p, p.derivative())).monic()


def _small_primes():
    n = 3
    while True:
        if all(n % k for k in range(3, int(n ** 0.5) + 1, 2)):
            yield n
        n += 2


def rational_roots(p: UPoly) -> list:
    """All rational roots of a nonzero polynomial, sorted, without multiplicity.

    The squarefree part S is turned into a monic integer polynomial Q with
    Q(lc*x) = lc**(n-1) S(x); integer roots of Q are found modulo a prime
    where S stays squarefree and Hensel-lifted past the Cauchy bound.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every root")
    roots = set()
    s_int = p.integer_primitive()
    # strip factors of x first
    k = 0
    while k < len(s_int) and s_int[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
        s_int = s_int[k:]
    if len(s_int) <= 1:
        return sorted(roots)
    S = squarefree_part(UPoly._from_ints(s_int, 1, p.var)).integer_primitive()
    n = len(S) - 1
    lc = S[-1]
    Q = [S[i] * lc ** (n - 1 - i) for i in range(n)] + [1]
    bound = 1 + max(abs(c) for c in Q[:-1])
    dS = [i * S[i] for i in range(1, n + 1)]
    for ell in _small_primes():
        if lc % ell == 0:
            continue
        sm = _strip([c % ell for c in S])
        dm = _strip([c % ell for c in dS])
        if len(sm) - 1 != n or not dm:
            continue
        if len(_modp_gcd(sm, dm, ell)) == 1:
            break
    qm = [c % ell for c in Q]
    dQ = [i * Q[i] for i in range(1, n + 1)]
    base = [y for y in range(ell) if _eval_mod(qm, y, ell) == 0]
    target = 2 * bound + 1
    for y in base:
        mod = ell
        while mod < target:
            mod = mod * mod
            fy = _eval_mod(Q, y, mod)
            dy = _eval_mod(dQ, y, mod)
            y = (y - fy * pow(dy, -1, mod)) % mod
        if y > mod // 2:
            y -= mod
        if _eval_int(Q, y) == 0:
            roots.add(Fraction(y, lc))
    return sorted(roots)


def _eval_mod(v, y, m):
    acc = 0
    for c in reversed(v):
        acc = (acc * y + c) % m
    return acc


def _eval_int(v, y):
    acc = 0
    for c in reversed(v):
        acc = acc * y + c
    return acc


def _modp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b) and a:
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for i, bc in enumerate(b):
                a[i + shift] = (a[i + shift] - c * bc) % p
            _strip(a)
        a, b = b, a
    return a


# -- multivariate ---------------------------------------------------------------

Monomial = Tuple[int, ...]


class MPoly:
    """Sparse polynomial over an ordered tuple of variable names.

    Terms map exponent tuples to nonzero Fractions.  Two MPolys are equal iff
    they have the same variables and the same term dictionary.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[Monomial, Scalar] = ()):
        self.vars: Tuple[str, ...] = tuple(vars)
        clean: Dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        nv = len(self.vars)
        for e, c in items:
            e = tuple(e)
            if len(e) != nv:
                raise ValueError("exponent length does not match variables")
            c = to_rational(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def _raw(cls, vars, terms) -> "MPoly":
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        return p

    @classmethod
    def var(cls, name: str, vars: Sequence[str]) -> "MPoly":
        vars = tuple(vars)
        e = tuple(1 if v == name else 0 for v in vars)
        if name not in vars:
            raise ValueError(f"unknown variable {name!r}")
        return cls(vars, {e: 1})

    @classmethod
    def const(cls, c, vars: Sequence[str]) -> "MPoly":
        return cls(vars, {(0,) * len(tuple(vars)): c})

    @classmethod
    def from_upoly(cls, p: UPoly, vars: Sequence[str] = None) -> "MPoly":
        vars = tuple(vars) if vars is not None else (p.var,)
        if not p.is_constant() and p.var not in vars:
            raise ValueError(f"variable {p.var!r} not in {vars}")
        idx = vars.index(p.var) if p.var in vars else 0
        terms = {}
        for i, c in enumerate(p.coeffs):
            if c:
                e = [0] * len(vars)
                if vars:
                    e[idx] = i
                elif i:
                    raise ValueError("no variable to hold a non-constant polynomial")
                terms[tuple(e)] = c
        return cls._raw(vars, terms)

    def to_upoly(self, var: str = None) -> UPoly:
        """Convert to a UPoly; every other variable must be absent."""
        if var is None:
            live = [v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms)]
            if len(live) > 1:
                raise ValueError(f"not univariate: {live}")
            var = live[0] if live else (self.vars[0] if self.vars else "u")
        idx = self.vars.index(var) if var in self.vars else None
        cs: Dict[int, Fraction] = {}
        for e, c in self.terms.items():
            if any(x for i, x in enumerate(e) if i != idx):
                raise ValueError(f"not univariate in {var!r}")
            d = e[idx] if idx is not None else 0
            cs[d] = c
        n = max(cs) + 1 if cs else 0
        return UPoly([cs.get(i, 0) for i in range(n)], var)

    def embed(self, vars: Sequence[str]) -> "MPoly":
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = []
        for v in self.vars:
            if v not in vars:
                if any(e[self.vars.index(v)] for e in self.terms):
                    raise ValueError(f"variable {v!r} missing from target universe")
                pos.append(None)
            else:
                pos.append(vars.index(v))
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for i, x in enumerate(e):
                if x:
                    ne[pos[i]] = x
            terms[tuple(ne)] = c
        return MPoly._raw(vars, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=None)

    def degree_in(self, var: str):
        i = self.vars.index(var)
        return max((e[i] for e in self.terms), default=None)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * len(self.vars): other}
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MPoly({self.vars}, {len(self.terms)} terms)"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if x == 1 else f"{v}^{x}" for v, x in zip(self.vars, e) if x
            )
            if not mono:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{format_rational(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable universe mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other, self.vars)
        if isinstance(other, UPoly):
            return MPoly.from_upoly(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MPoly._raw(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly._raw(self.vars, {})
            return MPoly._raw(self.vars, {e: c * other for e, c in self.terms.items()})
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.terms or not o.terms:
            return MPoly._raw(self.vars, {})
        ea, ca = zip(*self.terms.items())
        eb, cb = zip(*o.terms.items())
        ia, da = _clear(ca)
        ib, db = _clear(cb)
        acc: Dict[Monomial, int] = {}
        for e1, c1 in zip(ea, ia):
            for e2, c2 in zip(eb, ib):
                e = tuple(x + y for x, y in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        den = da * db
        return MPoly._raw(self.vars, {e: Fraction(c, den) for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = MPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def eval(self, values: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at rational values for every variable."""
        missing = [v for v in self.vars if v not in values]
        if missing:
            raise ValueError(f"missing values for {missing}")
        xs = [to_rational(values[v]) for v in self.vars]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(xs, e):
                if k:
                    term *= x ** k
            total += term
        return total

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate with arbitrary ring elements (Fraction, RatFunc, ...)."""
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(self.vars, e):
                if k:
                    term = term * values[v] ** k
            total = total + term
        return total

    def coefficients_in(self, var: str) -> Dict[int, "MPoly"]:
        """Collect by powers of ``var``; the coefficients keep the full variable list."""
        i = self.vars.index(var)
        out: Dict[int, Dict[Monomial, Fraction]] = {}
        for e, c in self.terms.items():
            k = e[i]
            ne = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[ne] = c
        return {k: MPoly._raw(self.vars, t) for k, t in out.items()}

    def substitute(self, bindings: Mapping[str, object]):
        """Substitute variables; returns ``(numerator, denominator)``.

        Each binding is an MPoly, UPoly, scalar, RatFunc, or a pair
        ``(MPoly numerator, UPoly denominator)``.  Variables bound to the same
        denominator share it: the denominator of the result is the product of
        each distinct binding denominator raised to the largest total degree
        its variables reach in a single term.  Hence
        ``numerator / denominator == self(bindings)`` exactly.
        """
        for v in bindings:
            if v not in self.vars:
                raise ValueError(f"binding references unknown variable {v!r}")
        norm: Dict[str, Tuple[object, UPoly]] = {}
        extra: list = []
        for v, val in bindings.items():
            if isinstance(val, tuple):
                num, den = val
            elif isinstance(val, RatFunc):
                num, den = val.num, val.den
            else:
                num, den = val, UPoly([1])
            if isinstance(den, (int, Fraction)):
                den = UPoly([den])
            if den.is_zero():
                raise ZeroDivisionError(f"zero denominator bound to {v!r}")
            norm[v] = (num, den)
            for part in (num, den):
                names = part.vars if isinstance(part, MPoly) else (
                    (part.var,) if isinstance(part, UPoly) and not part.is_constant() else ())
                for name in names:
                    if name not in extra:
                        extra.append(name)
        out_vars = tuple(v for v in self.vars if v not in bindings)
        out_vars = out_vars + tuple(v for v in extra if v not in out_vars)

        def lift(x) -> MPoly:
            if isinstance(x, MPoly):
                return x.embed(out_vars)
            if isinstance(x, UPoly):
                return MPoly.from_upoly(x, out_vars) if not x.is_constant() else MPoly.const(x.coeff(0), out_vars)
            return MPoly.const(x, out_vars)

        groups: Dict[UPoly, list] = {}
        for v, (num, den) in norm.items():
            if den.is_constant():
                norm[v] = (lift(num) * (1 / den.coeff(0)), None)
                continue
            key = den.monic()
            scale = den.lc
            norm[v] = (lift(num) * (1 / scale), key)
            groups.setdefault(key, []).append(self.vars.index(v))
        group_deg = {
            key: max((sum(e[i] for i in idx) for e in self.terms), default=0)
            for key, idx in groups.items()
        }
        den_lift = {key: lift(key) for key in groups}
        pow_cache: Dict[Tuple[object, int], MPoly] = {}

        def power(key, base: MPoly, k: int) -> MPoly:
            if (key, k) not in pow_cache:
                pow_cache[key, k] = base ** k
            return pow_cache[key, k]

        result = MPoly._raw(out_vars, {})
        unbound = [(self.vars.index(v), out_vars.index(v)) for v in self.vars if v not in bindings]
        for e, c in self.terms.items():
            mono = [0] * len(out_vars)
            for si, oi in unbound:
                mono[oi] = e[si]
            term = MPoly._raw(out_vars, {tuple(mono): c})
            used: Dict[UPoly, int] = {}
            for v, (num, key) in norm.items():
                k = e[self.vars.index(v)]
                if k:
                    term = term * power(("n", v), num, k)
                    if key is not None:
                        used[key] = used.get(key, 0) + k
            for key in groups:
                k = group_deg[key] - used.get(key, 0)
                if k:
                    term = term * power(("d", key), den_lift[key], k)
            result = result + term
        var = next((k.var for k in group_deg), extra[0] if extra else "u")
        den = UPoly([1], var)
        for key, d in group_deg.items():
            den = den * key ** d
        return result, den


# -- rational functions ---------------------------------------------------------

class RatFunc:
    """Reduced quotient num/den of univariate polynomials, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str = None, _reduced: bool = False):
        if var is None:
            var = num.var if isinstance(num, UPoly) else (den.var if isinstance(den, UPoly) else "u")
        if not isinstance(num, UPoly):
            num = UPoly([num], var)
        if den is None:
            den = UPoly([1], var)
        elif not isinstance(den, UPoly):
            den = UPoly([den], var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not num.is_constant() and not den.is_constant() and num.var != den.var:
            raise ValueError("numerator and denominator variables differ")
        var = num.var if not num.is_constant() else (den.var if not den.is_constant() else var)
        if not _reduced:
            if num.is_zero():
                den = UPoly([1], var)
            elif not den.is_constant():
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            lc = den.lc
            if lc != 1:
                num = num / lc
                den = den / lc
        self.num = num.with_var(var)
        self.den = den.with_var(var)

    @property
    def var(self) -> str:
        return self.num.var

    @classmethod
    def const(cls, c, var: str = "u") -> "RatFunc":
        return cls(UPoly([c], var), UPoly([1], var), _reduced=True)

    @classmethod
    def x(cls, var: str = "u") -> "RatFunc":
        return cls(UPoly.x(var), UPoly([1], var), _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, UPoly)):
            return self == RatFunc(other, var=self.var)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc(({self.num}) / ({self.den}))"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.var != self.var and not (other.is_constant() or self.is_constant()):
                raise ValueError("variable mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other, self.var)
        if isinstance(other, UPoly):
            return RatFunc(other, var=self.var)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.num + self.den * other, self.den, _reduced=True)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        g = poly_gcd(self.den, o.den)
        if g.is_constant():
            return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den, _reduced=True)
        d1 = self.den.exact_div(g)
        d2 = o.den.exact_div(g)
        return RatFunc(self.num * d2 + o.num * d1, d1 * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFunc.const(0, self.var)
            return RatFunc(self.num * other, self.den, _reduced=True)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        g1 = poly_gcd(self.num, o.den) if not self.num.is_zero() else UPoly([1])
        g2 = poly_gcd(o.num, self.den) if not o.num.is_zero() else UPoly([1])
        n1, d2 = (self.num.exact_div(g1), o.den.exact_div(g1)) if not g1.is_constant() else (self.num, o.den)
        n2, d1 = (o.num.exact_div(g2), self.den.exact_div(g2)) if not g2.is_constant() else (o.num, self.den)
        num = n1 * n2
        if num.is_zero():
            return RatFunc.const(0, self.var)
        return RatFunc(num, d1 * d2, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.den, self.num, _reduced=False)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return RatFunc(self.num / other, self.den, _reduced=True)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, _reduced=True)

    def __call__(self, x) -> Fraction:
        return self.eval(x)

    def eval(self, x) -> Fraction:
        d = self.den.eval(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {format_rational(to_rational(x))}")
        return self.num.eval(x) / d

    def derivative(self) -> "RatFunc":
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def degree_pair(self):
        return self.num.degree, self.den.degree


def compose(g: UPoly, r: RatFunc) -> RatFunc:
    """Return g(r) for a polynomial g and rational function r."""
    if g.is_zero():
        return RatFunc.const(0, r.var)
    m = g.degree
    n, d = r.num, r.den
    acc = UPoly((), r.var)
    npow = UPoly([1], r.var)
    dpows = [UPoly([1], r.var)]
    for _ in range(m):
        dpows.append(dpows[-1] * d)
    for i, c in enumerate(g.coeffs):
        if c:
            acc = acc + npow * dpows[m - i] * c
        if i < m:
            npow = npow * n
    return RatFunc(acc, dpows[m])


def poly_lcm(polys: Iterable[UPoly]) -> UPoly:
    out = None
    for p in polys:
        if out is None:
            out = p.monic()
            continue
        g = poly_gcd(out, p)
        out = (out * p).exact_div(g).monic()
    return out
