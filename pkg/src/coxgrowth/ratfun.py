"""Exact polynomial and rational-function arithmetic over Z in one variable t.

Everything here is pure integer (or Fraction) arithmetic; there is no
floating point anywhere in the package.  IntPoly is a dense integer
polynomial, RatFun a fully normalized quotient of two IntPoly values.
RatFun normalization is canonical, so structural equality coincides with
equality of rational functions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(int(x) for x in c)


class IntPoly:
    """Dense integer polynomial; coeffs[k] is the coefficient of t^k.

    Canonical form: no trailing zeros, the zero polynomial is ().
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("IntPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def t_power(cls, k, c=1):
        """c * t^k"""
        return cls((0,) * k + (c,))

    @classmethod
    def one_minus_t(cls, k):
        """1 - t^k (k >= 1)"""
        if k < 1:
            raise ValueError("need k >= 1")
        return cls((1,) + (0,) * (k - 1) + (-1,))

    # -- basic queries ------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        # without this, iteration would run off the end through
        # __getitem__, which never raises
        return iter(self.coeffs)

    def constant_term(self):
        return self[0]

    def content(self):
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    def scale(self, c):
        return IntPoly(tuple(c * x for x in self.coeffs))

    def shift(self, k):
        """Multiply by t^k (k >= 0)."""
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return poly_str(self)


def poly_str(p, var="t"):
    if p.is_zero():
        return "0"
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            tv = var if k == 1 else f"{var}^{k}"
            if c == 1:
                terms.append(tv)
            elif c == -1:
                terms.append(f"-{tv}")
            else:
                terms.append(f"{c}*{tv}")
    out = terms[0]
    for s in terms[1:]:
        out += f" - {s[1:]}" if s.startswith("-") else f" + {s}"
    return out


def poly_divmod(a, b):
    """Division in Q[t]; returns (q, r) with rational coefficients."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in a.coeffs]
    q = [Fraction(0)] * max(0, len(r) - len(b.coeffs) + 1)
    bl = Fraction(b.coeffs[-1])
    db = b.degree
    while len(r) >= len(b.coeffs) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b.coeffs):
            break
        k = len(r) - 1 - db
        f = r[-1] / bl
        q[k] = f
        for i, c in enumerate(b.coeffs):
            r[k + i] -= f * c
        r.pop()
    return q, r


def poly_exact_div(a, b):
    """a / b asserting an exact integer quotient."""
    q, r = poly_divmod(a, b)
    if any(r):
        raise ValueError("inexact polynomial division")
    if any(c.denominator != 1 for c in q):
        raise ValueError("non-integer quotient")
    return IntPoly(tuple(int(c) for c in q))


def _primitive(p):
    c = p.content()
    if c in (0, 1):
        return p
    return IntPoly(tuple(x // c for x in p.coeffs))


def poly_gcd(a, b):
    """Gcd in Q[t], returned as a primitive integer polynomial with
    positive leading coefficient.  Primitive-part Euclid keeps the
    intermediate coefficients in Z."""
    a, b = _primitive(a), _primitive(b)
    while not b.is_zero():
        # pseudo-remainder: lc(b)^k * a mod b stays integral
        d = a.degree - b.degree
        if d < 0:
            a, b = b, a
            continue
        lc = b.coeffs[-1]
        r = a.scale(lc ** (d + 1))
        q, rem = poly_divmod(r, b)
        rem_int = IntPoly(tuple(int(c) for c in rem))
        a, b = b, _primitive(rem_int)
    if a.is_zero():
        return a
    if a.coeffs[-1] < 0:
        a = -a
    return a


class RatFun:
    """Normalized quotient of integer polynomials.

    Invariants: den != 0; num and den are coprime in Q[t]; the joint
    integer content of num and den is 1; the lowest nonzero coefficient
    of den is positive.  This makes the representation canonical.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = IntPoly.const(num)
        if den is None:
            den = IntPoly.one()
        elif isinstance(den, int):
            den = IntPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = _normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFun is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(IntPoly.zero())

    @classmethod
    def one(cls):
        return cls(IntPoly.one())

    @classmethod
    def from_poly(cls, p):
        return cls(p)

    # -- queries ------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den == IntPoly.one()

    def as_poly(self):
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, IntPoly):
            return RatFun(other)
        if isinstance(other, int):
            return RatFun(IntPoly.const(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        # canonical form, but cross-multiplication is the contract
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RatFun({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    # -- serialization ------------------------------------------------

    def to_json(self):
        """JSON-friendly dict with decimal-string coefficients."""
        return {"num": [str(c) for c in self.num.coeffs],
                "den": [str(c) for c in self.den.coeffs]}

    @classmethod
    def from_json(cls, obj):
        return cls(IntPoly(tuple(int(c) for c in obj["num"])),
                   IntPoly(tuple(int(c) for c in obj["den"])))

    def to_latex(self):
        num = poly_str(self.num)
        if self.is_polynomial():
            return num
        return r"\frac{%s}{%s}" % (num, factored_den_str(self.den))


def _normalize(num, den):
    if num.is_zero():
        return IntPoly.zero(), IntPoly.one()
    g = poly_gcd(num, den)
    if g.degree > 0:
        num = poly_exact_div(num, g)
        den = poly_exact_div(den, g)
    c = gcd(num.content(), den.content())
    if c > 1:
        num = IntPoly(tuple(x // c for x in num.coeffs))
        den = IntPoly(tuple(x // c for x in den.coeffs))
    low = next(c for c in den.coeffs if c != 0)
    if low < 0:
        num, den = -num, -den
    return num, den


def expand(r, n):
    """Coefficients c_0..c_n of the power-series expansion of r at t=0.

    Requires den(0) != 0.  Entries are ints whenever exact, Fractions
    otherwise.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    d0 = r.den.constant_term()
    if d0 == 0:
        raise ValueError("not a power series at 0 (denominator vanishes)")
    out = []
    for k in range(n + 1):
        acc = Fraction(r.num[k])
        for i in range(1, min(k, r.den.degree) + 1):
            acc -= r.den[i] * out[k - i]
        c = acc / d0
        out.append(c)
    return [int(c) if c.denominator == 1 else c for c in out]


def monomial_shift(r, d):
    """r * t^d in the field of rational functions; d may be negative."""
    if d >= 0:
        return RatFun(r.num.shift(d), r.den)
    return RatFun(r.num, r.den.shift(-d))


def factored_den(den):
    """Factor den as c * prod (1 - t^k) as far as possible.

    Returns (c: IntPoly remainder, [k1, k2, ...]).  All pipeline
    denominators factor completely into such terms.
    """
    best = [den, []]

    def rec(rest, kmax, acc):
        if rest.degree < best[0].degree:
            best[0], best[1] = rest, list(acc)
        if best[0].degree == 0:
            return True
        for k in range(min(kmax, rest.degree), 0, -1):
            try:
                q = poly_exact_div(rest, IntPoly.one_minus_t(k))
            except ValueError:
                continue
            acc.append(k)
            done = rec(q, k, acc)
            acc.pop()
            if done:
                return True
        return False

    rec(den, den.degree, [])
    return best[0], sorted(best[1])


def factored_den_str(den):
    rest, ks = factored_den(den)
    parts = []
    if rest != IntPoly.one():
        parts.append(f"({poly_str(rest)})")
    for k in ks:
        parts.append(f"(1 - t^{k})" if k > 1 else "(1 - t)")
    return "".join(parts) if parts else "1"
