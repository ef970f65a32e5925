"""Canonical rational functions in x, y over Q.

A :class:`RatFunc` is stored as ``num/den`` with ``gcd(num, den) = 1``.  A
constant denominator is always 1 (polynomials keep rational coefficients);
otherwise num and den have integer coefficients with coprime integer
contents and den has a positive graded-lex leading coefficient, so
``1/(3*y)`` is stored as num 1, den 3y.  Equal values have identical
representations, so ``is_zero`` and ``==`` are exact decisions.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd as igcd

import gmpy2
from sympy.polys.domains import QQ

from .poly import RING, Poly, format_element, to_fraction, var_index


class PoleError(ZeroDivisionError):
    """Evaluation point is a pole, or division by the zero function."""


def _content(p):
    """Rational content with the sign of the leading coefficient.

    ``p / _content(p)`` is primitive with integer coefficients.
    """
    nums = [int(c.numerator) for c in p.values()]
    dens = [int(c.denominator) for c in p.values()]
    g = abs(reduce(igcd, nums))
    lcm = reduce(lambda a, b: a * b // igcd(a, b), dens)
    c = QQ(g, lcm)
    return -c if p.LC < 0 else c


def _finish(num, den):
    """Normalize scaling of an already coprime pair.

    A constant denominator is folded into ``num``.  Otherwise both parts get
    integer coefficients with coprime contents and ``den`` a positive
    leading coefficient.
    """
    if den.is_ground:
        return RatFunc._make(num.quo_ground(den.LC), RING.one)
    cn, cd = _content(num), _content(den)
    ratio = cn / cd
    num = num.quo_ground(cn).mul_ground(QQ(ratio.numerator))
    den = den.quo_ground(cd).mul_ground(QQ(ratio.denominator))
    return RatFunc._make(num, den)


def _reduce(num, den):
    if not den:
        raise PoleError("division by the zero function")
    if not num:
        return RatFunc.zero()
    if den.is_ground:
        return RatFunc._make(num.quo_ground(den.LC), RING.one)
    g = num.gcd(den)
    if not g.is_ground:
        num = num.exquo(g)
        den = den.exquo(g)
    return _finish(num, den)


def _as_element(value):
    if isinstance(value, Fraction):
        return RING(QQ(value.numerator, value.denominator))
    if isinstance(value, int):
        return RING(value)
    raise TypeError(f"cannot convert {type(value).__name__} to RatFunc")


class RatFunc:
    """Immutable canonical element of Q(x, y)."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num=0, den=1):
        num = num._p if isinstance(num, Poly) else _as_element(num)
        den = den._p if isinstance(den, Poly) else _as_element(den)
        r = _reduce(num, den)
        self._num, self._den, self._hash = r._num, r._den, None

    @classmethod
    def _make(cls, num, den) -> "RatFunc":
        obj = cls.__new__(cls)
        obj._num, obj._den, obj._hash = num, den, None
        return obj

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls._make(RING.zero, RING.one)

    @classmethod
    def one(cls) -> "RatFunc":
        return cls._make(RING.one, RING.one)

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls._make(_as_element(Fraction(c)), RING.one)

    @classmethod
    def var(cls, name: str) -> "RatFunc":
        return cls._make(RING.gens[var_index(name)], RING.one)

    @classmethod
    def coerce(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, Poly):
            return cls._make(value._p, RING.one)
        return cls.const(value)

    # -- inspection ---------------------------------------------------------
    @property
    def num(self) -> Poly:
        return Poly._wrap(self._num)

    @property
    def den(self) -> Poly:
        return Poly._wrap(self._den)

    def is_zero(self) -> bool:
        return not self._num

    def is_constant(self) -> bool:
        return self._num.is_ground and self._den.is_ground

    def is_polynomial(self) -> bool:
        return self._den == RING.one

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return to_fraction(self._num.LC) if self._num else Fraction(0)

    def total_degree(self) -> int:
        return max(self.num.degree(), self.den.degree())

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self._num, self._den, other._num, other._den
        if not a:
            return other
        if not c:
            return self
        if b == d:
            if b == RING.one:
                return RatFunc._make(a + c, b)
            return _reduce(a + c, b)
        g = b.gcd(d)
        if g.is_ground:
            return _reduce(a * d + c * b, b * d)
        b1, d1 = b.exquo(g), d.exquo(g)
        return _reduce(a * d1 + c * b1, b1 * d)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._make(-self._num, self._den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self._num, self._den, other._num, other._den
        if not a or not c:
            return RatFunc.zero()
        if b == RING.one and d == RING.one:
            return RatFunc._make(a * c, b)
        g1 = a.gcd(d) if d != RING.one else RING.one
        g2 = c.gcd(b) if b != RING.one else RING.one
        if not g1.is_ground:
            a, d = a.exquo(g1), d.exquo(g1)
        if not g2.is_ground:
            c, b = c.exquo(g2), b.exquo(g2)
        return _finish(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self._num:
            raise PoleError("division by the zero function")
        return _finish(self._den, self._num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("RatFunc exponents must be integers")
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return RatFunc.one()
        return _finish(self._num ** n, self._den ** n)

    # -- calculus and evaluation -------------------------------------------
    def diff(self, var: str) -> "RatFunc":
        v = RING.gens[var_index(var)]
        a, b = self._num, self._den
        if b == RING.one:
            return RatFunc._make(a.diff(v), b)
        return _reduce(a.diff(v) * b - a * b.diff(v), b * b)

    def eval_at(self, point) -> Fraction:
        px, py = (Fraction(v) for v in point)
        den = _eval_element(self._den, px, py)
        if den == 0:
            raise PoleError(f"pole of {self} at {point}")
        return _eval_element(self._num, px, py) / den

    def compose(self, fx: "RatFunc", fy: "RatFunc") -> "RatFunc":
        """Substitute ``x -> fx`` and ``y -> fy``."""
        top = _compose_element(self._num, fx, fy)
        bot = _compose_element(self._den, fx, fy)
        return top / bot

    # -- identity -----------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self._num.items()), frozenset(self._den.items())))
        return self._hash

    def __str__(self):
        if self._den == RING.one:
            return format_element(self._num)
        n = format_element(self._num)
        if len(self._num) > 1:
            n = f"({n})"
        d = format_element(self._den)
        if len(self._den) > 1 or self._den.LC != 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def _coerce(other):
    if isinstance(other, RatFunc):
        return other
    if isinstance(other, Poly):
        return RatFunc._make(other._p, RING.one)
    if isinstance(other, (int, Fraction)):
        return RatFunc.const(other)
    return NotImplemented


def _eval_element(p, px: Fraction, py: Fraction) -> Fraction:
    if not p:
        return Fraction(0)
    qx, qy = gmpy2.mpq(px.numerator, px.denominator), gmpy2.mpq(py.numerator, py.denominator)
    xs: dict[int, object] = {}
    ys: dict[int, object] = {}
    total = gmpy2.mpq(0)
    for (ex, ey), c in p.items():
        if ex not in xs:
            xs[ex] = qx ** ex
        if ey not in ys:
            ys[ey] = qy ** ey
        total += gmpy2.mpq(c) * xs[ex] * ys[ey]
    return Fraction(int(total.numerator), int(total.denominator))


def _compose_element(p, fx: RatFunc, fy: RatFunc) -> RatFunc:
    """p(fx, fy) computed over the common denominator fx.den^dx * fy.den^dy."""
    if not p:
        return RatFunc.zero()
    dx = max(e[0] for e in p.keys())
    dy = max(e[1] for e in p.keys())
    a, b, c, d = fx._num, fx._den, fy._num, fy._den
    ap, bp, cp, dp = [RING.one], [RING.one], [RING.one], [RING.one]
    for _ in range(dx):
        ap.append(ap[-1] * a)
        bp.append(bp[-1] * b)
    for _ in range(dy):
        cp.append(cp[-1] * c)
        dp.append(dp[-1] * d)
    total = RING.zero
    for (ex, ey), coeff in p.items():
        total += (ap[ex] * bp[dx - ex] * cp[ey] * dp[dy - ey]).mul_ground(coeff)
    return _reduce(total, bp[dx] * dp[dy])


def diff(f: RatFunc, var: str) -> RatFunc:
    return f.diff(var)


def eval_at(f: RatFunc, point) -> Fraction:
    return f.eval_at(point)


def is_zero(f: RatFunc) -> bool:
    return f.is_zero()


X = RatFunc.var("x")
Y = RatFunc.var("y")
ZERO = RatFunc.zero()
ONE = RatFunc.one()
