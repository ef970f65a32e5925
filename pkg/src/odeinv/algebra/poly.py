"""Bivariate polynomials over Q in the variables x, y.

Storage is a sympy sparse ring element (a dict from exponent pairs to
gmpy2 rationals) under graded-lex order with x > y.  :class:`Poly` is the
public immutable wrapper; the rational-function layer works on the raw
ring elements directly to avoid double wrapping in hot loops.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring

RING, _X, _Y = ring("x,y", QQ, grlex)
VARS = ("x", "y")


def var_index(var: str) -> int:
    try:
        return VARS.index(var)
    except ValueError:
        raise ValueError(f"unknown variable {var!r}; expected 'x' or 'y'") from None


def to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _fmt_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _fmt_monomial(exp: tuple[int, int]) -> str:
    parts = []
    for name, e in zip(VARS, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_element(p) -> str:
    """Canonical string of a ring element: graded-lex order, explicit ``*``/``^``."""
    if not p:
        return "0"
    out = []
    for exp, c in p.terms():  # terms() follows the ring order (grlex)
        c = to_fraction(c)
        neg = c < 0
        a = -c if neg else c
        mono = _fmt_monomial(exp)
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


class Poly:
    """Immutable polynomial in x, y with rational coefficients."""

    __slots__ = ("_p",)

    def __init__(self, terms=None):
        if terms is None:
            self._p = RING.zero
        elif isinstance(terms, dict):
            p = RING.zero
            for exp, c in terms.items():
                c = Fraction(c)
                if c:
                    p = p + RING({tuple(exp): QQ(c.numerator, c.denominator)})
            self._p = p
        else:
            self._p = RING(terms)

    @classmethod
    def _wrap(cls, p) -> "Poly":
        obj = cls.__new__(cls)
        obj._p = p
        return obj

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls._wrap(RING.gens[var_index(name)])

    @classmethod
    def const(cls, c) -> "Poly":
        c = Fraction(c)
        return cls._wrap(RING(QQ(c.numerator, c.denominator)))

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return {exp: to_fraction(c) for exp, c in self._p.items()}

    def is_zero(self) -> bool:
        return not self._p

    def is_constant(self) -> bool:
        return self._p.is_ground

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var``, or total degree; -1 for the zero polynomial."""
        if not self._p:
            return -1
        if var is None:
            return max(sum(e) for e in self._p.keys())
        i = var_index(var)
        return max(e[i] for e in self._p.keys())

    def leading_coefficient(self) -> Fraction:
        return to_fraction(self._p.LC)

    def diff(self, var: str) -> "Poly":
        return Poly._wrap(self._p.diff(RING.gens[var_index(var)]))

    def coeffs_in(self, var: str) -> list["Poly"]:
        """Coefficients as polynomials in the other variable, index = power of ``var``."""
        i = var_index(var)
        n = self.degree(var)
        buckets = [dict() for _ in range(n + 1)]
        for exp, c in self._p.items():
            rest = (0, exp[1]) if i == 0 else (exp[0], 0)
            buckets[exp[i]][rest] = c
        return [Poly._wrap(RING(b)) for b in buckets]

    def __add__(self, other):
        return Poly._wrap(self._p + _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return Poly._wrap(self._p - _coerce(other))

    def __rsub__(self, other):
        return Poly._wrap(_coerce(other) - self._p)

    def __mul__(self, other):
        return Poly._wrap(self._p * _coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return Poly._wrap(-self._p)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        return Poly._wrap(self._p ** n)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._p == other._p
        if isinstance(other, (int, Fraction)):
            return self._p == _coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._p.items()))

    def __str__(self):
        return format_element(self._p)

    def __repr__(self):
        return f"Poly({str(self)!r})"


def _coerce(other):
    if isinstance(other, Poly):
        return other._p
    if isinstance(other, (int, Fraction)):
        other = Fraction(other)
        return RING(QQ(other.numerator, other.denominator))
    raise TypeError(f"cannot combine Poly with {type(other).__name__}")


def _bareiss_det(mat: list[list]) -> object:
    """Fraction-free determinant of a square matrix of ring elements."""
    n = len(mat)
    if n == 0:
        return RING.one
    a = [row[:] for row in mat]
    sign = 1
    prev = RING.one
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return RING.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exquo(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def sylvester_matrix(f: Poly, g: Poly, var: str) -> list[list]:
    fc = [c._p for c in f.coeffs_in(var)][::-1]  # leading coefficient first
    gc = [c._p for c in g.coeffs_in(var)][::-1]
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([RING.zero] * i + fc + [RING.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([RING.zero] * i + gc + [RING.zero] * (size - n - 1 - i))
    return rows


def resultant(f: Poly, g: Poly, var: str) -> Poly:
    """Sylvester resultant of ``f`` and ``g`` eliminating ``var``.

    The sign is fixed so that the graded-lex leading coefficient is positive.
    """
    df, dg = f.degree(var), g.degree(var)
    if df <= 0 and dg <= 0:
        raise ValueError(f"both polynomials are constant in {var}")
    if f.is_zero() or g.is_zero():
        return Poly()
    if df == 0:
        res = f._p ** dg
    elif dg == 0:
        res = g._p ** df
    else:
        res = _bareiss_det(sylvester_matrix(f, g, var))
    if res and res.LC < 0:
        res = -res
    return Poly._wrap(res)


def poly_from_terms(items: Iterable[tuple[tuple[int, int], Fraction]]) -> Poly:
    return Poly(dict(items))
