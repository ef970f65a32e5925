"""Necessary-condition comparison of two first-intermediate equations via (I1, I3).

Point-equivalent equations have the same image of (x, y) -> (I1, I3).  The
image is summarised as a point (both constant), the irreducible factors of
an implicit curve relation R(u, v) = 0, or "free" when I1, I3 are
functionally independent.  Different summaries prove inequivalence; equal
summaries prove nothing.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .algebra import RatFunc
from .classify import Case, classify
from .fields import degeneration, fundamental
from .model import CubicODE
from .scalars import base_invariants

_x, _y, _u, _v = sympy.symbols("x y u v")

NOT_EQUIVALENT = "NOT-EQUIVALENT"
EQUIV_POSSIBLE = "EQUIV-POSSIBLE"


class WrongClassError(ValueError):
    pass


@dataclass(frozen=True)
class InvariantImage:
    kind: str                 # "point" | "curve" | "free"
    data: tuple

    def describe(self) -> str:
        if self.kind == "point":
            return f"I1 = {self.data[0]}, I3 = {self.data[1]}"
        if self.kind == "curve":
            return " * ".join(f"({f})" for f in self.data) + " = 0 in (u, v) = (I1, I3)"
        return "I1, I3 functionally independent"


def _to_sympy(p) -> sympy.Expr:
    return sum((sympy.Rational(c.numerator, c.denominator) * _x ** i * _y ** j
                for (i, j), c in p.terms.items()), sympy.Integer(0))


def _normalize(factor: sympy.Poly) -> sympy.Poly:
    _, prim = factor.primitive()
    if prim.LC() < 0:
        prim = -prim
    return prim


def _relation_factors(I1: RatFunc, I3: RatFunc) -> list[sympy.Poly]:
    """Irreducible R(u, v) with R(I1, I3) = 0, from eliminating x and y."""
    f1 = sympy.expand(_to_sympy(I1.num) - _u * _to_sympy(I1.den))
    f3 = sympy.expand(_to_sympy(I3.num) - _v * _to_sympy(I3.den))
    free1, free3 = f1.free_symbols, f3.free_symbols
    if _y in free1 or _y in free3:
        elim, keep = _y, _x
    else:
        elim, keep = _x, None
    if elim in free1 and elim in free3:
        r = sympy.resultant(f1, f3, elim)
    else:
        r = f1 if elim not in free1 else f3
    r = sympy.expand(r)
    if keep is not None and keep in r.free_symbols:
        # the relation must hold for every value of the remaining variable
        r = sympy.gcd_list(sympy.Poly(r, keep).all_coeffs())
    r = sympy.Poly(r, _u, _v)
    if r.is_zero or r.total_degree() == 0:
        return []
    out = []
    for fac, _ in sympy.factor_list(r.as_expr(), _u, _v)[1]:
        fp = sympy.Poly(fac, _u, _v)
        if fp.total_degree() == 0:
            continue
        # drop spurious factors (base points, vanishing denominators)
        if _vanishes_on(fp, I1, I3):
            out.append(_normalize(fp))
    return sorted(out, key=lambda p: str(p.as_expr()))


def _vanishes_on(fp: sympy.Poly, I1: RatFunc, I3: RatFunc) -> bool:
    total = RatFunc.zero()
    for (a, b), c in fp.terms():
        q = sympy.Rational(c)
        total = total + RatFunc.const(_frac(q)) * I1 ** a * I3 ** b
    return total.is_zero()


def _frac(q: sympy.Rational) -> Fraction:
    return Fraction(int(q.p), int(q.q))


def invariant_image(I1: RatFunc, I3: RatFunc) -> InvariantImage:
    if I1.is_constant() and I3.is_constant():
        return InvariantImage("point", (str(I1), str(I3)))
    for const, var in ((I1, _u), (I3, _v)):
        if const.is_constant():
            c = const.constant_value()
            line = _normalize(sympy.Poly(var - sympy.Rational(c.numerator, c.denominator), _u, _v))
            return InvariantImage("curve", (str(line.as_expr()),))
    jac = I1.diff("x") * I3.diff("y") - I1.diff("y") * I3.diff("x")
    if not jac.is_zero():
        return InvariantImage("free", ())
    factors = _relation_factors(I1, I3)
    return InvariantImage("curve", tuple(str(f.as_expr()) for f in factors))


def equation_image(eq: CubicODE) -> InvariantImage:
    v = classify(eq)
    if v.case is not Case.FIRST_INTERMEDIATE:
        raise WrongClassError(f"comparison needs FirstIntermediate equations, got {v.case.value}")
    ff = fundamental(eq)
    df = degeneration(eq, ff)
    si = base_invariants(df, ff, through=3)
    return invariant_image(si.I1, si.I3)


def compare(eq1: CubicODE, eq2: CubicODE) -> dict:
    im1, im2 = equation_image(eq1), equation_image(eq2)
    verdict = EQUIV_POSSIBLE if im1 == im2 else NOT_EQUIVALENT
    return {"verdict": verdict, "first": {"kind": im1.kind, "relation": im1.describe()},
            "second": {"kind": im2.kind, "relation": im2.describe()}}
