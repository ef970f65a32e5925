"""Bagderina's quantities for intermediate degeneration and the bridge identities.

Every radical met here is a power of M (her j1 equals 5M/2), so radical
scalars are kept as finite sums  sum c(x, y) * M^q * (5/2)^e  with rational
functions c.  Differentiation stays exact; radicals are applied only when a
sum is evaluated at a numeric point.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .algebra import PoleError, RatFunc
from .checks import Checker, CheckResult
from .classify import Case, classify
from .curvature import curvature
from .fields import degeneration, fundamental
from .scalars import base_invariants

F = RatFunc.const
DEFAULT_PREC = 256
DEFAULT_RTOL = mpmath.mpf(10) ** -30


class BagderinaUndefinedError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class SamplingError(RuntimeError):
    pass


@dataclass(frozen=True)
class BgdData:
    beta1: RatFunc
    beta2: RatFunc
    j0: RatFunc
    j1: RatFunc
    alpha0: RatFunc
    alpha1: RatFunc
    alpha2: RatFunc
    g10: RatFunc
    g11: RatFunc
    g20: RatFunc
    g21: RatFunc
    d10: RatFunc
    d20: RatFunc
    j2: RatFunc
    j3: RatFunc
    j5: RatFunc
    Gamma0: RatFunc
    Gamma1: RatFunc
    I1_sq: RatFunc
    I2_sq: RatFunc

    @property
    def mu1_p4(self) -> RatFunc:
        return self.j1

    def j5_reduced(self) -> RatFunc:
        """The Omega = 0 form 5 (2 j1 j3 + j2^2)."""
        return 5 * (2 * self.j1 * self.j3 + self.j2 * self.j2)


def bgd_chain(eq, ff, df, cd=None) -> BgdData:
    P, Q, R, S = eq.coefficients
    b1, b2 = ff.A, ff.B
    if b1.is_zero():
        raise BagderinaUndefinedError("Bagderina chain undefined, A ≡ 0")
    j0 = -3 * df.Omega
    j1 = F(Fraction(5, 2)) * df.M
    a0 = Q.diff("x") - P.diff("y") + 2 * P * R - 2 * Q * Q
    a1 = R.diff("x") - Q.diff("y") + P * S - Q * R
    a2 = S.diff("x") - R.diff("y") + 2 * Q * S - 2 * R * R
    g10 = b1.diff("x") - Q * b1 + P * b2
    g11 = b2.diff("x") - R * b1 + Q * b2
    g20 = b1.diff("y") - R * b1 + Q * b2
    g21 = b2.diff("y") - S * b1 + R * b2
    d10 = g10.diff("x") - 2 * Q * g10 + P * (g20 + g11) - 5 * a0 * b1
    d20 = g20.diff("x") - R * g10 + P * g21 - 4 * a1 * b1 - a0 * b2
    j2 = ((d20 - b2 / b1 * d10) / b1
          + g10 / (5 * b1 * b1) * (7 * b2 / b1 * g10 - 6 * g20 - g11))
    j3 = F(Fraction(3, 5)) * (d10 / b1 ** 3 - 6 * g10 * g10 / (5 * b1 ** 4))
    shifted = j2 - j0 / 6
    j5 = 5 * (2 * j1 * j3 + shifted * shifted)
    Gamma0, Gamma1 = -ff.H, ff.G
    I1_sq = Gamma0 * Gamma0 / (b1 * b1 * j1) if not j1.is_zero() else RatFunc.zero()
    I2_sq = j5 * j5 / j1 if not j1.is_zero() else RatFunc.zero()
    return BgdData(b1, b2, j0, j1, a0, a1, a2, g10, g11, g20, g21, d10, d20, j2, j3, j5,
                   Gamma0, Gamma1, I1_sq, I2_sq)


# --- radical sums -------------------------------------------------------------

class RadicalSum:
    """sum over (q, e) of coeff * M^q * (5/2)^e for a fixed rational function M."""

    __slots__ = ("M", "terms")

    def __init__(self, M: RatFunc, terms: dict | None = None):
        self.M = M
        # keep exponents in [0, 1) so that equal radicals share a key and cancel exactly
        merged: dict = {}
        for (q, e), c in (terms or {}).items():
            q, e = Fraction(q), Fraction(e)
            fq, fe = q.numerator // q.denominator, e.numerator // e.denominator
            if fq:
                c = c * M ** fq
            if fe:
                c = c * RatFunc.const(Fraction(5, 2) ** fe)
            key = (q - fq, e - fe)
            merged[key] = merged[key] + c if key in merged else c
        self.terms = {k: v for k, v in merged.items() if not v.is_zero()}

    @classmethod
    def monomial(cls, M, coeff: RatFunc, q=0, e=0) -> "RadicalSum":
        return cls(M, {(Fraction(q), Fraction(e)): coeff})

    def __add__(self, other: "RadicalSum") -> "RadicalSum":
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms[k] + v if k in terms else v
        return RadicalSum(self.M, terms)

    def scale(self, coeff: RatFunc, q=0, e=0) -> "RadicalSum":
        q, e = Fraction(q), Fraction(e)
        return RadicalSum(self.M, {(kq + q, ke + e): v * coeff for (kq, ke), v in self.terms.items()})

    def derivative(self, vec) -> "RadicalSum":
        """v^1 d/dx + v^2 d/dy, exact."""
        M = self.M
        dM = vec[0] * M.diff("x") + vec[1] * M.diff("y")
        out = RadicalSum(M)
        for (q, e), c in self.terms.items():
            dc = vec[0] * c.diff("x") + vec[1] * c.diff("y")
            part = {(q, e): dc}
            if q != 0 and not dM.is_zero():
                part[(q - 1, e)] = RatFunc.const(q) * c * dM
            out = out + RadicalSum(M, part)
        return out

    def power_rational(self, n: int) -> RatFunc:
        """self^n as a rational function; needs a single term with n*q, n*e integral."""
        if not self.terms:
            return RatFunc.zero()
        if len(self.terms) != 1:
            raise ValueError("power_rational needs a single-term sum")
        ((q, e), c), = self.terms.items()
        q, e = q * n, e * n
        if q.denominator != 1 or e.denominator != 1:
            raise ValueError(f"power {n} leaves a radical")
        return c ** n * self.M ** int(q) * RatFunc.const(Fraction(5, 2) ** int(e))

    def evaluate(self, point, prec: int = DEFAULT_PREC):
        with mpmath.workprec(prec):
            Mv = _mp(self.M.eval_at(point))
            if Mv <= 0:
                raise PreconditionError(f"radicand M is not positive at {point}")
            total = mpmath.mpf(0)
            for (q, e), c in self.terms.items():
                total += _mp(c.eval_at(point)) * _pow(Mv, q) * _pow(mpmath.mpf(5) / 2, e)
            return total


def _mp(fr: Fraction):
    return mpmath.mpf(fr.numerator) / fr.denominator


def _pow(base, q: Fraction):
    if q == 0:
        return mpmath.mpf(1)
    if q.denominator == 1:
        return base ** int(q)
    return mpmath.power(base, mpmath.mpf(q.numerator) / q.denominator)


@dataclass
class BgdOperators:
    """Symbolic radical sums for Bagderina's invariants and their derivatives."""

    I1: RadicalSum
    I2: RadicalSum
    I11: RadicalSum
    I12: RadicalSum
    I21: RadicalSum
    I22: RadicalSum
    I121: RadicalSum
    I212: RadicalSum

    def evaluate(self, point, prec: int = DEFAULT_PREC) -> dict:
        return {name: getattr(self, name).evaluate(point, prec)
                for name in ("I1", "I2", "I11", "I12", "I21", "I22", "I121", "I212")}


def operators(ff, df):
    """D_1 = sqrt(2/(5M)) nabla_alpha and D_2 = -3 (5/(2 M^3))^(1/4) nabla_gamma
    acting on weight-0 radical sums, where nabla is the directional derivative."""
    alpha, gamma = ff.alpha_vec, df.gamma_vec

    def D1(s: RadicalSum) -> RadicalSum:
        return s.derivative(alpha).scale(RatFunc.one(), Fraction(-1, 2), Fraction(-1, 2))

    def D2(s: RadicalSum) -> RadicalSum:
        return s.derivative(gamma).scale(RatFunc.const(-3), Fraction(-3, 4), Fraction(1, 4))

    return D1, D2


def bgd_operators(ff, df, bd: BgdData) -> BgdOperators:
    """I_ab = D_a(I_b) and I_abc = D_a(D_b(I_c))."""
    M = df.M
    D1, D2 = operators(ff, df)
    # I1 = Gamma0 / (beta1 sqrt(j1)),  I2 = j5 / sqrt(j1),  sqrt(j1) = (5/2)^(1/2) M^(1/2)
    I1 = RadicalSum.monomial(M, bd.Gamma0 / bd.beta1, Fraction(-1, 2), Fraction(-1, 2))
    I2 = RadicalSum.monomial(M, bd.j5, Fraction(-1, 2), Fraction(-1, 2))
    I11, I12, I21, I22 = D1(I1), D1(I2), D2(I1), D2(I2)
    return BgdOperators(I1, I2, I11, I12, I21, I22, D1(I21), D2(I12))


def bgd_operators_numeric(eq, point, precision_bits: int = DEFAULT_PREC) -> dict:
    ff = fundamental(eq)
    df = degeneration(eq, ff)
    _require_et4(ff, df)
    bd = bgd_chain(eq, ff, df)
    return bgd_operators(ff, df, bd).evaluate(point, precision_bits)


def _require_et4(ff, df) -> None:
    if df.M.is_zero() or not df.Omega.is_zero() or ff.A.is_zero():
        raise PreconditionError("equation is not in the class F=0, A≠0, Omega=0, M≠0")


# --- bridge verification ------------------------------------------------------

def bridge_sides(ops: dict, I3_lhs, sqrtI9):
    """Left and right sides of the two numeric bridge identities."""
    I1, I2 = ops["I1"], ops["I2"]
    I11, I12, I21, I22 = ops["I11"], ops["I12"], ops["I21"], ops["I22"]
    I121, I212 = ops["I121"], ops["I212"]
    rhs_gamma = I12 / 18 + I2 / (90 * I1) * (5 * I11 - 3 * I1 ** 2 - 6) + mpmath.mpf(5) / 3
    r3 = mpmath.sqrt(3)
    rhs_i9 = (-r3 / 45 * I212 / I1 ** mpmath.mpf(1.5)
              - r3 / 225 * (5 * I11 - 3 * I1 ** 2 - 6) * I22 / I1 ** mpmath.mpf(2.5)
              + (r3 / 450 * (15 * I11 + 10 * I1 ** 2 - 6) * I21 / I1 ** mpmath.mpf(3.5)
                 - r3 / 45 * I121 / I1 ** mpmath.mpf(2.5)) * I2)
    return (I3_lhs, rhs_gamma), (sqrtI9, rhs_i9)


def relative_residual(lhs, rhs):
    scale = max(abs(lhs), abs(rhs), mpmath.mpf(1))
    return abs(lhs - rhs) / scale


def sample_points(valid, count: int, rng: random.Random, max_draws: int = 1000, denom: int = 97):
    """Small random rationals in (0,1) x (1,2) accepted by ``valid``."""
    pts = []
    draws = 0
    while len(pts) < count:
        draws += 1
        if draws > max_draws:
            raise SamplingError(f"no valid sample point found after {max_draws} draws")
        pt = (Fraction(rng.randint(1, denom - 1), denom), 1 + Fraction(rng.randint(1, denom - 1), denom))
        if pt not in pts and valid(pt):
            pts.append(pt)
    return pts


def sqrt_I9_rescaled(df, ff, si, rescaled: bool = True) -> RadicalSum:
    """nabla_gamma(I3') / N, to be divided by N^(1/2) at evaluation time.

    With ``rescaled`` I3' = I3 * I1 = Gamma^1_22 / M, the normalisation under
    which the two numeric bridge identities hold; otherwise I3' = I3.  The
    root is taken with the sign of the derivative (N > 0 at sample points).
    """
    base = si.I3 * si.I1 if rescaled else si.I3
    d = RadicalSum.monomial(df.M, base).derivative(df.gamma_vec)
    return RadicalSum(df.M, {k: v / df.N for k, v in d.terms.items()})


def verify_bridge(eq, points=None, precision_bits: int = DEFAULT_PREC, count: int = 5,
                  seed: int = 0, rtol=DEFAULT_RTOL, checker: Checker | None = None,
                  rescaled_i3: bool = True) -> list[CheckResult]:
    ff = fundamental(eq)
    if ff.alpha_zero or not ff.F5.is_zero():
        raise PreconditionError("equation is not in an intermediate case")
    df = degeneration(eq, ff)
    _require_et4(ff, df)
    cd = curvature(df)
    si = base_invariants(df, ff, cd, through=9)
    bd = bgd_chain(eq, ff, df, cd)
    chk = checker or Checker("exact", seed)
    start = len(chk.results)

    chk.equal("(I1Bgd)^2 * 5*I1 = 18", bd.I1_sq * 5 * si.I1, 18)
    chk.equal("gamma^1 = 2j1/(5beta1) - beta2 j2/3", df.C, 2 * bd.j1 / (5 * bd.beta1) - bd.beta2 * bd.j2 / 3)
    chk.equal("gamma^2 = beta1 j2/3", df.D, bd.beta1 * bd.j2 / 3)
    chk.equal("j5 = -125 detR + 45/4 Omega^2", bd.j5,
              -125 * cd.detR + F(Fraction(45, 4)) * df.Omega * df.Omega)
    chk.equal("j5 = 125/4 Disc", bd.j5, F(Fraction(125, 4)) * cd.Disc)
    chk.equal("j5 (reduced) = -125 detR", bd.j5_reduced(), -125 * cd.detR)
    chk.equal("(I2Bgd)^2 j1 = j5^2", bd.I2_sq * bd.j1, bd.j5 * bd.j5)

    ops = bgd_operators(ff, df, bd)
    D1, D2 = operators(ff, df)
    for label, s in (("I1", si.I1), ("I3", si.I3)):
        rs = RadicalSum.monomial(df.M, s)
        da = s.diff("x") * ff.alpha_vec[0] + s.diff("y") * ff.alpha_vec[1]
        dg = s.diff("x") * df.gamma_vec[0] + s.diff("y") * df.gamma_vec[1]
        chk.equal(f"D1({label})^2 * 5M/2 = (nabla_alpha {label})^2",
                  D1(rs).power_rational(2) * F(Fraction(5, 2)) * df.M, da * da)
        chk.equal(f"D2({label})^4 * (2M^3/5)/81 = (nabla_gamma {label})^4",
                  D2(rs).power_rational(4) * F(Fraction(2, 405)) * df.M ** 3, dg ** 4)
    G122_over_M = si.expansion[(1, 2, 2)] / df.M
    sqrt_I9 = sqrt_I9_rescaled(df, ff, si, rescaled_i3)

    def valid(pt):
        try:
            if df.M.eval_at(pt) <= 0 or df.N.eval_at(pt) <= 0 or bd.j1.eval_at(pt) <= 0:
                return False
            if bd.beta1.eval_at(pt) == 0 or si.I1.eval_at(pt) == 0:
                return False
            ops.evaluate(pt, 64)
            G122_over_M.eval_at(pt)
            sqrt_I9.evaluate(pt, 64)
        except (PoleError, PreconditionError, ZeroDivisionError):
            return False
        return True

    if points is None:
        points = sample_points(valid, count, random.Random(seed))
    for pt in points:
        if not valid(pt):
            raise PreconditionError(f"invalid sample point {pt}")
        with mpmath.workprec(precision_bits):
            vals = ops.evaluate(pt, precision_bits)
            lhs3 = _mp(G122_over_M.eval_at(pt))
            lhs9 = sqrt_I9.evaluate(pt, precision_bits) / mpmath.sqrt(_mp(df.N.eval_at(pt)))
            (l1, r1), (l2, r2) = bridge_sides(vals, lhs3, lhs9)
            for name, lhs, rhs in (("Gamma^1_22/M bridge", l1, r1), ("sqrt(I9) bridge", l2, r2)):
                res = relative_residual(lhs, rhs)
                chk.record(CheckResult(name, "numeric", res < rtol, mpmath.nstr(res, 5), pt,
                                       f"lhs={mpmath.nstr(lhs, 20)} rhs={mpmath.nstr(rhs, 20)}"))
    return chk.results[start:]


def in_bridge_class(eq) -> bool:
    v = classify(eq)
    return v.case is Case.FIRST_INTERMEDIATE and bool(v.zero_mean)
