"""Curvature of the canonical connection and the scalars Omega, tr R, det R, Disc."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import ZERO, RatFunc

COORD = {1: "x", 2: "y"}
IDX = (1, 2)


class CurvatureIdentityError(ArithmeticError):
    pass


def omega_from_phi(source):
    """Skew matrix omega_ij = d_j phi_i - d_i phi_j and Omega = 5/3 omega_12.

    ``source`` is a phi pair or anything with a ``phi`` attribute.
    """
    phi = getattr(source, "phi", source)
    w12 = phi[0].diff("y") - phi[1].diff("x")
    omega = {(1, 1): ZERO, (1, 2): w12, (2, 1): -w12, (2, 2): ZERO}
    return omega, RatFunc.const(Fraction(5, 3)) * w12


def omega_explicit(eq, ff, branch: str) -> RatFunc:
    """Omega written directly through A, B and the coefficients (one branch)."""
    P, Q, R, S = eq.coefficients
    A, B = ff.A, ff.B
    Ax, Ay, Bx, By = A.diff("x"), A.diff("y"), B.diff("x"), B.diff("y")
    if branch == "B":
        return (2 * A * By * (A * S - By) / B ** 3
                + (2 * Ay - 3 * A * R) * By / B ** 2
                + (Bx - 2 * Ay) * A * S / B ** 2
                + (A * By.diff("y") - A * A * S.diff("y")) / B ** 2
                - Ay.diff("y") / B
                + (3 * Ay * R + 3 * A * R.diff("y") - Ax * S - A * S.diff("x")) / B
                + R.diff("x") - 2 * Q.diff("y"))
    return (2 * B * Ax * (B * P + Ax) / A ** 3
            - (2 * Bx + 3 * B * Q) * Ax / A ** 2
            + (Ay - 2 * Bx) * B * P / A ** 2
            - (B * Ax.diff("x") + B * B * P.diff("x")) / A ** 2
            + Bx.diff("x") / A
            + (3 * Bx * Q + 3 * B * Q.diff("x") - By * P - B * P.diff("y")) / A
            + Q.diff("y") - 2 * R.diff("x"))


def riemann(gamma: dict) -> dict:
    """R^k_{rij} keyed by (k, r, i, j)."""
    dG = {}
    out = {}
    for k in IDX:
        for r in IDX:
            for i in IDX:
                for j in IDX:
                    if i == j:
                        out[(k, r, i, j)] = ZERO
                        continue
                    if (k, r, j, i) in out:
                        out[(k, r, i, j)] = -out[(k, r, j, i)]
                        continue
                    a = dG.setdefault((k, j, r, i), gamma[(k, j, r)].diff(COORD[i]))
                    b = dG.setdefault((k, i, r, j), gamma[(k, i, r)].diff(COORD[j]))
                    val = a - b
                    for q in IDX:
                        val = val + gamma[(k, i, q)] * gamma[(q, j, r)] - gamma[(k, j, q)] * gamma[(q, i, r)]
                    out[(k, r, i, j)] = val
    return out


@dataclass(frozen=True)
class CurvatureData:
    Rtensor: dict
    omega: dict
    Omega: RatFunc
    Rop: dict
    trR: RatFunc
    detR: RatFunc
    Disc: RatFunc

    def eigen_numeric(self, point, prec: int = 256):
        """Floating approximations of (trR +- sqrt(Disc)) / 2 at a point."""
        import mpmath

        with mpmath.workprec(prec):
            t = mpmath.mpf(self.trR.eval_at(point).numerator) / self.trR.eval_at(point).denominator
            dval = self.Disc.eval_at(point)
            root = mpmath.sqrt(mpmath.mpf(dval.numerator) / dval.denominator)
            return ((t + root) / 2, (t - root) / 2)


def curvature_from_connection(gamma: dict, Omega: RatFunc) -> CurvatureData:
    Rt = riemann(gamma)
    omega = {(i, j): Rt[(1, 1, i, j)] + Rt[(2, 2, i, j)] for i in IDX for j in IDX}
    # in 2D R^k_{qij} = R^k_q d_ij, so R^k_q is the (1,2) component
    Rop = {(k, q): Rt[(k, q, 1, 2)] for k in IDX for q in IDX}
    trR = Rop[(1, 1)] + Rop[(2, 2)]
    detR = Rop[(1, 1)] * Rop[(2, 2)] - Rop[(1, 2)] * Rop[(2, 1)]
    Disc = trR * trR - 4 * detR
    return CurvatureData(Rt, omega, Omega, Rop, trR, detR, Disc)


def curvature(df, check: bool = True) -> CurvatureData:
    cd = curvature_from_connection(df.Gamma, df.Omega)
    if check:
        omega_phi, _ = omega_from_phi(df.phi)
        if cd.omega != omega_phi:
            raise CurvatureIdentityError("Ricci-type contraction differs from the curl of phi")
        if cd.trR != RatFunc.const(Fraction(3, 5)) * df.Omega:
            raise CurvatureIdentityError("tr R != 3/5 Omega")
    return cd
