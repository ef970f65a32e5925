"""The fundamental fields alpha, beta, F^5 and the degeneration fields.

Degeneration fields (N, M, phi, Gamma, gamma) exist only when F^5 vanishes
and alpha does not.  Most of them come in an "A-branch" (dividing by A) and
a "B-branch" (dividing by B); when both A and B are non-zero both branches
are evaluated and required to agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import ZERO, RatFunc
from .curvature import omega_from_phi
from .model import CubicODE, PseudoField

F = RatFunc.const


class NotIntermediateError(ValueError):
    """The equation is not in an intermediate-degeneration case."""


class BranchMismatchError(ArithmeticError):
    """The A-branch and B-branch formulas disagree."""


@dataclass(frozen=True)
class FundamentalFields:
    A: RatFunc
    B: RatFunc
    G: RatFunc
    H: RatFunc
    F5: RatFunc

    @property
    def alpha(self) -> PseudoField:
        return PseudoField.covector(self.A, self.B, 1)

    @property
    def beta(self) -> PseudoField:
        return PseudoField.covector(-self.H, self.G, 3)

    @property
    def alpha_vec(self) -> tuple[RatFunc, RatFunc]:
        return (self.B, -self.A)

    @property
    def beta_vec(self) -> tuple[RatFunc, RatFunc]:
        return (self.G, self.H)

    @property
    def alpha_zero(self) -> bool:
        return self.A.is_zero() and self.B.is_zero()


def _d(f: RatFunc, spec: str) -> RatFunc:
    for v in spec:
        f = f.diff(v)
    return f


def alpha_components(eq: CubicODE) -> tuple[RatFunc, RatFunc]:
    P, Q, R, S = eq.coefficients
    A = (_d(P, "yy") - 2 * _d(Q, "xy") + _d(R, "xx") + 2 * P * S.diff("x") + S * P.diff("x")
         - 3 * P * R.diff("y") - 3 * R * P.diff("y") - 3 * Q * R.diff("x") + 6 * Q * Q.diff("y"))
    B = (_d(S, "xx") - 2 * _d(R, "xy") + _d(Q, "yy") - 2 * S * P.diff("y") - P * S.diff("y")
         + 3 * S * Q.diff("x") + 3 * Q * S.diff("x") + 3 * R * Q.diff("y") - 6 * R * R.diff("x"))
    return A, B


def fundamental(eq: CubicODE) -> FundamentalFields:
    P, Q, R, S = eq.coefficients
    A, B = alpha_components(eq)
    Ax, Ay, Bx, By = A.diff("x"), A.diff("y"), B.diff("x"), B.diff("y")
    G = -B * Bx - 3 * A * By + 4 * B * Ay + 3 * S * A * A - 6 * R * B * A + 3 * Q * B * B
    H = -A * Ay - 3 * B * Ax + 4 * A * Bx - 3 * P * B * B + 6 * Q * A * B - 3 * R * A * A
    F5 = (A * G + B * H) / 3
    return FundamentalFields(A, B, G, H, F5)


def f5_radicand(eq: CubicODE, ff: FundamentalFields) -> RatFunc:
    """Explicit fifth power of F written directly in A, B and the coefficients."""
    P, Q, R, S = eq.coefficients
    A, B = ff.A, ff.B
    return (A * B * A.diff("y") + B * A * B.diff("x") - A * A * B.diff("y") - B * B * A.diff("x")
            - P * B ** 3 + 3 * Q * A * B * B - 3 * R * A * A * B + S * A ** 3)


# --- branch formulas --------------------------------------------------------
# Each takes (eq, ff) plus already known fields and returns one branch value.

def N_branch(eq, ff, branch: str) -> RatFunc:
    if branch == "B":
        return ff.G / (3 * ff.B)
    return -ff.H / (3 * ff.A)


def M_branch(eq, ff, N: RatFunc, branch: str) -> RatFunc:
    P, Q, R, S = eq.coefficients
    A, B = ff.A, ff.B
    Nx, Ny = N.diff("x"), N.diff("y")
    if branch == "B":
        K = A * S - B.diff("y")
        return (-12 * A * N * K / (5 * B) - A * Ny + F(Fraction(24, 5)) * A * N * R
                - F(Fraction(6, 5)) * N * A.diff("y") - F(Fraction(6, 5)) * N * B.diff("x")
                + B * Nx - F(Fraction(12, 5)) * B * N * Q)
    K = B * P + A.diff("x")
    return (-12 * B * N * K / (5 * A) + B * Nx + F(Fraction(24, 5)) * B * N * Q
            + F(Fraction(6, 5)) * N * B.diff("x") + F(Fraction(6, 5)) * N * A.diff("y")
            - A * Ny - F(Fraction(12, 5)) * A * N * R)


def phi_branch(eq, ff, branch: str) -> tuple[RatFunc, RatFunc]:
    P, Q, R, S = eq.coefficients
    A, B = ff.A, ff.B
    if branch == "B":
        K = A * S - B.diff("y")
        phi1 = (-3 * A * K / (5 * B * B) - 3 * (A.diff("y") + B.diff("x") - 3 * A * R) / (5 * B)
                - F(Fraction(6, 5)) * Q)
        phi2 = 3 * K / (5 * B) - F(Fraction(3, 5)) * R
        return phi1, phi2
    K = B * P + A.diff("x")
    phi1 = -3 * K / (5 * A) + F(Fraction(3, 5)) * Q
    phi2 = (3 * B * K / (5 * A * A) - 3 * (B.diff("x") + A.diff("y") + 3 * B * Q) / (5 * A)
            + F(Fraction(6, 5)) * R)
    return phi1, phi2


def gamma_branch(eq, ff, N: RatFunc, Omega: RatFunc, branch: str) -> tuple[RatFunc, RatFunc]:
    """Covector components (gamma_1, gamma_2); they depend on Omega."""
    P, Q, R, S = eq.coefficients
    A, B = ff.A, ff.B
    Nx, Ny = N.diff("x"), N.diff("y")
    if branch == "B":
        K = A * S - B.diff("y")
        g1 = (6 * A * N * K / (5 * B * B) - 18 * N * A * R / (5 * B)
              + 6 * N * (A.diff("y") + B.diff("x")) / (5 * B)
              - Nx + F(Fraction(12, 5)) * N * Q - 2 * Omega * A)
        g2 = -6 * N * K / (5 * B) - Ny + F(Fraction(6, 5)) * N * R - 2 * Omega * B
        return g1, g2
    K = B * P + A.diff("x")
    g1 = 6 * N * K / (5 * A) - Nx - F(Fraction(6, 5)) * N * Q - 2 * Omega * A
    g2 = (-6 * B * N * K / (5 * A * A) + 18 * N * B * Q / (5 * A)
          + 6 * N * (B.diff("x") + A.diff("y")) / (5 * A)
          - Ny - F(Fraction(12, 5)) * N * R - 2 * Omega * B)
    return g1, g2


def branches(ff: FundamentalFields) -> tuple[str, ...]:
    """Applicable branches, preferred one first."""
    out = []
    if not ff.B.is_zero():
        out.append("B")
    if not ff.A.is_zero():
        out.append("A")
    return tuple(out)


# --- connection ---------------------------------------------------------------

def theta_lower(eq: CubicODE) -> dict:
    vals = eq.coefficients
    return {(i, j, k): vals[i + j + k - 3] for i in (1, 2) for j in (1, 2) for k in (1, 2)}


def theta_raised(theta: dict) -> dict:
    # d^{12} = 1, d^{21} = -1, so theta^1_ij = theta_2ij, theta^2_ij = -theta_1ij
    return {(k, i, j): theta[(2, i, j)] if k == 1 else -theta[(1, i, j)]
            for k in (1, 2) for i in (1, 2) for j in (1, 2)}


def connection(theta_up: dict, phi: tuple[RatFunc, RatFunc]) -> dict:
    """Gamma^k_ij keyed by (k, i, j)."""
    gam = {}
    for k in (1, 2):
        for i in (1, 2):
            for j in (1, 2):
                corr = ZERO
                if k == j:
                    corr = corr + phi[i - 1]
                if k == i:
                    corr = corr + phi[j - 1]
                gam[(k, i, j)] = theta_up[(k, i, j)] - corr / 3
    return gam


@dataclass(frozen=True)
class DegenerationFields:
    N: RatFunc
    M: RatFunc
    phi: tuple[RatFunc, RatFunc]
    theta: dict
    theta_up: dict
    Gamma: dict
    Omega: RatFunc
    gamma_cov: tuple[RatFunc, RatFunc]
    branch: str

    @property
    def gamma_vec(self) -> tuple[RatFunc, RatFunc]:
        return (self.gamma_cov[1], -self.gamma_cov[0])

    @property
    def C(self) -> RatFunc:
        return self.gamma_cov[1]

    @property
    def D(self) -> RatFunc:
        return -self.gamma_cov[0]

    @property
    def gamma(self) -> PseudoField:
        return PseudoField.covector(*self.gamma_cov, 2)


def require_intermediate(ff: FundamentalFields) -> None:
    if ff.alpha_zero:
        raise NotIntermediateError("alpha vanishes identically (maximal degeneration)")
    if not ff.F5.is_zero():
        raise NotIntermediateError("F^5 is not identically zero (general position)")


def _agree(name: str, values: dict) -> RatFunc:
    first, *rest = values.values()
    for other in rest:
        if other != first:
            raise BranchMismatchError(f"{name}: A-branch and B-branch disagree")
    return first


def degeneration(eq: CubicODE, ff: FundamentalFields, Omega: RatFunc | None = None,
                 check_branches: bool = True) -> DegenerationFields:
    """Build N, M, phi, Gamma, then Omega (from phi) and finally gamma.

    ``Omega`` may be supplied to skip the internal computation from phi.
    """
    require_intermediate(ff)
    use = branches(ff) if check_branches else branches(ff)[:1]
    primary = use[0]
    N = _agree("N", {b: N_branch(eq, ff, b) for b in use})
    phi = _agree("phi", {b: phi_branch(eq, ff, b) for b in use})
    M = _agree("M", {b: M_branch(eq, ff, N, b) for b in use})
    theta = theta_lower(eq)
    theta_up = theta_raised(theta)
    gam = connection(theta_up, phi)
    if Omega is None:
        Omega = omega_from_phi(phi)[1]
    gcov = _agree("gamma", {b: gamma_branch(eq, ff, N, Omega, b) for b in use})
    return DegenerationFields(N, M, phi, theta, theta_up, gam, Omega, gcov, primary)
