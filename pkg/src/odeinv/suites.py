"""Identity suites run by ``odeinv verify`` and the acceptance tests."""
from __future__ import annotations

from fractions import Fraction

from .algebra import ZERO, RatFunc
from .bagderina import BagderinaUndefinedError, SamplingError, bgd_chain, verify_bridge
from .checks import Checker, CheckResult
from .classify import Case, classify
from .curvature import IDX, curvature_from_connection, omega_explicit, omega_from_phi
from .fields import (degeneration, f5_radicand, fundamental, gamma_branch, M_branch, N_branch,
                     phi_branch)
from .scalars import along_scalar, base_invariants

SUITES = ("core", "first-case", "bagderina", "all")
F = RatFunc.const


class SuiteNotApplicableError(ValueError):
    pass


def core_suite(eq, chk: Checker) -> None:
    """Fundamental, degeneration and curvature identities."""
    ff = fundamental(eq)
    chk.equal("3 F5 = A G + B H", 3 * ff.F5, ff.A * ff.G + ff.B * ff.H)
    chk.equal("F5 = explicit radicand", ff.F5, f5_radicand(eq, ff))
    if ff.alpha_zero or not ff.F5.is_zero():
        return
    df = degeneration(eq, ff, check_branches=False)
    if not (ff.A.is_zero() or ff.B.is_zero()):
        branch_agreement(eq, ff, chk)
    chk.equal("M = A C + B D", df.M, ff.A * df.C + ff.B * df.D)
    for k in IDX:
        for i in IDX:
            chk.equal(f"Gamma^{k}_{i}{3 - i} symmetric", df.Gamma[(k, i, 3 - i)], df.Gamma[(k, 3 - i, i)])
    cd = curvature_from_connection(df.Gamma, df.Omega)
    omega_phi, Omega_phi = omega_from_phi(df.phi)
    for i in IDX:
        for j in IDX:
            chk.equal(f"omega_{i}{j}: contraction = curl of phi", cd.omega[(i, j)], omega_phi[(i, j)])
    chk.equal("Omega from phi = explicit formula", Omega_phi, omega_explicit(eq, ff, df.branch))
    chk.equal("trR = 3/5 Omega", cd.trR, F(Fraction(3, 5)) * df.Omega)
    chk.equal("Disc = 9/25 Omega^2 - 4 detR", cd.Disc,
              F(Fraction(9, 25)) * df.Omega * df.Omega - 4 * cd.detR)
    R = cd.Rop
    for k in IDX:
        for q in IDX:
            sq = sum((R[(k, p)] * R[(p, q)] for p in IDX), ZERO)
            delta = cd.detR if k == q else ZERO
            chk.zero(f"Cayley-Hamilton ({k},{q})", sq - cd.trR * R[(k, q)] + delta)
    for (k, r, i, j), v in cd.Rtensor.items():
        if i < j:
            chk.equal(f"R^{k}_{r}{i}{j} antisymmetric", v, -cd.Rtensor[(k, r, j, i)])
    if not ff.A.is_zero():
        bd = bgd_chain(eq, ff, df, cd)
        chk.equal("j5 = -125 detR + 45/4 Omega^2", bd.j5,
                  -125 * cd.detR + F(Fraction(45, 4)) * df.Omega * df.Omega)
        chk.equal("j5 = 125/4 Disc", bd.j5, F(Fraction(125, 4)) * cd.Disc)
        chk.record(CheckResult("umbilical iff j5 = 0", "exact", cd.Disc.is_zero() == bd.j5.is_zero()))


def branch_agreement(eq, ff, chk: Checker) -> None:
    NB, NA = N_branch(eq, ff, "B"), N_branch(eq, ff, "A")
    chk.equal("N: B-branch = A-branch", NB, NA)
    chk.equal("M: B-branch = A-branch", M_branch(eq, ff, NB, "B"), M_branch(eq, ff, NA, "A"))
    pB, pA = phi_branch(eq, ff, "B"), phi_branch(eq, ff, "A")
    Omega = omega_from_phi(pB)[1]
    gB, gA = gamma_branch(eq, ff, NB, Omega, "B"), gamma_branch(eq, ff, NA, Omega, "A")
    for i in (0, 1):
        chk.equal(f"phi_{i + 1}: B-branch = A-branch", pB[i], pA[i])
        chk.equal(f"gamma_{i + 1}: B-branch = A-branch", gB[i], gA[i])


def first_case_suite(eq, chk: Checker) -> None:
    """Relations among the expansion coefficients and invariants."""
    ff = fundamental(eq)
    v = classify(eq)
    if v.case is not Case.FIRST_INTERMEDIATE:
        raise SuiteNotApplicableError(f"first-case suite needs FirstIntermediate, got {v.case.value}")
    df = degeneration(eq, ff, check_branches=False)
    si = base_invariants(df, ff, through=9)
    G = si.expansion
    N, M = df.N, df.M
    chk.zero("Gamma^2_11 = 0", G[(2, 1, 1)])
    chk.zero("Gamma^1_21 = 0", G[(1, 2, 1)])
    chk.equal("Gamma^1_11 = -3/5 N", G[(1, 1, 1)], F(Fraction(-3, 5)) * N)
    chk.equal("Gamma^2_21 = -3/5 N", G[(2, 2, 1)], F(Fraction(-3, 5)) * N)
    chk.equal("Gamma^1_12 = -Gamma^2_22", G[(1, 1, 2)], -G[(2, 2, 2)])
    chk.equal("nabla_alpha N = M", along_scalar(N, 2, "alpha", df, ff), M)
    I1, I2, I4, I7 = si[1], si[2], si[4], si[7]
    chk.equal("nabla_alpha M = I4 N^3 + 2 I1 N M", along_scalar(M, 4, "alpha", df, ff),
              I4 * N ** 3 + 2 * I1 * N * M)
    if df.Omega.is_zero():
        # the gamma-direction derivatives of N and M pick up Omega terms otherwise
        chk.zero("nabla_gamma N = 0", along_scalar(N, 2, "gamma", df, ff))
        gM = along_scalar(M, 4, "gamma", df, ff)
        chk.equal("(nabla_gamma M)^2 = N^7 I7", gM * gM, N ** 7 * I7)
        chk.zero("I2 = 0", I2)
        chk.zero("I5 = 0", si[5])
        chk.zero("I8 = 0", si[8])
        chk.equal("I1 Gamma^2_12 = I4 N + 3/5 I1 N + 2 I1^2 N", I1 * G[(2, 1, 2)],
                  I4 * N + F(Fraction(3, 5)) * I1 * N + 2 * I1 * I1 * N)
        a = (I1 * G[(2, 2, 2)]) ** 2
        b, c = I7 * N ** 3, 16 * I2 * N ** 3 * I1 ** 4
        chk.equal("quartic relation for Gamma^2_22", a * a + b * b + c * c,
                  32 * I7 * N ** 6 * I2 * I1 ** 4 + 2 * (b + c) * a)


def bagderina_suite(eq, chk: Checker, points: int = 5, precision: int = 256, seed: int = 0) -> None:
    ff = fundamental(eq)
    v = classify(eq)
    if v.case not in (Case.FIRST_INTERMEDIATE, Case.OTHER_INTERMEDIATE):
        raise SuiteNotApplicableError(f"bagderina suite needs an intermediate case, got {v.case.value}")
    if ff.A.is_zero():
        raise BagderinaUndefinedError("Bagderina chain undefined, A ≡ 0")
    if v.case is Case.FIRST_INTERMEDIATE and v.zero_mean:
        try:
            verify_bridge(eq, count=points, precision_bits=precision, seed=seed, checker=chk)
        except SamplingError as exc:
            chk.record(CheckResult("numeric bridge identities", "numeric", True, "-",
                                   detail=str(exc), skipped=True))
        return
    df = degeneration(eq, ff, check_branches=False)
    cd = curvature_from_connection(df.Gamma, df.Omega)
    bd = bgd_chain(eq, ff, df, cd)
    chk.equal("j5 = -125 detR + 45/4 Omega^2", bd.j5,
              -125 * cd.detR + F(Fraction(45, 4)) * df.Omega * df.Omega)
    chk.equal("j5 = 125/4 Disc", bd.j5, F(Fraction(125, 4)) * cd.Disc)
    chk.record(CheckResult("umbilical iff j5 = 0", "exact", cd.Disc.is_zero() == bd.j5.is_zero()))


def run_suite(eq, suite: str, mode: str = "exact", seed: int = 0, points: int = 5,
              precision: int = 256) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    chk = Checker(mode, seed)
    if suite in ("core", "all"):
        core_suite(eq, chk)
    if suite in ("first-case", "all"):
        if suite == "first-case" or classify(eq).case is Case.FIRST_INTERMEDIATE:
            first_case_suite(eq, chk)
    if suite in ("bagderina", "all"):
        if suite == "bagderina" or not fundamental(eq).A.is_zero():
            if suite == "bagderina" or classify(eq).case in (Case.FIRST_INTERMEDIATE, Case.OTHER_INTERMEDIATE):
                bagderina_suite(eq, chk, points, precision, seed)
    return chk.results
