"""Seeded equation and map generators for test corpora."""
from __future__ import annotations

import random
from fractions import Fraction

from .algebra import ONE, X, Y, ZERO, RatFunc
from .classify import Case, classify
from .model import CubicODE, PointMap, pushforward

FAMILIES = ("p-only", "p-xy", "linear-q", "random", "general-intermediate")


def _coeff(rng: random.Random, bound: int = 5) -> int:
    c = 0
    while c == 0:
        c = rng.randint(-bound, bound)
    return c


def random_poly(rng: random.Random, degree: int, in_x: bool = True, in_y: bool = True,
                density: float = 0.5, bound: int = 5) -> RatFunc:
    """Random polynomial of total degree <= ``degree`` with small integer coefficients."""
    out = ZERO
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            if (i and not in_x) or (j and not in_y):
                continue
            if rng.random() < density:
                out = out + _coeff(rng, bound) * X ** i * Y ** j
    return out


def p_only(rng: random.Random, degree: int) -> CubicODE:
    """y'' = P(y) with P'' nonzero: always intermediate with Omega = 0."""
    degree = max(degree, 2)
    while True:
        P = random_poly(rng, degree, in_x=False)
        if not P.diff("y").diff("y").is_zero():
            return CubicODE(P, ZERO, ZERO, ZERO)


def p_xy(rng: random.Random, degree: int) -> CubicODE:
    """y'' = P(x, y) with P_yy nonzero and genuine x-dependence."""
    degree = max(degree, 3)
    while True:
        P = random_poly(rng, degree, density=0.4)
        if not P.diff("y").diff("y").is_zero() and not P.diff("x").is_zero():
            return CubicODE(P, ZERO, ZERO, ZERO)


def linear_q(rng: random.Random, degree: int) -> CubicODE:
    """R = S = 0, Q = q0(x) + q1(x) y: intermediate with Omega = q1 (nonzero)."""
    degree = max(degree, 2)
    while True:
        P = random_poly(rng, degree, density=0.4)
        q0 = random_poly(rng, max(degree - 2, 0), in_y=False, density=0.5)
        q1 = random_poly(rng, max(degree - 2, 0), in_y=False, density=0.7)
        if not q1.is_zero() and not P.diff("y").diff("y").is_zero():
            return CubicODE(P, q0 + q1 * Y, ZERO, ZERO)


def random_equation(rng: random.Random, degree: int) -> CubicODE:
    return CubicODE(*(random_poly(rng, degree) for _ in range(4)))


def random_affine(rng: random.Random, bound: int = 3) -> PointMap:
    while True:
        a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
        if a * d - b * c != 0:
            return PointMap.affine(a, b, c, d, rng.randint(-2, 2), rng.randint(-2, 2))


def random_map(rng: random.Random, allow_shear: bool = True) -> PointMap:
    """Affine map, optionally followed by a quadratic shear."""
    m = random_affine(rng)
    if allow_shear and rng.random() < 0.5:
        k = Fraction(_coeff(rng, 3), rng.randint(1, 3))
        shear = PointMap.shear_y(k, 2) if rng.random() < 0.5 else PointMap.shear_x(k, 2)
        m = m.then(shear)
    return m


def general_intermediate(rng: random.Random, degree: int, max_tries: int = 200) -> CubicODE:
    """First-intermediate equation with all of A, B nonzero.

    Blind sampling of four coefficients essentially never lands on F = 0, so
    a seed from the p-xy or linear-q families is pushed through a random
    affine map and kept if it classifies as first intermediate with both
    branches of the degeneration formulas defined.
    """
    from .fields import fundamental

    for _ in range(max_tries):
        seed = (p_xy if rng.random() < 0.5 else linear_q)(rng, degree)
        eq = pushforward(seed, random_affine(rng, 2))
        ff = fundamental(eq)
        if ff.A.is_zero() or ff.B.is_zero():
            continue
        if classify(eq).case is Case.FIRST_INTERMEDIATE:
            return eq
    raise RuntimeError("no general intermediate equation found")


def generate(family: str, count: int, degree: int, seed: int) -> list[CubicODE]:
    if degree < 1:
        raise ValueError("degree must be at least 1")
    rng = random.Random(seed)
    make = {"p-only": p_only, "p-xy": p_xy, "linear-q": linear_q, "random": random_equation,
            "general-intermediate": general_intermediate}.get(family)
    if make is None:
        raise ValueError(f"unknown family {family!r}")
    return [make(rng, degree) for _ in range(count)]


def first_intermediate(family: str, count: int, degree: int, seed: int) -> list[CubicODE]:
    """Draw from ``family`` until ``count`` first-intermediate equations are collected."""
    rng = random.Random(seed)
    make = {"p-only": p_only, "p-xy": p_xy, "linear-q": linear_q,
            "general-intermediate": general_intermediate}[family]
    out = []
    while len(out) < count:
        eq = make(rng, degree)
        if classify(eq).case is Case.FIRST_INTERMEDIATE:
            out.append(eq)
    return out


__all__ = ["FAMILIES", "generate", "first_intermediate", "random_map", "random_affine",
           "random_poly", "p_only", "p_xy", "linear_q", "general_intermediate", "ONE"]
