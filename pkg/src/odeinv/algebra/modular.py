"""Evaluation of rational functions in prime fields GF(p), p > 2^60.

Used as a probabilistic zero test: a non-zero ``f`` of total degree ``d``
vanishes at a uniformly random point with probability at most ``d / p``
(Schwartz-Zippel), so each sample leaves a failure bound of ~2^-55 for
the degrees met here.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .ratfunc import RatFunc

# Largest primes below 2^61 (checked with sympy.isprime in the tests).
PRIMES = (2305843009213693951, 2305843009213693921)
MIN_PRIME = 2 ** 60


class ModularPoleError(ZeroDivisionError):
    """Denominator vanishes at the sampled point; resample."""


class BadPrimeError(ValueError):
    """A coefficient denominator is divisible by the prime; change primes."""


def _coeff_mod(c, p: int) -> int:
    den = int(c.denominator) % p
    if den == 0:
        raise BadPrimeError(f"coefficient denominator {c.denominator} not invertible mod {p}")
    return int(c.numerator) * pow(den, -1, p) % p


def _eval_element_mod(elem, x: int, y: int, p: int) -> int:
    xs: dict[int, int] = {}
    ys: dict[int, int] = {}
    total = 0
    for (ex, ey), c in elem.items():
        if ex not in xs:
            xs[ex] = pow(x, ex, p)
        if ey not in ys:
            ys[ey] = pow(y, ey, p)
        total += _coeff_mod(c, p) * xs[ex] * ys[ey]
    return total % p


def eval_mod(f: RatFunc, point, prime: int) -> int:
    if prime <= MIN_PRIME:
        raise ValueError("prime must exceed 2^60")
    x, y = (int(v) % prime for v in point)
    den = _eval_element_mod(f._den, x, y, prime)
    if den == 0:
        raise ModularPoleError(f"denominator of {f} vanishes mod {prime} at {point}")
    return _eval_element_mod(f._num, x, y, prime) * pow(den, -1, prime) % prime


def failure_bound(f: RatFunc, prime: int) -> Fraction:
    """Per-sample Schwartz-Zippel bound for wrongly accepting ``f`` as zero."""
    return Fraction(max(f.num.degree(), 0), prime)


def sample_points(rng: random.Random, prime: int, count: int) -> list[tuple[int, int]]:
    return [(rng.randrange(prime), rng.randrange(prime)) for _ in range(count)]


def probably_equal(lhs, rhs, points_per_prime: int = 3, primes=PRIMES,
                   rng: random.Random | None = None) -> bool:
    """Compare two rational functions (or callables returning residues) modulo primes.

    ``lhs``/``rhs`` are RatFuncs; they are never subtracted symbolically.
    Points where either side has a modular pole are resampled.
    """
    rng = rng or random.Random(0)
    for p in primes:
        done = 0
        draws = 0
        while done < points_per_prime:
            draws += 1
            if draws > 100 * points_per_prime:
                raise RuntimeError("could not find a pole-free modular sample point")
            pt = (rng.randrange(p), rng.randrange(p))
            try:
                a = eval_mod(lhs, pt, p)
                b = eval_mod(rhs, pt, p)
            except ModularPoleError:
                continue
            if a != b:
                return False
            done += 1
    return True
