"""Exact arithmetic in Q[x, y] and Q(x, y)."""
from .modular import PRIMES, BadPrimeError, ModularPoleError, eval_mod, probably_equal
from .parser import ParseError, parse_expr
from .poly import Poly, resultant
from .ratfunc import ONE, X, Y, ZERO, PoleError, RatFunc, diff, eval_at, is_zero

__all__ = [
    "ONE", "PRIMES", "X", "Y", "ZERO",
    "BadPrimeError", "ModularPoleError", "ParseError", "PoleError",
    "Poly", "RatFunc",
    "diff", "eval_at", "eval_mod", "is_zero", "parse_expr", "probably_equal", "resultant",
]
