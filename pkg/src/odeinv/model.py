"""Equations, point transformations and the pseudotensorial transport rule.

Index convention: index 1 is x, index 2 is y.  Field components are kept in
dicts keyed by index tuples, upper indices first.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import ONE, X, Y, ZERO, RatFunc, parse_expr

COORDS = ("x", "y")


class InvalidMapError(ValueError):
    pass


@dataclass(frozen=True)
class CubicODE:
    """y'' = P + 3 Q y' + 3 R y'^2 + S y'^3."""

    P: RatFunc = ZERO
    Q: RatFunc = ZERO
    R: RatFunc = ZERO
    S: RatFunc = ZERO

    @classmethod
    def parse(cls, P="0", Q="0", R="0", S="0") -> "CubicODE":
        return cls(*(parse_expr(str(t)) for t in (P, Q, R, S)))

    @classmethod
    def from_json(cls, data: dict) -> "CubicODE":
        unknown = set(data) - {"P", "Q", "R", "S"}
        if unknown:
            raise ValueError(f"unexpected equation keys: {sorted(unknown)}")
        return cls.parse(**{k: data.get(k, "0") for k in "PQRS"})

    @classmethod
    def load(cls, path) -> "CubicODE":
        return cls.from_json(json.loads(Path(path).read_text()))

    def to_json(self) -> dict[str, str]:
        return {k: str(getattr(self, k)) for k in "PQRS"}

    @property
    def coefficients(self) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
        return (self.P, self.Q, self.R, self.S)

    def __str__(self):
        return "y'' = " + " + ".join(
            f"{c}({v})" for c, v in zip(("", "3*y'*", "3*y'^2*", "y'^3*"), map(str, self.coefficients))
        )


def compose(f: RatFunc, fx: RatFunc, fy: RatFunc) -> RatFunc:
    return f.compose(fx, fy)


@dataclass(frozen=True)
class PointMap:
    """Forward map (x, y) -> (xt, yt) with its inverse (xt, yt) -> (x, y).

    The inverse components are written in the same two formal variables.
    """

    xt: RatFunc
    yt: RatFunc
    xb: RatFunc
    yb: RatFunc
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if jacobian_matrix(self.xt, self.yt)[1].is_zero():
            raise InvalidMapError("Jacobian determinant of the forward map vanishes identically")
        if self.xb.compose(self.xt, self.yt) != X or self.yb.compose(self.xt, self.yt) != Y:
            raise InvalidMapError("inverse map does not undo the forward map")

    @classmethod
    def parse(cls, xt: str, yt: str, x: str, y: str, name: str = "") -> "PointMap":
        return cls(parse_expr(xt), parse_expr(yt), parse_expr(x), parse_expr(y), name)

    @classmethod
    def from_json(cls, data: dict) -> "PointMap":
        try:
            fwd, inv = data["forward"], data["inverse"]
            return cls.parse(fwd["xt"], fwd["yt"], inv["x"], inv["y"], data.get("name", ""))
        except KeyError as exc:
            raise ValueError(f"map file missing key {exc}") from None

    @classmethod
    def load(cls, path) -> "PointMap":
        return cls.from_json(json.loads(Path(path).read_text()))

    def to_json(self) -> dict:
        return {"forward": {"xt": str(self.xt), "yt": str(self.yt)},
                "inverse": {"x": str(self.xb), "y": str(self.yb)}}

    def forward(self, f: RatFunc) -> RatFunc:
        """Compose a function of the tilde coordinates with the forward map."""
        return f.compose(self.xt, self.yt)

    def backward(self, f: RatFunc) -> RatFunc:
        """Compose a function of (x, y) with the inverse map."""
        return f.compose(self.xb, self.yb)

    def then(self, other: "PointMap") -> "PointMap":
        """``other`` after ``self``."""
        return PointMap(
            other.xt.compose(self.xt, self.yt), other.yt.compose(self.xt, self.yt),
            self.xb.compose(other.xb, other.yb), self.yb.compose(other.xb, other.yb),
            f"{other.name}*{self.name}",
        )

    # -- standard maps ------------------------------------------------------
    @classmethod
    def identity(cls) -> "PointMap":
        return cls(X, Y, X, Y, "identity")

    @classmethod
    def swap(cls) -> "PointMap":
        return cls(Y, X, Y, X, "swap")

    @classmethod
    def affine(cls, a, b, c, d, e=0, f=0) -> "PointMap":
        """xt = a x + b y + e, yt = c x + d y + f."""
        det = RatFunc.const(a) * d - RatFunc.const(b) * c
        if det.is_zero():
            raise InvalidMapError("singular affine map")
        xs, ys = X - e, Y - f
        return cls(a * X + b * Y + e, c * X + d * Y + f,
                   (d * xs - b * ys) / det, (a * ys - c * xs) / det,
                   f"affine({a},{b},{c},{d},{e},{f})")

    @classmethod
    def shear_y(cls, k, n: int = 2) -> "PointMap":
        """xt = x, yt = y + k x^n."""
        return cls(X, Y + k * X ** n, X, Y - k * X ** n, f"shear_y({k},{n})")

    @classmethod
    def shear_x(cls, k, n: int = 2) -> "PointMap":
        """xt = x + k y^n, yt = y."""
        return cls(X + k * Y ** n, Y, X - k * Y ** n, Y, f"shear_x({k},{n})")


def jacobian_matrix(fx: RatFunc, fy: RatFunc):
    m = [[fx.diff("x"), fx.diff("y")], [fy.diff("x"), fy.diff("y")]]
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    return m, det


def jacobians(pmap: PointMap):
    """Return ``(T, S, detT)`` as functions of (x, y) with ``S T = 1``.

    ``T[q][j] = d xt^q / d x^j``; ``S[i][p] = d x^i / d xt^p`` composed with
    the forward map.
    """
    T, detT = jacobian_matrix(pmap.xt, pmap.yt)
    if detT.is_zero():
        raise InvalidMapError("Jacobian determinant vanishes identically")
    S_tilde, _ = jacobian_matrix(pmap.xb, pmap.yb)
    S = [[pmap.forward(e) for e in row] for row in S_tilde]
    for i in range(2):
        for j in range(2):
            entry = S[i][0] * T[0][j] + S[i][1] * T[1][j]
            if entry != (ONE if i == j else ZERO):
                raise InvalidMapError("inverse Jacobian does not invert the forward Jacobian")
    return T, S, detT


# --- pushforward ----------------------------------------------------------

def _pmul(a: list, b: list) -> list:
    """Product of polynomials in p with RatFunc coefficients (index = power)."""
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u.is_zero():
            continue
        for j, v in enumerate(b):
            if not v.is_zero():
                out[i + j] = out[i + j] + u * v
    return out


def _padd(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [ZERO] * (n - len(a))
    b = b + [ZERO] * (n - len(b))
    return [u + v for u, v in zip(a, b)]


def _pscale(a: list, c: RatFunc) -> list:
    return [u * c for u in a]


def solve_linear(mat: list[list[RatFunc]], rhs: list[RatFunc]) -> list[RatFunc]:
    """Gaussian elimination over Q(x, y)."""
    n = len(mat)
    a = [row[:] + [r] for row, r in zip(mat, rhs)]
    for k in range(n):
        piv = next((r for r in range(k, n) if not a[r][k].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular linear system over Q(x, y)")
        a[k], a[piv] = a[piv], a[k]
        inv = a[k][k].inverse()
        a[k] = [e * inv for e in a[k]]
        for r in range(n):
            if r != k and not a[r][k].is_zero():
                f = a[r][k]
                a[r] = [e - f * g for e, g in zip(a[r], a[k])]
    return [a[i][n] for i in range(n)]


def pushforward(eq: CubicODE, pmap: PointMap) -> CubicODE:
    """Coefficients of the transformed equation in the tilde coordinates."""
    xt, yt = pmap.xt, pmap.yt
    xt_x, xt_y, yt_x, yt_y = xt.diff("x"), xt.diff("y"), yt.diff("x"), yt.diff("y")
    if (xt_x * yt_y - xt_y * yt_x).is_zero():
        raise InvalidMapError("Jacobian determinant vanishes identically")
    ypp = [eq.P, 3 * eq.Q, 3 * eq.R, eq.S]
    u = [yt_x, yt_y]                      # numerator of the new slope
    w = [xt_x, xt_y]                      # denominator of the new slope

    def total(f_lin):
        # d/dx of (f_x + f_y p) along solutions: second derivatives plus f_y y''
        f = f_lin
        return _padd([f.diff("x").diff("x"), 2 * f.diff("x").diff("y"), f.diff("y").diff("y")],
                     _pscale(ypp, f.diff("y")))

    du, dw = total(yt), total(xt)
    lhs = _padd(_pmul(du, w), _pscale(_pmul(u, dw), RatFunc.const(-1)))
    w2 = _pmul(w, w)
    u2 = _pmul(u, u)
    basis = [_pmul(w2, w), _pscale(_pmul(u, w2), RatFunc.const(3)),
             _pscale(_pmul(u2, w), RatFunc.const(3)), _pmul(u2, u)]
    if any(not c.is_zero() for c in lhs[4:]):
        raise ArithmeticError("transformed right-hand side is not cubic in y'")
    lhs = (lhs + [ZERO] * 4)[:4]
    mat = [[(b + [ZERO] * 4)[power] for b in basis] for power in range(4)]
    coeffs = solve_linear(mat, lhs)
    return CubicODE(*(pmap.backward(c) for c in coeffs))


# --- pseudotensorial fields -------------------------------------------------

def index_tuples(n: int):
    return list(itertools.product((1, 2), repeat=n))


@dataclass(frozen=True)
class PseudoField:
    """Components ``F^{i1..ir}_{j1..js}`` of weight ``m``, upper indices first."""

    r: int
    s: int
    weight: int
    components: dict

    def __post_init__(self):
        keys = set(index_tuples(self.r + self.s))
        if set(self.components) != keys:
            raise ValueError(f"valence ({self.r},{self.s}) needs {len(keys)} components "
                             f"indexed by {sorted(keys)}")

    @classmethod
    def scalar(cls, value: RatFunc, weight: int = 0) -> "PseudoField":
        return cls(0, 0, weight, {(): value})

    @classmethod
    def covector(cls, c1: RatFunc, c2: RatFunc, weight: int) -> "PseudoField":
        return cls(0, 1, weight, {(1,): c1, (2,): c2})

    @classmethod
    def vector(cls, c1: RatFunc, c2: RatFunc, weight: int) -> "PseudoField":
        return cls(1, 0, weight, {(1,): c1, (2,): c2})

    def __getitem__(self, idx):
        if not isinstance(idx, tuple):
            idx = (idx,)
        return self.components[idx]

    def map(self, fn) -> "PseudoField":
        return PseudoField(self.r, self.s, self.weight, {k: fn(v) for k, v in self.components.items()})

    def __eq__(self, other):
        if not isinstance(other, PseudoField):
            return NotImplemented
        return ((self.r, self.s, self.weight) == (other.r, other.s, other.weight)
                and self.components == other.components)

    def __hash__(self):
        return hash((self.r, self.s, self.weight, tuple(sorted(self.components.items()))))


SKEW = {(1, 1): ZERO, (1, 2): ONE, (2, 1): -ONE, (2, 2): ZERO}
D_LOWER = PseudoField(0, 2, -1, dict(SKEW))
D_UPPER = PseudoField(2, 0, 1, dict(SKEW))


def transform_pseudofield(fld: PseudoField, pmap: PointMap) -> PseudoField:
    """Untilded components of a field given in the tilde coordinates.

    F^{i..}_{j..} = (det T)^m  S^i_p ... T^q_j ...  F~^{p..}_{q..}(forward)
    """
    T, S, detT = jacobians(pmap)
    tilde = {k: pmap.forward(v) for k, v in fld.components.items()}
    factor = detT ** fld.weight
    out = {}
    for idx in index_tuples(fld.r + fld.s):
        up, low = idx[:fld.r], idx[fld.r:]
        total = ZERO
        for src in index_tuples(fld.r + fld.s):
            comp = tilde[src]
            if comp.is_zero():
                continue
            coeff = ONE
            for i, p in zip(up, src[:fld.r]):
                coeff = coeff * S[i - 1][p - 1]
            for j, q in zip(low, src[fld.r:]):
                coeff = coeff * T[q - 1][j - 1]
            if not coeff.is_zero():
                total = total + coeff * comp
        out[idx] = total * factor
    return PseudoField(fld.r, fld.s, fld.weight, out)
