"""Covariant differentiation, basis-expansion coefficients and scalar invariants."""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import RatFunc
from .curvature import COORD
from .model import PseudoField, index_tuples


class NotFirstIntermediateError(ValueError):
    pass


def covariant_derivative(fld: PseudoField, df) -> PseudoField:
    """nabla_k F with the new lower index k appended last; weight unchanged."""
    G, phi, m = df.Gamma, df.phi, fld.weight
    r, s = fld.r, fld.s
    out = {}
    for idx in index_tuples(r + s):
        comp = fld.components[idx]
        for k in (1, 2):
            val = comp.diff(COORD[k])
            for n in range(r):
                for v in (1, 2):
                    src = idx[:n] + (v,) + idx[n + 1:]
                    val = val + G[(idx[n], k, v)] * fld.components[src]
            for n in range(r, r + s):
                for w in (1, 2):
                    src = idx[:n] + (w,) + idx[n + 1:]
                    val = val - G[(w, k, idx[n])] * fld.components[src]
            if m:
                val = val + m * phi[k - 1] * comp
            out[idx + (k,)] = val
    return PseudoField(r, s + 1, m, out)


def direction(along: str, df, ff) -> tuple[tuple[RatFunc, RatFunc], int]:
    """Vector components and weight of the directing field."""
    if along == "alpha":
        return ff.alpha_vec, 2
    if along == "gamma":
        return df.gamma_vec, 3
    raise ValueError(f"unknown direction {along!r}")


def directional(fld: PseudoField, along: str, df, ff) -> PseudoField:
    vec, w = direction(along, df, ff)
    nab = covariant_derivative(fld, df)
    out = {idx: vec[0] * nab.components[idx + (1,)] + vec[1] * nab.components[idx + (2,)]
           for idx in index_tuples(fld.r + fld.s)}
    return PseudoField(fld.r, fld.s, fld.weight + w, out)


def along_scalar(value: RatFunc, weight: int, along: str, df, ff) -> RatFunc:
    return directional(PseudoField.scalar(value, weight), along, df, ff)[()]


@dataclass(frozen=True)
class Expansion:
    """nabla_a b = c[(1,a,b)] alpha + c[(2,a,b)] gamma, with 1 = alpha, 2 = gamma."""

    coeffs: dict

    def __getitem__(self, key) -> RatFunc:
        return self.coeffs[key]

    def named(self) -> dict[str, RatFunc]:
        return {f"Gamma^{k}_{a}{b}": v for (k, a, b), v in sorted(self.coeffs.items())}


def expansion_coefficients(df, ff) -> Expansion:
    if df.M.is_zero():
        raise NotFirstIntermediateError("M vanishes: alpha and gamma are parallel")
    a1, a2 = ff.alpha_vec
    g1, g2 = df.gamma_vec
    det = a1 * g2 - a2 * g1   # equals M
    fields = {1: PseudoField.vector(a1, a2, 2), 2: PseudoField.vector(g1, g2, 3)}
    names = {1: "alpha", 2: "gamma"}
    coeffs = {}
    for a in (1, 2):
        for b in (1, 2):
            v = directional(fields[b], names[a], df, ff)
            v1, v2 = v[1], v[2]
            coeffs[(1, a, b)] = (v1 * g2 - v2 * g1) / det
            coeffs[(2, a, b)] = (a1 * v2 - a2 * v1) / det
    return Expansion(coeffs)


@dataclass
class ScalarInvariants:
    I1: RatFunc
    I2: RatFunc
    I3: RatFunc
    expansion: Expansion
    higher: dict = field(default_factory=dict)
    derivation: dict = field(default_factory=dict)

    def __getitem__(self, k: int) -> RatFunc:
        if k == 1:
            return self.I1
        if k == 2:
            return self.I2
        if k == 3:
            return self.I3
        return self.higher[k]

    def all(self) -> dict[int, RatFunc]:
        return {1: self.I1, 2: self.I2, 3: self.I3, **self.higher}


def invariant_tower(base: dict[int, RatFunc], N: RatFunc, df, ff, through: int):
    """Breadth-first triples: each triple (k, k+1, k+2) yields an alpha-triple
    nabla_alpha I / N and a gamma-triple (nabla_gamma I)^2 / N^3, numbered
    consecutively.  From (1,2,3) this gives I4..I6 and I7..I9.
    """
    values = dict(base)
    derivation = {}
    level = [(1, 2, 3)]
    nxt = 4
    N3 = N ** 3
    while nxt <= through and level:
        new_level = []
        for triple in level:
            for along in ("alpha", "gamma"):
                if nxt > through:
                    break
                out = []
                for k in triple:
                    d = along_scalar(values[k], 0, along, df, ff)
                    values[nxt] = d / N if along == "alpha" else d * d / N3
                    derivation[nxt] = (along, k)
                    out.append(nxt)
                    nxt += 1
                new_level.append(tuple(out))
        level = new_level
    return values, derivation


def base_invariants(df, ff, cd=None, through: int = 9) -> ScalarInvariants:
    if df.M.is_zero():
        raise NotFirstIntermediateError("M vanishes identically")
    if df.N.is_zero():
        raise NotFirstIntermediateError("N vanishes identically; invariants undefined")
    N, M = df.N, df.M
    exp = expansion_coefficients(df, ff)
    I1 = M / (N * N)
    I2 = df.Omega * df.Omega / N
    I3 = exp[(1, 2, 2)] * N * N / (M * M)
    values, derivation = invariant_tower({1: I1, 2: I2, 3: I3}, N, df, ff, through)
    higher = {k: v for k, v in values.items() if k > 3}
    return ScalarInvariants(I1, I2, I3, exp, higher, derivation)
