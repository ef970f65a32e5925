from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conftest import ORACLE_CASES, agrees, fixture_path, ode, oracle_case
from odeinv.algebra import RatFunc
from odeinv.checks import Checker
from odeinv.corpus import first_intermediate, random_map
from odeinv.fields import degeneration, fundamental
from odeinv.model import CubicODE, PseudoField, pushforward
from odeinv.scalars import (NotFirstIntermediateError, along_scalar, base_invariants, covariant_derivative,
                            directional, expansion_coefficients)
from odeinv.suites import first_case_suite

F = RatFunc.const


def _build(eq):
    ff = fundamental(eq)
    return ff, degeneration(eq, ff)


def test_covariant_derivative_of_constant_scalar(y4):
    _, df = _build(y4)
    out = covariant_derivative(PseudoField.scalar(F(7), 0), df)
    assert (out.r, out.s) == (0, 1)
    assert out[1].is_zero() and out[2].is_zero()


def test_covariant_derivative_of_N(y4):
    _, df = _build(y4)
    out = covariant_derivative(PseudoField.scalar(df.N, 2), df)
    assert (str(out[1]), str(out[2])) == ("0", "-56/5")
    assert out.weight == 2


def test_covariant_derivative_of_alpha_vector(y4):
    ff, df = _build(y4)
    out = covariant_derivative(PseudoField.vector(*ff.alpha_vec, 2), df)
    assert (out.r, out.s) == (1, 1)
    # components keyed (i, k) for nabla_k alpha^i
    assert (str(out[1, 1]), str(out[2, 1])) == ("-24/5*y", "0")
    assert (str(out[1, 2]), str(out[2, 2])) == ("0", "-24/5*y")


def test_directional_y4(y4):
    ff, df = _build(y4)
    assert along_scalar(df.N, 2, "alpha", df, ff) == df.M
    assert str(df.M) == "672/5*y^2"
    assert along_scalar(df.N, 2, "gamma", df, ff).is_zero()
    assert along_scalar(F(3), 0, "alpha", df, ff).is_zero()
    out = directional(PseudoField.scalar(df.N, 2), "gamma", df, ff)
    assert out.weight == 5
    with pytest.raises(ValueError):
        along_scalar(df.N, 2, "beta", df, ff)


def test_expansion_y4(y4):
    ff, df = _build(y4)
    G = expansion_coefficients(df, ff)
    expected = {(1, 1, 1): "-24/5*y", (2, 1, 1): "0", (1, 1, 2): "0", (2, 1, 2): "192/5*y",
                (1, 2, 1): "0", (2, 2, 1): "-24/5*y", (1, 2, 2): "784/75*y^2", (2, 2, 2): "0"}
    assert {k: str(v) for k, v in G.coeffs.items()} == expected
    assert G.named()["Gamma^1_22"] == G[(1, 2, 2)]


def test_gamma2_12_relation_on_y4(y4):
    ff, df = _build(y4)
    si = base_invariants(df, ff)
    N, I1 = df.N, si.I1
    lhs = I1 * si.expansion[(2, 1, 2)]
    assert str(lhs) == "2016/25*y"
    assert lhs == si[4] * N + F(Fraction(3, 5)) * I1 * N + 2 * I1 * I1 * N


def test_invariants_y4(y4):
    ff, df = _build(y4)
    si = base_invariants(df, ff, through=9)
    assert (str(si.I1), str(si.I2), str(si.I3)) == ("21/10", "0", "1/27")
    for k in range(4, 10):
        assert si[k].is_zero(), k


def test_invariants_y5(y5):
    # N = 20y^2 and M = 640y^4 here, so I1 is the constant 8/5
    ff, df = _build(y5)
    assert (str(df.N), str(df.M)) == ("20*y^2", "640*y^4")
    si = base_invariants(df, ff)
    assert (str(si.I1), str(si.I3)) == ("8/5", "1/20")


def test_invariants_need_first_intermediate():
    eq = ode("y^2")
    ff, df = _build(eq)
    with pytest.raises(NotFirstIntermediateError):
        base_invariants(df, ff)
    with pytest.raises(NotFirstIntermediateError):
        expansion_coefficients(df, ff)


def test_tower_numbering_and_depth():
    eq = ode("x*y^4")
    ff, df = _build(eq)
    si = base_invariants(df, ff, through=21)
    assert sorted(si.all()) == list(range(1, 22))
    assert si.derivation[4] == ("alpha", 1)
    assert si.derivation[9] == ("gamma", 3)
    assert si.derivation[10] == ("alpha", 4)
    assert si.derivation[13] == ("gamma", 4)
    assert si.derivation[19] == ("gamma", 7)
    N = df.N
    assert si[10] == along_scalar(si[4], 0, "alpha", df, ff) / N
    g = along_scalar(si[6], 0, "gamma", df, ff)
    assert si[15] == g * g / N ** 3


@pytest.mark.parametrize("case", ORACLE_CASES, ids=lambda c: f"{c[0]}-{c[2]}")
def test_invariants_match_oracle(case):
    eq, o = oracle_case(*case)
    ff, df = _build(eq)
    si = base_invariants(df, ff)
    names = {"G1_11": (1, 1, 1), "G2_11": (2, 1, 1), "G1_12": (1, 1, 2), "G2_12": (2, 1, 2),
             "G1_21": (1, 2, 1), "G2_21": (2, 2, 1), "G1_22": (1, 2, 2), "G2_22": (2, 2, 2)}
    for name, key in names.items():
        assert agrees(si.expansion[key], o["expansion"][name]), name
    for k in range(1, 10):
        assert agrees(si[k], o["I"][k]), k


@pytest.mark.parametrize("family, degree", [("p-only", 5), ("p-xy", 3)])
def test_first_case_suite_on_zero_mean_corpus(family, degree):
    for eq in first_intermediate(family, 4, degree, 17):
        chk = Checker("exact")
        first_case_suite(eq, chk)
        assert chk.passed, [r.name for r in chk.results if not r.passed]
        assert any(r.name.startswith("quartic") for r in chk.results)


def test_first_case_suite_on_nonzero_mean_corpus():
    for eq in first_intermediate("linear-q", 3, 2, 17):
        chk = Checker("exact")
        first_case_suite(eq, chk)
        assert chk.passed
        assert not any(r.name.startswith("quartic") for r in chk.results)


def test_gamma_derivative_of_N_when_mean_curvature_is_nonzero():
    # nabla_gamma N picks up -2 Omega M, so the Omega = 0 identity does not extend
    for eq in first_intermediate("linear-q", 3, 2, 23):
        ff, df = _build(eq)
        assert not df.Omega.is_zero()
        assert along_scalar(df.N, 2, "gamma", df, ff) == -2 * df.Omega * df.M


@pytest.mark.parametrize("name", ["y4", "y5", "xy4"])
def test_scalar_invariance_under_maps(name):
    eq = CubicODE.load(fixture_path(f"{name}.json"))
    ff, df = _build(eq)
    si = base_invariants(df, ff, through=3)
    rng = random.Random(name)
    for _ in range(3):
        pmap = random_map(rng)
        pushed = pushforward(eq, pmap)
        pf, pd = _build(pushed)
        ps = base_invariants(pd, pf, through=3)
        assert pmap.forward(ps.I1) == si.I1
        assert pmap.forward(ps.I3) == si.I3
