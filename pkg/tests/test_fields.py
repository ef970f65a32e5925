from __future__ import annotations

import pytest
from hypothesis import given

from conftest import ORACLE_CASES, agrees, ode, oracle_case, polys
from odeinv.classify import Case, classify
from odeinv.corpus import first_intermediate
from odeinv.fields import (NotIntermediateError, M_branch, N_branch, degeneration, f5_radicand,
                           fundamental, gamma_branch, phi_branch)
from odeinv.model import CubicODE


def _strs(*vals):
    return tuple(str(v) for v in vals)


def test_fundamental_zero_equation():
    ff = fundamental(ode())
    assert all(v.is_zero() for v in (ff.A, ff.B, ff.G, ff.H, ff.F5))


def test_fundamental_y4(y4):
    ff = fundamental(y4)
    assert _strs(ff.A, ff.B, ff.G, ff.H, ff.F5) == ("12*y^2", "0", "0", "-288*y^3", "0")
    assert _strs(*ff.alpha_vec) == ("0", "-12*y^2")
    assert _strs(ff.beta[1], ff.beta[2]) == ("288*y^3", "0")


def test_fundamental_cubic():
    ff = fundamental(ode("y", "0", "0", "1"))
    assert _strs(ff.A, ff.B, ff.G, ff.H, ff.F5) == ("0", "-2", "0", "-12*y", "8*y")


def test_degeneration_y4(y4):
    ff = fundamental(y4)
    df = degeneration(y4, ff)
    assert _strs(df.N, df.M) == ("8*y", "672/5*y^2")
    assert _strs(*df.phi) == ("0", "-6/(5*y)")
    assert _strs(*df.gamma_vec) == ("56/5", "0")
    assert df.M == ff.A * df.C + ff.B * df.D
    assert df.Omega.is_zero()


def test_connection_y4(y4):
    G = degeneration(y4, fundamental(y4)).Gamma
    assert str(G[(1, 1, 2)]) == "2/(5*y)"
    assert str(G[(2, 1, 1)]) == "-y^4"
    assert str(G[(2, 2, 2)]) == "4/(5*y)"
    for key in ((1, 1, 1), (1, 2, 2), (2, 1, 2)):
        assert G[key].is_zero()


def test_degeneration_y2_fields_vanish():
    eq = ode("y^2")
    ff = fundamental(eq)
    assert _strs(ff.A, ff.B, ff.H) == ("2", "0", "0")
    df = degeneration(eq, ff)
    assert df.N.is_zero() and df.M.is_zero()


@pytest.mark.parametrize("eq", [ode(), ode("y", "0", "0", "1")], ids=["maximal", "general"])
def test_degeneration_precondition(eq):
    with pytest.raises(NotIntermediateError):
        degeneration(eq, fundamental(eq))


@given(polys(3), polys(2), polys(2), polys(2))
def test_f5_identities_on_random_equations(P, Q, R, S):
    eq = CubicODE(P, Q, R, S)
    ff = fundamental(eq)
    assert 3 * ff.F5 == ff.A * ff.G + ff.B * ff.H
    assert ff.F5 == f5_radicand(eq, ff)


@given(polys(3), polys(2), polys(2), polys(2))
def test_alpha_parallel_beta_iff_f5_zero(P, Q, R, S):
    ff = fundamental(CubicODE(P, Q, R, S))
    parallel = (ff.A * ff.G + ff.B * ff.H).is_zero()
    assert parallel == ff.F5.is_zero()


def test_branch_agreement_on_general_intermediate():
    for eq in first_intermediate("general-intermediate", 3, 2, 21):
        ff = fundamental(eq)
        assert not ff.A.is_zero() and not ff.B.is_zero()
        N = N_branch(eq, ff, "A")
        assert N == N_branch(eq, ff, "B")
        assert M_branch(eq, ff, N, "A") == M_branch(eq, ff, N, "B")
        assert phi_branch(eq, ff, "A") == phi_branch(eq, ff, "B")
        Om = degeneration(eq, ff).Omega
        assert gamma_branch(eq, ff, N, Om, "A") == gamma_branch(eq, ff, N, Om, "B")


@pytest.mark.parametrize("case", ORACLE_CASES, ids=lambda c: f"{c[0]}-{c[2]}")
def test_fields_match_oracle(case):
    eq, o = oracle_case(*case)
    ff = fundamental(eq)
    for name in ("A", "B", "G", "H", "F5"):
        assert agrees(getattr(ff, name), o[name]), name
    df = degeneration(eq, ff)
    assert agrees(df.N, o["N"])
    assert agrees(df.M, o["M"])
    assert all(agrees(a, b) for a, b in zip(df.phi, o["phi"]))
    assert all(agrees(a, b) for a, b in zip(df.gamma_vec, o["gamma_vec"]))
    for key, val in o["Gamma"].items():
        assert agrees(df.Gamma[key], val), key
    assert df.M == ff.A * df.C + ff.B * df.D
    for k in (1, 2):
        for i in (1, 2):
            for j in (1, 2):
                assert df.Gamma[(k, i, j)] == df.Gamma[(k, j, i)]


def test_oracle_cases_are_first_intermediate():
    for case in ORACLE_CASES:
        assert classify(oracle_case(*case)[0]).case is Case.FIRST_INTERMEDIATE
