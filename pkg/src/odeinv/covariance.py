"""Weight-covariance checks of every constructed field under a point map."""
from __future__ import annotations

from .checks import Checker, CheckResult
from .classify import classify
from .curvature import curvature
from .fields import degeneration, fundamental
from .model import CubicODE, PointMap, PseudoField, pushforward, transform_pseudofield
from .scalars import base_invariants


def field_table(eq: CubicODE) -> dict[str, PseudoField]:
    """Every pseudofield defined for ``eq`` with its declared valence and weight."""
    ff = fundamental(eq)
    out = {
        "alpha": ff.alpha,
        "beta": ff.beta,
        "F5": PseudoField.scalar(ff.F5, 5),
        "alpha_vec": PseudoField.vector(*ff.alpha_vec, 2),
    }
    if ff.alpha_zero or not ff.F5.is_zero():
        return out
    df = degeneration(eq, ff)
    cd = curvature(df)
    out.update(
        N=PseudoField.scalar(df.N, 2),
        M=PseudoField.scalar(df.M, 4),
        gamma=df.gamma,
        gamma_vec=PseudoField.vector(*df.gamma_vec, 3),
        Omega=PseudoField.scalar(df.Omega, 1),
        detR=PseudoField.scalar(cd.detR, 2),
        Disc=PseudoField.scalar(cd.Disc, 2),
        R=PseudoField(1, 1, 1, {(k, q): v for (k, q), v in cd.Rop.items()}),
    )
    if not df.M.is_zero() and not df.N.is_zero():
        si = base_invariants(df, ff, cd, through=3)
        out.update(I1=PseudoField.scalar(si.I1, 0), I3=PseudoField.scalar(si.I3, 0))
    return out


def check_covariance(eq: CubicODE, pmap: PointMap, chk: Checker | None = None,
                     pushed: CubicODE | None = None) -> Checker:
    """transform(F(pushforward(eq)), map) = F(eq) for each field, plus verdict invariance."""
    chk = chk or Checker("exact")
    pushed = pushed if pushed is not None else pushforward(eq, pmap)
    here, there = field_table(eq), field_table(pushed)
    if set(here) != set(there):
        chk.record(CheckResult("field sets agree", "exact", False,
                               detail=f"{sorted(here)} vs {sorted(there)}"))
        return chk
    tag = f" [{pmap.name}]" if pmap.name else ""
    for name, fld in here.items():
        back = transform_pseudofield(there[name], pmap)
        for idx, v in fld.components.items():
            chk.equal(f"{name}{list(idx) if idx else ''} weight {fld.weight}{tag}",
                      back.components[idx], v)
    chk.record(CheckResult(f"verdict invariant{tag}", "exact",
                           classify(pushed).flags() == classify(eq).flags()))
    return chk
