"""Case classification and the umbilical / zero-mean / zero-Gaussian flags."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .curvature import curvature
from .fields import degeneration, fundamental
from .model import CubicODE, PointMap, pushforward


class Case(str, Enum):
    GENERAL_POSITION = "GeneralPosition"
    MAXIMAL_DEGENERATION = "MaximalDegeneration"
    FIRST_INTERMEDIATE = "FirstIntermediate"
    OTHER_INTERMEDIATE = "OtherIntermediate"


INTERMEDIATE = (Case.FIRST_INTERMEDIATE, Case.OTHER_INTERMEDIATE)


@dataclass(frozen=True)
class Verdict:
    case: Case
    umbilical: bool | None = None
    zero_mean: bool | None = None
    zero_gauss: bool | None = None
    witness: dict = field(default_factory=dict, compare=False)

    @property
    def intersection_class(self) -> str | None:
        """First intermediate case with Omega = 0 equals Bagderina's type four."""
        if self.case is Case.FIRST_INTERMEDIATE and self.zero_mean:
            return "ShrID1∩BgdET4"
        if self.case is Case.FIRST_INTERMEDIATE:
            return "ShrID1∩BgdET2"
        return None

    def flags(self) -> tuple:
        return (self.case, self.umbilical, self.zero_mean, self.zero_gauss)

    def to_json(self) -> dict:
        out = {"case": self.case.value}
        if self.case is Case.OTHER_INTERMEDIATE:
            out["note"] = "intermediate cases 2-7 are not distinguished"
        if self.case in INTERMEDIATE:
            out.update(umbilical=self.umbilical, zero_mean=self.zero_mean, zero_gauss=self.zero_gauss)
        if self.intersection_class:
            out["intersection_class"] = self.intersection_class
        out["witness"] = dict(self.witness)
        return out


def classify(eq: CubicODE) -> Verdict:
    ff = fundamental(eq)
    witness = {"F5": str(ff.F5), "A": str(ff.A), "B": str(ff.B)}
    if ff.alpha_zero:
        return Verdict(Case.MAXIMAL_DEGENERATION, witness=witness)
    if not ff.F5.is_zero():
        return Verdict(Case.GENERAL_POSITION, witness=witness)
    df = degeneration(eq, ff)
    cd = curvature(df)
    case = Case.OTHER_INTERMEDIATE if df.M.is_zero() else Case.FIRST_INTERMEDIATE
    witness.update(M=str(df.M), Omega=str(df.Omega), detR=str(cd.detR), Disc=str(cd.Disc))
    return Verdict(case, umbilical=cd.Disc.is_zero(), zero_mean=df.Omega.is_zero(),
                   zero_gauss=cd.detR.is_zero(), witness=witness)


def classification_invariance(eq: CubicODE, pmap: PointMap) -> bool:
    return classify(pushforward(eq, pmap)).flags() == classify(eq).flags()
