"""Identity check records shared by the verification suites."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import RatFunc, probably_equal


@dataclass
class CheckResult:
    name: str
    mode: str            # "exact" | "modular" | "numeric"
    passed: bool
    residual: str = "0"
    point: tuple | None = None
    detail: str = ""
    skipped: bool = False

    @property
    def status(self) -> str:
        if self.skipped:
            return "skip"
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {"mode": self.mode, "status": self.status, "residual": self.residual}
        if self.point is not None:
            out["point"] = [str(c) for c in self.point]
        if self.detail:
            out["detail"] = self.detail
        return out


class Checker:
    """Decides ``lhs == rhs`` exactly or by modular sampling.

    Modular mode never forms ``lhs - rhs``; on any modular disagreement it
    falls back to the exact comparison (and records that it did).
    """

    def __init__(self, mode: str = "exact", seed: int = 0):
        if mode not in ("exact", "modular"):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.rng = random.Random(seed)
        self.results: list[CheckResult] = []

    def equal(self, name: str, lhs, rhs) -> CheckResult:
        lhs, rhs = RatFunc.coerce(lhs), RatFunc.coerce(rhs)
        if self.mode == "modular":
            if probably_equal(lhs, rhs, rng=self.rng):
                res = CheckResult(name, "modular", True)
            else:
                exact = lhs == rhs
                res = CheckResult(name, "exact", exact, "0" if exact else str(lhs - rhs),
                                  detail="modular disagreement, exact fallback")
        else:
            passed = lhs == rhs
            res = CheckResult(name, "exact", passed, "0" if passed else str(lhs - rhs))
        self.results.append(res)
        return res

    def zero(self, name: str, value) -> CheckResult:
        return self.equal(name, value, 0)

    def record(self, res: CheckResult) -> CheckResult:
        self.results.append(res)
        return res

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)
