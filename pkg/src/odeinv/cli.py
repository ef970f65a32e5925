"""Command-line entry point: ``odeinv classify|invariants|verify|transform|compare|corpus``."""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .algebra import ParseError
from .bagderina import BagderinaUndefinedError, PreconditionError, SamplingError
from .checks import Checker
from .classify import Case, classify
from .compare import WrongClassError, compare
from .corpus import FAMILIES, generate
from .covariance import check_covariance
from .curvature import curvature
from .fields import NotIntermediateError, degeneration, fundamental
from .model import CubicODE, InvalidMapError, PointMap, pushforward
from .scalars import NotFirstIntermediateError, base_invariants
from .suites import SUITES, SuiteNotApplicableError, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CLASS = 0, 1, 2, 3


class InputError(Exception):
    pass


class ClassError(Exception):
    def __init__(self, message: str, verdict: dict | None = None):
        super().__init__(message)
        self.verdict = verdict


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False))


def _load_eq(path: str) -> CubicODE:
    try:
        return CubicODE.load(path)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_map(path: str) -> PointMap:
    try:
        return PointMap.load(path)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _results_map(results) -> dict:
    out, seen = {}, {}
    for r in results:
        n = seen.get(r.name, 0) + 1
        seen[r.name] = n
        out[r.name if n == 1 else f"{r.name} #{n}"] = r.to_json()
    return out


def _summary(results) -> dict:
    return {"total": len(results), "passed": sum(r.passed and not r.skipped for r in results),
            "failed": sum(not r.passed for r in results), "skipped": sum(r.skipped for r in results)}


def cmd_classify(args) -> int:
    eq = _load_eq(args.equation)
    _emit({"equation": eq.to_json(), "verdict": classify(eq).to_json()})
    return EXIT_OK


def cmd_invariants(args) -> int:
    eq = _load_eq(args.equation)
    verdict = classify(eq)
    if verdict.case is not Case.FIRST_INTERMEDIATE:
        raise ClassError(f"invariants need FirstIntermediate, got {verdict.case.value}", verdict.to_json())
    ff = fundamental(eq)
    df = degeneration(eq, ff)
    cd = curvature(df)
    si = base_invariants(df, ff, cd, through=args.through)
    fields = {"N": str(df.N), "M": str(df.M), "Omega": str(df.Omega), "detR": str(cd.detR), "Disc": str(cd.Disc)}
    invariants = {f"I{k}": str(v) for k, v in sorted(si.all().items()) if k <= args.through}
    if args.json:
        _emit({"equation": eq.to_json(), "fields": fields, "invariants": invariants,
               "expansion": {k: str(v) for k, v in si.expansion.named().items()},
               "derivation": {f"I{k}": f"{a} of I{b}" for k, (a, b) in sorted(si.derivation.items())
                              if k <= args.through}})
    else:
        for name, val in list(fields.items()) + list(invariants.items()):
            print(f"{name} = {val}")
    return EXIT_OK


def cmd_verify(args) -> int:
    eq = _load_eq(args.equation)
    start = time.perf_counter()
    verdict = classify(eq)
    try:
        results = run_suite(eq, args.suite, mode=args.mode, seed=args.seed,
                            points=args.numeric_points, precision=args.precision)
    except (SuiteNotApplicableError, BagderinaUndefinedError, PreconditionError,
            NotIntermediateError, NotFirstIntermediateError, SamplingError) as exc:
        raise ClassError(str(exc), verdict.to_json()) from exc
    report = {"equation": eq.to_json(), "verdict": verdict.to_json(), "suite": args.suite,
              "mode": args.mode, "seed": args.seed, "precision": args.precision,
              "results": _results_map(results), "summary": _summary(results),
              "timing": round(time.perf_counter() - start, 3)}
    _emit(report)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_transform(args) -> int:
    eq = _load_eq(args.equation)
    pmap = _load_map(args.map)
    pushed = pushforward(eq, pmap)
    report = {"equation": eq.to_json(), "map": pmap.to_json(), "transformed": pushed.to_json()}
    code = EXIT_OK
    if args.check_covariance:
        chk = check_covariance(eq, pmap, Checker("exact"), pushed=pushed)
        report["covariance"] = _results_map(chk.results)
        report["summary"] = _summary(chk.results)
        code = EXIT_OK if chk.passed else EXIT_FAIL
    _emit(report)
    return code


def cmd_compare(args) -> int:
    eq1, eq2 = _load_eq(args.first), _load_eq(args.second)
    try:
        result = compare(eq1, eq2)
    except WrongClassError as exc:
        raise ClassError(str(exc)) from exc
    _emit(result)
    return EXIT_OK


def cmd_corpus(args) -> int:
    try:
        eqs = generate(args.family, args.count, args.degree, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out = Path(args.out)
    written = []
    if eqs:
        try:
            out.mkdir(parents=True, exist_ok=True)
            for i, eq in enumerate(eqs):
                path = out / f"{args.family}-{args.seed}-{i:03d}.json"
                path.write_text(json.dumps(eq.to_json(), indent=2, sort_keys=True) + "\n")
                written.append(str(path))
        except OSError as exc:
            raise InputError(str(exc)) from exc
    _emit({"family": args.family, "count": args.count, "degree": args.degree, "seed": args.seed,
           "files": written})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="odeinv", description="Point-invariant analysis of y'' = P + 3Qy' + 3Ry'^2 + Sy'^3.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="case and curvature flags")
    c.add_argument("equation")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("invariants", help="N, M, Omega, detR, Disc and I1..Ik")
    c.add_argument("equation")
    c.add_argument("--through", type=int, default=9)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_invariants)

    c = sub.add_parser("verify", help="run identity suites")
    c.add_argument("equation")
    c.add_argument("--suite", choices=SUITES, default="all")
    c.add_argument("--numeric-points", type=int, default=5)
    c.add_argument("--precision", type=int, default=256)
    c.add_argument("--mode", choices=("exact", "modular"), default="exact")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("transform", help="push an equation through a point map")
    c.add_argument("equation")
    c.add_argument("--map", required=True)
    c.add_argument("--check-covariance", action="store_true")
    c.set_defaults(func=cmd_transform)

    c = sub.add_parser("compare", help="necessary-condition equivalence test")
    c.add_argument("first")
    c.add_argument("second")
    c.set_defaults(func=cmd_compare)

    c = sub.add_parser("corpus", help="write a seeded corpus of equation files")
    c.add_argument("--family", choices=FAMILIES, default="p-only")
    c.add_argument("--count", type=int, default=10)
    c.add_argument("--degree", type=int, default=4)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out", default="corpus")
    c.set_defaults(func=cmd_corpus)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParseError, InvalidMapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ClassError as exc:
        if exc.verdict is not None:
            _emit({"error": str(exc), "verdict": exc.verdict})
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CLASS


if __name__ == "__main__":
    sys.exit(main())
