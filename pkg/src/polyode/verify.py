"""Seeded verification suites shared by the CLI and the acceptance tests."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import aim, hyper, ode, recurrence, sampling, solvable, weights
from .algebra import Polynomial
from .errors import DegenerateDenominator, PolyodeError, UnsupportedBranch
from .ode import CaseTag, EquationParams

CLOSED_FORM_TOL = 1e-9
NORM_DIAG_TOL = 1e-6
NORM_OFF_TOL = 1e-7
PEARSON_TOL = 1e-8
THEOREM2_TOL = 1e-8

_BRANCH_CASE = {
    "general": CaseTag.GENERAL,
    "repeated_root": CaseTag.GENERAL,
    "case_I": CaseTag.I,
    "case_I_collapsed": CaseTag.I,
    "case_II": CaseTag.II,
    "case_II_collapsed": CaseTag.II,
    "case_III": CaseTag.III,
    "case_III_collapsed": CaseTag.III,
    "case_IV": CaseTag.IV,
    "case_V": CaseTag.V,
    "case_VI": CaseTag.VI,
    "case_I_right": CaseTag.I,
    "case_I_left": CaseTag.I,
    "case_III_plus": CaseTag.III,
    "case_III_minus": CaseTag.III,
    "case_III_real_line": CaseTag.III,
}


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    checks: int = 0
    failures: int = 0
    worst: float = 0.0
    skipped: int = 0
    first_failure: dict | None = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def fail(self, bundle: dict) -> None:
        self.failures += 1
        if self.first_failure is None:
            self.first_failure = bundle

    def as_dict(self) -> dict:
        d = {"name": self.name, "trials": self.trials, "checks": self.checks, "failures": self.failures,
             "skipped": self.skipped, "worst": self.worst, "passed": self.passed}
        if self.first_failure is not None:
            d["first_failure"] = self.first_failure
        d.update(self.extra)
        return d


def _rng(seed: int, suite: str) -> random.Random:
    return random.Random(f"{seed}:{suite}")


def _cases(case: CaseTag | None) -> list[CaseTag]:
    return list(CaseTag) if case is None else [case]


def _bundle(suite: str, trial: int, params: EquationParams, **extra) -> dict:
    out = {"suite": suite, "trial": trial, "params": params.to_strings()}
    out.update(extra)
    return out


def oracle_suite(trials: int, n_max: int, seed: int, case: CaseTag | None = None) -> SuiteResult:
    """Recurrence against the series oracle, plus exact residuals and the per-case relations."""
    res = SuiteResult("oracle")
    rng = _rng(seed, res.name)
    for t in range(trials):
        p = sampling.random_params(rng, rng.choice(_cases(case)))
        res.trials += 1
        try:
            ys = recurrence.generate(p, n_max)
        except DegenerateDenominator:
            res.skipped += 1
            continue
        cr = recurrence.case_recurrence(p, None, n_max)
        for n, y in enumerate(ys):
            res.checks += 1
            ok = ode.residual(p, ode.eigenvalue(p, n), y).is_zero() and cr[n] == y
            if ok and ode.normalization_product(p, n) != 0:
                ok = ode.series_solve(p, n) == y
            if not ok:
                res.fail(_bundle(res.name, t, p, n=n, recurrence=y.to_strings()))
    return res


def closed_form_suite(trials: int, n_max: int, seed: int, case: CaseTag | None = None,
                      points: int = 5) -> SuiteResult:
    res = SuiteResult("closed_form")
    rng = _rng(seed, res.name)
    branches = [b for b in sampling.CLOSED_FORM_BRANCHES if case is None or _BRANCH_CASE[b] is case]
    for b in branches:
        for t in range(trials):
            p = sampling.branch_params(rng, b)
            res.trials += 1
            try:
                ys = recurrence.generate(p, n_max)
            except DegenerateDenominator:
                res.skipped += 1  # the reference scaling is undefined here
                continue
            xs = [rng.uniform(-2.0, 2.0) for _ in range(points)]
            for n in range(n_max + 1):
                try:
                    if ys[n].is_zero():
                        raise UnsupportedBranch("reference polynomial vanishes")
                    form = hyper.closed_form(p, n)
                except PolyodeError:
                    res.skipped += 1
                    continue
                for x in xs:
                    res.checks += 1
                    exact = float(ys[n](Fraction(x)))
                    try:
                        val = hyper.closed_form_eval(form, x)
                        err = abs(val - exact) / max(1.0, abs(exact))
                    except PolyodeError as exc:
                        err, val = math.inf, repr(exc)
                    res.worst = max(res.worst, err)
                    try:
                        fv = hyper.closed_form_eval(form, x, exact=False)
                        ferr = abs(fv - exact) / max(1.0, abs(exact))
                    except PolyodeError:
                        ferr = math.inf
                    res.extra["float_path_worst"] = max(res.extra.get("float_path_worst", 0.0), ferr)
                    if not err <= CLOSED_FORM_TOL:
                        res.fail(_bundle(res.name, t, p, branch=b, n=n, x=x, closed_form=val, exact=exact))
    return res


def orthogonality_suite(trials: int, n_max: int, seed: int, case: CaseTag | None = None) -> SuiteResult:
    res = SuiteResult("orthogonality")
    rng = _rng(seed, res.name)
    branches = [b for b in sampling.NORM_BRANCHES if case is None or _BRANCH_CASE[b] is case]
    for b in branches:
        for t in range(trials):
            p = sampling.weight_params(rng, b, n_max)
            res.trials += 1
            try:
                rows = weights.verify_norms(p, n_max)
            except PolyodeError as exc:
                res.fail(_bundle(res.name, t, p, branch=b, error=repr(exc)))
                continue
            diag = {r.n: abs(r.closed_form) for r in rows if r.n == r.m}
            for r in rows:
                res.checks += 1
                if r.n == r.m:
                    err = abs(r.numeric - r.closed_form) / abs(r.closed_form)
                    tol = NORM_DIAG_TOL
                else:
                    err = abs(r.numeric) / math.sqrt(diag[r.n] * diag[r.m])
                    tol = NORM_OFF_TOL
                res.worst = max(res.worst, err / tol * NORM_DIAG_TOL)
                if not err <= tol:
                    res.fail(_bundle(res.name, t, p, branch=b, n=r.n, m=r.m, numeric=r.numeric,
                                     closed_form=r.closed_form))
    return res


def pearson_suite(trials: int, seed: int, case: CaseTag | None = None, points: int = 20) -> SuiteResult:
    """Every emitted weight, including unconstrained general-case ones, satisfies (p2 W)' = p1 W."""
    res = SuiteResult("pearson")
    rng = _rng(seed, res.name)
    for t in range(trials):
        p = sampling.random_params(rng, rng.choice(_cases(case)))
        spec = weights.pearson_weight(p)
        res.trials += 1
        xs = sampling.interior_points(spec.support, points, rng)
        r = weights.pearson_residual(p, spec, xs)
        res.checks += len(xs)
        worst = float(r.max())
        res.worst = max(res.worst, worst)
        if not worst <= PEARSON_TOL:
            res.fail(_bundle(res.name, t, p, branch=spec.params["branch"], residual=worst))
    return res


def aim_suite(trials: int, n_max: int, seed: int, case: CaseTag | None = None) -> SuiteResult:
    res = SuiteResult("aim")
    rng = _rng(seed, res.name)
    top = min(n_max, aim.DEFAULT_CAP)
    for t in range(trials):
        p = sampling.random_params(rng, rng.choice(_cases(case)))
        res.trials += 1
        for n in range(top + 1):
            res.checks += 1
            rep = aim.delta_factorization_report(p, n, rng=rng)
            if not rep.ok:
                res.fail(_bundle(res.name, t, p, n=n, zeros=[str(z) for z in rep.zeros],
                                 vanishes_at_eigenvalues=rep.vanishes_at_eigenvalues,
                                 nonzero_outside=rep.nonzero_outside))
    return res


def theorem2_suite(trials: int, n_max: int, seed: int, case: CaseTag | None = None, points: int = 5) -> SuiteResult:
    res = SuiteResult("theorem2")
    rng = _rng(seed, res.name)
    for t in range(trials):
        p = sampling.random_params(rng, rng.choice(_cases(case)))
        q = Polynomial([sampling.rational(rng, -5, 5, 3) for _ in range(rng.randint(0, 5))])
        n = rng.randint(0, n_max)
        res.trials += 1
        try:
            spec = solvable.build_class(p, q, n)
        except PolyodeError:
            res.skipped += 1  # repeated eigenvalue: no single f_n to build on
            continue
        xs = sampling.generic_points(p, points, rng)
        r = solvable.verify_class(spec, xs)
        exact_ok = solvable.exact_residual(spec).is_zero() and solvable.quoted_matches(p, q, n)
        res.checks += 1
        res.worst = max(res.worst, r)
        if not (r <= THEOREM2_TOL and exact_ok):
            res.fail(_bundle(res.name, t, p, Q=q.to_strings(), n=n, residual=r, exact_ok=exact_ok))
    return res


SUITES: dict[str, Callable] = {
    "oracle": lambda trials, n_max, seed, case: oracle_suite(trials, n_max, seed, case),
    "closed_form": lambda trials, n_max, seed, case: closed_form_suite(trials, n_max, seed, case),
    "orthogonality": lambda trials, n_max, seed, case: orthogonality_suite(max(1, trials // 5), min(n_max, 4), seed, case),
    "pearson": lambda trials, n_max, seed, case: pearson_suite(trials, seed, case),
    "aim": lambda trials, n_max, seed, case: aim_suite(max(1, trials // 5), min(n_max, 5), seed, case),
    "theorem2": lambda trials, n_max, seed, case: theorem2_suite(trials, min(n_max, 4), seed, case),
}


def run_all(trials: int, n_max: int, seed: int, case: CaseTag | None = None,
            suites: Iterable[str] | None = None) -> list[SuiteResult]:
    names = list(SUITES) if suites is None else list(suites)
    return [SUITES[name](trials, n_max, seed, case) for name in names]
