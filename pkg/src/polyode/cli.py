"""Command-line front end: ``polyode <command> [flags]``.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 mathematical degeneracy with no permitted fallback.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from . import aim, catalog, hyper, ode, solvable, verify, weights
from .algebra import Polynomial, format_rational, to_rational
from .errors import (
    ConstraintViolated,
    DegenerateDenominator,
    DegenerateSpectrum,
    InvalidParameters,
    MissingArg,
    NonIntegrable,
    NoPolynomialSolution,
    PolyodeError,
    ProportionalityFailure,
    QuadratureNoConvergence,
    SingularPoint,
    UnknownName,
    UnsupportedBranch,
)
from .ode import CaseTag, EquationParams
from .output import document, dumps, solve_csv, solve_latex
from .quadrature import QuadConfig

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3

_PARAM_NAMES = ("a20", "a21", "a22", "a10", "a11")
_DEFAULT_POINTS = "-1.7,-0.6,0.35,1.2,2.3"


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return to_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit with 2 and a one-line message
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_params(p: argparse.ArgumentParser) -> None:
    for name in _PARAM_NAMES:
        p.add_argument(f"--{name}", type=_rational_arg, required=True, metavar="Q",
                       help=f"coefficient {name} (integer, a/b or decimal)")


def _add_quad(p: argparse.ArgumentParser) -> None:
    p.add_argument("--quad-points", type=int, default=None)
    p.add_argument("--quad-max-depth", type=int, default=None)
    p.add_argument("--quad-tol", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="polyode", description="Polynomial solutions of (a20 x^2 + a21 x + a22) y'' "
                                             "+ (a10 x + a11) y' - tau y = 0.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="degree-n polynomial solution")
    _add_params(s)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--method", choices=("recurrence", "closed", "oracle", "all"), default="recurrence")
    s.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    s.add_argument("--no-fallback", action="store_true",
                   help="fail with exit code 3 instead of using the series oracle")

    c = sub.add_parser("classify", help="case tag, eigenvalue and closed-form branch")
    _add_params(c)
    c.add_argument("--n", type=int, default=None)

    w = sub.add_parser("weight", help="Pearson weight, constraints and orthogonality integrals")
    _add_params(w)
    w.add_argument("--nmax", type=int, default=3)
    _add_quad(w)

    v = sub.add_parser("verify", help="seeded verification suites")
    v.add_argument("--case", default="auto")
    v.add_argument("--trials", type=int, default=10)
    v.add_argument("--nmax", type=int, default=4)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--suite", action="append", choices=tuple(verify.SUITES), default=None)

    a = sub.add_parser("aim", help="asymptotic-iteration termination test")
    _add_params(a)
    a.add_argument("--nmax", type=int, default=3)
    a.add_argument("--tau", type=_rational_arg, default=None, help="also report delta_n at this tau")
    a.add_argument("--cap", type=int, default=aim.DEFAULT_CAP)
    a.add_argument("--seed", type=int, default=0)

    t = sub.add_parser("theorem2", help="equation built from a polynomial Q and its exact solution")
    _add_params(t)
    t.add_argument("--Q", required=True, help='constant-first coefficients, e.g. "0,0,1" for x^2')
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--points", default=_DEFAULT_POINTS)

    k = sub.add_parser("catalog", help="named classical equations")
    k.add_argument("--name", default=None)
    k.add_argument("--args", default=None, help='e.g. "alpha=1/2,beta=3"')
    k.add_argument("--nmax", type=int, default=4)
    k.add_argument("--list", action="store_true")
    return ap


def _params(ns) -> EquationParams:
    try:
        return EquationParams(*(getattr(ns, name) for name in _PARAM_NAMES))
    except InvalidParameters as exc:
        raise UsageError(str(exc)) from exc


def _inputs(ns) -> dict:
    out = {}
    for k, v in sorted(vars(ns).items()):
        if k == "command":
            continue
        out[k] = format_rational(v) if isinstance(v, Fraction) else v
    return out


def _nonneg(value: int, flag: str) -> None:
    if value < 0:
        raise UsageError(f"{flag} must be nonnegative")


# -- commands ---------------------------------------------------------------

def cmd_solve(ns) -> tuple[dict, list[str], int, str | None]:
    p = _params(ns)
    _nonneg(ns.n, "--n")
    diags: list[str] = []
    wanted = ("recurrence", "closed", "oracle") if ns.method == "all" else (ns.method,)
    polys: dict[str, Polynomial] = {}
    per_method: dict[str, dict] = {}
    status = EXIT_OK
    for m in wanted:
        try:
            if m == "recurrence":
                rep = ode.solve(p, ns.n, "recurrence", fallback=not ns.no_fallback)
            elif m == "closed":
                rep = ode.solve(p, ns.n, "closed_form")
            else:
                rep = ode.solve(p, ns.n, "series_oracle")
        except DegenerateDenominator as exc:
            diags.append(f"{m}: {exc}")
            per_method[m] = {"error": str(exc)}
            status = EXIT_DEGENERATE
            continue
        except (UnsupportedBranch, DegenerateSpectrum, NoPolynomialSolution) as exc:
            diags.append(f"{m}: {exc}")
            entry = {"error": str(exc)}
            if isinstance(exc, DegenerateSpectrum):
                entry["basis"] = [b for b in exc.basis]
            per_method[m] = entry
            if len(wanted) == 1:
                status = EXIT_DEGENERATE
            continue
        diags.extend(f"{m}: {d}" for d in rep.diagnostics)
        polys[m] = rep.polynomial
        per_method[m] = {"coeffs": rep.polynomial, "degree": rep.polynomial.degree, "engine": rep.method,
                         "residual_zero": rep.residual_ok}
    names = sorted(polys)
    agree = all(polys[a] == polys[names[0]] for a in names) if names else False
    results = {
        "n": ns.n,
        "tau": ode.eigenvalue(p, ns.n),
        "case": ode.classify(p).value,
        "normalization_product": ode.normalization_product(p, ns.n),
        "methods": per_method,
        "methods_agree": agree,
    }
    if len(names) > 1:
        results["pairwise_equal"] = {f"{a}={b}": polys[a] == polys[b] for i, a in enumerate(names) for b in names[i + 1:]}
    if names and not agree:
        diags.append("methods disagree")
        status = max(status, EXIT_VERIFY) if status != EXIT_DEGENERATE else status
    text = None
    if ns.format == "csv":
        text = solve_csv(polys)
    elif ns.format == "latex":
        text = solve_latex(ns.n, polys)
    return results, diags, status, text


def cmd_classify(ns):
    p = _params(ns)
    results = {"case": ode.classify(p).value, "discriminant": p.discriminant, "p2": p.p2, "p1": p.p1}
    diags: list[str] = []
    if ns.n is not None:
        _nonneg(ns.n, "--n")
        results["tau"] = ode.eigenvalue(p, ns.n)
        results["normalization_product"] = ode.normalization_product(p, ns.n)
        try:
            results["closed_form"] = hyper.closed_form(p, ns.n).describe()
        except UnsupportedBranch as exc:
            diags.append(str(exc))
    spec = weights.pearson_weight(p)
    results["weight_branch"] = spec.params["branch"]
    return results, diags, EXIT_OK, None


def _quad(ns) -> QuadConfig:
    return QuadConfig.from_env(points=ns.quad_points, max_depth=ns.quad_max_depth, tol=ns.quad_tol)


def cmd_weight(ns):
    p = _params(ns)
    _nonneg(ns.nmax, "--nmax")
    spec = weights.pearson_weight(p)
    diags: list[str] = []
    results: dict = {
        "case": spec.case.value,
        "kind": spec.kind,
        "formula": spec.formula,
        "branch": spec.params["branch"],
        "support": [spec.support[0], spec.support[1]],
        "constraints": [{"description": d, "satisfied": ok} for d, ok in spec.constraints],
    }
    if not spec.satisfied:
        diags.append("constraint(s) violated: " + "; ".join(spec.failed()))
        return results, diags, EXIT_DEGENERATE, None
    n_max = ns.nmax
    cap = spec.max_degree()
    if cap is not None and n_max > cap:
        diags.append(f"norms diverge beyond n = {cap}; nmax reduced from {n_max}")
        n_max = cap
    if n_max < 0:
        diags.append("no degree has a finite norm")
        return results, diags, EXIT_DEGENERATE, None
    results["nmax"] = n_max
    try:
        G, E = weights.gram_matrix(p, n_max, spec, _quad(ns))
    except QuadratureNoConvergence as exc:
        diags.append(str(exc))
        return results, diags, EXIT_VERIFY, None
    results["gram"] = [[float(v) for v in row] for row in G]
    results["quad_error"] = [[float(v) for v in row] for row in E]
    try:
        closed = [weights.norm_closed_form(p, k) for k in range(n_max + 1)]
        quoted = [weights.quoted_norm(p, k) for k in range(n_max + 1)]
        results["norm_closed_form"] = closed
        results["norm_quoted_form"] = quoted
        results["norm_rel_err"] = [abs(G[k, k] - closed[k]) / max(1.0, abs(closed[k])) for k in range(n_max + 1)]
    except UnsupportedBranch as exc:
        diags.append(str(exc))
    return results, diags, EXIT_OK, None


def cmd_verify(ns):
    if ns.case.lower() == "auto":
        case = None
    else:
        try:
            case = CaseTag.parse(ns.case)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if ns.trials < 1:
        raise UsageError("--trials must be positive")
    _nonneg(ns.nmax, "--nmax")
    suites = verify.run_all(ns.trials, ns.nmax, ns.seed, case, ns.suite)
    results: dict = {"suites": [s.as_dict() for s in suites], "all_passed": all(s.passed for s in suites)}
    diags = []
    failing = [s for s in suites if not s.passed]
    if failing:
        results["reproduction"] = failing[0].first_failure
        diags.append(f"suite {failing[0].name} failed {failing[0].failures} check(s)")
    return results, diags, (EXIT_VERIFY if failing else EXIT_OK), None


def cmd_aim(ns):
    import random

    p = _params(ns)
    _nonneg(ns.nmax, "--nmax")
    if ns.nmax > ns.cap:
        raise UsageError(f"--nmax {ns.nmax} exceeds --cap {ns.cap}")
    rng = random.Random(ns.seed)
    rows = []
    ok = True
    for n in range(ns.nmax + 1):
        rep = aim.delta_factorization_report(p, n, cap=ns.cap, rng=rng)
        ok = ok and rep.ok
        rows.append({"n": n, "zeros": rep.zeros, "vanishes_at_eigenvalues": rep.vanishes_at_eigenvalues,
                     "nonzero_outside": rep.nonzero_outside, "outside_samples": rep.outside_samples})
    dp = aim.delta_polynomial(p, ns.nmax)
    q, r = dp.quotient_by_eigenvalues(p)
    results = {"zero_set": aim.eigenvalue_set(p, ns.nmax), "rows": rows, "factorization_ok": ok,
               "delta_at_x0": {"x0": dp.x0, "coeffs_in_tau": dp.coeffs, "cofactor": q, "remainder": r}}
    if ns.tau is not None:
        d = aim.aim_delta(p, ns.tau, ns.nmax)
        results["delta_at_tau"] = {"tau": ns.tau, "numerator": d.num, "denominator": d.den, "is_zero": d.is_zero()}
    return results, [], (EXIT_OK if ok else EXIT_VERIFY), None


def cmd_theorem2(ns):
    p = _params(ns)
    _nonneg(ns.n, "--n")
    try:
        q = solvable.parse_q(ns.Q)
        pts = [float(t) for t in ns.points.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from exc
    spec = solvable.build_class(p, q, ns.n)
    res = solvable.verify_class(spec, pts)
    exact = solvable.exact_residual(spec).is_zero()
    results = {
        "n": ns.n,
        "tau": spec.tau,
        "Q": q,
        "f_n": spec.f_n,
        "phase_integrand": str(spec.phase_integrand),
        "P": str(spec.P),
        "potential": str(spec.V),
        "points": pts,
        "max_residual": res,
        "exact_residual_zero": exact,
        "quoted_specialisation_matches": solvable.quoted_matches(p, q, ns.n),
    }
    ok = exact and res <= verify.THEOREM2_TOL
    return results, ([] if ok else ["residual above tolerance"]), (EXIT_OK if ok else EXIT_VERIFY), None


def cmd_catalog(ns):
    if ns.list or ns.name is None:
        rows = []
        for name in catalog.NAMES:
            row = catalog._ROWS[name]
            rows.append({"name": name, "args": list(row.args), "case": row.case.value,
                         "interval": [row.interval[0], row.interval[1]]})
        return {"entries": rows}, [], EXIT_OK, None
    _nonneg(ns.nmax, "--nmax")
    try:
        args = catalog.parse_args(ns.args)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from exc
    entry = catalog.lookup(ns.name, args)
    diags: list[str] = []
    results = {"name": entry.name, "params": entry.params.to_strings(), "case": entry.case.value,
               "classified_as": ode.classify(entry.params).value,
               "interval": [entry.interval[0], entry.interval[1]], "args": entry.args}
    try:
        rows = catalog.cross_validate(entry.name, entry.args, ns.nmax)
    except ProportionalityFailure as exc:
        diags.append(str(exc))
        return results, diags, EXIT_VERIFY, None
    results["rows"] = [{"n": r.n, "solver": r.solver, "reference": r.reference, "ratio": r.ratio} for r in rows]
    if rows and rows[0].reference is None:
        diags.append("no textbook family attached to this row; solver output only")
    return results, diags, EXIT_OK, None


COMMANDS = {
    "solve": cmd_solve,
    "classify": cmd_classify,
    "weight": cmd_weight,
    "verify": cmd_verify,
    "aim": cmd_aim,
    "theorem2": cmd_theorem2,
    "catalog": cmd_catalog,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse exits on --help and on usage errors
        return int(exc.code or 0)
    try:
        results, diags, status, text = COMMANDS[ns.command](ns)
    except (UsageError, UnknownName, MissingArg) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        sys.stderr.write(f"polyode {ns.command}: error: {msg}\n")
        return EXIT_USAGE
    except (ConstraintViolated, NonIntegrable, DegenerateSpectrum, DegenerateDenominator, UnsupportedBranch,
            SingularPoint) as exc:
        sys.stderr.write(f"polyode {ns.command}: {exc}\n")
        return EXIT_DEGENERATE
    except PolyodeError as exc:
        sys.stderr.write(f"polyode {ns.command}: {exc}\n")
        return EXIT_VERIFY
    if text is not None:
        sys.stdout.write(text)
    else:
        sys.stdout.write(dumps(document(ns.command, _inputs(ns), results, diags)))
    return status


if __name__ == "__main__":
    raise SystemExit(main())
