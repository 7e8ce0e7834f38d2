"""Pearson weights, orthogonality integrals and closed-form norms.

Each case has its own weight shape. A :class:`WeightSpec` records the shape
(``kind``), its float parameters, the support interval, and the validity
inequalities with their truth values. Weights are evaluated in log form, from
the distances to the finite endpoints, so that singular or vanishing
endpoint behaviour survives floating point.

``norm_closed_form`` returns the diagonal norm for the active branch.
``quoted_norm`` evaluates the classical expressions exactly as they are usually quoted,
including the three whose constant factors disagree with quadrature (see
README).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np
from scipy.special import gammaln, loggamma

from .algebra import Polynomial, RationalFunction, rational_sqrt
from .errors import ConstraintViolated, NonIntegrable, UnsupportedBranch
from .integrals import rational_antiderivative
from .ode import CaseTag, EquationParams, classify
from .quadrature import QuadConfig, integrate


@dataclass(frozen=True)
class WeightSpec:
    case: CaseTag
    kind: str
    support: tuple[float, float]
    constraints: tuple[tuple[str, bool], ...]
    params: dict = field(default_factory=dict)
    degree_sum_bound: float | None = None  # n + m must stay strictly below this
    center: float = 0.0
    scale: float = 1.0

    @property
    def satisfied(self) -> bool:
        return all(ok for _, ok in self.constraints)

    def failed(self) -> list[str]:
        return [d for d, ok in self.constraints if not ok]

    def require(self) -> "WeightSpec":
        if not self.satisfied:
            raise ConstraintViolated(self.failed())
        return self

    def max_degree(self) -> int | None:
        """Largest n whose squared norm converges, or None when unbounded."""
        if self.degree_sum_bound is None:
            return None
        n = math.ceil(self.degree_sum_bound / 2) - 1
        return n if n >= 0 else -1

    def log_density(self, x, dlo=None, dhi=None):
        """log|W| at x; dlo/dhi are distances to the finite endpoints.

        Complex x is accepted (every shape is analytic on its support), which
        lets the Pearson check differentiate by complex step.
        """
        x = np.asarray(x)
        if not np.iscomplexobj(x):
            x = x.astype(float)
        lo, hi = self.support
        if dlo is None:
            dlo = x - lo if math.isfinite(lo) else np.full_like(x, np.inf)
        if dhi is None:
            dhi = hi - x if math.isfinite(hi) else np.full_like(x, np.inf)
        return _LOG_DENSITY[self.kind](self.params, x, np.asarray(dlo), np.asarray(dhi))

    @property
    def formula(self) -> str:
        """Name of the weight shape with its float exponents and rates."""
        name = _FORMULA_NAMES[self.params["branch"]]
        shown = {k: v for k, v in sorted(self.params.items()) if k not in ("branch", "sign") and isinstance(v, float)}
        return name + "(" + ", ".join(f"{k}={v:.12g}" for k, v in shown.items()) + ")"

    def sign(self) -> float:
        return float(self.params.get("sign", 1.0))

    def __call__(self, x):
        with np.errstate(all="ignore"):
            return self.sign() * np.exp(self.log_density(x))


# -- log densities -------------------------------------------------------------

def _ld_affine_exp(p, x, dlo, dhi):
    # |a21| * d)^(mu-1) * exp(rate*x), d the distance to the finite endpoint
    d = np.where(np.isfinite(dlo), dlo, dhi)
    return (p["mu"] - 1) * np.log(p["abs_a21"] * d) + p["rate"] * x


def _ld_two_point(p, x, dlo, dhi):
    # c * |x - lo|^(e_lo) * |x - hi|^(e_hi) with optional extra decay
    return p["log_c"] + p["e_lo"] * np.log(p["k_lo"] * dlo) + p["e_hi"] * np.log(p["k_hi"] * dhi)


def _ld_gauss(p, x, dlo, dhi):
    return -math.log(abs(p["a22"])) + x * (p["a10"] * x + 2 * p["a11"]) / (2 * p["a22"])


def _ld_gamma(p, x, dlo, dhi):
    return -math.log(abs(p["a21"])) + p["rate"] * dlo + (p["exponent"]) * np.log(dlo)


def _ld_inverse_gamma(p, x, dlo, dhi):
    return -math.log(abs(p["a20"])) - p["c"] / dlo + p["exponent"] * np.log(dlo)


def _ld_arctan(p, x, dlo, dhi):
    q = p["a20"] * x * x + p["a21"] * x + p["a22"]
    return (p["half_ratio"] - 1) * np.log(q * np.sign(p["a20"])) + p["k"] * np.arctan((2 * p["a20"] * x + p["a21"]) / p["w"])


def _ld_beyond(p, x, dlo, dhi):
    # general, real distinct roots r1 < r2, support (r2, inf) or (-inf, r1)
    d = np.where(np.isfinite(dlo), dlo, dhi)
    return p["log_c"] + p["e_near"] * np.log(d) + p["e_far"] * np.log(d + p["gap"])


def _ld_repeated(p, x, dlo, dhi):
    d = np.where(np.isfinite(dlo), dlo, dhi)
    return -math.log(abs(p["a20"])) + p["exponent"] * np.log(d) - p["c"] / d


_LOG_DENSITY: dict[str, Callable] = {
    "affine_exponential": _ld_affine_exp,
    "two_point": _ld_two_point,
    "gaussian": _ld_gauss,
    "gamma": _ld_gamma,
    "inverse_gamma": _ld_inverse_gamma,
    "arctan": _ld_arctan,
    "beyond_roots": _ld_beyond,
    "repeated_root": _ld_repeated,
}


def _f(q) -> float:
    return float(q)


def _sqrt_ratio(num: Fraction, den: Fraction) -> float:
    """sqrt(num/den) for a positive ratio, exact when rational."""
    q = num / den
    r = rational_sqrt(q)
    return float(r) if r is not None else math.sqrt(float(q))


# -- per-case constructors ------------------------------------------------------

def _case_i(p: EquationParams) -> WeightSpec:
    a21, a22, a10, a11 = p.a21, p.a22, p.a10, p.a11
    mu = (a21 * a11 - a22 * a10) / (a21 * a21)
    edge = _f(-a22 / a21)
    params = {"mu": _f(mu), "abs_a21": abs(_f(a21)), "rate": _f(a10 / a21)}
    if a21 > 0:
        cons = (("a11 > a22*a10/a21", a11 > a22 * a10 / a21), ("a10 < 0", a10 < 0))
        support = (edge, math.inf)
        branch = "case_I_right"
    else:
        cons = (("a22 > 0", a22 > 0), ("a10 < 0", a10 < 0), ("a11 < a10*a22/a21", a11 < a10 * a22 / a21))
        support = (-math.inf, edge)
        branch = "case_I_left"
    params["branch"] = branch
    return WeightSpec(CaseTag.I, "affine_exponential", support, cons, params,
                      scale=abs(_f(a21 / a10)) if a10 else 1.0)


def _case_ii(p: EquationParams) -> WeightSpec:
    a20, a21, a10, a11 = p.a20, p.a21, p.a10, p.a11
    h = -a21 / a20
    e_x = a11 / a21 - 1
    e_lin = a10 / a20 - a11 / a21 - 1
    cons = (
        ("a20 < 0", a20 < 0),
        ("a21 > 0", a21 > 0),
        ("a10 < 0", a10 < 0),
        ("0 < a11 < a10*a21/a20", 0 < a11 < a10 * a21 / a20),
    )
    lo, hi = (Fraction(0), h) if h > 0 else (h, Fraction(0))
    # |a21 + a20 x| = |a20| * |x - h|,  |x| = distance to 0
    if h > 0:
        e_lo, e_hi, k_lo, k_hi = e_x, e_lin, 1.0, abs(_f(a20))
    else:
        e_lo, e_hi, k_lo, k_hi = e_lin, e_x, abs(_f(a20)), 1.0
    params = {"log_c": 0.0, "e_lo": _f(e_lo), "e_hi": _f(e_hi), "k_lo": k_lo, "k_hi": k_hi, "branch": "case_II"}
    return WeightSpec(CaseTag.II, "two_point", (_f(lo), _f(hi)), cons, params)


def _case_iii(p: EquationParams) -> WeightSpec:
    a20, a22, a10, a11 = p.a20, p.a22, p.a10, p.a11
    if a20 * a22 < 0:
        r = _sqrt_ratio(-a22, a20)
        q = 1.0 / r
        alpha = (_f(a10) + _f(a11) * q) / (2 * _f(a20))
        beta = (_f(a10) - _f(a11) * q) / (2 * _f(a20))
        bound = ("|a11| < |a10|*sqrt(-a22/a20)", a11 * a11 * a20 < -a10 * a10 * a22 if a20 > 0 else a11 * a11 < a10 * a10 * (-a22 / a20))
        if a20 > 0:
            # (1/a20) (r - x)^(alpha-1) (r + x)^(beta-1)
            cons = (("a20 > 0", True), ("a22 < 0", True), ("a10 > 0", a10 > 0), bound)
            params = {"log_c": -math.log(_f(a20)), "e_lo": beta - 1, "e_hi": alpha - 1, "k_lo": 1.0, "k_hi": 1.0,
                      "branch": "case_III_plus", "alpha": alpha, "beta": beta}
        else:
            # (1/a22) (1 - q x)^(A-1) (1 + q x)^(B-1), A and B as alpha and beta above
            cons = (("a20 < 0", True), ("a22 > 0", True), ("a10 < 0", a10 < 0), bound)
            params = {"log_c": -math.log(_f(a22)), "e_lo": beta - 1, "e_hi": alpha - 1, "k_lo": q, "k_hi": q,
                      "branch": "case_III_minus", "alpha": alpha, "beta": beta}
        return WeightSpec(CaseTag.III, "two_point", (-r, r), cons, params)
    return _arctan_spec(p, CaseTag.III, "case_III_real_line",
                        (("a20 > 0", a20 > 0), ("a22 > 0", a22 > 0)))


def _arctan_spec(p: EquationParams, tag: CaseTag, branch: str, cons) -> WeightSpec:
    a20, a21, a22, a10, a11 = p.as_tuple()
    disc = p.discriminant  # negative here
    w = math.sqrt(_f(-disc))
    ratio = a10 / a20
    k = 2 * _f(a11 - a10 * a21 / (2 * a20)) / w
    params = {"a20": _f(a20), "a21": _f(a21), "a22": _f(a22), "half_ratio": _f(ratio) / 2, "k": k, "w": w,
              "branch": branch, "sign": 1.0 if a20 > 0 else -1.0}
    cons = tuple(cons) + (("a10/a20 < 1 (integrable for n = 0)", ratio < 1),)
    return WeightSpec(tag, "arctan", (-math.inf, math.inf), cons, params, degree_sum_bound=_f(1 - ratio),
                      center=_f(-a21 / (2 * a20)), scale=w / (2 * abs(_f(a20))))


def _case_iv(p: EquationParams) -> WeightSpec:
    a22, a10, a11 = p.a22, p.a10, p.a11
    cons = (("a22 > 0", a22 > 0), ("a10 < 0", a10 < 0))
    params = {"a22": _f(a22), "a10": _f(a10), "a11": _f(a11), "branch": "case_IV",
              "sign": 1.0 if a22 > 0 else -1.0}
    scale = math.sqrt(abs(_f(a22 / a10)))
    return WeightSpec(CaseTag.IV, "gaussian", (-math.inf, math.inf), cons, params,
                      center=_f(-a11 / a10), scale=scale)


def _case_v(p: EquationParams) -> WeightSpec:
    a21, a10, a11 = p.a21, p.a10, p.a11
    cons = (("a10/a21 < 0", a10 / a21 < 0), ("a11/a21 > 0", a11 / a21 > 0), ("a21 > 0 (positive weight)", a21 > 0))
    params = {"a21": _f(a21), "rate": _f(a10 / a21), "exponent": _f(a11 / a21 - 1), "branch": "case_V",
              "sign": 1.0 if a21 > 0 else -1.0}
    return WeightSpec(CaseTag.V, "gamma", (0.0, math.inf), cons, params, scale=abs(_f(a21 / a10)))


def _case_vi(p: EquationParams) -> WeightSpec:
    a20, a10, a11 = p.a20, p.a10, p.a11
    ratio = a10 / a20
    cons = (
        ("a11/a20 > 0", a11 / a20 > 0),
        ("a10/a20 < 1 (integrable for n = 0)", ratio < 1),
        ("a20 > 0 (real norm)", a20 > 0),
    )
    params = {"a20": _f(a20), "c": _f(a11 / a20), "exponent": _f(ratio - 2), "branch": "case_VI",
              "sign": 1.0 if a20 > 0 else -1.0}
    return WeightSpec(CaseTag.VI, "inverse_gamma", (0.0, math.inf), cons, params, degree_sum_bound=_f(1 - ratio),
                      scale=abs(_f(a11 / a20)) or 1.0)


def _general(p: EquationParams) -> WeightSpec:
    a20, a21, a22, a10, a11 = p.as_tuple()
    disc = p.discriminant
    ratio = a10 / a20
    if disc < 0:
        return _arctan_spec(p, CaseTag.GENERAL, "general_real_line", (("a20 > 0", a20 > 0),))
    if disc == 0:
        r = -a21 / (2 * a20)
        c = (a10 * r + a11) / a20  # log W = (a - 2) log|x - r| - c / (x - r)
        params = {"a20": _f(a20), "c": abs(_f(c)), "exponent": _f(ratio - 2), "branch": "general_repeated_root",
                  "sign": 1.0 if a20 > 0 else -1.0}
        cons = (("(a10*r + a11)/a20 != 0 at the double root r", c != 0),
                ("a10/a20 < 1 (integrable for n = 0)", ratio < 1))
        support = (_f(r), math.inf) if c >= 0 else (-math.inf, _f(r))
        return WeightSpec(CaseTag.GENERAL, "repeated_root", support, cons, params,
                          degree_sum_bound=_f(1 - ratio), scale=abs(_f(c)) or 1.0)
    root = math.sqrt(_f(disc))
    r1 = (-_f(a21) - root) / (2 * _f(a20))
    r2 = (-_f(a21) + root) / (2 * _f(a20))
    r1, r2 = min(r1, r2), max(r1, r2)
    p1 = lambda t: _f(a10) * t + _f(a11)
    dp2 = lambda t: 2 * _f(a20) * t + _f(a21)
    e1, e2 = p1(r1) / dp2(r1), p1(r2) / dp2(r2)
    if a20 < 0:
        cons = (("a20 < 0", True), ("residue of p1/p2 at the lower root > 0", e1 > 0),
                ("residue of p1/p2 at the upper root > 0", e2 > 0))
        params = {"log_c": -math.log(abs(_f(a20))), "e_lo": e1 - 1, "e_hi": e2 - 1, "k_lo": 1.0, "k_hi": 1.0,
                  "branch": "general_between_roots"}
        return WeightSpec(CaseTag.GENERAL, "two_point", (r1, r2), cons, params)
    # a20 > 0: a half-line beyond whichever root carries a positive residue
    if e2 > 0 or e1 <= 0:
        near, far, support = e2, e1, (r2, math.inf)
    else:
        near, far, support = e1, e2, (-math.inf, r1)
    cons = (("a20 > 0", True), ("residue of p1/p2 at an outer root > 0", near > 0),
            ("a10/a20 < 1 (integrable for n = 0)", ratio < 1))
    params = {"log_c": -math.log(_f(a20)), "e_near": near - 1, "e_far": far - 1, "gap": r2 - r1,
              "branch": "general_beyond_roots"}
    return WeightSpec(CaseTag.GENERAL, "beyond_roots", support, cons, params,
                      degree_sum_bound=_f(1 - ratio))


_FORMULA_NAMES = {
    "case_I_right": "W1",
    "case_I_left": "W1",
    "case_II": "W2",
    "case_III_plus": "W3_1",
    "case_III_minus": "W3_2",
    "case_III_real_line": "W3_3",
    "case_IV": "W4",
    "case_V": "W5",
    "case_VI": "W6",
    "general_between_roots": "W",
    "general_beyond_roots": "W",
    "general_real_line": "W",
    "general_repeated_root": "W",
}

_BUILDERS = {
    CaseTag.GENERAL: _general,
    CaseTag.I: _case_i,
    CaseTag.II: _case_ii,
    CaseTag.III: _case_iii,
    CaseTag.IV: _case_iv,
    CaseTag.V: _case_v,
    CaseTag.VI: _case_vi,
}


def pearson_weight(params: EquationParams, n: int | None = None) -> WeightSpec:
    """Weight for the parameters' case; constraint flags are filled in, never raised.

    With ``n`` given, weights whose moments run out also record whether
    y_n^2 W is integrable.
    """
    spec = _BUILDERS[classify(params)](params)
    if n is not None and spec.degree_sum_bound is not None:
        ratio = 1 - spec.degree_sum_bound
        extra = (f"a10/a20 < 1 - 2n = {1 - 2 * n}", ratio < 1 - 2 * n)
        spec = WeightSpec(spec.case, spec.kind, spec.support, spec.constraints + (extra,), spec.params,
                          spec.degree_sum_bound, spec.center, spec.scale)
    return spec


def pearson_residual(params: EquationParams, spec: WeightSpec, points) -> np.ndarray:
    """Relative residual of (p2 W)' = p1 W at the given points.

    Dividing by W gives p2' + p2 (log W)' = p1. The log-derivative of the
    emitted weight is taken by complex step, so no difference quotient
    limits the accuracy. The result is
    |p2' + p2 (log W)' - p1| / max(|p2'|, |p2 (log W)'|, |p1|).
    """
    x = np.asarray(points, dtype=float)
    h = 1e-20 * np.maximum(np.abs(x), 1.0)
    with np.errstate(all="ignore"):
        dlog = np.imag(spec.log_density(x + 1j * h)) / h
    p2 = params.p2.eval_array(x)
    dp2 = params.p2.derivative().eval_array(x)
    p1 = params.p1.eval_array(x)
    lhs = dp2 + p2 * dlog
    scale = np.maximum.reduce([np.abs(dp2), np.abs(p2 * dlog), np.abs(p1), np.full_like(x, 1e-300)])
    return np.abs(lhs - p1) / scale


def pearson_log_derivative(params: EquationParams) -> Callable:
    """Exact (log W)' = (p1 - p2')/p2 as a float callable, for comparison."""
    rf = RationalFunction(params.p1 - params.p2.derivative(), params.p2)
    return lambda x: rf.num.eval_array(np.asarray(x, float)) / rf.den.eval_array(np.asarray(x, float))


def pearson_reference_log_weight(params: EquationParams) -> Callable:
    """log|W| up to an additive constant, from an exact antiderivative of p1/p2."""
    F = rational_antiderivative(RationalFunction(params.p1, params.p2))
    return lambda x: F(x) - np.log(np.abs(params.p2.eval_array(np.asarray(x, float))))


# -- inner products ---------------------------------------------------------

@dataclass(frozen=True)
class NormResult:
    n: int
    m: int
    numeric: float
    closed_form: float
    rel_err: float
    quad_error: float = 0.0


def _family(params: EquationParams, n_max: int) -> list[Polynomial]:
    from .ode import solve

    return [solve(params, k).polynomial for k in range(n_max + 1)]


def gram_matrix(params: EquationParams, n_max: int, spec: WeightSpec | None = None,
                quad: QuadConfig | None = None) -> tuple[np.ndarray, np.ndarray]:
    """All inner products <y_n, y_m> for n, m <= n_max, with quadrature error estimates."""
    spec = spec or pearson_weight(params)
    spec.require()
    if spec.degree_sum_bound is not None and 2 * n_max >= spec.degree_sum_bound:
        raise NonIntegrable(f"y_n^2 W is not integrable for n = {n_max} (needs 2n < {spec.degree_sum_bound:.6g})")
    ys = [y.float_coeffs() for y in _family(params, n_max)]
    pairs = [(i, j) for i in range(n_max + 1) for j in range(i, n_max + 1)]
    sign = spec.sign()

    def g(x, dlo, dhi):
        vals = [np.polynomial.polynomial.polyval(x, c) if len(c) else np.zeros_like(x) for c in ys]
        out = np.array([vals[i] * vals[j] for i, j in pairs]) * sign
        return out, spec.log_density(x, dlo, dhi)

    res = integrate(g, spec.support[0], spec.support[1], quad, center=spec.center, scale=spec.scale)
    G = np.zeros((n_max + 1, n_max + 1))
    E = np.zeros_like(G)
    for (i, j), v, e in zip(pairs, res.value, res.error):
        G[i, j] = G[j, i] = v
        E[i, j] = E[j, i] = e
    return G, E


def inner_product(params: EquationParams, n: int, m: int, spec: WeightSpec | None = None,
                  quad: QuadConfig | None = None) -> float:
    spec = spec or pearson_weight(params)
    spec.require()
    if spec.degree_sum_bound is not None and n + m >= spec.degree_sum_bound:
        raise NonIntegrable(f"y_n y_m W is not integrable for n + m = {n + m}")
    yn, ym = _family(params, max(n, m))[n], _family(params, max(n, m))[m]
    cn, cm = yn.float_coeffs(), ym.float_coeffs()
    sign = spec.sign()

    def g(x, dlo, dhi):
        pv = np.polynomial.polynomial.polyval
        return pv(x, cn) * pv(x, cm) * sign, spec.log_density(x, dlo, dhi)

    res = integrate(g, spec.support[0], spec.support[1], quad, center=spec.center, scale=spec.scale)
    return float(res.value[0])


# -- closed-form norms --------------------------------------------------------

def _gamma_ratio_log(*terms) -> float:
    """Sum of signed log-gamma terms: pairs (sign, argument)."""
    return sum(s * float(gammaln(a)) for s, a in terms)


def norm_branch(params: EquationParams) -> str:
    return pearson_weight(params).params["branch"]


def _lead_ratio(a10: float, a20: float, n: int) -> float:
    return (a10 + (n - 1) * a20) / (a10 + (2 * n - 1) * a20)


def norm_closed_form(params: EquationParams, n: int) -> float:
    """Diagonal norm int y_n^2 W over the support for the active branch."""
    spec = pearson_weight(params)
    branch = spec.params["branch"]
    if branch not in _NORMS:
        raise UnsupportedBranch(f"no closed-form norm for branch {branch}")
    if spec.degree_sum_bound is not None and 2 * n >= spec.degree_sum_bound:
        raise NonIntegrable(f"norm diverges for n = {n}")
    return _NORMS[branch](params, n, corrected=True)


def quoted_norm(params: EquationParams, n: int) -> float:
    """Diagonal norm from the classical formulas, without corrections."""
    branch = norm_branch(params)
    if branch not in _NORMS:
        raise UnsupportedBranch(f"no closed-form norm for branch {branch}")
    return _NORMS[branch](params, n, corrected=False)


def _norm_case_i(p: EquationParams, n: int, corrected: bool) -> float:
    a21, a22, a10, a11 = (_f(v) for v in (p.a21, p.a22, p.a10, p.a11))
    mu = _f((p.a21 * p.a11 - p.a22 * p.a10) / (p.a21 * p.a21))
    mag = math.exp(gammaln(n + 1) + (2 * n - 1) * math.log(abs(a21)) + gammaln(mu + n) - a10 * a22 / a21**2
                   + mu * math.log(-a21 * a21 / a10))
    sign = 1.0 if a21 > 0 else -1.0  # a21^(2n-1)
    if a21 < 0:
        sign = -sign  # the leading minus of the left-branch formula
    return sign * mag


def _norm_case_ii(p: EquationParams, n: int, corrected: bool) -> float:
    a20, a21, a10, a11 = (_f(v) for v in (p.a20, p.a21, p.a10, p.a11))
    ra, rb = a10 / a20, a11 / a21
    log = (gammaln(n + 1) - rb * math.log(-a20) + (2 * n - 1 + ra) * math.log(a21)
           + gammaln(n + ra - rb) + gammaln(n + rb) - gammaln(n + ra))
    return math.exp(log) * _lead_ratio(a10, a20, n)


def _norm_case_iii_plus(p: EquationParams, n: int, corrected: bool) -> float:
    a20, a22, a10 = _f(p.a20), _f(p.a22), _f(p.a10)
    spec = _case_iii(p)
    al, be = spec.params["alpha"], spec.params["beta"]
    r = _sqrt_ratio(-p.a22, p.a20)
    ra = a10 / a20
    log = ((2 * n + ra - 1) * math.log(2) + n * math.log(-a20 * a22) + gammaln(n + al) + gammaln(n + be)
           - math.log(a20) - gammaln(n + ra) - (1 - ra) * math.log(r) + gammaln(n + 1))
    return math.exp(log) * _lead_ratio(a10, a20, n)


def _norm_case_iii_minus(p: EquationParams, n: int, corrected: bool) -> float:
    a20, a22, a10 = _f(p.a20), _f(p.a22), _f(p.a10)
    spec = _case_iii(p)
    al, be = spec.params["alpha"], spec.params["beta"]
    r = _sqrt_ratio(-p.a22, p.a20)
    ra = a10 / a20
    log = ((2 * n + ra - 1) * math.log(2) + math.log(r) + n * math.log(-a20 * a22) - math.log(a22)
           + gammaln(n + be) + gammaln(n + al) + gammaln(n + 1) - gammaln(n + ra))
    return math.exp(log) * _lead_ratio(a10, a20, n)


def _norm_case_iii_real_line(p: EquationParams, n: int, corrected: bool) -> float:
    a20, a22, a10, a11 = (_f(v) for v in (p.a20, p.a22, p.a10, p.a11))
    ra = a10 / a20
    am = ra / 2
    b = a11 / (2 * a20) * math.sqrt(a20 / a22)  # imaginary part of the complex parameter
    poch_pair = 1.0
    for k in range(n):
        poch_pair *= (am + k) ** 2 + b * b
    poch_ra = 1.0
    for k in range(n):
        poch_ra *= ra + k
    log_abs_gamma_sq = 2 * float(np.real(loggamma(complex(1 - am, b))))
    log = ((2 * n + ra) * math.log(2) + math.log(math.pi) + (am - 1) * math.log(a20)
           + (am - 0.5) * math.log(a22 / a20) + gammaln(1 - ra) - log_abs_gamma_sq + gammaln(n + 1))
    return (-a20 * a22) ** n * poch_pair / poch_ra * math.exp(log) * _lead_ratio(a10, a20, n)


def _norm_case_iv(p: EquationParams, n: int, corrected: bool) -> float:
    a22, a10, a11 = _f(p.a22), _f(p.a10), _f(p.a11)
    base = -a10 * a22
    log = (n - 0.5) * math.log(base) - a11 * a11 / (2 * a22 * a10) + 0.5 * math.log(2 * math.pi) + gammaln(n + 1)
    value = math.exp(log)
    if not corrected:
        value *= a10 * a10  # both parity formulas carry this extra factor
    return value


def _norm_case_v(p: EquationParams, n: int, corrected: bool) -> float:
    a21, a10, a11 = _f(p.a21), _f(p.a10), _f(p.a11)
    rb = a11 / a21
    mag = math.exp(gammaln(n + 1) + (2 * n - 1) * math.log(abs(a21)) - rb * math.log(-a10 / a21) + gammaln(n + rb))
    return mag if a21 > 0 else -mag


def _norm_case_vi(p: EquationParams, n: int, corrected: bool) -> float:
    a20, a10, a11 = _f(p.a20), _f(p.a10), _f(p.a11)
    ra = a10 / a20
    if corrected:
        log = gammaln(n + 1) + (2 * n - 1 + ra) * math.log(a11) - ra * math.log(a20) + gammaln(1 - n - ra)
    else:
        log = gammaln(n + 1) + (2 * n + 1 - ra) * math.log(a11) + (ra - 2) * math.log(a20) + gammaln(1 - n - ra)
    return math.exp(log) * _lead_ratio(a10, a20, n)


_NORMS = {
    "case_I_right": _norm_case_i,
    "case_I_left": _norm_case_i,
    "case_II": _norm_case_ii,
    "case_III_plus": _norm_case_iii_plus,
    "case_III_minus": _norm_case_iii_minus,
    "case_III_real_line": _norm_case_iii_real_line,
    "case_IV": _norm_case_iv,
    "case_V": _norm_case_v,
    "case_VI": _norm_case_vi,
}


def quoted_case_iv_norm(params: EquationParams, n: int) -> float:
    """The two parity formulas for the Gaussian branch, evaluated literally."""
    a22, a10, a11 = _f(params.a22), _f(params.a10), _f(params.a11)
    e = math.exp(-a11 * a11 / (2 * a22 * a10)) * math.sqrt(2 * math.pi) * math.gamma(n + 1)
    if n % 2 == 0:
        return math.sqrt(-a10**3 / a22) * (-a10 * a22) ** n * e
    return a10 * a10 * (-a10 * a22) ** (n - 0.5) * e


def verify_norms(params: EquationParams, n_max: int, quad: QuadConfig | None = None) -> list[NormResult]:
    """Quadrature against the closed-form diagonal; off-diagonal rel_err is the absolute value."""
    G, E = gram_matrix(params, n_max, quad=quad)
    norms = [norm_closed_form(params, k) for k in range(n_max + 1)]
    out = []
    for i in range(n_max + 1):
        for j in range(n_max + 1):
            if i == j:
                cf = norms[i]
                rel = abs(G[i, i] - cf) / max(1.0, abs(cf))
            else:
                cf = 0.0
                rel = abs(G[i, j])
            out.append(NormResult(i, j, float(G[i, j]), cf, rel, float(E[i, j])))
    return out
