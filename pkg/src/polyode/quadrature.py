"""Adaptive Gauss-Legendre quadrature on double-exponentially mapped intervals.

The integrand callback receives the abscissae together with their distances
to the finite endpoints (so weights like ``(hi - x)**(beta - 1)`` keep full
relative accuracy next to the boundary) and returns ``(values, log_weight)``.
The quadrature multiplies ``values`` by ``exp(log_weight + log_jacobian)``,
which keeps extreme weight values from overflowing.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import expit

from .errors import QuadratureNoConvergence

ENV_TOL = "POLYODE_QUAD_TOL"

# |v| bounds keep endpoint distances above ~1e-300 and |x| below ~1e30
_V_NEAR = 690.0
_V_FAR = 69.0
_INITIAL_PANELS = 8


@dataclass(frozen=True)
class QuadConfig:
    points: int = 64
    max_depth: int = 30
    tol: float = 1e-10

    @classmethod
    def from_env(cls, **overrides) -> "QuadConfig":
        cfg = cls(**{k: v for k, v in overrides.items() if v is not None})
        env = os.environ.get(ENV_TOL)
        if env and overrides.get("tol") is None:
            cfg = replace(cfg, tol=float(env))
        return cfg


@dataclass(frozen=True)
class QuadResult:
    value: np.ndarray
    error: np.ndarray
    panels: int


@lru_cache(maxsize=8)
def _rule(points: int) -> tuple[np.ndarray, np.ndarray]:
    return leggauss(points)


Integrand = Callable[[np.ndarray, np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray]]


def _mapping(lo: float, hi: float, center: float, scale: float):
    """Return (u_min, u_max, map) with map(u) -> (x, dlo, dhi, log_jacobian)."""
    half_pi = math.pi / 2
    lo_inf, hi_inf = math.isinf(lo), math.isinf(hi)
    if not lo_inf and not hi_inf:
        length = hi - lo
        umax = math.asinh(_V_NEAR / 2 / half_pi)

        def fmap(u):
            v = half_pi * np.sinh(u)
            t = expit(2 * v)
            s = expit(-2 * v)
            dlo, dhi = length * t, length * s
            x = np.where(dlo <= dhi, lo + dlo, hi - dhi)
            logjac = math.log(length * math.pi) + np.log(np.cosh(u)) + np.log(t) + np.log(s)
            return x, dlo, dhi, logjac

        return -umax, umax, fmap
    umin = -math.asinh(_V_NEAR / half_pi)
    umax_far = math.asinh((_V_FAR - math.log(scale)) / half_pi) if scale < math.exp(_V_FAR) else 0.0
    if not lo_inf:
        def fmap(u):
            v = half_pi * np.sinh(u)
            d = scale * np.exp(v)
            return lo + d, d, np.full_like(d, np.inf), math.log(scale) + v + np.log(half_pi * np.cosh(u))

        return umin, umax_far, fmap
    if not hi_inf:
        def fmap(u):
            v = half_pi * np.sinh(u)
            d = scale * np.exp(v)
            return hi - d, np.full_like(d, np.inf), d, math.log(scale) + v + np.log(half_pi * np.cosh(u))

        return umin, umax_far, fmap
    ulim = math.asinh(math.asinh(math.exp(_V_FAR) / scale) / half_pi)

    def fmap(u):
        v = half_pi * np.sinh(u)
        inf = np.full_like(v, np.inf)
        return center + scale * np.sinh(v), inf, inf, math.log(scale) + np.log(np.cosh(v)) + np.log(half_pi * np.cosh(u))

    return -ulim, ulim, fmap


def integrate(g: Integrand, lo: float, hi: float, config: QuadConfig | None = None,
              center: float = 0.0, scale: float = 1.0) -> QuadResult:
    """Integrate ``values * exp(log_weight)`` over (lo, hi); values may be vector-valued."""
    cfg = config or QuadConfig()
    nodes, wts = _rule(cfg.points)
    umin, umax, fmap = _mapping(float(lo), float(hi), float(center), float(scale))

    def panel(a: float, b: float):
        mid, half = 0.5 * (a + b), 0.5 * (b - a)
        u = mid + half * nodes
        with np.errstate(all="ignore"):
            x, dlo, dhi, logjac = fmap(u)
            vals, logw = g(x, dlo, dhi)
            vals = np.atleast_2d(vals)
            w = np.exp(np.asarray(logw) + logjac) * (half * wts)
            w = np.where(np.isfinite(w), w, 0.0)
            prod = vals * w
            prod = np.where(np.isfinite(prod), prod, 0.0)
        return prod.sum(axis=1), np.abs(prod).sum(axis=1)

    edges = np.linspace(umin, umax, _INITIAL_PANELS + 1)
    stack = []
    ref = None
    for a, b in zip(edges[:-1], edges[1:]):
        est, mag = panel(a, b)
        ref = mag if ref is None else ref + mag
        stack.append((a, b, est, 0))
    total = np.zeros_like(ref)
    error = np.zeros_like(ref)
    panels = 0
    floor = 1e-300
    while stack:
        a, b, est, depth = stack.pop()
        m = 0.5 * (a + b)
        left, lmag = panel(a, m)
        right, rmag = panel(m, b)
        fine = left + right
        err = np.abs(fine - est)
        if np.all(err <= cfg.tol * ref + floor):
            total += fine
            error += err
            panels += 1
            continue
        if depth + 1 >= cfg.max_depth:
            raise QuadratureNoConvergence(
                f"panel [{a:.6g}, {b:.6g}] still has error {float(err.max()):.3e} at depth {depth + 1}")
        stack.append((a, m, left, depth + 1))
        stack.append((m, b, right, depth + 1))
    return QuadResult(total, error, panels)
