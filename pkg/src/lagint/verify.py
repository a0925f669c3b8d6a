"""Numerical verification of identities: quadrature of g against differences of F.

Tolerances mix absolute and relative parts because antiderivative scales
vary over many orders of magnitude across identities; an interval check
passes when |quad - (F(b) - F(a))| <= max(tol.abs, tol.rel * |F(b) - F(a)|).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, replace
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DomainError, EmptyDomainError, MarginError
from .identity import Identity
from .odecat import SINGULARITY_MARGIN
from .quadrature import DEFAULT_BUDGET, gauss_kronrod

# Quadrature runs this much tighter than the comparison tolerance so that its
# own error does not eat the verification budget.
QUAD_SAFETY = 0.1
DEFAULT_DERIV_POINTS = 25
# Five-point stencil step relative to max(1, |x|): small enough that the
# O(h^4) truncation stays below 1e-8 next to the (3k^2 - 1) branch points,
# large enough that roundoff in F stays near 1e-9.
DEFAULT_STEP_SCALE = 2e-4


@dataclass(frozen=True)
class Tolerance:
    abs: float = 1e-8
    rel: float = 1e-7
    deriv: float = 1e-6

    def __post_init__(self):
        for name in ("abs", "rel", "deriv"):
            v = getattr(self, name)
            if not (v > 0.0 and math.isfinite(v)):
                raise ValueError(f"tolerance {name} must be positive and finite, got {v!r}")


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True)
class IntervalCheck:
    a: float
    b: float
    quad: float
    quad_err: float
    delta_f: float
    abs_err: float
    rel_err: float
    passed: bool


@dataclass(frozen=True)
class DerivCheck:
    points: int
    max_resid: float
    passed: bool


@dataclass(frozen=True)
class DualCheck:
    """Agreement between two independent constructions of the same integrand."""

    points: int
    max_rel: float
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    id: str
    intervals: tuple[IntervalCheck, ...]
    deriv: DerivCheck
    tolerance: Tolerance
    runtime: float
    notes: str = ""
    dual: Optional[DualCheck] = None
    skipped: bool = False
    error: str = ""

    @property
    def passed(self) -> bool:
        if self.skipped or self.error:
            return False
        ok = all(c.passed for c in self.intervals) and self.deriv.passed
        return ok and (self.dual is None or self.dual.passed)

    def with_runtime(self, runtime: float) -> "VerificationReport":
        return replace(self, runtime=runtime)


def chebyshev_points(a: float, b: float, n: int) -> np.ndarray:
    """n Chebyshev nodes of the first kind mapped to (a, b), ascending."""
    j = np.arange(n)
    t = -np.cos((2.0 * j + 1.0) * math.pi / (2.0 * n))
    return 0.5 * (a + b) + 0.5 * (b - a) * t


def integrate_adaptive(g: Callable, a: float, b: float, tol: Tolerance = DEFAULT_TOLERANCE,
                       budget: int = DEFAULT_BUDGET) -> tuple[float, float]:
    """Adaptive G7/K15 quadrature of g on [a, b]; returns (value, error estimate)."""
    res = gauss_kronrod(g, a, b, QUAD_SAFETY * tol.abs, QUAD_SAFETY * tol.rel, budget)
    return res.value, res.error


def _check_intervals(identity: Identity, intervals: Sequence[tuple[float, float]], margin: float):
    if not intervals:
        raise EmptyDomainError(f"no intervals given for {identity.id}")
    for a, b in intervals:
        if not a < b:
            raise EmptyDomainError(f"empty interval [{a}, {b}] for {identity.id}")
        if not identity.contains([a, b], margin):
            raise DomainError(f"interval [{a}, {b}] is not inside the domain of {identity.id} "
                              f"(margin {margin} from singular points)")
        for s in identity.singularities:
            if a < s < b:
                raise DomainError(f"interval [{a}, {b}] contains the singular point {s} of {identity.id}")


def check_interval(identity: Identity, a: float, b: float, tol: Tolerance) -> IntervalCheck:
    quad, quad_err = integrate_adaptive(identity.integrand, a, b, tol)
    fa, fb = identity.F(np.array([a, b]))
    delta = float(fb - fa)
    abs_err = abs(quad - delta)
    rel_err = abs_err / abs(delta) if delta != 0.0 else (0.0 if abs_err == 0.0 else math.inf)
    passed = abs_err <= max(tol.abs, tol.rel * abs(delta))
    return IntervalCheck(float(a), float(b), float(quad), float(quad_err), delta, abs_err, rel_err, bool(passed))


def derivative_check(identity: Identity, points: Sequence[float], step_scale: float = DEFAULT_STEP_SCALE) -> float:
    """max |F'(x) - g(x)| / (1 + |g(x)|) with F' from a 5-point central difference."""
    xs = np.asarray(points, dtype=float)
    if xs.size == 0:
        return 0.0
    h = step_scale * np.maximum(1.0, np.abs(xs))
    lo, hi = xs - 2.0 * h, xs + 2.0 * h
    if not identity.contains(np.concatenate([lo, hi])):
        raise MarginError(f"derivative stencil leaves the domain of {identity.id}")
    for s in identity.singularities:
        if np.any((lo <= s) & (s <= hi)):
            raise MarginError(f"derivative stencil straddles the singular point {s} of {identity.id}")
    F = identity.F
    dF = (F(xs - 2.0 * h) - 8.0 * F(xs - h) + 8.0 * F(xs + h) - F(xs + 2.0 * h)) / (12.0 * h)
    g = identity.g(xs)
    return float(np.max(np.abs(dF - g) / (1.0 + np.abs(g))))


def verify_identity(identity: Identity, intervals: Sequence[tuple[float, float]],
                    tol: Tolerance = DEFAULT_TOLERANCE, n_deriv_points: int = DEFAULT_DERIV_POINTS,
                    margin: float = SINGULARITY_MARGIN, step_scale: float = DEFAULT_STEP_SCALE,
                    notes: str = "") -> VerificationReport:
    """Compare quadrature of g with F(b) - F(a) on every interval, then spot-check F' = g.

    The derivative check uses ``n_deriv_points`` Chebyshev nodes spread over
    each interval in proportion to its length (at least one per interval).
    """
    start = time.perf_counter()
    intervals = [(float(a), float(b)) for a, b in intervals]
    _check_intervals(identity, intervals, margin)
    checks = tuple(check_interval(identity, a, b, tol) for a, b in intervals)
    pts = deriv_points(intervals, n_deriv_points)
    resid = derivative_check(identity, pts, step_scale)
    deriv = DerivCheck(int(pts.size), resid, bool(resid <= tol.deriv))
    return VerificationReport(identity.id, checks, deriv, tol, time.perf_counter() - start, notes)


def deriv_points(intervals: Sequence[tuple[float, float]], n: int) -> np.ndarray:
    """Distribute n Chebyshev nodes over the intervals proportionally to their lengths."""
    if n <= 0:
        return np.zeros(0)
    lengths = np.array([b - a for a, b in intervals], dtype=float)
    share = np.maximum(1, np.floor(n * lengths / lengths.sum()).astype(int))
    while share.sum() < n:
        share[np.argmax(lengths / share)] += 1
    while share.sum() > n and share.max() > 1:
        share[np.argmax(share)] -= 1
    return np.concatenate([chebyshev_points(a, b, int(k)) for (a, b), k in zip(intervals, share)])


def dual_agreement(g1: Callable, g2: Callable, points: Sequence[float], rel_tol: float = 1e-8,
                   floor: float = 1e-3) -> DualCheck:
    """Pointwise |g1 - g2| / max(|g2|, floor * max|g2|) over the sample points.

    The floor keeps isolated zeros of the integrand from turning roundoff into
    a spurious relative failure.
    """
    xs = np.asarray(points, dtype=float)
    a = np.asarray(g1(xs), dtype=float)
    b = np.asarray(g2(xs), dtype=float)
    scale = np.maximum(np.abs(b), floor * float(np.max(np.abs(b))) if b.size else 0.0)
    scale = np.where(scale > 0.0, scale, 1.0)
    rel = float(np.max(np.abs(a - b) / scale)) if xs.size else 0.0
    return DualCheck(int(xs.size), rel, bool(rel <= rel_tol))


__all__ = [
    "DEFAULT_DERIV_POINTS",
    "DEFAULT_STEP_SCALE",
    "DEFAULT_TOLERANCE",
    "DerivCheck",
    "DualCheck",
    "IntervalCheck",
    "Tolerance",
    "VerificationReport",
    "chebyshev_points",
    "check_interval",
    "derivative_check",
    "deriv_points",
    "dual_agreement",
    "integrate_adaptive",
    "verify_identity",
]
