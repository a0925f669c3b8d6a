"""Construction of indefinite-integral identities for second-order linear ODEs.

For y'' + p y' + q y = 0 with integrating factor f = exp(int p) and an
arbitrary twice-differentiable gauge function h,

    d/dx [ f (h' y - h y') ] = f (h'' + p h' + q h) y,

so every choice of h yields an identity  int g = F  with
g = f (h'' + p h' + q h) y  and  F = f (h' y - h y').  This module builds
such identities (and the special cases h = 1, the energy integral and the
conjugate-equation form), the dependent-variable gauge transformation that
changes p, the associated Riccati relation for q, and a registry of named
gauge functions.

Normalization: when an ODE has no closed-form integrating factor, f is
computed by quadrature and normalized to 1 at an anchor x0, so F is defined
up to a multiplicative constant on the integrating factor -- identities are
only ever compared through differences F(b) - F(a) and derivatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence

import numpy as np

from . import specfun
from .errors import (
    DegenerateError,
    DomainError,
    EmptyDomainError,
    NonPositiveFactorError,
    NotConjugateError,
    ParameterError,
    UnknownIdError,
)
from .odecat import SINGULARITY_MARGIN, LinearODE2, SolutionFn, integrating_factor
from .quadrature import gauss_kronrod
from .specfun import FnEval

Coefficient = Callable[[np.ndarray], np.ndarray]

PHI = 0.5 * (1.0 + math.sqrt(5.0))
CONJUGACY_TOL = 1e-10
WRONSKIAN_FLOOR = 1e-14
INV_SQRT3 = 1.0 / math.sqrt(3.0)


def fd_step(x):
    """Central-difference step used for coefficient derivatives: 1e-6 (1 + |x|)."""
    return 1e-6 * (1.0 + np.abs(x))


def _central(fn: Coefficient, x: np.ndarray) -> np.ndarray:
    h = fd_step(x)
    return (fn(x + h) - fn(x - h)) / (2.0 * h)


def _as_float_array(x) -> np.ndarray:
    return np.asarray(x, dtype=float)


def _finish(x, values):
    return float(values) if np.ndim(x) == 0 else values


# ---------------------------------------------------------------------------
# data types
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class GaugeFn:
    """A gauge function x -> (h, h', h'') with its validity domain."""

    name: str
    evaluator: Callable[[np.ndarray], FnEval]
    domain: tuple[float, float] = (-math.inf, math.inf)
    singularities: tuple[float, ...] = ()

    def eval(self, x) -> FnEval:
        return self.evaluator(_as_float_array(x))

    def __call__(self, x):
        r = self.eval(x)
        return r.value, r.d1, r.d2

    def scaled(self, c: float) -> "GaugeFn":
        c = float(c)

        def ev(x):
            r = self.eval(x)
            return FnEval(c * r.value, c * r.d1, c * r.d2)

        return GaugeFn(f"{c!r}*{self.name}", ev, self.domain, self.singularities)

    def __add__(self, other: "GaugeFn") -> "GaugeFn":
        if not isinstance(other, GaugeFn):
            return NotImplemented

        def ev(x):
            a, b = self.eval(x), other.eval(x)
            return FnEval(a.value + b.value, a.d1 + b.d1, a.d2 + b.d2)

        domain = _intersect(self.domain, other.domain)
        if domain is None:
            raise EmptyDomainError(f"gauges {self.name} and {other.name} have disjoint domains")
        return GaugeFn(f"({self.name}+{other.name})", ev, domain,
                       tuple(sorted(set(self.singularities) | set(other.singularities))))


@dataclass(frozen=True)
class Identity:
    """int integrand(x) dx = antiderivative(x) + C on ``domain``."""

    id: str
    integrand: Coefficient
    antiderivative: Coefficient
    domain: tuple[float, float]
    provenance: str = ""
    singularities: tuple[float, ...] = ()
    notes: str = ""

    def g(self, x):
        x = _as_float_array(x)
        return _finish(x, np.asarray(self.integrand(x), dtype=float) + 0.0 * x)

    def F(self, x):
        x = _as_float_array(x)
        return _finish(x, np.asarray(self.antiderivative(x), dtype=float) + 0.0 * x)

    def scaled(self, c: float, id: Optional[str] = None) -> "Identity":
        c = float(c)
        g, F = self.integrand, self.antiderivative
        return Identity(id or self.id, lambda x: c * g(x), lambda x: c * F(x), self.domain,
                        self.provenance, self.singularities, self.notes)

    def contains(self, x, margin: float = 0.0) -> bool:
        xs = np.atleast_1d(_as_float_array(x))
        lo, hi = self.domain
        if np.any(xs <= lo + margin) or np.any(xs >= hi - margin):
            return False
        return not any(np.any(np.abs(xs - s) <= margin) for s in self.singularities)


ZERO_IDENTITY = Identity("zero", lambda x: 0.0 * x, lambda x: 0.0 * x, (-math.inf, math.inf), "trivial")


# ---------------------------------------------------------------------------
# integrating factor helpers
# ---------------------------------------------------------------------------
def _intersect(*domains: tuple[float, float]) -> Optional[tuple[float, float]]:
    lo = max(d[0] for d in domains)
    hi = min(d[1] for d in domains)
    return (lo, hi) if lo < hi else None


def _anchor(domain: tuple[float, float]) -> float:
    lo, hi = domain
    if math.isinf(lo) and math.isinf(hi):
        return 0.0
    if math.isinf(lo):
        return hi - 1.0
    if math.isinf(hi):
        return lo + 1.0
    return 0.5 * (lo + hi)


def factor_closures(ode: LinearODE2, x0: float) -> tuple[Coefficient, Coefficient]:
    """(f, f') for an ODE: closed form when registered, else exp(int_{x0} p) by quadrature."""
    if ode.f_closed is not None:
        return ode.f_closed, ode.df

    def f(x):
        xs = np.atleast_1d(_as_float_array(x))
        out = np.array([integrating_factor(ode, x0, float(t)) if t != x0 else 1.0 for t in xs.ravel()])
        out = out.reshape(xs.shape)
        return out.reshape(np.shape(x)) if np.ndim(x) else out[0]

    return f, lambda x: ode.p(x) * f(x)


def _common_domain(*parts) -> tuple[tuple[float, float], tuple[float, ...]]:
    domain = _intersect(*(p.domain for p in parts))
    if domain is None:
        names = ", ".join(getattr(p, "id", None) or getattr(p, "name", "?") for p in parts)
        raise EmptyDomainError(f"domains of {names} do not intersect")
    sing = sorted({s for p in parts for s in getattr(p, "singularities", ())})
    return domain, tuple(sing)


def _resolve_anchor(domain, x0):
    if x0 is None:
        return _anchor(domain)
    x0 = float(x0)
    if not domain[0] < x0 < domain[1]:
        raise EmptyDomainError(f"anchor x0 = {x0} is outside the common domain {domain}")
    return x0


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------
def make_identity(ode: LinearODE2, y: SolutionFn, h: GaugeFn, x0: Optional[float] = None,
                  id: Optional[str] = None, provenance: str = "") -> Identity:
    """Identity with g = f (h'' + p h' + q h) y and F = f (h' y - h y')."""
    domain, sing = _common_domain(ode, y, h)
    x0 = _resolve_anchor(domain, x0)
    f, _ = factor_closures(ode, x0)
    p, q = ode.p, ode.q

    def integrand(x):
        hv = h.eval(x)
        yv = y.eval(x)
        return f(x) * (hv.d2 + p(x) * hv.d1 + q(x) * hv.value) * yv.value

    def antiderivative(x):
        hv = h.eval(x)
        yv = y.eval(x)
        return f(x) * (hv.d1 * yv.value - hv.value * yv.d1)

    return Identity(id or f"theorem[{ode.id};{y.name};{h.name}]", integrand, antiderivative,
                    domain, provenance, sing)


def second_integral(ode: LinearODE2, y: SolutionFn, x0: Optional[float] = None,
                    id: Optional[str] = None, provenance: str = "") -> Identity:
    """The h = 1 case: int f q y = -f y'."""
    domain, sing = _common_domain(ode, y)
    x0 = _resolve_anchor(domain, x0)
    f, _ = factor_closures(ode, x0)
    q = ode.q
    return Identity(id or f"second[{ode.id};{y.name}]",
                    lambda x: f(x) * q(x) * y.eval(x).value,
                    lambda x: -f(x) * y.eval(x).d1,
                    domain, provenance, sing)


def energy_identity(ode: LinearODE2, y: SolutionFn, x0: Optional[float] = None,
                    id: Optional[str] = None, provenance: str = "") -> Identity:
    """int [(f q)' y^2 - f' y'^2] = f (y'^2 + q y^2)."""
    domain, sing = _common_domain(ode, y)
    x0 = _resolve_anchor(domain, x0)
    f, df = factor_closures(ode, x0)
    q = ode.q
    dq = ode.dq if ode.dq is not None else (lambda x: _central(q, x))

    def integrand(x):
        yv = y.eval(x)
        fx = f(x)
        dfq = df(x) * q(x) + fx * dq(x)
        return dfq * yv.value**2 - df(x) * yv.d1**2

    def antiderivative(x):
        yv = y.eval(x)
        return f(x) * (yv.d1**2 + q(x) * yv.value**2)

    return Identity(id or f"energy[{ode.id};{y.name}]", integrand, antiderivative, domain, provenance, sing)


def _sample_points(domain: tuple[float, float], n: int) -> np.ndarray:
    lo, hi = domain
    if math.isinf(lo) and math.isinf(hi):
        lo, hi = -5.0, 5.0
    elif math.isinf(lo):
        lo = hi - 10.0
    elif math.isinf(hi):
        hi = lo + 10.0
    pad = 0.05 * (hi - lo)
    return np.linspace(lo + pad, hi - pad, n)


def check_conjugate(odeA: LinearODE2, odeB: LinearODE2, tol: float = CONJUGACY_TOL) -> None:
    """Raise NotConjugateError unless p_A and p_B agree at 10 interior points."""
    domain = _intersect(odeA.domain, odeB.domain)
    if domain is None:
        raise EmptyDomainError(f"{odeA.id} and {odeB.id} have disjoint domains")
    xs = _sample_points(domain, 10)
    sing = set(odeA.singularities) | set(odeB.singularities)
    xs = np.array([x for x in xs if all(abs(x - s) > SINGULARITY_MARGIN for s in sing)])
    pa, pb = np.asarray(odeA.p(xs), float), np.asarray(odeB.p(xs), float)
    dev = np.abs(pa - pb) / (1.0 + np.abs(pa))
    if np.any(dev > tol):
        raise NotConjugateError(f"{odeA.id} and {odeB.id} differ in p (max deviation {dev.max():.3e})")


def conjugate_identity(odeA: LinearODE2, y: SolutionFn, odeB: LinearODE2, h: SolutionFn,
                       x0: Optional[float] = None, id: Optional[str] = None,
                       provenance: str = "") -> Identity:
    """For conjugate equations (same p): int f (q_A - q_B) h y = f (h' y - h y')."""
    check_conjugate(odeA, odeB)
    domain, sing = _common_domain(odeA, odeB, y, h)
    x0 = _resolve_anchor(domain, x0)
    f, _ = factor_closures(odeA, x0)
    qa, qb = odeA.q, odeB.q

    def integrand(x):
        return f(x) * (qa(x) - qb(x)) * h.eval(x).value * y.eval(x).value

    def antiderivative(x):
        hv = h.eval(x)
        yv = y.eval(x)
        return f(x) * (hv.d1 * yv.value - hv.value * yv.d1)

    return Identity(id or f"conjugate[{odeA.id};{y.name};{odeB.id};{h.name}]", integrand, antiderivative,
                    domain, provenance, sing)


def as_gauge(sol: SolutionFn, ode: Optional[LinearODE2] = None) -> GaugeFn:
    """View a solution as a gauge; h'' from the evaluator or, failing that, from the ODE."""

    def ev(x):
        r = sol.eval(x)
        d2 = r.d2
        if d2 is None:
            if ode is None:
                raise ParameterError(f"solution {sol.name} has no second derivative")
            d2 = -ode.p(x) * r.d1 - ode.q(x) * r.value
        return FnEval(r.value, r.d1, d2)

    return GaugeFn(sol.name, ev, sol.domain, () if ode is None else ode.singularities)


# ---------------------------------------------------------------------------
# gauge transformation and Riccati relation
# ---------------------------------------------------------------------------
def riccati_q(p: Coefficient, pbar: Coefficient, qbar: Coefficient, x,
              dp: Optional[Coefficient] = None, dpbar: Optional[Coefficient] = None):
    """q = (p - pbar)'/2 + (p^2 - pbar^2)/4 + qbar.

    Derivatives of p and pbar are analytic when supplied, otherwise central
    differences with step 1e-6 (1 + |x|).
    """
    xs = _as_float_array(x)
    dpx = dp(xs) if dp is not None else _central(p, xs)
    dpbx = dpbar(xs) if dpbar is not None else _central(pbar, xs)
    px, pbx = p(xs), pbar(xs)
    out = 0.5 * (dpx - dpbx) + 0.25 * (px * px - pbx * pbx) + qbar(xs)
    out = np.asarray(out, dtype=float)
    if not np.all(np.isfinite(out)):
        raise DomainError("riccati_q is not finite at the requested points")
    return _finish(xs, out)


def gauge_transform(source: LinearODE2, target_p: Coefficient, x0: Optional[float] = None,
                    target_dp: Optional[Coefficient] = None, target_f: Optional[Coefficient] = None,
                    id: Optional[str] = None) -> tuple[LinearODE2, GaugeFn]:
    """Change the first-derivative coefficient of ``source`` to ``target_p``.

    Returns the transformed ODE y'' + p y' + q y = 0 (p = target_p, q from
    :func:`riccati_q`) and the multiplier g = sqrt(f_source / f_target) such
    that g z solves the new equation whenever z solves ``source``.  The
    multiplier obeys g'/g = (p_source - p_target) / 2.
    """
    x0 = _resolve_anchor(source.domain, x0)
    f_src, _ = factor_closures(source, x0)
    if target_f is None:
        def target_f(x, _tp=target_p):
            xs = np.atleast_1d(_as_float_array(x))
            vals = np.array([math.exp(gauss_kronrod(_tp, x0, float(t), 1e-15, 1e-13).value) for t in xs.ravel()])
            return vals.reshape(np.shape(x)) if np.ndim(x) else vals[0]
        src_scale = float(f_src(np.array([x0]))[0])
    else:
        src_scale = 1.0
    dp_src = source.dp if source.dp is not None else (lambda x: _central(source.p, x))
    dp_tgt = target_dp if target_dp is not None else (lambda x: _central(target_p, x))

    def multiplier(x):
        ratio = f_src(x) / (src_scale * target_f(x))
        ratio = np.asarray(ratio, dtype=float)
        if np.any(ratio <= 0.0):
            raise NonPositiveFactorError("integrating factors have opposite signs; sqrt(f/f_bar) undefined")
        g = np.sqrt(ratio)
        half = 0.5 * (source.p(x) - target_p(x))
        d1 = g * half
        d2 = g * (half * half + 0.5 * (dp_src(x) - dp_tgt(x)))
        return FnEval(g, d1, d2)

    q_new = lambda x: riccati_q(target_p, source.p, source.q, x, target_dp, source.dp)  # noqa: E731
    ode = LinearODE2(
        id=id or f"gauge[{source.id}]",
        p=target_p,
        q=q_new,
        domain=source.domain,
        singularities=source.singularities,
        f_closed=target_f,
        dp=target_dp,
        dq=None,
    )
    return ode, GaugeFn(f"sqrt(f/fbar)[{source.id}]", multiplier, source.domain, source.singularities)


def transform_solution(sol: SolutionFn, multiplier: GaugeFn, name: Optional[str] = None) -> SolutionFn:
    """The solution g z of the transformed equation, with product-rule derivatives."""

    def ev(x):
        g = multiplier.eval(x)
        z = sol.eval(x)
        d2 = None if z.d2 is None else g.d2 * z.value + 2.0 * g.d1 * z.d1 + g.value * z.d2
        return FnEval(g.value * z.value, g.d1 * z.value + g.value * z.d1, d2)

    return SolutionFn(name or f"g*{sol.name}", ev, sol.domain)


# ---------------------------------------------------------------------------
# Wronskian
# ---------------------------------------------------------------------------
def wronskian_check(ode: LinearODE2, y1: SolutionFn, y2: SolutionFn, grid: Sequence[float],
                    x0: Optional[float] = None) -> tuple[float, float]:
    """Mean of f (y1 y2' - y1' y2) over ``grid`` and its max relative deviation."""
    xs = np.asarray(grid, dtype=float)
    if xs.size < 2:
        raise DomainError("wronskian_check needs at least two grid points")
    if not ode.contains(xs):
        raise DomainError(f"grid leaves the domain of {ode.id}")
    f, _ = factor_closures(ode, float(xs[0]) if x0 is None else x0)
    a, b = y1.eval(xs), y2.eval(xs)
    w = np.asarray(f(xs) * (a.value * b.d1 - a.d1 * b.value), dtype=float)
    mean = float(np.mean(w))
    scale = float(np.max(np.abs(w)))
    if abs(mean) < WRONSKIAN_FLOOR or scale < WRONSKIAN_FLOOR:
        raise DegenerateError(f"Wronskian of {y1.name}, {y2.name} vanishes (mean {mean:.3e})")
    return mean, float(np.max(np.abs(w - mean)) / abs(mean))


# ---------------------------------------------------------------------------
# gauge registry
# ---------------------------------------------------------------------------
class BranchDomainError(DomainError):
    """Requested gauge branch is not real on the requested parameter range."""


def _zeros(x):
    return np.zeros_like(_as_float_array(x))


def _closed(name, value, d1, d2, domain=(-math.inf, math.inf), singularities=()):
    def ev(x):
        return FnEval(value(x), d1(x), d2(x))

    return GaugeFn(name, ev, domain, tuple(singularities))


def _log_gauge(name, L, dL, d2L, domain, singularities=()):
    """h = exp(L) with h' = h L', h'' = h (L'' + L'^2)."""

    def ev(x):
        h = np.exp(L(x))
        d = dL(x)
        return FnEval(h, h * d, h * (d2L(x) + d * d))

    return GaugeFn(name, ev, domain, tuple(singularities))


def _from_special(name, fn, domain, singularities=()):
    def ev(x):
        r = fn(x)
        if r.d2 is None:
            raise ParameterError(f"gauge {name} needs a second derivative")
        return r

    return GaugeFn(name, ev, domain, tuple(singularities))


def _product_gauge(name, u, v, domain, singularities=()):
    def ev(x):
        a, b = u(x), v(x)
        return FnEval(a.value * b.value, a.d1 * b.value + a.value * b.d1,
                      a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2)

    return GaugeFn(name, ev, domain, tuple(singularities))


def _power_coeffs(m: float):
    """x^m, m x^{m-1}, m(m-1) x^{m-2} with exact zeros for vanishing coefficients."""

    def pw(x, e, c):
        if c == 0.0:
            return _zeros(x)
        return c * np.power(x, e)

    return (lambda x: pw(x, m, 1.0), lambda x: pw(x, m - 1.0, m), lambda x: pw(x, m - 2.0, m * (m - 1.0)))


def _monomial_domain(m: float):
    if m == math.floor(m):
        return ((-math.inf, math.inf), ()) if m >= 0 else ((-math.inf, math.inf), (0.0,))
    return (0.0, math.inf), (0.0,)


def g_const(c: float = 1.0) -> GaugeFn:
    return _closed(f"const({c!r})", lambda x: c + 0.0 * _as_float_array(x), _zeros, _zeros)


def g_monomial(m: float) -> GaugeFn:
    v, d1, d2 = _power_coeffs(float(m))
    dom, sing = _monomial_domain(float(m))
    return _closed(f"monomial({m!r})", v, d1, d2, dom, sing)


def _monomial_trig(m: float, kind: str) -> GaugeFn:
    """x^m sin x or x^m cos x (the trigonometric factor t obeys t'' = -t)."""
    m = float(m)
    v, d1, d2 = _power_coeffs(m)
    if kind == "sin":
        t, dt = np.sin, np.cos
    else:
        t, dt = np.cos, lambda x: -np.sin(x)  # noqa: E731

    def ev(x):
        a0, a1, a2 = v(x), d1(x), d2(x)
        t0, t1 = t(x), dt(x)
        return FnEval(a0 * t0, a1 * t0 + a0 * t1, a2 * t0 + 2.0 * a1 * t1 - a0 * t0)

    dom, sing = _monomial_domain(m)
    return GaugeFn(f"monomial_{kind}({m!r})", ev, dom, sing)


def g_monomial_log(n: float) -> GaugeFn:
    """x^n ln x."""
    n = float(n)
    v, d1, d2 = _power_coeffs(n)

    def ev(x):
        L = np.log(x)
        xm1 = np.power(x, n - 1.0)
        xm2 = np.power(x, n - 2.0)
        return FnEval(v(x) * L, d1(x) * L + xm1, d2(x) * L + (2.0 * n - 1.0) * xm2)

    return GaugeFn(f"monomial_log({n!r})", ev, (0.0, math.inf), (0.0,))


def g_exp(s: float) -> GaugeFn:
    s = float(s)
    return _closed(f"exp({s!r})", lambda x: np.exp(s * x), lambda x: s * np.exp(s * x),
                   lambda x: s * s * np.exp(s * x))


def g_sin_shift(phase: float, omega: float = 1.0) -> GaugeFn:
    ph, w = float(phase), float(omega)
    return _closed(f"sin_shift({ph!r},{w!r})", lambda x: np.sin(w * x + ph), lambda x: w * np.cos(w * x + ph),
                   lambda x: -w * w * np.sin(w * x + ph))


def _scorer(family: str) -> GaugeFn:
    return _from_special(f"scorer_{family.lower()}", lambda x: specfun.eval_airy_scorer(family, x), (-15.0, 15.0))


def g_lommel(m: float, n: float) -> GaugeFn:
    m, n = float(m), float(n)
    return _from_special(f"lommel({m!r},{n!r})", lambda x: specfun.eval_struve_lommel("LommelS", m, n, x),
                         (0.0, math.inf), (0.0,))


def _kp2(k):
    return (1.0 - k) * (1.0 + k)


def _legendre_kind(which: float) -> str:
    if which not in (0.0, 1.0):
        raise ParameterError("Legendre gauge selector must be 0 (P) or 1 (Q)")
    return "P" if which == 0.0 else "Q"


def _golden_legendre(order: float, which: float, with_kprime: bool) -> GaugeFn:
    kind = _legendre_kind(float(which))
    nu = PHI - 1.0

    def base(x):
        return specfun.eval_legendre(kind, nu, order, x)

    if not with_kprime:
        return _from_special(f"{kind}^{order:g}_(phi-1)", base, (-1.0, 1.0), (-1.0, 1.0))
    kp = lambda x: FnEval(np.sqrt(_kp2(x)), -x / np.sqrt(_kp2(x)), -1.0 / _kp2(x) ** 1.5)  # noqa: E731
    return _product_gauge(f"k'{kind}^{order:g}_(phi-1)", kp, base, (-1.0, 1.0), (-1.0, 1.0))


def _branch_power(a: float, b: float, name: str) -> GaugeFn:
    """e^{a k^2} (3k^2 - 1)^b, real for k > 1/sqrt(3)."""

    def L(k):
        c = 3.0 * k * k - 1.0
        if np.any(c <= 0.0):
            raise BranchDomainError(f"gauge {name} requires k > 1/sqrt(3)")
        return a * k * k + b * np.log(c)

    dL = lambda k: 2.0 * a * k + 6.0 * b * k / (3.0 * k * k - 1.0)  # noqa: E731
    d2L = lambda k: 2.0 * a - 6.0 * b * (3.0 * k * k + 1.0) / (3.0 * k * k - 1.0) ** 2  # noqa: E731
    return _log_gauge(name, L, dL, d2L, (INV_SQRT3, 1.0), (INV_SQRT3, 1.0))


def _k_log_gauge(name, a: float, s: float, t: float) -> GaugeFn:
    """e^{a k^2} k^s (1 - k^2)^t on 0 < k < 1."""
    L = lambda k: a * k * k + s * np.log(k) + t * np.log(_kp2(k))  # noqa: E731
    dL = lambda k: 2.0 * a * k + s / k - 2.0 * t * k / _kp2(k)  # noqa: E731
    d2L = lambda k: 2.0 * a - s / (k * k) - 2.0 * t * (1.0 + k * k) / _kp2(k) ** 2  # noqa: E731
    return _log_gauge(name, L, dL, d2L, (0.0, 1.0), (0.0, 1.0))


def _eq104(mu: float) -> GaugeFn:
    mu = float(mu)
    return _log_gauge(
        f"eq104({mu!r})",
        lambda x: mu * (np.log1p(-x) - np.log1p(x)),
        lambda x: -2.0 * mu / (1.0 - x * x),
        lambda x: -4.0 * mu * x / (1.0 - x * x) ** 2,
        (-1.0, 1.0), (-1.0, 1.0),
    )


def _eq111(nu: float, mu: float) -> GaugeFn:
    nu, mu = float(nu), float(mu)
    c = 0.5 * nu * (nu + 1.0)
    v, d1, d2 = _power_coeffs(c)
    shift = lambda f: (lambda x: f(x - mu))  # noqa: E731
    if c == math.floor(c):
        dom = (-1.0, 1.0)
    else:
        if mu >= 1.0:
            raise BranchDomainError(f"(x - {mu})^{c} is not real on (-1, 1)")
        dom = (max(mu, -1.0), 1.0)
    return _closed(f"eq111({nu!r},{mu!r})", shift(v), shift(d1), shift(d2), dom, (-1.0, 1.0))


def _eq140(a: float, b: float, c: float) -> GaugeFn:
    a, b, c = float(a), float(b), float(c)
    s = a + b + 1.0
    if s == 0.0:
        raise ParameterError("eq140 gauge requires a + b + 1 != 0")
    e = -a * b / s
    L = lambda x: c - s * x  # noqa: E731
    upper = c / s if s > 0 else math.inf
    lower = 0.0 if s > 0 else max(0.0, c / s)
    return _closed(f"eq140({a!r},{b!r},{c!r})", lambda x: L(x) ** e, lambda x: -s * e * L(x) ** (e - 1.0),
                   lambda x: s * s * e * (e - 1.0) * L(x) ** (e - 2.0), (lower, min(upper, 1.0)), (0.0, 1.0))


def _eq143(a: float, b: float, c: float, d: float) -> GaugeFn:
    a, b, c, d = float(a), float(b), float(c), float(d)
    return _from_special(f"eq143({a!r},{b!r},{c!r},{d!r})",
                         lambda x: specfun.eval_hyp2f1(a + d, b - d, c, x), (0.0, 1.0), (0.0, 1.0))


def _eq189(c1: float = 1.0, c2: float = 0.0) -> GaugeFn:
    c1, c2 = float(c1), float(c2)

    def ev(k):
        kk = specfun.eval_bessel("K", 0, k) if c1 else None
        ii = specfun.eval_bessel("I", 0, k) if c2 else None
        parts = [(c1, kk), (c2, ii)]
        val = sum(c * r.value for c, r in parts if r is not None)
        d1 = sum(c * r.d1 for c, r in parts if r is not None)
        d2 = sum(c * r.d2 for c, r in parts if r is not None)
        return FnEval(val, d1, d2)

    return GaugeFn(f"eq189({c1!r},{c2!r})", ev, (0.0, math.inf), (0.0,))


def _eq218(which: float = 0.0) -> GaugeFn:
    fam = "J" if _legendre_kind(float(which)) == "P" else "Y"
    return _from_special(f"eq218[{fam}0]", lambda k: specfun.eval_bessel(fam, 0, k), (0.0, math.inf), (0.0,))


def _eq219(which: float = 0.0) -> GaugeFn:
    return g_sin_shift(0.0 if float(which) == 0.0 else 0.5 * math.pi)


_LN_K = lambda: _closed("ln(k)", np.log, lambda k: 1.0 / k, lambda k: -1.0 / (k * k), (0.0, math.inf), (0.0,))  # noqa: E731

GAUGES: Mapping[str, Callable[..., GaugeFn]] = {
    # elementary families
    "const": g_const,
    "monomial": g_monomial,
    "monomial_sin": lambda m: _monomial_trig(m, "sin"),
    "monomial_cos": lambda m: _monomial_trig(m, "cos"),
    "monomial_log": g_monomial_log,
    "exp": g_exp,
    "sin_shift": g_sin_shift,
    "scorer_gi": lambda: _scorer("Gi"),
    "scorer_hi": lambda: _scorer("Hi"),
    "lommel": g_lommel,
    # Legendre fragmentary-equation solutions
    "eq35": lambda nu: g_const(1.0 / (float(nu) * (float(nu) + 1.0))),
    "eq103": lambda: g_const(1.0),
    "eq104": _eq104,
    "eq111": _eq111,
    # hypergeometric
    "eq140": _eq140,
    "eq143": _eq143,
    # elliptic K equation
    "eq166": lambda: _closed("ln(k/k')", lambda k: np.log(k) - 0.5 * np.log(_kp2(k)),
                             lambda k: 1.0 / (k * _kp2(k)),
                             lambda k: (3.0 * k * k - 1.0) / (k * _kp2(k)) ** 2, (0.0, 1.0), (0.0, 1.0)),
    "eq167": _LN_K,
    "eq168": lambda: _closed("arctanh(k)", np.arctanh, lambda k: 1.0 / _kp2(k),
                             lambda k: 2.0 * k / _kp2(k) ** 2, (-1.0, 1.0), (-1.0, 1.0)),
    "eq170": lambda: _branch_power(0.0, -1.0 / 6.0, "eq170"),
    "eq171": lambda: _k_log_gauge("1/k'", 0.0, 0.0, -0.5),
    "eq172": lambda: _k_log_gauge("1/sqrt(k)", 0.0, -0.5, 0.0),
    "eq189": _eq189,
    "eq190": lambda sign=1.0: g_exp(1.0 if float(sign) >= 0 else -1.0),
    "eq191": lambda: _branch_power(1.0 / 6.0, -1.0 / 9.0, "eq191"),
    "eq192": lambda: _k_log_gauge("e^{k^2/4}/sqrt(k)", 0.25, -0.5, 0.0),
    "eq193": lambda: _k_log_gauge("e^{k^2/2}", 0.5, 0.0, 0.0),
    "eq194": lambda: _branch_power(-1.0 / 6.0, -1.0 / 18.0, "eq194"),
    "eq195": lambda: _k_log_gauge("e^{-k^2/4}", -0.25, 0.0, 0.0),
    "eq196": lambda: _k_log_gauge("e^{-k^2/2}/k'", -0.5, 0.0, -0.5),
    # elliptic E equation
    "eq216": _LN_K,
    "eq217": lambda which=0.0: _golden_legendre(1.0, which, with_kprime=True),
    "eq218": _eq218,
    "eq219": _eq219,
    "eq220": lambda: _k_log_gauge("k'", 0.0, 0.0, 0.5),
    "eq221": lambda: _k_log_gauge("k' e^{k^2/2}", 0.5, 0.0, 0.5),
    "eq222": lambda: _k_log_gauge("e^{-k^2/2}", -0.5, 0.0, 0.0),
    # gauged E equation (sqrt(k) form)
    "eq233": lambda which=0.0: _golden_legendre(1.0, which, with_kprime=False),
    "eq234": lambda which=0.0: _golden_legendre(0.0, which, with_kprime=False),
}


def gauge_ids() -> list[str]:
    return sorted(GAUGES)


def get_gauge(id: str, params: Sequence[float] = ()) -> GaugeFn:
    """Build a registered gauge function with analytic h' and h''."""
    try:
        builder = GAUGES[id]
    except KeyError:
        raise UnknownIdError(f"unknown gauge id {id!r}") from None
    try:
        return builder(*[float(p) for p in params])
    except TypeError as exc:
        raise ParameterError(f"wrong parameters for gauge {id!r}: {exc}") from None


__all__ = [
    "BranchDomainError",
    "GAUGES",
    "GaugeFn",
    "Identity",
    "PHI",
    "ZERO_IDENTITY",
    "as_gauge",
    "check_conjugate",
    "conjugate_identity",
    "energy_identity",
    "factor_closures",
    "gauge_ids",
    "gauge_transform",
    "get_gauge",
    "make_identity",
    "riccati_q",
    "second_integral",
    "transform_solution",
    "wronskian_check",
]
