"""Legendre functions of real degree on the cut -1 < x < 1 (Ferrers functions).

Convention: Ferrers functions with the Condon-Shortley phase,

    P_nu^m(x) = (-1)^m (1 - x^2)^{m/2} d^m P_nu / dx^m,   likewise for Q_nu^m,

i.e. the functions "on the cut" of DLMF chapter 14.  For degree nu the base
functions are built from the even/odd hypergeometric solutions about x = 0,

    w1 = 2F1(-nu/2, (nu+1)/2; 1/2; x^2),   w2 = x 2F1((1-nu)/2, (nu+2)/2; 3/2; x^2),

scaled by the exact values P_nu(0), P_nu'(0), Q_nu(0), Q_nu'(0).  Higher
derivatives follow from differentiating the Legendre equation, which yields
the integer orders m = 1, 2.  Non-integer (and negative) orders of P use
P_nu^mu(x) = ((1+x)/(1-x))^{mu/2} 2F1(nu+1, -nu; 1-mu; (1-x)/2) / Gamma(1-mu);
Q at non-integer order is outside the implemented convention.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import ConventionError, DomainError, ParameterError, UnsupportedOrderError
from ._core import FnEval, as_array, pack
from ._gamma import gamma, is_nonpositive_integer, rgamma
from .hypergeometric import hyp2f1_regularized, hyp2f1_values

MAX_ORDER = 2.0
_SQRT_PI = math.sqrt(math.pi)

_KINDS = {"P": "P", "Q": "Q", "PMU": "P", "QMU": "Q", "Pμ": "P", "Qμ": "Q",
          "LEGENDREP": "P", "LEGENDREQ": "Q", "ASSOCLEGENDREP": "P", "ASSOCLEGENDREQ": "Q"}


def _kind(kind: str) -> str:
    key = kind if kind in _KINDS else kind.upper()
    try:
        return _KINDS[key]
    except KeyError:
        raise DomainError(f"unknown Legendre kind {kind!r}") from None


def _seeds(kind: str, nu: float) -> tuple[float, float]:
    """Value and slope at x = 0 (DLMF 14.5.1-14.5.2)."""
    if kind == "P":
        v0 = _SQRT_PI * rgamma(0.5 * nu + 1.0) * rgamma(0.5 - 0.5 * nu)
        s0 = -2.0 * _SQRT_PI * rgamma(0.5 * nu + 0.5) * rgamma(-0.5 * nu)
        return v0, s0
    if is_nonpositive_integer(nu + 1.0):
        raise ParameterError(f"Q_nu is undefined for negative integer degree {nu!r}")
    half = 0.5 * math.pi * nu
    v0 = -0.5 * _SQRT_PI * math.sin(half) * _gamma_ratio(0.5 * nu + 0.5, 0.5 * nu + 1.0)
    s0 = _SQRT_PI * math.cos(half) * _gamma_ratio(0.5 * nu + 1.0, 0.5 * nu + 0.5)
    return v0, s0


def _gamma_ratio(top: float, bottom: float) -> float:
    """Gamma(top)/Gamma(bottom) with a zero numerator pole handled as 0 * inf guards."""
    if is_nonpositive_integer(top):
        return 0.0 if is_nonpositive_integer(bottom) else math.inf
    return gamma(top) * rgamma(bottom)


def _base_derivatives(kind: str, nu: float, x: np.ndarray, order: int) -> list[np.ndarray]:
    """[y, y', ..., y^(order)] for the degree-nu Legendre function (order >= 1)."""
    v0, s0 = _seeds(kind, nu)
    t = x * x
    a1, b1, c1 = -0.5 * nu, 0.5 * nu + 0.5, 0.5
    a2, b2, c2 = 0.5 - 0.5 * nu, 0.5 * nu + 1.0, 1.5
    f1 = hyp2f1_values(a1, b1, c1, t)
    f1d = hyp2f1_values(a1 + 1.0, b1 + 1.0, c1 + 1.0, t)
    f2 = hyp2f1_values(a2, b2, c2, t)
    f2d = hyp2f1_values(a2 + 1.0, b2 + 1.0, c2 + 1.0, t)
    w1 = f1
    w1d = 2.0 * x * (a1 * b1 / c1) * f1d
    w2 = x * f2
    w2d = f2 + 2.0 * t * (a2 * b2 / c2) * f2d
    ders = [v0 * w1 + s0 * w2, v0 * w1d + s0 * w2d]
    lam = nu * (nu + 1.0)
    one_m = 1.0 - t
    # (1-x^2) y^(k+2) = 2(k+1) x y^(k+1) - (lam - k(k+1)) y^(k)
    for k in range(order - 1):
        ders.append((2.0 * (k + 1) * x * ders[k + 1] - (lam - k * (k + 1)) * ders[k]) / one_m)
    return ders


def _second_from_ode(nu: float, mu: float, x, y, dy):
    one_m = 1.0 - x * x
    return (2.0 * x * dy - (nu * (nu + 1.0) - mu * mu / one_m) * y) / one_m


def _integer_order(kind: str, nu: float, m: int, x: np.ndarray):
    ders = _base_derivatives(kind, nu, x, m + 1)
    if m == 0:
        y, dy = ders[0], ders[1]
    else:
        one_m = 1.0 - x * x
        w = np.sqrt(one_m)
        sign = -1.0 if m % 2 else 1.0
        wm = w**m
        y = sign * wm * ders[m]
        dy = sign * (wm * ders[m + 1] - m * x * wm / one_m * ders[m])
    return y, dy


def _p_general(nu: float, mu: float, x: np.ndarray):
    u = 0.5 * (1.0 - x)
    r = ((1.0 + x) / (1.0 - x)) ** (0.5 * mu)
    a, b, c = nu + 1.0, -nu, 1.0 - mu
    f = hyp2f1_regularized(a, b, c, u)
    fd = a * b * hyp2f1_regularized(a + 1.0, b + 1.0, c + 1.0, u)
    y = r * f
    dy = r * (mu / (1.0 - x * x) * f - 0.5 * fd)
    return y, dy


def eval_legendre(kind: str, degree, order, x) -> FnEval:
    """Evaluate the Ferrers function P_nu^mu or Q_nu^mu and derivatives at x.

    ``kind`` is one of P, Q, Pmu, Qmu (the associated kinds are aliases; the
    order argument selects the function).  Supported orders: |mu| <= 2, all
    real mu for P, integer mu for Q.
    """
    fam = _kind(kind)
    nu = float(degree)
    mu = float(order)
    if not math.isfinite(nu) or not math.isfinite(mu):
        raise ParameterError("degree and order must be finite")
    if abs(mu) > MAX_ORDER:
        raise UnsupportedOrderError(f"|order| must be <= {MAX_ORDER:g}")
    xs, shape, scalar = as_array(x)
    if np.any(np.abs(xs) >= 1.0):
        raise DomainError("Legendre functions on the cut require -1 < x < 1")

    integer = mu == math.floor(mu)
    if integer and mu >= 0:
        y, dy = _integer_order(fam, nu, int(mu), xs)
    elif fam == "P":
        y, dy = _p_general(nu, mu, xs)
    elif integer:
        m = int(-mu)
        num = _gamma_ratio(nu - m + 1.0, nu + m + 1.0)
        if not math.isfinite(num):
            raise ParameterError(f"Q_nu^{{-{m}}} undefined for degree {nu!r}")
        y, dy = _integer_order(fam, nu, m, xs)
        scale = (-1.0) ** m * num
        y, dy = scale * y, scale * dy
    else:
        raise ConventionError("Q at non-integer order is not implemented (Ferrers convention)")
    d2 = _second_from_ode(nu, mu, xs, y, dy)
    return pack(y, dy, d2, shape, scalar)
