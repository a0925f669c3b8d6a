"""Airy functions Ai, Bi and Scorer functions Gi, Hi on |x| <= 15.

Ai, Bi and Hi are obtained by Taylor-series propagation of y'' = x y + F
from Maclaurin seeds at x = 0 (seed values from the Gamma function).  Ai for
x > 1 uses Ai = sqrt(x/3) K_{1/3}(zeta) / pi, zeta = 2 x^{3/2} / 3, where
forward propagation of a decaying solution would be unstable.  Gi is seeded
from Gi(0) = Bi(0)/3 and propagated for x <= 1; for x > 1 it is evaluated
from the rotated-contour integral
Gi(x) = (1/pi) int_0^inf exp(-s^3/3 - x s/2) sin(sqrt(3) x s/2 + pi/6) ds.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import DomainError
from ._core import GL_NODES, GL_WEIGHTS, FnEval, as_array, kernels, pack

X_MAX = 15.0
_STEP = 0.25

_G13 = math.gamma(1.0 / 3.0)
_G23 = math.gamma(2.0 / 3.0)
AI0 = 1.0 / (3.0 ** (2.0 / 3.0) * _G23)
AIP0 = -1.0 / (3.0 ** (1.0 / 3.0) * _G13)
BI0 = 1.0 / (3.0 ** (1.0 / 6.0) * _G23)
BIP0 = 3.0 ** (1.0 / 6.0) / _G13

# (seed value, seed slope, forcing F in y'' = x y + F)
_SEEDS = {
    "Ai": (AI0, AIP0, 0.0),
    "Bi": (BI0, BIP0, 0.0),
    "Gi": (BI0 / 3.0, BIP0 / 3.0, -1.0 / math.pi),
    "Hi": (2.0 * BI0 / 3.0, 2.0 * BIP0 / 3.0, 1.0 / math.pi),
}

_ALIASES = {"AI": "Ai", "AIRYAI": "Ai", "BI": "Bi", "AIRYBI": "Bi",
            "GI": "Gi", "SCORERGI": "Gi", "HI": "Hi", "SCORERHI": "Hi"}


def _family(name: str) -> str:
    try:
        return _ALIASES[name.upper()]
    except KeyError:
        raise DomainError(f"unknown Airy/Scorer family {name!r}") from None


def _ai_large(x: np.ndarray):
    zeta = (2.0 / 3.0) * x**1.5
    k13 = kernels.k_real(1.0 / 3.0, zeta)
    k23 = kernels.k_real(2.0 / 3.0, zeta)
    return np.sqrt(x / 3.0) * k13 / math.pi, -x * k23 / (math.pi * math.sqrt(3.0))


def eval_airy_scorer(family: str, x) -> FnEval:
    """Evaluate Ai, Bi, Gi or Hi with first and second derivatives at x."""
    fam = _family(family)
    xs, shape, scalar = as_array(x)
    if np.any(np.abs(xs) > X_MAX):
        raise DomainError(f"Airy/Scorer evaluators require |x| <= {X_MAX}")
    y0, dy0, forcing = _SEEDS[fam]
    value = np.empty_like(xs)
    d1 = np.empty_like(xs)

    far = xs > 1.0 if fam in ("Ai", "Gi") else np.zeros(xs.shape, dtype=bool)
    near = ~far
    if near.any():
        v, dv = kernels.airy_propagate(np.ascontiguousarray(xs[near]), y0, dy0, forcing, _STEP)
        value[near], d1[near] = v, dv
    if far.any():
        xf = np.ascontiguousarray(xs[far])
        if fam == "Ai":
            v, dv = _ai_large(xf)
        else:
            v, dv = kernels.gi_integral(xf, GL_NODES, GL_WEIGHTS)
        value[far], d1[far] = v, dv
    d2 = xs * value + forcing
    return pack(value, d1, d2, shape, scalar)
