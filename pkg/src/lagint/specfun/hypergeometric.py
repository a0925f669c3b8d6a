"""Gauss hypergeometric function 2F1(a, b; c; x) for real -1 < x < 1.

Evaluation: direct Maclaurin series on [0, 1/2]; the Pfaff transformation
2F1(a,b;c;x) = (1-x)^{-a} 2F1(a, c-b; c; x/(x-1)) for x < 0; and the
1 - x connection formula on (1/2, 1) when c - a - b is not within
DEGENERATE_GAP of an integer (the logarithmic case falls back to the slower
but still convergent direct series).  Derivatives use
d/dx 2F1(a,b;c;x) = (ab/c) 2F1(a+1, b+1; c+1; x).
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import ConvergenceError, PoleError
from ._core import FnEval, as_array, kernels, pack
from ._gamma import gamma, is_nonpositive_integer, rgamma

DEGENERATE_GAP = 0.05


def _terminating(a: float, b: float) -> bool:
    return is_nonpositive_integer(a) or is_nonpositive_integer(b)


def _series(a, b, c, x: np.ndarray) -> np.ndarray:
    return kernels.hyp2f1_series(float(a), float(b), float(c), np.ascontiguousarray(x))


def _near_integer(v: float) -> bool:
    return abs(v - round(v)) < DEGENERATE_GAP


def hyp2f1_values(a: float, b: float, c: float, x: np.ndarray) -> np.ndarray:
    """2F1 values on a flat float64 array with -1 < x < 1 (no derivative)."""
    if is_nonpositive_integer(c):
        raise PoleError(f"2F1 has a pole for c = {c!r}")
    if np.any(np.abs(x) >= 1.0):
        raise ConvergenceError("2F1 series requires |x| < 1")
    out = np.empty_like(x)
    if _terminating(a, b):
        return _series(a, b, c, x)

    neg = x < 0.0
    if neg.any():
        xn = x[neg]
        out[neg] = (1.0 - xn) ** (-a) * _series(a, c - b, c, xn / (xn - 1.0))

    s = c - a - b
    use_direct = ~neg & ((x <= 0.5) | _near_integer(s))
    if use_direct.any():
        out[use_direct] = _series(a, b, c, x[use_direct])

    far = ~neg & ~use_direct
    if far.any():
        y = 1.0 - x[far]
        g_c = gamma(c)
        coef1 = g_c * gamma(s) * rgamma(c - a) * rgamma(c - b)
        coef2 = g_c * gamma(-s) * rgamma(a) * rgamma(b)
        term1 = coef1 * _series(a, b, 1.0 - s, y) if coef1 != 0.0 else 0.0
        term2 = coef2 * y**s * _series(c - a, c - b, 1.0 + s, y) if coef2 != 0.0 else 0.0
        out[far] = term1 + term2
    return out


def eval_hyp2f1(a, b, c, x) -> FnEval:
    """Evaluate 2F1(a, b; c; x) with first and second x-derivatives."""
    a, b, c = float(a), float(b), float(c)
    if is_nonpositive_integer(c):
        raise PoleError(f"2F1 has a pole for c = {c!r}")
    xs, shape, scalar = as_array(x)
    if np.any(np.abs(xs) >= 1.0):
        raise ConvergenceError("2F1 series requires |x| < 1")
    value = hyp2f1_values(a, b, c, xs)
    d1 = (a * b / c) * hyp2f1_values(a + 1.0, b + 1.0, c + 1.0, xs)
    d2 = (a * (a + 1.0) * b * (b + 1.0) / (c * (c + 1.0))) * hyp2f1_values(a + 2.0, b + 2.0, c + 2.0, xs)
    return pack(value, d1, d2, shape, scalar)


def hyp2f1_regularized(a: float, b: float, c: float, x: np.ndarray) -> np.ndarray:
    """2F1(a,b;c;x)/Gamma(c); finite at nonpositive-integer c via the limit formula."""
    if not is_nonpositive_integer(c):
        return hyp2f1_values(a, b, c, x) * rgamma(c)
    # lim F/Gamma(c) = (a)_{n+1}(b)_{n+1}/(n+1)! x^{n+1} 2F1(a+n+1, b+n+1; n+2; x), c = -n
    n = int(-c)
    poch = 1.0
    for j in range(n + 1):
        poch *= (a + j) * (b + j)
    return poch / math.factorial(n + 1) * x ** (n + 1) * hyp2f1_values(a + n + 1, b + n + 1, n + 2.0, x)
