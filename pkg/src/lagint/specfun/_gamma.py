"""Scalar Gamma-family helpers (Python floats).

``math.gamma`` supplies the Lanczos-class Gamma value; this module adds the
reciprocal Gamma (entire, zero at the poles) and the digamma function needed
for the Gamma derivative.
"""

from __future__ import annotations

import math

from ..errors import PoleError

EULER_GAMMA = 0.57721566490153286061

# Bernoulli numbers B_2k / (2k) for the digamma asymptotic expansion.
_DIGAMMA_ASYMPTOTIC = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)


def is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def gamma(x: float) -> float:
    if is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at x = {x!r}")
    return math.gamma(x)


def rgamma(x: float) -> float:
    """1/Gamma(x); exactly zero at the poles, zero on overflow."""
    if is_nonpositive_integer(x):
        return 0.0
    try:
        return 1.0 / math.gamma(x)
    except OverflowError:
        return 0.0


def digamma(x: float) -> float:
    if is_nonpositive_integer(x):
        raise PoleError(f"digamma has a pole at x = {x!r}")
    if x < 0.5:
        # Reflection: psi(1 - x) - psi(x) = pi * cot(pi x)
        return digamma(1.0 - x) - math.pi / math.tan(math.pi * x)
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for coef in _DIGAMMA_ASYMPTOTIC:
        series += coef * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - series
