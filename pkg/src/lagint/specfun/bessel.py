"""Integer-order Bessel functions J_n, Y_n, I_n, K_n with analytic derivatives.

Algorithms: J by Miller backward recurrence normalized with the Neumann sum
J0 + 2*sum J_2k = 1; Y0, Y1 by Neumann series in J_k and upward recurrence;
I by its power series; K0, K1 by a trapezoid rule on
K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt and upward recurrence.
Derivatives use Z_n' = (n/x) Z_n - Z_{n+1} (I_n' = (n/x) I_n + I_{n+1});
second derivatives come from the Bessel equation itself.
"""

from __future__ import annotations

import numpy as np

from ..errors import DomainError, UnsupportedOrderError
from ._core import FnEval, as_array, as_integer_order, kernels, pack

MAX_ORDER = 20

_ALIASES = {
    "J": "J", "BESSELJ": "J",
    "Y": "Y", "BESSELY": "Y",
    "I": "I", "BESSELI": "I",
    "K": "K", "BESSELK": "K",
}


def _family(name: str) -> str:
    try:
        return _ALIASES[name.upper()]
    except KeyError:
        raise DomainError(f"unknown Bessel family {name!r}") from None


def eval_bessel(family: str, order, x) -> FnEval:
    """Evaluate J_n, Y_n, I_n or K_n (integer |n| <= 20) and derivatives at x."""
    fam = _family(family)
    n = as_integer_order(order, MAX_ORDER, UnsupportedOrderError)
    xs, shape, scalar = as_array(x)
    if fam in "YK":
        if np.any(xs <= 0.0):
            raise DomainError(f"Bessel {fam} requires x > 0")
    elif np.any(xs < 0.0):
        raise DomainError(f"Bessel {fam} requires x >= 0")

    m = abs(n)
    if fam == "J":
        v, v1 = kernels.j_pair(m, xs)
        sign_d1 = -1.0
    elif fam == "Y":
        v, v1 = kernels.y_pair(m, xs)
        sign_d1 = -1.0
    elif fam == "I":
        v, v1 = kernels.i_pair(m, xs)
        sign_d1 = 1.0
    else:
        v, v1 = kernels.k_pair(m, xs)
        sign_d1 = -1.0

    with np.errstate(divide="ignore", invalid="ignore"):
        nx = np.where(xs > 0.0, m / np.where(xs > 0.0, xs, 1.0), 0.0)
        d1 = nx * v + sign_d1 * v1
        # Bessel ODE: y'' = -y'/x - (s - n^2/x^2) y with s = +1 (J, Y) or -1 (I, K)
        s = 1.0 if fam in "JY" else -1.0
        d2 = -d1 / xs - (s - (m / xs) ** 2) * v
    zero = xs == 0.0
    if np.any(zero):
        # Limits at the origin (J and I only): J_n'(0) = I_n'(0) = 1/2 for n = 1.
        d1 = np.where(zero, 0.5 if m == 1 else 0.0, d1)
        lim2 = {0: -0.5 * s, 2: 0.25}.get(m, 0.0)
        d2 = np.where(zero, lim2, d2)

    # Negative orders: J_{-n} = (-1)^n J_n, Y likewise; I_{-n} = I_n, K_{-n} = K_n.
    if n < 0 and fam in "JY" and m % 2 == 1:
        v, d1, d2 = -v, -d1, -d2
    return pack(v, d1, d2, shape, scalar)
