"""Complete elliptic integrals K(k), E(k) of modulus k.

Values by the arithmetic-geometric mean; first derivatives from
dK/dk = E/(k k'^2) - K/k and dE/dk = (E - K)/k, switching to the
Maclaurin series in k^2 for small k so the k = 0 limit is exact.
Second derivatives from the Legendre differential equations for K and E.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import DomainError
from ._core import FnEval, as_array, kernels, pack

SERIES_CUTOFF = 0.2


def _raw(ks: np.ndarray):
    """K, E, K', E', K'', E'' arrays for 0 <= k < 1."""
    out = np.empty((6, ks.size))
    small = ks < SERIES_CUTOFF
    if small.any():
        out[:, small] = kernels.elliptic_series(np.ascontiguousarray(ks[small]))
    big = ~small
    if big.any():
        k = np.ascontiguousarray(ks[big])
        kk, ee = kernels.elliptic_agm(k)
        kp2 = (1.0 - k) * (1.0 + k)
        dk = ee / (k * kp2) - kk / k
        de = (ee - kk) / k
        # k k'^2 K'' + (1 - 3k^2) K' - k K = 0 ;  k k'^2 E'' + k'^2 E' + k E = 0
        d2k = (k * kk - (1.0 - 3.0 * k * k) * dk) / (k * kp2)
        d2e = -de / k - ee / kp2
        out[:, big] = np.stack([kk, ee, dk, de, d2k, d2e])
    return out


def eval_elliptic(kind: str, k) -> FnEval:
    """Evaluate K(k) (0 <= k < 1) or E(k) (0 <= k <= 1) with derivatives."""
    name = kind.upper().replace("ELLIPTIC", "").strip("_")
    if name not in ("K", "E"):
        raise DomainError(f"unknown elliptic integral kind {kind!r}")
    ks, shape, scalar = as_array(k)
    if np.any(ks < 0.0):
        raise DomainError("elliptic modulus must be nonnegative")
    if name == "K" and np.any(ks >= 1.0):
        raise DomainError("K(k) requires k < 1")
    if np.any(ks > 1.0):
        raise DomainError("E(k) requires k <= 1")

    one = ks == 1.0
    inner = ~one
    raw = np.empty((6, ks.size))
    if inner.any():
        raw[:, inner] = _raw(np.ascontiguousarray(ks[inner]))
    if one.any():
        # E(1) = 1; its derivatives diverge logarithmically at k = 1.
        raw[:, one] = np.array([[math.inf], [1.0], [math.inf], [-math.inf], [math.inf], [-math.inf]])
    row = 0 if name == "K" else 1
    return pack(raw[row], raw[row + 2], raw[row + 4], shape, scalar)
