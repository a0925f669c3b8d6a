"""Struve H_nu and Lommel s_{m,n} by power series with termwise derivatives.

H_nu(x) = sum_k (-1)^k (x/2)^{2k+nu+1} / (Gamma(k+3/2) Gamma(k+nu+3/2))
s_{m,n}(x) = x^{m+1}/((m+1)^2-n^2) 1F2(1; (m-n+3)/2, (m+n+3)/2; -x^2/4)
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import DomainError, ParameterError
from ._core import FnEval, as_array, kernels, pack
from ._gamma import rgamma

_FAMILIES = {"STRUVEH": "StruveH", "H": "StruveH", "LOMMELS": "LommelS", "S": "LommelS"}


def lommel_degenerate(m: float, n: float) -> bool:
    """True when a denominator of the Lommel s_{m,n} series vanishes."""
    for v in (m - n, m + n):
        if v == -1.0:
            return True
        if v <= -3.0 and v == math.floor(v) and int(v) % 2 != 0:
            return True
    return False


def eval_struve_lommel(family: str, m, n, x) -> FnEval:
    """Evaluate H_n(x) (family StruveH; m is ignored) or s_{m,n}(x) (LommelS)."""
    try:
        fam = _FAMILIES[family.upper()]
    except KeyError:
        raise DomainError(f"unknown Struve/Lommel family {family!r}") from None
    m, n = float(m), float(n)
    xs, shape, scalar = as_array(x)
    if np.any(xs <= 0.0):
        raise DomainError(f"{fam} requires x > 0")
    if fam == "StruveH":
        if n <= -1.5:
            raise ParameterError("Struve series implemented for order > -3/2")
        c0 = rgamma(1.5) * rgamma(n + 1.5)
        rows = kernels.struve_series(n, c0, xs)
    else:
        if lommel_degenerate(m, n):
            raise ParameterError(f"Lommel s_{{{m:g},{n:g}}} series has a vanishing denominator")
        rows = kernels.lommel_series(m, n, xs)
    return pack(rows[0], rows[1], rows[2], shape, scalar)
