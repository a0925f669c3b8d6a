"""Gamma function with its logarithmic-derivative based first derivative."""

from __future__ import annotations

import numpy as np

from ..errors import PoleError
from ._core import FnEval, as_array, pack
from ._gamma import digamma, gamma, is_nonpositive_integer


def eval_gamma(x) -> FnEval:
    """Gamma(x) and Gamma'(x) = Gamma(x) psi(x); pole error at nonpositive integers."""
    xs, shape, scalar = as_array(x)
    if any(is_nonpositive_integer(float(v)) for v in xs):
        raise PoleError("Gamma has poles at the nonpositive integers")
    value = np.array([gamma(float(v)) for v in xs])
    d1 = value * np.array([digamma(float(v)) for v in xs])
    return pack(value, d1, None, shape, scalar)
