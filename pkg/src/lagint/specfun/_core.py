"""Shared plumbing for the public evaluators: result type, backend, array helpers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .. import _accel
from ..errors import DomainError

if _accel.USE_NUMBA:
    from . import _kernels_numba as kernels
else:
    from . import _kernels_numpy as kernels

Real = Union[float, np.ndarray]

# 12-point Gauss-Legendre rule used by the Scorer integral kernel.
GL_NODES, GL_WEIGHTS = np.polynomial.legendre.leggauss(12)


@dataclass(frozen=True)
class FnEval:
    """Value and analytic derivatives of a special function at x.

    Fields are Python floats for scalar input and float64 arrays otherwise.
    ``d2`` is ``None`` when the evaluator does not provide a second derivative.
    """

    value: Real
    d1: Real
    d2: Optional[Real] = None

    def __iter__(self):
        yield self.value
        yield self.d1


def as_array(x) -> tuple[np.ndarray, tuple, bool]:
    """Return (flat contiguous float64 array, original shape, scalar flag)."""
    arr = np.asarray(x, dtype=np.float64)
    scalar = arr.ndim == 0
    flat = np.ascontiguousarray(arr.reshape(-1))
    if not np.all(np.isfinite(flat)):
        raise DomainError("argument must be finite")
    return flat, arr.shape, scalar


def shape_out(values, shape: tuple, scalar: bool):
    if values is None:
        return None
    values = np.asarray(values, dtype=np.float64)
    if scalar:
        return float(values.reshape(-1)[0])
    return values.reshape(shape)


def pack(value, d1, d2, shape: tuple, scalar: bool) -> FnEval:
    return FnEval(shape_out(value, shape, scalar), shape_out(d1, shape, scalar), shape_out(d2, shape, scalar))


def as_integer_order(order, limit: int, exc_type) -> int:
    o = float(order)
    if o != math.floor(o):
        raise exc_type(f"order must be an integer, got {order!r}")
    n = int(o)
    if abs(n) > limit:
        raise exc_type(f"|order| must be <= {limit}, got {n}")
    return n
