"""Compiled (numba) special-function kernels.

Every public kernel takes a 1-D contiguous float64 array of arguments plus
scalar parameters and returns arrays of the same length.  Domain checks and
parameter preprocessing (Gamma prefactors, transformations) live in the
Python wrappers; the kernels assume valid input.
"""

from __future__ import annotations

import math

import numpy as np

from .._accel import njit

_EULER = 0.57721566490153286061
_RESCALE = 1e-250
_HUGE = 1e250
_EPS = 1e-17


# --------------------------------------------------------------------------
# Bessel J, Y (integer order) via Miller backward recurrence
# --------------------------------------------------------------------------
@njit
def miller_start(n, x):
    big = max(float(n), x)
    m = int(big) + 25 + int(math.sqrt(50.0 * big))
    if m % 2 == 1:
        m += 1
    return m


@njit
def _j_fill(x, buf, m):
    """Fill buf[0..m] with J_0(x)..J_m(x), normalized by J0 + 2*sum J_2k = 1."""
    buf[m] = 1.0
    jp = 0.0
    jk = 1.0
    for k in range(m, 0, -1):
        jm = (2.0 * k / x) * jk - jp
        jp = jk
        jk = jm
        buf[k - 1] = jk
        if abs(jk) > _HUGE:
            for i in range(k - 1, m + 1):
                buf[i] *= _RESCALE
            jp *= _RESCALE
            jk *= _RESCALE
    s = buf[0]
    for k in range(2, m + 1, 2):
        s += 2.0 * buf[k]
    for k in range(m + 1):
        buf[k] /= s


@njit
def j_pair(n, x):
    """(J_n, J_{n+1}) for integer n >= 0 and x >= 0."""
    size = x.shape[0]
    out0 = np.empty(size)
    out1 = np.empty(size)
    xmax = 0.0
    for i in range(size):
        xmax = max(xmax, x[i])
    buf = np.empty(miller_start(n + 1, xmax) + 1)
    for i in range(size):
        xi = x[i]
        if xi == 0.0:
            out0[i] = 1.0 if n == 0 else 0.0
            out1[i] = 0.0
            continue
        m = miller_start(n + 1, xi)
        _j_fill(xi, buf, m)
        out0[i] = buf[n]
        out1[i] = buf[n + 1]
    return out0, out1


@njit
def y_pair(n, x):
    """(Y_n, Y_{n+1}) for integer n >= 0 and x > 0 (Neumann series + upward recurrence)."""
    size = x.shape[0]
    out0 = np.empty(size)
    out1 = np.empty(size)
    xmax = 0.0
    for i in range(size):
        xmax = max(xmax, x[i])
    buf = np.empty(miller_start(1, xmax) + 1)
    for i in range(size):
        xi = x[i]
        m = miller_start(1, xi)
        _j_fill(xi, buf, m)
        lg = math.log(0.5 * xi) + _EULER
        s0 = 0.0
        s1 = 0.0
        k = 1
        sign = -1.0
        while 2 * k + 1 <= m:
            s0 += sign * buf[2 * k] / k
            s1 += sign * (buf[2 * k - 1] - buf[2 * k + 1]) / k
            sign = -sign
            k += 1
        y0 = (2.0 / math.pi) * (lg * buf[0] - 2.0 * s0)
        y1 = (2.0 / math.pi) * (-buf[0] / xi + lg * buf[1] + s1)
        for j in range(1, n + 1):
            y2 = (2.0 * j / xi) * y1 - y0
            y0 = y1
            y1 = y2
        out0[i] = y0
        out1[i] = y1
    return out0, out1


# --------------------------------------------------------------------------
# Modified Bessel I (power series) and K (trapezoid integral + recurrence)
# --------------------------------------------------------------------------
@njit
def _i_series(n, x):
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    t = math.exp(n * math.log(0.5 * x) - math.lgamma(n + 1.0))
    s = t
    q = 0.25 * x * x
    k = 0
    while True:
        k += 1
        t *= q / (k * (k + n))
        s += t
        if t <= _EPS * s:
            break
    return s


@njit
def i_pair(n, x):
    size = x.shape[0]
    out0 = np.empty(size)
    out1 = np.empty(size)
    for i in range(size):
        out0[i] = _i_series(n, x[i])
        out1[i] = _i_series(n + 1, x[i])
    return out0, out1


@njit
def _k_integral(nu, x):
    """K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt by the trapezoid rule."""
    h = 0.1
    s = 0.5 * math.exp(-x)
    j = 1
    while True:
        t = j * h
        a = -x * math.cosh(t)
        v = 0.5 * (math.exp(a + nu * t) + math.exp(a - nu * t))
        s += v
        if v <= 1e-18 * s and x * math.sinh(t) > nu:
            break
        j += 1
    return h * s


@njit
def k_real(nu, x):
    size = x.shape[0]
    out = np.empty(size)
    for i in range(size):
        out[i] = _k_integral(nu, x[i])
    return out


@njit
def k_pair(n, x):
    size = x.shape[0]
    out0 = np.empty(size)
    out1 = np.empty(size)
    for i in range(size):
        xi = x[i]
        k0 = _k_integral(0.0, xi)
        k1 = _k_integral(1.0, xi)
        for j in range(1, n + 1):
            k2 = k0 + (2.0 * j / xi) * k1
            k0 = k1
            k1 = k2
        out0[i] = k0
        out1[i] = k1
    return out0, out1


# --------------------------------------------------------------------------
# Airy-type ODE y'' = t y + forcing: Taylor-series propagation from t = 0
# --------------------------------------------------------------------------
@njit
def _airy_step(t0, h, y, dy, forcing):
    """Advance (y, y') from t0 to t0 + h with a Taylor series (scaled coefficients)."""
    h2 = h * h
    h3 = h2 * h
    bkm1 = 0.0  # b_{k-1}
    bk = y  # b_k, k = 0
    bk1 = dy * h  # b_{k+1}
    sy = bk + bk1
    sdy = bk1
    k = 0
    while k < 200:
        num = t0 * h2 * bk + h3 * bkm1
        if k == 0:
            num += forcing * h2
        bk2 = num / ((k + 1.0) * (k + 2.0))
        sy += bk2
        sdy += (k + 2.0) * bk2
        bkm1 = bk
        bk = bk1
        bk1 = bk2
        k += 1
        scale = abs(sy) + abs(sdy)
        if k > 3 and abs(bk1) + abs(bk) + abs(bkm1) <= _EPS * scale:
            break
    return sy, sdy / h


@njit
def airy_propagate(x, y0, dy0, forcing, hmax):
    size = x.shape[0]
    out0 = np.empty(size)
    out1 = np.empty(size)
    for i in range(size):
        xi = x[i]
        if xi == 0.0:
            out0[i] = y0
            out1[i] = dy0
            continue
        nsteps = int(math.ceil(abs(xi) / hmax))
        h = xi / nsteps
        y = y0
        dy = dy0
        for s in range(nsteps):
            y, dy = _airy_step(s * h, h, y, dy, forcing)
        out0[i] = y
        out1[i] = dy
    return out0, out1


@njit
def gi_integral(x, nodes, weights):
    """Scorer Gi and Gi' for x > 0 from the rotated-contour integral representation."""
    size = x.shape[0]
    out0 = np.empty(size)
    out1 = np.empty(size)
    c = 0.5 * math.sqrt(3.0)
    sixth = math.pi / 6.0
    for i in range(size):
        xi = x[i]
        smax = min(126.0 ** (1.0 / 3.0), 84.0 / xi)
        npan = int(math.ceil(smax / 0.2))
        width = smax / npan
        v = 0.0
        dv = 0.0
        for p in range(npan):
            left = p * width
            for j in range(nodes.shape[0]):
                s = left + 0.5 * width * (nodes[j] + 1.0)
                w = 0.5 * width * weights[j]
                e = math.exp(-s * s * s / 3.0 - 0.5 * xi * s)
                th = c * xi * s + sixth
                sn = math.sin(th)
                v += w * e * sn
                dv += w * e * s * (c * math.cos(th) - 0.5 * sn)
        out0[i] = v / math.pi
        out1[i] = dv / math.pi
    return out0, out1


# --------------------------------------------------------------------------
# Complete elliptic integrals K(k), E(k)
# --------------------------------------------------------------------------
@njit
def elliptic_agm(k):
    size = k.shape[0]
    out_k = np.empty(size)
    out_e = np.empty(size)
    for i in range(size):
        ki = k[i]
        a = 1.0
        b = math.sqrt((1.0 - ki) * (1.0 + ki))
        c = ki
        pow2 = 0.5
        s = pow2 * c * c
        for _ in range(64):
            if abs(c) <= 1e-17 * a:
                break
            an = 0.5 * (a + b)
            c = 0.5 * (a - b)
            b = math.sqrt(a * b)
            a = an
            pow2 *= 2.0
            s += pow2 * c * c
        kk = math.pi / (2.0 * a)
        out_k[i] = kk
        out_e[i] = kk * (1.0 - s)
    return out_k, out_e


@njit
def elliptic_series(k):
    """Maclaurin series in k^2 for K, E and their first two k-derivatives (small k)."""
    size = k.shape[0]
    out = np.empty((6, size))
    for i in range(size):
        ki = k[i]
        m = ki * ki
        ck = 1.0  # [(1/2)_n / n!]^2
        ce = 1.0  # (-1/2)_n (1/2)_n / (n!)^2
        vk = 1.0
        ve = 1.0
        dk = 0.0
        de = 0.0
        ddk = 0.0
        dde = 0.0
        mp = 1.0  # m^n
        n = 0
        while n < 200:
            r = (n + 0.5) / (n + 1.0)
            ce = ce * (n - 0.5) * (n + 0.5) / ((n + 1.0) * (n + 1.0))
            ck = ck * r * r
            j = n + 1.0
            d1p = 2.0 * j * mp * ki  # d/dk k^(2j)
            d2p = 2.0 * j * (2.0 * j - 1.0) * mp  # d2/dk2 k^(2j)
            mp *= m
            n += 1
            vk += ck * mp
            ve += ce * mp
            dk += ck * d1p
            de += ce * d1p
            ddk += ck * d2p
            dde += ce * d2p
            if ck * d2p <= _EPS * vk:
                break
        half_pi = 0.5 * math.pi
        out[0, i] = half_pi * vk
        out[1, i] = half_pi * ve
        out[2, i] = half_pi * dk
        out[3, i] = half_pi * de
        out[4, i] = half_pi * ddk
        out[5, i] = half_pi * dde
    return out


# --------------------------------------------------------------------------
# Gauss hypergeometric series 2F1(a, b; c; x), |x| < 1
# --------------------------------------------------------------------------
@njit
def hyp2f1_series(a, b, c, x):
    size = x.shape[0]
    out = np.empty(size)
    for i in range(size):
        xi = x[i]
        s = 1.0
        t = 1.0
        small = 0
        n = 0
        while n < 400000:
            t *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * xi
            s += t
            n += 1
            if t == 0.0:
                break
            if abs(t) <= _EPS * abs(s):
                small += 1
                if small >= 2:
                    break
            else:
                small = 0
        out[i] = s
    return out


# --------------------------------------------------------------------------
# Struve H_nu and Lommel s_{m,n}: power series with termwise derivatives
# --------------------------------------------------------------------------
@njit
def struve_series(nu, c0, x):
    size = x.shape[0]
    out = np.empty((3, size))
    for i in range(size):
        xi = x[i]
        half = 0.5 * xi
        t = c0 * half ** (nu + 1.0)
        q = -half * half
        p = nu + 1.0
        s = t
        d1 = t * p
        d2 = t * p * (p - 1.0)
        k = 0
        while k < 2000:
            t *= q / ((k + 1.5) * (k + nu + 1.5))
            k += 1
            p = 2.0 * k + nu + 1.0
            s += t
            d1 += t * p
            d2 += t * p * (p - 1.0)
            if abs(t) * p * p <= _EPS * (abs(s) + abs(d1) + abs(d2)):
                break
        out[0, i] = s
        out[1, i] = d1 / xi
        out[2, i] = d2 / (xi * xi)
    return out


@njit
def lommel_series(m, n, x):
    size = x.shape[0]
    out = np.empty((3, size))
    a = 0.5 * (m - n + 3.0)
    b = 0.5 * (m + n + 3.0)
    for i in range(size):
        xi = x[i]
        t = xi ** (m + 1.0) / ((m + 1.0) ** 2 - n * n)
        q = -0.25 * xi * xi
        p = m + 1.0
        s = t
        d1 = t * p
        d2 = t * p * (p - 1.0)
        k = 0
        while k < 2000:
            t *= q / ((a + k) * (b + k))
            k += 1
            p = m + 1.0 + 2.0 * k
            s += t
            d1 += t * p
            d2 += t * p * (p - 1.0)
            if abs(t) * p * p <= _EPS * (abs(s) + abs(d1) + abs(d2)):
                break
        out[0, i] = s
        out[1, i] = d1 / xi
        out[2, i] = d2 / (xi * xi)
    return out
