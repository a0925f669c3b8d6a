"""Pure-numpy special-function kernels (vectorized over the argument array).

Same signatures and algorithms as :mod:`._kernels_numba`; loops run over
series terms / recurrence indices while the argument axis is vectorized.
"""

from __future__ import annotations

import math

import numpy as np

_EULER = 0.57721566490153286061
_RESCALE = 1e-250
_HUGE = 1e250
_EPS = 1e-17


def miller_start(n: int, x: float) -> int:
    big = max(float(n), float(x))
    m = int(big) + 25 + int(math.sqrt(50.0 * big))
    return m + (m % 2)


def _j_table(x: np.ndarray, m: int) -> np.ndarray:
    """Rows J_0..J_m for every column x (x > 0), normalized with J0 + 2*sum J_2k = 1."""
    buf = np.zeros((m + 1, x.size))
    buf[m] = 1.0
    jp = np.zeros_like(x)
    jk = np.ones_like(x)
    for k in range(m, 0, -1):
        jm = (2.0 * k / x) * jk - jp
        jp, jk = jk, jm
        buf[k - 1] = jk
        big = np.abs(jk) > _HUGE
        if big.any():
            buf[k - 1 :, big] *= _RESCALE
            jp[big] *= _RESCALE
            jk[big] *= _RESCALE
    s = buf[0] + 2.0 * buf[2::2].sum(axis=0)
    return buf / s


def j_pair(n: int, x: np.ndarray):
    out0 = np.where(x == 0.0, 1.0 if n == 0 else 0.0, 0.0)
    out1 = np.zeros_like(x)
    pos = x > 0.0
    if pos.any():
        xp = x[pos]
        table = _j_table(xp, miller_start(n + 1, float(xp.max())))
        out0[pos] = table[n]
        out1[pos] = table[n + 1]
    return out0, out1


def y_pair(n: int, x: np.ndarray):
    m = miller_start(1, float(x.max()))
    table = _j_table(x, m)
    lg = np.log(0.5 * x) + _EULER
    kmax = (m - 1) // 2
    k = np.arange(1, kmax + 1)
    sign = np.where(k % 2 == 1, -1.0, 1.0)[:, None]
    s0 = (sign * table[2 * k] / k[:, None]).sum(axis=0)
    s1 = (sign * (table[2 * k - 1] - table[2 * k + 1]) / k[:, None]).sum(axis=0)
    y0 = (2.0 / math.pi) * (lg * table[0] - 2.0 * s0)
    y1 = (2.0 / math.pi) * (-table[0] / x + lg * table[1] + s1)
    for j in range(1, n + 1):
        y0, y1 = y1, (2.0 * j / x) * y1 - y0
    return y0, y1


def _i_series(n: int, x: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        logx = np.log(0.5 * x)
    t = np.where(x == 0.0, 1.0 if n == 0 else 0.0, np.exp(n * logx - math.lgamma(n + 1.0)))
    s = t.copy()
    q = 0.25 * x * x
    k = 0
    active = t > 0.0
    while active.any():
        k += 1
        t = t * q / (k * (k + n))
        s = s + np.where(active, t, 0.0)
        active &= t > _EPS * s
    return s


def i_pair(n: int, x: np.ndarray):
    return _i_series(n, x), _i_series(n + 1, x)


def _k_integral(nu: float, x: np.ndarray) -> np.ndarray:
    h = 0.1
    s = 0.5 * np.exp(-x)
    active = np.ones(x.shape, dtype=bool)
    j = 1
    while active.any():
        t = j * h
        a = -x * math.cosh(t)
        v = 0.5 * (np.exp(a + nu * t) + np.exp(a - nu * t))
        s = s + np.where(active, v, 0.0)
        active &= ~((v <= 1e-18 * s) & (x * math.sinh(t) > nu))
        j += 1
    return h * s


def k_real(nu: float, x: np.ndarray) -> np.ndarray:
    return _k_integral(nu, x)


def k_pair(n: int, x: np.ndarray):
    k0 = _k_integral(0.0, x)
    k1 = _k_integral(1.0, x)
    for j in range(1, n + 1):
        k0, k1 = k1, k0 + (2.0 * j / x) * k1
    return k0, k1


def _airy_step(t0, h, y, dy, forcing):
    h2 = h * h
    h3 = h2 * h
    bkm1 = np.zeros_like(y)
    bk = y
    bk1 = dy * h
    sy = bk + bk1
    sdy = bk1.copy()
    k = 0
    while k < 200:
        num = t0 * h2 * bk + h3 * bkm1
        if k == 0:
            num = num + forcing * h2
        bk2 = num / ((k + 1.0) * (k + 2.0))
        sy = sy + bk2
        sdy = sdy + (k + 2.0) * bk2
        bkm1, bk, bk1 = bk, bk1, bk2
        k += 1
        scale = np.abs(sy) + np.abs(sdy)
        if k > 3 and np.all(np.abs(bk1) + np.abs(bk) + np.abs(bkm1) <= _EPS * scale):
            break
    with np.errstate(invalid="ignore", divide="ignore"):
        return sy, np.where(h != 0.0, sdy / h, dy)


def airy_propagate(x, y0, dy0, forcing, hmax):
    # A common step count keeps every column on the same schedule; small |x|
    # simply take proportionally smaller steps.
    nsteps = max(1, int(math.ceil(float(np.abs(x).max()) / hmax)))
    h = x / nsteps
    y = np.full(x.shape, y0)
    dy = np.full(x.shape, dy0)
    for s in range(nsteps):
        y, dy = _airy_step(s * h, h, y, dy, forcing)
    return y, dy


def gi_integral(x, nodes, weights):
    c = 0.5 * math.sqrt(3.0)
    smax = np.minimum(126.0 ** (1.0 / 3.0), 84.0 / x)
    npan = int(math.ceil(float(smax.max()) / 0.2))
    width = smax / npan
    v = np.zeros_like(x)
    dv = np.zeros_like(x)
    for p in range(npan):
        s = (p * width)[:, None] + 0.5 * width[:, None] * (nodes[None, :] + 1.0)
        w = 0.5 * width[:, None] * weights[None, :]
        e = np.exp(-s**3 / 3.0 - 0.5 * x[:, None] * s)
        th = c * x[:, None] * s + math.pi / 6.0
        sn = np.sin(th)
        v += (w * e * sn).sum(axis=1)
        dv += (w * e * s * (c * np.cos(th) - 0.5 * sn)).sum(axis=1)
    return v / math.pi, dv / math.pi


def elliptic_agm(k):
    a = np.ones_like(k)
    b = np.sqrt((1.0 - k) * (1.0 + k))
    c = k.copy()
    pow2 = 0.5
    s = pow2 * c * c
    for _ in range(64):
        if np.all(np.abs(c) <= 1e-17 * a):
            break
        a, b, c = 0.5 * (a + b), np.sqrt(a * b), 0.5 * (a - b)
        pow2 *= 2.0
        s = s + pow2 * c * c
    kk = math.pi / (2.0 * a)
    return kk, kk * (1.0 - s)


def elliptic_series(k):
    m = k * k
    ck = 1.0
    ce = 1.0
    vk = np.ones_like(k)
    ve = np.ones_like(k)
    dk = np.zeros_like(k)
    de = np.zeros_like(k)
    ddk = np.zeros_like(k)
    dde = np.zeros_like(k)
    mp = np.ones_like(k)
    n = 0
    while n < 200:
        r = (n + 0.5) / (n + 1.0)
        ce = ce * (n - 0.5) * (n + 0.5) / ((n + 1.0) * (n + 1.0))
        ck = ck * r * r
        j = n + 1.0
        d1p = 2.0 * j * mp * k
        d2p = 2.0 * j * (2.0 * j - 1.0) * mp
        mp = mp * m
        n += 1
        vk = vk + ck * mp
        ve = ve + ce * mp
        dk = dk + ck * d1p
        de = de + ce * d1p
        ddk = ddk + ck * d2p
        dde = dde + ce * d2p
        if np.all(ck * d2p <= _EPS * vk):
            break
    half_pi = 0.5 * math.pi
    return half_pi * np.stack([vk, ve, dk, de, ddk, dde])


@np.errstate(over="ignore", invalid="ignore")
def hyp2f1_series(a, b, c, x):
    s = np.ones_like(x)
    t = np.ones_like(x)
    small = np.zeros(x.shape, dtype=np.int64)
    active = np.ones(x.shape, dtype=bool)
    n = 0
    while n < 400000 and active.any():
        t = t * ((a + n) * (b + n) / ((c + n) * (n + 1.0))) * x
        s = s + np.where(active, t, 0.0)
        n += 1
        tiny = np.abs(t) <= _EPS * np.abs(s)
        small = np.where(tiny, small + 1, 0)
        active &= (t != 0.0) & (small < 2)
    return s


def struve_series(nu, c0, x):
    half = 0.5 * x
    t = c0 * half ** (nu + 1.0)
    q = -half * half
    p = nu + 1.0
    s = t.copy()
    d1 = t * p
    d2 = t * p * (p - 1.0)
    active = np.ones(x.shape, dtype=bool)
    k = 0
    while k < 2000 and active.any():
        t = t * q / ((k + 1.5) * (k + nu + 1.5))
        k += 1
        p = 2.0 * k + nu + 1.0
        s = s + np.where(active, t, 0.0)
        d1 = d1 + np.where(active, t * p, 0.0)
        d2 = d2 + np.where(active, t * p * (p - 1.0), 0.0)
        active &= ~(np.abs(t) * p * p <= _EPS * (np.abs(s) + np.abs(d1) + np.abs(d2)))
    return np.stack([s, d1 / x, d2 / (x * x)])


def lommel_series(m, n, x):
    a = 0.5 * (m - n + 3.0)
    b = 0.5 * (m + n + 3.0)
    t = x ** (m + 1.0) / ((m + 1.0) ** 2 - n * n)
    q = -0.25 * x * x
    p = m + 1.0
    s = t.copy()
    d1 = t * p
    d2 = t * p * (p - 1.0)
    active = np.ones(x.shape, dtype=bool)
    k = 0
    while k < 2000 and active.any():
        t = t * q / ((a + k) * (b + k))
        k += 1
        p = m + 1.0 + 2.0 * k
        s = s + np.where(active, t, 0.0)
        d1 = d1 + np.where(active, t * p, 0.0)
        d2 = d2 + np.where(active, t * p * (p - 1.0), 0.0)
        active &= ~(np.abs(t) * p * p <= _EPS * (np.abs(s) + np.abs(d1) + np.abs(d2)))
    return np.stack([s, d1 / x, d2 / (x * x)])
