"""Independent reference values for the test suite.

``FROZEN`` holds 17-digit values computed once with mpmath at 30 digits
(Ferrers functions on the cut, Condon-Shortley phase; elliptic integrals
in terms of the modulus k).  The helpers below are textbook series and
iterations written in plain Python, sharing no code with the package.
"""

from __future__ import annotations

import math

PHI = 0.5 * (1.0 + math.sqrt(5.0))

FROZEN = {
    "J0(1)": 0.76519768655796655,
    "J1(2.5)": 0.49709410246427404,
    "Y0(1)": 0.088256964215676958,
    "Y1(0.7)": -1.1032498719076334,
    "I1(1.3)": 0.79732931497926894,
    "K0(0.8)": 0.56534710526589563,
    "J3(4)": 0.43017147387562194,
    "Ai(0)": 0.35502805388781724,
    "Bi(0)": 0.61492662744600074,
    "Ai(1.7)": 0.054324792732919471,
    "Bi(-2.3)": -0.45492823439436498,
    "Ai(-5)": 0.35076100902411432,
    "Gi(1)": 0.23521843981043794,
    "Hi(-1)": 0.22066960679295989,
    "Gi(-3)": -0.29905471837139642,
    "Hi(2)": 3.1291414343242043,
    "P3(0.4)": -0.44,
    "Pphi(0.5)": 0.73174291987286,
    "Qphi(0.5)": -0.4023020101276064,
    "P21(0.3)": -0.8585452812752512,
    "Q21(-0.4)": 1.1925191760257237,
    "P^0.5_1.5(0.2)": -0.74158353798037228,
    "2F1(.5,.5,1,.3)": 1.0910959103627816,
    "2F1(1.2,-0.4,2.5,0.7)": 0.84027289312290837,
    "K(0.5)": 1.685750354812596,
    "E(0.5)": 1.4674622093394272,
    "K(0.95)": 2.5900112308745011,
    "E(0.1)": 1.5668619420216683,
    "H1(1)": 0.1984573362019444,
    "H2(3)": 0.74238666967748319,
    "H0(2)": 0.79085884950809589,
    "s(1.5,0.5)(2)": 0.77124318574917703,
    "Gamma(0.3)": 2.9915689876875907,
    "Gamma(4.7)": 15.431411600047436,
    "Gamma(-1.5)": 2.3632718012073547,
}


def bessel_j_series(n: int, x: float, terms: int = 30) -> float:
    """Maclaurin series of J_n."""
    return sum((-1) ** k * (x / 2.0) ** (2 * k + n) / (math.factorial(k) * math.factorial(k + n))
               for k in range(terms))


def airy_ai_series(x: float, terms: int = 60) -> float:
    """Ai(x) = c1 f(x) - c2 g(x) from the two Maclaurin series."""
    c1 = 1.0 / (3.0 ** (2.0 / 3.0) * math.gamma(2.0 / 3.0))
    c2 = 1.0 / (3.0 ** (1.0 / 3.0) * math.gamma(1.0 / 3.0))
    f, g = 1.0, x
    tf, tg = 1.0, x
    for k in range(1, terms):
        tf *= x**3 / ((3 * k - 1) * (3 * k))
        tg *= x**3 / ((3 * k) * (3 * k + 1))
        f += tf
        g += tg
    return c1 * f - c2 * g


def hyp2f1_series(a: float, b: float, c: float, x: float, terms: int = 2000) -> float:
    total, term = 1.0, 1.0
    for k in range(terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
    return total


def legendre_p_series(nu: float, x: float) -> float:
    """P_nu(x) = 2F1(-nu, nu + 1; 1; (1 - x)/2)."""
    return hyp2f1_series(-nu, nu + 1.0, 1.0, 0.5 * (1.0 - x))


def legendre_p_bonnet(n: int, x: float) -> float:
    p0, p1 = 1.0, x
    if n == 0:
        return p0
    for k in range(1, n):
        p0, p1 = p1, ((2 * k + 1) * x * p1 - k * p0) / (k + 1)
    return p1


def agm_K(k: float) -> float:
    a, b = 1.0, math.sqrt(1.0 - k * k)
    for _ in range(40):
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (2.0 * a)


def agm_E(k: float) -> float:
    """E(k) from the AGM with the sum of squared half-differences."""
    a, b = 1.0, math.sqrt(1.0 - k * k)
    c2_sum, power = 0.5 * k * k, 0.5
    for _ in range(40):
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        power *= 2.0
        c2_sum += power * c * c
    return (1.0 - c2_sum) * math.pi / (2.0 * a)


def struve_h_series(n: float, x: float, terms: int = 60) -> float:
    return sum((-1) ** k * (x / 2.0) ** (2 * k + n + 1) / (math.gamma(k + 1.5) * math.gamma(k + n + 1.5))
               for k in range(terms))


def rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(b), 1e-300)
