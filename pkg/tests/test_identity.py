import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lagint import corpus, specfun
from lagint.errors import DegenerateError, EmptyDomainError, NotConjugateError, NonPositiveFactorError, UnknownIdError
from lagint.identity import (
    GAUGES,
    PHI,
    BranchDomainError,
    GaugeFn,
    conjugate_identity,
    energy_identity,
    gauge_transform,
    get_gauge,
    make_identity,
    riccati_q,
    second_integral,
    transform_solution,
    wronskian_check,
)
from lagint.odecat import LinearODE2, format_id, get_ode, normalized_residual
from lagint.specfun import FnEval
from lagint.verify import Tolerance, derivative_check, deriv_points, verify_identity

J = lambda n, x: specfun.eval_bessel("J", n, x).value  # noqa: E731
K = lambda k: specfun.eval_elliptic("K", k).value  # noqa: E731
E = lambda k: specfun.eval_elliptic("E", k).value  # noqa: E731

XS = np.linspace(0.3, 2.7, 9)
KS = np.linspace(0.1, 0.9, 9)
LS = np.linspace(-0.8, 0.8, 9)


def bessel0():
    return get_ode("bessel(0,1)")


# ---------------------------------------------------------------------------
# make_identity / second_integral / energy_identity
# ---------------------------------------------------------------------------
def test_make_identity_monomial_bessel():
    ode, sols = bessel0()
    ident = make_identity(ode, sols["J"], get_gauge("monomial", [1]))
    np.testing.assert_allclose(ident.g(XS), (1 + XS**2) * J(0, XS), rtol=1e-13)
    np.testing.assert_allclose(ident.F(XS), XS * J(0, XS) + XS**2 * J(1, XS), rtol=1e-13)


def test_make_identity_with_h_equal_y_vanishes():
    from lagint.identity import as_gauge

    for oid, sol, xs in [("bessel(0,1)", "J", XS), ("airy", "Bi", XS - 1), ("elliptic_K", "K", KS)]:
        ode, sols = get_ode(oid)
        ident = make_identity(ode, sols[sol], as_gauge(sols[sol], ode))
        scale = np.abs(sols[sol].eval(xs).value) + np.abs(sols[sol].eval(xs).d1)
        assert np.max(np.abs(ident.g(xs)) / (1 + scale)) <= 1e-12
        assert np.max(np.abs(ident.F(xs)) / (1 + scale)) <= 1e-12


def test_make_identity_legendre_constant_gauge():
    ode, sols = get_ode("legendre(2)")
    ident = make_identity(ode, sols["P"], get_gauge("eq35", [2]))
    p2 = specfun.eval_legendre("P", 2, 0, LS)
    np.testing.assert_allclose(ident.F(LS), (LS**2 - 1) * p2.d1 / 6, rtol=1e-13, atol=1e-15)
    # h'' + p h' + q h = q/6 = 1/(1 - x^2), so g = P_2
    np.testing.assert_allclose(ident.g(LS), p2.value, rtol=1e-13, atol=1e-15)


def test_make_identity_empty_domain():
    ode, sols = bessel0()
    with pytest.raises(EmptyDomainError):
        make_identity(ode, sols["J"], get_gauge("eq217"), x0=5.0)
    neg = GaugeFn("neg", lambda x: FnEval(x, 1 + 0 * x, 0 * x), (-5.0, -1.0))
    with pytest.raises(EmptyDomainError):
        make_identity(ode, sols["J"], neg)


def test_second_integral_examples():
    ode, sols = bessel0()
    ident = second_integral(ode, sols["J"])
    np.testing.assert_allclose(ident.g(XS), XS * J(0, XS), rtol=1e-13)
    np.testing.assert_allclose(ident.F(XS), XS * J(1, XS), rtol=1e-13)
    ode, sols = get_ode("airy")
    ident = second_integral(ode, sols["Ai"])
    ai = specfun.eval_airy_scorer("Ai", XS)
    np.testing.assert_allclose(ident.g(XS), -XS * ai.value, rtol=1e-13)
    np.testing.assert_allclose(ident.F(XS), -ai.d1, rtol=1e-13)


def test_second_integral_with_zero_q_vanishes_and_equals_unit_gauge():
    free = LinearODE2("free", lambda x: 0 * x, lambda x: 0 * x, (-5.0, 5.0), f_closed=lambda x: 1 + 0 * x)
    from lagint.odecat import SolutionFn, elementary

    line = SolutionFn("line", elementary(lambda x: 2 * x + 1, lambda x: 2 + 0 * x, lambda x: 0 * x), (-5.0, 5.0))
    assert np.all(second_integral(free, line).g(LS) == 0.0)
    ode, sols = get_ode("elliptic_E")
    a, b = second_integral(ode, sols["E"]), make_identity(ode, sols["E"], get_gauge("const"))
    np.testing.assert_allclose(a.g(KS), b.g(KS), rtol=1e-14)
    np.testing.assert_allclose(a.F(KS), b.F(KS), rtol=1e-14)


def test_energy_identity_harmonic_oscillator():
    ode, sols = get_ode("harmonic(1)")
    ident = energy_identity(ode, sols["sin"])
    xs = np.linspace(-3, 3, 13)
    np.testing.assert_allclose(ident.F(xs), np.ones_like(xs), rtol=1e-14)
    assert np.max(np.abs(ident.g(xs))) <= 1e-8


@pytest.mark.parametrize("oid,sol,interval", [("bessel(0,1)", "J", (0.5, 2.0)), ("legendre(2)", "P", (-0.5, 0.5))])
def test_energy_identity_verifies_by_quadrature(oid, sol, interval):
    ode, sols = get_ode(oid)
    report = verify_identity(energy_identity(ode, sols[sol]), [interval])
    assert report.passed, report


def test_energy_identity_legendre_closed_form():
    ode, sols = get_ode("legendre(2)")
    ident = energy_identity(ode, sols["P"])
    p2 = specfun.eval_legendre("P", 2, 0, LS)
    np.testing.assert_allclose(ident.F(LS), (1 - LS**2) * (p2.d1**2 + 6 * p2.value**2 / (1 - LS**2)), rtol=1e-13)


# ---------------------------------------------------------------------------
# conjugate identities
# ---------------------------------------------------------------------------
def test_conjugate_bessel_pair_integrand():
    n, m, a, b = 1, 2, 1.3, 0.7
    A, sa = get_ode(format_id("bessel", n, a))
    B, sb = get_ode(format_id("bessel", m, b))
    ident = conjugate_identity(A, sa["J"], B, sb["Y"])
    expected = ((a * a - b * b) * XS - (n * n - m * m) / XS) * J(n, a * XS) * specfun.eval_bessel("Y", m, b * XS).value
    np.testing.assert_allclose(ident.g(XS), expected, rtol=1e-12)


def test_conjugate_identity_with_itself_vanishes():
    ode, sols = bessel0()
    ident = conjugate_identity(ode, sols["J"], ode, sols["J"])
    assert np.max(np.abs(ident.g(XS))) == 0.0
    assert np.max(np.abs(ident.F(XS))) <= 1e-15


def test_conjugate_bessel_and_e_equation():
    ode, sols = bessel0()
    B, sb = get_ode("E_conjugate_bessel")
    ident = conjugate_identity(ode, sols["J"], B, sb["E"])
    np.testing.assert_allclose(ident.g(KS), -KS**3 / (1 - KS**2) * J(0, KS) * E(KS), rtol=1e-12)
    np.testing.assert_allclose(ident.F(KS), -(J(0, KS) * (K(KS) - E(KS)) - KS * J(1, KS) * E(KS)), rtol=1e-12, atol=1e-14)


def test_not_conjugate_error():
    with pytest.raises(NotConjugateError):
        conjugate_identity(*_pair("bessel(0,1)", "J", "elliptic_K", "K"))


def _pair(a, sa, b, sb):
    A, SA = get_ode(a)
    B, SB = get_ode(b)
    return A, SA[sa], B, SB[sb]


# ---------------------------------------------------------------------------
# gauge transformation, Riccati relation
# ---------------------------------------------------------------------------
def test_gauge_transform_elliptic_k_to_bessel_like_p():
    src, sols = get_ode("elliptic_K")
    ode, g = gauge_transform(src, lambda k: 1 / k, target_dp=lambda k: -1 / k**2, target_f=lambda k: k)
    np.testing.assert_allclose(ode.q(KS), 1 / (1 - KS**2) ** 2, rtol=1e-12)
    np.testing.assert_allclose(g.eval(KS).value, np.sqrt(1 - KS**2), rtol=1e-14)
    moved = transform_solution(sols["K"], g)
    assert np.max(normalized_residual(ode, moved, KS)) <= 1e-5
    # without a closed-form target factor the multiplier is k' up to a constant
    ode2, g2 = gauge_transform(src, lambda k: 1 / k, x0=0.5)
    ratio = g2.eval(KS).value / np.sqrt(1 - KS**2)
    np.testing.assert_allclose(ratio, ratio[0], rtol=1e-10)


def test_gauge_transform_to_same_p_is_identity():
    src, _ = get_ode("bessel(1,1)")
    ode, g = gauge_transform(src, src.p, target_f=src.f_closed, target_dp=src.dp)
    np.testing.assert_allclose(ode.q(XS), src.q(XS), rtol=1e-12)
    np.testing.assert_allclose(g.eval(XS).value, 1.0, rtol=1e-14)
    assert np.max(np.abs(g.eval(XS).d1)) == 0.0


@pytest.mark.parametrize("nu,mu", [(2.0, 1.0), (3.0, 2.0)])
def test_gauge_transform_associated_legendre(nu, mu):
    src, sols = get_ode(format_id("assoc_legendre", nu, mu))
    tp = lambda x: -2 * (x - mu) / (1 - x * x)  # noqa: E731
    tdp = lambda x: -2 * (1 + x * x - 2 * mu * x) / (1 - x * x) ** 2  # noqa: E731
    tf = lambda x: (1 - x) ** (1 - mu) * (1 + x) ** (1 + mu)  # noqa: E731
    ode, g = gauge_transform(src, tp, target_dp=tdp, target_f=tf)
    np.testing.assert_allclose(ode.q(LS), nu * (nu + 1) / (1 - LS**2), rtol=1e-10)
    np.testing.assert_allclose(g.eval(LS).value, ((1 - LS) / (1 + LS)) ** (mu / 2), rtol=1e-13)
    assert np.max(normalized_residual(ode, transform_solution(sols["P"], g), LS)) <= 1e-5


def test_gauge_transform_rejects_sign_change():
    src, _ = get_ode("legendre(2)")
    _, g = gauge_transform(src, lambda x: 0 * x, target_f=lambda x: -1 + 0 * x, target_dp=lambda x: 0 * x)
    with pytest.raises(NonPositiveFactorError):
        g.eval(0.2)


@pytest.mark.parametrize("nu,mu", [(2.0, 1.0), (3.0, 2.0)])
def test_riccati_candidate_reproduces_legendre_q(nu, mu):
    x = np.linspace(-0.8, 0.8, 41)
    q = riccati_q(lambda t: -2 * (t - mu) / (1 - t * t), lambda t: -2 * t / (1 - t * t),
                  lambda t: nu * (nu + 1) / (1 - t * t) - mu * mu / (1 - t * t) ** 2, x)
    target = nu * (nu + 1) / (1 - x * x)
    assert np.max(np.abs(q - target) / np.abs(target)) <= 1e-8


def test_riccati_examples():
    mu = 1.0
    q = riccati_q(lambda t: -2 * (t - mu) / (1 - t * t), lambda t: -2 * t / (1 - t * t),
                  lambda t: 6 / (1 - t * t) - mu * mu / (1 - t * t) ** 2, 0.3)
    assert q == pytest.approx(6 / (1 - 0.09), rel=1e-8)
    pbar, qbar = (lambda t: np.sin(t)), (lambda t: t**3)
    assert riccati_q(pbar, pbar, qbar, 0.7) == pytest.approx(0.7**3, rel=1e-14)
    # arbitrary smooth p, against an independent evaluation with a 1e-6 step
    p, x, h = (lambda t: np.exp(t) / (1 + t * t)), 0.5, 1e-6
    dp = (p(x + h) - p(x - h)) / (2 * h)
    dpb = (pbar(x + h) - pbar(x - h)) / (2 * h)
    expected = 0.5 * (dp - dpb) + 0.25 * (p(x) ** 2 - pbar(x) ** 2) + qbar(x)
    assert riccati_q(p, pbar, qbar, x) == pytest.approx(expected, rel=1e-8)


def test_gauge_invariance_of_conjugate_bessel_elliptic_pair():
    n, alpha = 1, 1.3
    A, sa = get_ode(format_id("bessel", n, alpha))
    B, sb = get_ode("elliptic_K_gauged")
    direct = conjugate_identity(A, sa["J"], B, sb["kpK"])
    tp = lambda k: 1 / k - 2 * k / (1 - k * k)  # noqa: E731
    tdp = lambda k: -1 / k**2 - 2 * (1 + k * k) / (1 - k * k) ** 2  # noqa: E731
    tf = lambda k: k * (1 - k * k)  # noqa: E731
    tA, gA = gauge_transform(A, tp, target_dp=tdp, target_f=tf)
    tB, gB = gauge_transform(B, tp, target_dp=tdp, target_f=tf)
    moved = conjugate_identity(tA, transform_solution(sa["J"], gA), tB, transform_solution(sb["kpK"], gB))
    k = np.linspace(0.1, 0.9, 20)
    g0, g1 = direct.g(k), moved.g(k)
    assert np.max(np.abs(g1 - g0) / np.abs(g0)) <= 1e-8
    np.testing.assert_allclose(moved.F(k), direct.F(k), rtol=1e-10)
    # q differences are gauge invariant
    np.testing.assert_allclose(tA.q(k) - tB.q(k), A.q(k) - B.q(k), rtol=1e-10)
    # the transformed partner equation is the K equation itself
    np.testing.assert_allclose(tB.q(k), get_ode("elliptic_K").ode.q(k), rtol=1e-10)


# ---------------------------------------------------------------------------
# Wronskian
# ---------------------------------------------------------------------------
def test_wronskian_bessel_constant():
    ode, sols = bessel0()
    mean, dev = wronskian_check(ode, sols["J"], sols["Y"], np.linspace(0.2, 20, 40))
    assert dev <= 1e-8
    assert mean == pytest.approx(2 / math.pi, rel=1e-10)


def test_wronskian_golden_legendre_constant():
    ode, sols = get_ode(format_id("legendre", PHI - 1))
    _, dev = wronskian_check(ode, sols["P"], sols["Q"], np.linspace(-0.9, 0.9, 20))
    assert dev <= 1e-8


def test_wronskian_degenerate():
    ode, sols = bessel0()
    with pytest.raises(DegenerateError):
        wronskian_check(ode, sols["J"], sols["J"], XS)


# ---------------------------------------------------------------------------
# gauge catalog
# ---------------------------------------------------------------------------
GAUGE_PARAMS = {
    "monomial": [(2.5,), (-1.5,), (0.0,)], "monomial_sin": [(2.0,)], "monomial_cos": [(3.0,)],
    "monomial_log": [(2.0,)], "exp": [(1.5,), (-1.0,)], "sin_shift": [(0.3,), (0.3, 2.0)],
    "lommel": [(1.0, 1.0), (1.5, 0.5)], "eq35": [(2.0,)], "eq104": [(1.0,)], "eq111": [(2.0, 1.0)],
    "eq140": [(0.5, 0.7, 1.3)], "eq143": [(0.5, 0.7, 1.3, -0.35)], "eq189": [(), (0.5, 1.5)],
    "eq190": [(1.0,), (-1.0,)], "eq217": [(0.0,), (1.0,)], "eq218": [(0.0,), (1.0,)], "eq219": [(0.0,), (1.0,)],
    "eq233": [(0.0,), (1.0,)], "eq234": [(0.0,), (1.0,)], "const": [(), (2.0,)],
}
GAUGE_CASES = [(gid, p) for gid in sorted(GAUGES) for p in GAUGE_PARAMS.get(gid, [()])]


def _points_inside(domain):
    lo, hi = max(domain[0], 0.05), min(domain[1], 0.95)
    return lo + (hi - lo) * np.linspace(0.1, 0.9, 8)


@pytest.mark.parametrize("gid,params", GAUGE_CASES, ids=[f"{g}{list(p)}" for g, p in GAUGE_CASES])
def test_gauge_second_derivative_consistent_with_first(gid, params):
    g = get_gauge(gid, params)
    h = 1e-5
    pts = _points_inside(g.domain)
    r = g.eval(pts)
    fd2 = (g.eval(pts + h).d1 - g.eval(pts - h).d1) / (2 * h)
    fd1 = (g.eval(pts + h).value - g.eval(pts - h).value) / (2 * h)
    assert np.max(np.abs(fd2 - r.d2) / (1 + np.abs(r.d2))) <= 1e-5
    assert np.max(np.abs(fd1 - r.d1) / (1 + np.abs(r.d1))) <= 1e-5


def test_monomial_gauge_closed_form():
    r = get_gauge("monomial", [2.5]).eval(XS)
    np.testing.assert_allclose(r.value, XS**2.5, rtol=1e-15)
    np.testing.assert_allclose(r.d1, 2.5 * XS**1.5, rtol=1e-15)
    np.testing.assert_allclose(r.d2, 3.75 * XS**0.5, rtol=1e-15)


def test_fragmentary_gauges_solve_their_fragments():
    k = np.linspace(0.62, 0.95, 12)
    h = get_gauge("eq170").eval(k)
    frag = (1 / k - 2 * k / (1 - k * k)) * h.d1 - h.value / (1 - k * k)
    assert np.max(np.abs(frag)) <= 1e-12 * np.max(np.abs(h.value / (1 - k * k)))
    k = np.linspace(0.05, 0.95, 12)
    h = get_gauge("eq221").eval(k)
    np.testing.assert_allclose(h.value, np.sqrt(1 - k * k) * np.exp(k * k / 2), rtol=1e-14)
    frag = h.d1 / k + k * k / (1 - k * k) * h.value
    assert np.max(np.abs(frag)) <= 1e-12 * np.max(np.abs(h.value / (1 - k * k)))


def test_gauge_errors():
    with pytest.raises(UnknownIdError):
        get_gauge("no-such-gauge")
    with pytest.raises(BranchDomainError):
        get_gauge("eq170").eval(0.3)


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------
@given(c=st.floats(-5, 5), m=st.floats(-2, 3), s=st.floats(-1.5, 1.5))
def test_make_identity_is_linear_in_h(c, m, s):
    ode, sols = bessel0()
    y = sols["J"]
    h1, h2 = get_gauge("monomial", [m]), get_gauge("exp", [s])
    combo = make_identity(ode, y, h1 + h2.scaled(c))
    i1, i2 = make_identity(ode, y, h1), make_identity(ode, y, h2)
    for attr in ("g", "F"):
        lhs = getattr(combo, attr)(XS)
        rhs = getattr(i1, attr)(XS) + c * getattr(i2, attr)(XS)
        scale = np.abs(getattr(i1, attr)(XS)) + abs(c) * np.abs(getattr(i2, attr)(XS)) + 1e-300
        assert np.max(np.abs(lhs - rhs) / scale) <= 1e-13


@given(m=st.floats(-2, 4), x=st.floats(0.3, 5.0))
def test_theorem_derivative_property(m, x):
    ode, sols = get_ode("bessel(1,1)")
    ident = make_identity(ode, sols["Y"], get_gauge("monomial", [m]))
    assert derivative_check(ident, [x]) <= 1e-6


def test_every_constructor_identity_differentiates_to_its_integrand():
    worst = {}
    for entry in corpus.list_entries():
        ctor = entry.constructed()
        if ctor is None:
            continue
        worst[entry.id] = derivative_check(ctor, deriv_points(entry.intervals, 25))
    assert worst and max(worst.values()) <= 1e-6, max(worst.items(), key=lambda kv: kv[1])


def test_constructor_identities_verify_on_corpus_intervals():
    tol = Tolerance()
    failures = []
    for entry in corpus.list_entries("elliptic")[:12]:
        ctor = entry.constructed()
        if ctor is not None and not verify_identity(ctor, entry.intervals, tol).passed:
            failures.append(entry.id)
    assert not failures
