import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from lagint import corpus, specfun
from lagint.errors import (
    BudgetExceededError,
    DomainError,
    EmptyDomainError,
    MarginError,
    NonFiniteIntegrandError,
)
from lagint.identity import ZERO_IDENTITY, Identity
from lagint.verify import (
    DEFAULT_TOLERANCE,
    DerivCheck,
    DualCheck,
    IntervalCheck,
    Tolerance,
    VerificationReport,
    chebyshev_points,
    derivative_check,
    deriv_points,
    dual_agreement,
    integrate_adaptive,
    verify_identity,
)

# Integrals computed once with mpmath's tanh-sinh quadrature at 30 digits.
QUAD_ORACLE = {
    "(1+x^2) J0, [0.1, 2]": 2.6544312578429985,
    "k K, [0.1, 0.9]": 0.73052888036180195,
    "x ln x J0, [0.5, 3]": 0.0029251023040405069,
    "k E / k'^2, [0.1, 0.9]": 1.1009684661454685,
}


def J(n, x):
    return specfun.eval_bessel("J", n, x).value


def eq120_identity():
    return corpus.get_entry("eq120").identity()


# ---------------------------------------------------------------------------
# Tolerance
# ---------------------------------------------------------------------------
def test_tolerance_defaults():
    assert (DEFAULT_TOLERANCE.abs, DEFAULT_TOLERANCE.rel, DEFAULT_TOLERANCE.deriv) == (1e-8, 1e-7, 1e-6)


@pytest.mark.parametrize("kwargs", [{"abs": 0.0}, {"rel": -1e-3}, {"deriv": math.nan}, {"abs": math.inf}])
def test_tolerance_must_be_positive_and_finite(kwargs):
    with pytest.raises(ValueError):
        Tolerance(**kwargs)


# ---------------------------------------------------------------------------
# integrate_adaptive
# ---------------------------------------------------------------------------
def test_integrate_zero():
    value, err = integrate_adaptive(lambda x: 0.0 * x, 0.0, 1.0)
    assert value == 0.0 and err == 0.0


def test_integrate_polynomial():
    value, err = integrate_adaptive(lambda x: x * x, 0.0, 1.0)
    assert value == pytest.approx(1 / 3, rel=1e-15)
    assert err <= 1e-14


def test_integrate_bessel_matches_oracle_and_antiderivative():
    value, err = integrate_adaptive(lambda x: (1 + x * x) * J(0, x), 0.1, 2.0)
    F = lambda x: x * J(0, x) + x * x * J(1, x)  # noqa: E731
    assert value == pytest.approx(QUAD_ORACLE["(1+x^2) J0, [0.1, 2]"], rel=1e-12)
    assert value == pytest.approx(F(2.0) - F(0.1), rel=1e-12)
    assert err <= 1e-8


def test_integrate_budget_exceeded():
    with pytest.raises(BudgetExceededError):
        integrate_adaptive(lambda x: np.sin(1 / x) / x, 1e-6, 1.0, Tolerance(1e-14, 1e-14), budget=50)


def test_integrate_non_finite():
    with pytest.raises(NonFiniteIntegrandError):
        integrate_adaptive(lambda x: np.where(x > 0.5, np.nan, x), 0.0, 1.0)


@given(a=st.floats(-3, 3), b=st.floats(-3, 3), w=st.floats(0.1, 6))
def test_integrate_reversal_is_exact_negation(a, b, w):
    g = lambda x: np.exp(0.3 * x) * np.cos(w * x)  # noqa: E731
    assert integrate_adaptive(g, b, a)[0] == -integrate_adaptive(g, a, b)[0]


@given(a=st.floats(0.1, 1.0), t=st.floats(0.05, 0.95), c=st.floats(1.5, 6.0))
def test_integrate_additivity(a, t, c):
    b = a + t * (c - a)
    g = lambda x: (1 + x * x) * J(0, x)  # noqa: E731
    whole = integrate_adaptive(g, a, c)[0]
    parts = integrate_adaptive(g, a, b)[0] + integrate_adaptive(g, b, c)[0]
    assert abs(whole - parts) <= 2 * max(DEFAULT_TOLERANCE.abs, DEFAULT_TOLERANCE.rel * abs(whole))


# ---------------------------------------------------------------------------
# verify_identity
# ---------------------------------------------------------------------------
def test_verify_zero_identity():
    report = verify_identity(ZERO_IDENTITY, [(0.0, 1.0)])
    assert report.passed
    (check,) = report.intervals
    assert check.abs_err == 0.0 and check.quad == 0.0 and check.delta_f == 0.0


@pytest.mark.parametrize("entry,interval,key", [
    ("eq159", (0.1, 0.9), "k K, [0.1, 0.9]"),
    ("eq127", (0.5, 3.0), "x ln x J0, [0.5, 3]"),
    ("eq206", (0.1, 0.9), "k E / k'^2, [0.1, 0.9]"),
])
def test_verify_corpus_identities_against_quadrature_oracle(entry, interval, key):
    report = verify_identity(corpus.get_entry(entry).identity(), [interval])
    assert report.passed
    (check,) = report.intervals
    assert check.quad == pytest.approx(QUAD_ORACLE[key], rel=1e-9)
    assert check.delta_f == pytest.approx(QUAD_ORACLE[key], rel=1e-9)


def test_verify_report_fields():
    report = verify_identity(eq120_identity(), [(0.1, 1.0), (1.2, 2.0)], n_deriv_points=25)
    assert report.id == "eq120"
    assert len(report.intervals) == 2
    assert report.deriv.points == 25
    assert report.runtime > 0
    for c in report.intervals:
        assert c.abs_err == abs(c.quad - c.delta_f)
        assert c.passed == (c.abs_err <= max(report.tolerance.abs, report.tolerance.rel * abs(c.delta_f)))


def test_verify_detects_a_wrong_antiderivative():
    good = eq120_identity()
    bad = Identity("bad", good.integrand, lambda x: 1.001 * good.antiderivative(x), good.domain)
    report = verify_identity(bad, [(0.1, 2.0)])
    assert not report.passed
    assert not report.intervals[0].passed
    assert not report.deriv.passed


def test_verify_errors():
    ident = eq120_identity()
    with pytest.raises(EmptyDomainError):
        verify_identity(ident, [])
    with pytest.raises(EmptyDomainError):
        verify_identity(ident, [(2.0, 1.0)])
    with pytest.raises(DomainError):
        verify_identity(ident, [(-1.0, 1.0)])
    with pytest.raises(DomainError):
        verify_identity(corpus.get_entry("eq159").identity(), [(0.5, 1.0)])


def test_overall_pass_is_conjunction():
    tol = Tolerance()
    ok = IntervalCheck(0, 1, 0, 0, 0, 0, 0, True)
    ko = IntervalCheck(0, 1, 0, 0, 0, 1, 1, False)
    d_ok, d_ko = DerivCheck(5, 0.0, True), DerivCheck(5, 1.0, False)
    assert VerificationReport("x", (ok, ok), d_ok, tol, 0.0).passed
    assert not VerificationReport("x", (ok, ko), d_ok, tol, 0.0).passed
    assert not VerificationReport("x", (ok,), d_ko, tol, 0.0).passed
    assert not VerificationReport("x", (ok,), d_ok, tol, 0.0, dual=DualCheck(20, 1.0, False)).passed
    assert not VerificationReport("x", (ok,), d_ok, tol, 0.0, skipped=True).passed


# ---------------------------------------------------------------------------
# derivative_check
# ---------------------------------------------------------------------------
def test_derivative_check_zero_identity():
    assert derivative_check(ZERO_IDENTITY, [0.1, 0.5, 0.9]) == 0.0


def test_derivative_check_examples():
    assert derivative_check(eq120_identity(), [0.5, 1.0, 1.5]) <= 1e-6
    assert derivative_check(corpus.get_entry("eq204").identity(), [0.2, 0.5, 0.8]) <= 1e-6


def test_derivative_check_margin_error():
    with pytest.raises(MarginError):
        derivative_check(corpus.get_entry("eq159").identity(), [0.9999])
    with pytest.raises(MarginError):
        derivative_check(eq120_identity(), [1e-5])


# ---------------------------------------------------------------------------
# sample points and dual agreement
# ---------------------------------------------------------------------------
def test_chebyshev_points():
    pts = chebyshev_points(1.0, 3.0, 7)
    assert pts.shape == (7,)
    assert np.all(np.diff(pts) > 0) and pts[0] > 1.0 and pts[-1] < 3.0
    np.testing.assert_allclose(pts + pts[::-1], 4.0, rtol=1e-15)


@given(n=st.integers(2, 60), cut=st.floats(0.05, 0.95))
def test_deriv_points_proportional_split(n, cut):
    ivs = [(0.0, cut), (1.0, 2.0)]
    pts = deriv_points(ivs, n)
    assert pts.size == n
    in_first = np.sum(pts < cut)
    assume(n >= 4)
    assert in_first >= 1 and n - in_first >= 1
    assert abs(in_first - n * cut / (1 + cut)) <= 1.5


def test_dual_agreement():
    x = np.linspace(0.1, 2, 20)
    g = lambda t: np.sin(3 * t)  # noqa: E731
    assert dual_agreement(g, g, x).max_rel == 0.0
    ok = dual_agreement(lambda t: g(t) * (1 + 1e-12), g, x)
    assert ok.passed and ok.points == 20
    assert not dual_agreement(lambda t: 1.01 * g(t), g, x).passed
    # isolated zeros of the reference do not blow up the relative error
    assert dual_agreement(lambda t: np.sin(np.pi * t) + 1e-15, lambda t: np.sin(np.pi * t), [0.5, 1.0, 1.5]).passed
