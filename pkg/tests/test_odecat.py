import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lagint import specfun
from lagint.errors import DomainError, ParameterError, SingularityError, UnknownIdError
from lagint.odecat import (
    DEFAULT_CATALOG,
    LinearODE2,
    SolutionFn,
    format_id,
    get_ode,
    integrating_factor,
    normalized_residual,
    ode_residual,
    parse_id,
)
from oracles import PHI

GOLDEN = PHI - 1.0

# 20-point grids kept 0.1 away from singular points: the residual takes y'' from
# central differences, whose truncation error grows like the fourth derivative
# of y, and that blows up at the regular singular points.
LEG = np.linspace(-0.9, 0.9, 20)
POS = np.linspace(0.5, 10.0, 20)
AIRY = np.linspace(-10.0, 5.0, 20)
UNIT = np.linspace(0.1, 0.9, 20)

# (ode id, 20-point grid) for every catalogued family, with representative parameters
CATALOG_CASES = [
    ("legendre(2)", LEG),
    (format_id("legendre", GOLDEN), LEG),
    ("legendre(1.5)", LEG),
    ("assoc_legendre(2,1)", LEG),
    ("assoc_legendre(3,2)", LEG),
    ("assoc_legendre(1.5,0.5)", LEG),
    ("legendre_riccati(2,1)", LEG),
    ("legendre_riccati(3,2)", 0.9 * LEG),
    ("bessel(0,1)", POS),
    ("bessel(1,2)", POS / 2),
    ("bessel(3,1)", POS),
    ("modified_bessel(0,1)", POS / 2),
    ("modified_bessel(2,1.5)", POS / 1.5),
    ("airy", AIRY),
    ("airy(1)", AIRY + 1.0),
    ("airy(-1)", AIRY - 1.0),
    ("harmonic(1)", np.linspace(-5.0, 5.0, 20)),
    ("hyp2f1(0.5,0.5,1)", UNIT),
    ("hyp2f1(0.3,0.7,1.4)", UNIT),
    ("hyp2f1(1.2,-0.4,1.8)", UNIT),
    ("elliptic_K", UNIT),
    ("elliptic_E", UNIT),
    ("elliptic_K_gauged", UNIT),
    ("elliptic_K_sqrtk", UNIT),
    ("elliptic_E_gauged", UNIT),
    ("elliptic_E_sqrtk", UNIT),
    ("E_conjugate_bessel", UNIT),
]
CASE_IDS = [c[0] for c in CATALOG_CASES]


# ---------------------------------------------------------------------------
# documented examples
# ---------------------------------------------------------------------------
def test_bessel_record():
    ode, sols = get_ode("bessel(0,1)")
    x = np.array([0.5, 1.0, 3.0])
    np.testing.assert_allclose(ode.p(x), 1 / x, rtol=1e-15)
    np.testing.assert_allclose(ode.q(x), np.ones(3), rtol=1e-15)
    np.testing.assert_allclose(ode.f_closed(x), x, rtol=1e-15)
    assert set(sols) >= {"J", "Y"}


def test_legendre_and_elliptic_integrating_factors():
    x = np.array([-0.5, 0.1, 0.7])
    np.testing.assert_allclose(get_ode("legendre(2)").ode.f_closed(x), 1 - x * x, rtol=1e-15)
    k = np.array([0.2, 0.5, 0.8])
    np.testing.assert_allclose(get_ode("elliptic_K").ode.f_closed(k), k * (1 - k * k), rtol=1e-15)


def test_required_ids_resolve():
    for oid in ["legendre(2)", "assoc_legendre(2,1)", "bessel(1,2)", "modified_bessel(0,1)", "airy(0.5)",
                "hyp2f1(0.5,0.5,1)", "elliptic_K", "elliptic_E", "elliptic_K_gauged", "elliptic_K_sqrtk",
                "elliptic_E_gauged", "elliptic_E_sqrtk", "E_conjugate_bessel"]:
        ode, sols = get_ode(oid)
        assert ode.id == oid and sols


def test_integrating_factor_examples():
    flat = LinearODE2("flat", lambda x: 0.0 * x, lambda x: 0.0 * x, (-10.0, 10.0))
    assert integrating_factor(flat, -3.0, 7.5) == pytest.approx(1.0, abs=1e-14)
    assert integrating_factor(get_ode("bessel(0,1)").ode, 1.0, 2.0) == pytest.approx(2.0, rel=1e-14)
    assert integrating_factor(get_ode("elliptic_K").ode, 0.2, 0.5) == pytest.approx(
        (0.5 * 0.75) / (0.2 * 0.96), rel=1e-14)


@pytest.mark.parametrize("oid,a,b", [("bessel(0,1)", 1.0, 2.0), ("elliptic_K", 0.2, 0.5),
                                     ("legendre(2)", -0.6, 0.3), ("hyp2f1(0.3,0.7,1.4)", 0.1, 0.8)])
def test_integrating_factor_quadrature_matches_closed_form(oid, a, b):
    ode = get_ode(oid).ode
    stripped = LinearODE2(ode.id, ode.p, ode.q, ode.domain, ode.singularities)
    assert integrating_factor(stripped, a, b) == pytest.approx(integrating_factor(ode, a, b), rel=1e-8)


def test_integrating_factor_rejects_singular_range():
    split = LinearODE2("split", lambda x: 1 / x, lambda x: 0 * x, (-1.0, 1.0), (0.0,))
    with pytest.raises(SingularityError):
        integrating_factor(split, -0.5, 0.5)
    with pytest.raises(DomainError):
        integrating_factor(get_ode("elliptic_K").ode, 0.5, 1.5)


def test_ode_residual_examples():
    ode, sols = get_ode("bessel(0,1)")
    assert abs(ode_residual(ode, sols["J"], 1.0)) <= 1e-5
    airy = get_ode("airy(0)").ode
    probe = lambda x: (x * x, 2 * x)  # noqa: E731
    assert ode_residual(airy, probe, 1.0) == pytest.approx(1.0, abs=1e-8)
    ode, sols = get_ode("elliptic_E")
    assert abs(ode_residual(ode, sols["E"], 0.5)) <= 1e-5


def test_ode_residual_rejects_singular_point():
    ode, sols = get_ode("bessel(0,1)")
    with pytest.raises(DomainError):
        ode_residual(ode, sols["J"], 1e-4)
    ode, sols = get_ode("legendre(2)")
    with pytest.raises(DomainError):
        ode_residual(ode, sols["P"], 0.99995)


def test_unknown_and_malformed_ids():
    with pytest.raises(UnknownIdError):
        get_ode("no_such_equation")
    with pytest.raises(UnknownIdError):
        get_ode("bessel(a,b)")
    with pytest.raises(ParameterError):
        get_ode("bessel(1,2,3,4)")


def test_parse_and_format_ids_round_trip():
    assert parse_id("bessel(0,1)") == ("bessel", (0.0, 1.0))
    assert parse_id("elliptic_K") == ("elliptic_K", ())
    assert format_id("bessel", 0.0, 1.0) == "bessel(0,1)"
    name, params = parse_id(format_id("legendre", GOLDEN))
    assert name == "legendre" and params == (GOLDEN,)


def test_catalog_lookup_is_cached_and_immutable():
    assert get_ode("bessel(0,1)") is get_ode("bessel(0,1)")
    with pytest.raises(TypeError):
        DEFAULT_CATALOG.builders["x"] = None


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("oid,grid", CATALOG_CASES, ids=CASE_IDS)
def test_closed_factor_satisfies_f_prime_equals_p_f(oid, grid):
    ode = get_ode(oid).ode
    assert ode.f_closed is not None
    h = 1e-6
    f = ode.f_closed
    fd = (f(grid + h) - f(grid - h)) / (2 * h)
    pf = ode.p(grid) * f(grid)
    scale = np.abs(pf) + 1e-3 * np.max(np.abs(pf))
    assert np.all(np.abs(fd - pf) <= 1e-8 * scale + 1e-14)
    np.testing.assert_allclose(ode.df(grid), pf, rtol=1e-15)


@pytest.mark.parametrize("oid,grid", CATALOG_CASES, ids=CASE_IDS)
def test_every_catalog_solution_solves_its_ode(oid, grid):
    ode, sols = get_ode(oid)
    for name, sol in sols.items():
        assert np.max(normalized_residual(ode, sol, grid)) <= 1e-5, name


def test_gauged_k_solves_its_equation():
    ode, sols = get_ode("elliptic_K_gauged")
    k = np.linspace(0.1, 0.9, 20)
    kpK = SolutionFn("k'K", lambda t: _times_kprime(specfun.eval_elliptic("K", t), t), (0.0, 1.0))
    assert np.max(normalized_residual(ode, kpK, k)) <= 1e-5
    assert np.max(normalized_residual(ode, sols["kpK"], k)) <= 1e-5


def _times_kprime(r, k):
    kp = np.sqrt(1 - k * k)
    return specfun.FnEval(kp * r.value, kp * r.d1 - k / kp * r.value)


def test_riccati_weighted_legendre_solves_its_equation():
    nu, mu = 2.0, 1.0
    ode = get_ode("legendre_riccati(2,1)").ode
    x = np.linspace(-0.8, 0.8, 20)

    def ev(t):
        w = ((1 - t) / (1 + t)) ** (mu / 2)
        dw = -mu / (1 - t * t) * w
        p = specfun.eval_legendre("P", nu, mu, t)
        return specfun.FnEval(w * p.value, dw * p.value + w * p.d1)

    assert np.max(normalized_residual(ode, SolutionFn("wP", ev, (-1.0, 1.0)), x)) <= 1e-5


def test_bessel_conjugate_partner_shares_p():
    bessel = get_ode("bessel(0,1)").ode
    econj = get_ode("E_conjugate_bessel").ode
    k = np.linspace(0.1, 0.9, 9)
    np.testing.assert_allclose(bessel.p(k), econj.p(k), rtol=1e-15)


@given(x=st.floats(-0.95, 0.95), nu=st.floats(0.1, 4.0))
def test_legendre_solutions_property(x, nu):
    ode, sols = get_ode(format_id("legendre", nu))
    assert float(normalized_residual(ode, sols["P"], np.array([x]))[0]) <= 1e-5


@given(x=st.floats(0.3, 15.0), n=st.integers(0, 5), alpha=st.floats(0.5, 2.0))
def test_bessel_solutions_property(x, n, alpha):
    ode, sols = get_ode(format_id("bessel", n, alpha))
    for sol in sols.values():
        assert float(normalized_residual(ode, sol, np.array([x / alpha]))[0]) <= 1e-5


def test_modified_bessel_has_minus_sign():
    # I_n solves y'' + y'/x - (beta^2 + n^2/x^2) y = 0
    ode = get_ode("modified_bessel(1,2)").ode
    x = np.array([0.5, 1.5])
    np.testing.assert_allclose(ode.q(x), -(4.0 + 1.0 / x**2), rtol=1e-14)
    assert math.isclose(ode.p(1.0), 1.0)
