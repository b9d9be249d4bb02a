import numpy as np
import pytest
from scipy.integrate import quad

from harmcert import (JordanCurve, ModulusOfContinuity, build_curve,
                      chord_kernel, dini_integral, is_convex,
                      kernel_bound_check, modulus_of_continuity,
                      turning_angle, unit_speed_deviation)
from harmcert.errors import (NotClosed, SelfIntersecting, SpecError,
                             TooFewSamples, UnwrapFailure)

TWO_PI = 2.0 * np.pi


def closed_form_modulus(fn):
    return ModulusOfContinuity(omega=fn, kind="closed-form", safety=1.0,
                               length=1.0)


# -- construction -----------------------------------------------------------

def test_circle_length(circle):
    assert abs(circle.length - TWO_PI) <= 1e-8


def test_degenerate_ellipse_matches_circle(circle):
    e = build_curve({"type": "ellipse", "a": 1.0, "b": 1.0})
    assert abs(e.length - circle.length) <= 1e-8
    s = np.linspace(0, TWO_PI, 64)
    assert np.max(np.abs(e.position(s) - circle.position(s))) <= 1e-8


def test_polar3_length_against_quadrature_oracle(polar3):
    # independent oracle: adaptive quadrature of sqrt(r^2 + r'^2)
    r = lambda th: 1 + 0.3 * np.cos(3 * th)
    dr = lambda th: -0.9 * np.sin(3 * th)
    oracle, err = quad(lambda th: np.hypot(r(th), dr(th)), 0, TWO_PI,
                       limit=200, epsabs=1e-12, epsrel=1e-12)
    assert err < 1e-9
    assert abs(polar3.length - oracle) <= 1e-8


def test_unit_speed_invariant(circle, ellipse21, ellipse51, polar3, polar_convex):
    for curve in (circle, ellipse21, ellipse51, polar3, polar_convex):
        assert unit_speed_deviation(curve, 1024) <= 1e-8


def test_closure(circle, ellipse21, polar3):
    for curve in (circle, ellipse21, polar3):
        gap = abs(complex(curve.position(0.0))
                  - complex(curve.position(curve.length)))
        assert gap <= 1e-8 * max(1.0, curve.diameter)


def test_points_curve_roundtrip():
    th = np.linspace(0, TWO_PI, 48, endpoint=False)
    r = 1 + 0.15 * np.cos(2 * th) + 0.05 * np.sin(3 * th)
    xy = np.c_[r * np.cos(th), r * np.sin(th)]
    curve = build_curve({"type": "points", "xy": xy.tolist()})
    assert unit_speed_deviation(curve) <= 1e-8
    assert turning_angle(curve).total == pytest.approx(TWO_PI, abs=1e-6)


def test_points_orientation_normalized():
    th = np.linspace(0, TWO_PI, 32, endpoint=False)
    xy = np.c_[np.cos(-th), np.sin(-th)]     # clockwise input
    curve = build_curve({"type": "points", "xy": xy.tolist()})
    assert turning_angle(curve).total == pytest.approx(TWO_PI, abs=1e-6)


# -- construction errors ----------------------------------------------------

def test_too_few_samples():
    th = np.linspace(0, TWO_PI, 8, endpoint=False)
    xy = np.c_[np.cos(th), np.sin(th)]
    with pytest.raises(TooFewSamples):
        build_curve({"type": "points", "xy": xy.tolist()})


def test_not_closed_open_arc():
    th = np.linspace(0, np.pi, 20)            # half circle, open
    xy = np.c_[np.cos(th), np.sin(th)]
    with pytest.raises(NotClosed):
        build_curve({"type": "points", "xy": xy.tolist()})


def test_self_intersecting_figure_eight():
    t = np.linspace(0, TWO_PI, 40, endpoint=False) + 0.05
    xy = np.c_[np.sin(2 * t), np.sin(t)]
    with pytest.raises(SelfIntersecting):
        build_curve({"type": "points", "xy": xy.tolist()})


def test_spec_errors_name_the_field():
    with pytest.raises(SpecError, match="'type'"):
        build_curve({"radius": 1.0})
    with pytest.raises(SpecError, match="'a'"):
        build_curve({"type": "ellipse", "b": 1.0})
    with pytest.raises(SpecError, match="formula_id"):
        build_curve({"type": "polar"})


# -- chord kernel -----------------------------------------------------------

def test_kernel_circle_values(circle):
    assert chord_kernel(circle, 0.0, np.pi) == pytest.approx(2.0, abs=1e-10)
    assert chord_kernel(circle, 0.0, np.pi / 2) == pytest.approx(1.0, abs=1e-10)


def test_kernel_vanishes_on_diagonal(circle, ellipse21, polar3):
    for curve in (circle, ellipse21, polar3):
        s = np.linspace(0, curve.length, 17)
        assert np.all(chord_kernel(curve, s, s) == 0.0)


def test_kernel_circle_closed_form(circle):
    s = np.linspace(0, TWO_PI, 48, endpoint=False)
    kmat = np.array([[chord_kernel(circle, si, ti) for ti in s] for si in s])
    expect = 1.0 - np.cos(s[None, :] - s[:, None])
    assert np.max(np.abs(kmat - expect)) <= 1e-10


def test_kernel_periodicity(ellipse21):
    rng = np.random.default_rng(11)
    l = ellipse21.length
    for _ in range(100):
        s, t = rng.uniform(0, l, 2)
        base = chord_kernel(ellipse21, s, t)
        assert abs(chord_kernel(ellipse21, s + l, t) - base) <= 1e-12
        assert abs(chord_kernel(ellipse21, s, t + l) - base) <= 1e-12


# -- convexity --------------------------------------------------------------

def test_is_convex_families(circle, ellipse21, polar3, polar_convex):
    assert is_convex(circle)
    assert is_convex(ellipse21)
    assert is_convex(polar_convex)
    assert not is_convex(polar3)


def test_polar3_nonconvex_by_curvature_oracle(polar3):
    # oracle: dense curvature sampling finds a sign change
    s = np.linspace(0, polar3.length, 4096, endpoint=False)
    kappa = polar3.curvature(s)
    assert kappa.min() < -1e-3 and kappa.max() > 0


def test_convexity_matches_turning_monotonicity(circle, ellipse21, polar3,
                                                polar_convex):
    for curve in (circle, ellipse21, polar3, polar_convex):
        beta = turning_angle(curve).beta
        s = np.linspace(0, curve.length, 4096, endpoint=False)
        monotone = bool(np.min(np.diff(beta(s))) >= -1e-8)
        assert monotone == is_convex(curve)


# -- turning angle ----------------------------------------------------------

def test_turning_circle_closed_form(circle):
    ta = turning_angle(circle)
    s = np.linspace(0, TWO_PI, 101)
    offset = ta.beta(0.0) - np.pi / 2
    assert np.max(np.abs(ta.beta(s) - (s + np.pi / 2 + offset))) <= 1e-8


def test_turning_total_is_one_turn(circle, ellipse21, ellipse51, polar3):
    for curve in (circle, ellipse21, ellipse51, polar3):
        assert turning_angle(curve).total == pytest.approx(TWO_PI, abs=1e-6)


def test_turning_reproduces_tangent(ellipse21):
    ta = turning_angle(ellipse21)
    s = np.linspace(0, ellipse21.length, 257)
    dev = np.abs(np.exp(1j * ta.beta(s)) - ellipse21.tangent(s))
    assert np.max(dev) <= 1e-8


def test_unwrap_failure_on_discontinuous_tangent():
    jumpy = JordanCurve(
        length=TWO_PI,
        position=lambda s: np.exp(1j * np.asarray(s, dtype=float)),
        tangent=lambda s: np.where(np.asarray(s, dtype=float) % TWO_PI < 3.0,
                                   1.0 + 0j, -1.0 + 0j),
        source={"kind": "synthetic"}, spec={}, curve_id="jumpy", diameter=2.0)
    with pytest.raises(UnwrapFailure):
        turning_angle(jumpy)


# -- modulus of continuity --------------------------------------------------

def test_modulus_circle_closed_form(circle):
    om = modulus_of_continuity(circle)
    assert om.kind == "closed-form"
    assert om.omega(np.pi) == pytest.approx(2.0, abs=1e-12)
    assert om.omega(0.0) == 0.0
    assert om.omega(1e-6) / 1e-6 == pytest.approx(1.0, abs=1e-6)


def test_modulus_grid_monotone(ellipse21):
    om = modulus_of_continuity(ellipse21, 512)
    d = np.linspace(0, ellipse21.length, 200)
    vals = om.omega(d)
    assert vals[0] == 0.0
    assert np.all(np.diff(vals) >= 0)
    assert om.safety == pytest.approx(1.05)


# -- Dini integral ----------------------------------------------------------

def test_dini_linear_modulus():
    res = dini_integral(closed_form_modulus(lambda t: np.asarray(t)), 1.0)
    assert res.convergent and res.value == pytest.approx(1.0, abs=1e-10)


def test_dini_sqrt_modulus():
    res = dini_integral(
        closed_form_modulus(lambda t: np.sqrt(np.asarray(t))), 1.0)
    assert res.convergent and res.value == pytest.approx(2.0, abs=1e-8)


def test_dini_log_divergence():
    res = dini_integral(
        closed_form_modulus(lambda t: 1.0 / np.log(np.e / np.asarray(t))), 1.0)
    assert not res.convergent and res.value is None


def test_dini_grid_estimated_curves(ellipse21, polar3):
    for curve in (ellipse21, polar3):
        om = modulus_of_continuity(curve, 512)
        assert dini_integral(om, curve.length / 2).convergent


# -- kernel bound -----------------------------------------------------------

def test_kernel_bound_circle_closed_forms(circle):
    om = modulus_of_continuity(circle)
    rec = kernel_bound_check(circle, om, 0.0, 1.0)
    assert rec.lhs == pytest.approx(2 * np.sin(0.5) ** 2, abs=1e-10)
    assert rec.rhs == pytest.approx(4 * (1 - np.cos(0.5)), abs=1e-8)
    assert rec.holds


def test_kernel_bound_coincident(circle):
    om = modulus_of_continuity(circle)
    rec = kernel_bound_check(circle, om, 1.3, 1.3)
    assert rec.lhs == 0.0 and rec.holds


@pytest.mark.parametrize("fixture", ["circle", "ellipse21", "ellipse51",
                                     "polar3", "polar_convex"])
def test_kernel_bound_random_pairs(fixture, request):
    curve = request.getfixturevalue(fixture)
    om = modulus_of_continuity(curve, 1024)
    rng = np.random.default_rng(5)
    pairs = rng.uniform(0, curve.length, (1000, 2))
    for s, t in pairs:
        assert kernel_bound_check(curve, om, s, t).holds
