import numpy as np
import pytest

from harmcert import (BoundaryMap, boundary_kernel, boundary_kernel_direct,
                      build_param, lipschitz_estimate, mollify)
from harmcert.errors import (InvalidParams, NotMonotone, SpecError,
                             WrongPeriodIncrement)

TWO_PI = 2.0 * np.pi


@pytest.fixture(scope="module")
def tsint(circle):
    return build_param({"type": "sin-perturbed", "a": 1, "k": 1}, circle.length)


# -- construction and validation --------------------------------------------

def test_identity(circle):
    p = build_param({"type": "identity"}, circle.length)
    assert p.lipschitz_L == pytest.approx(1.0, abs=1e-9)
    assert p.strict
    t = np.linspace(0, TWO_PI, 64)
    assert np.max(np.abs(p.f(t) - t * circle.length / TWO_PI)) <= 1e-12


def test_sin_perturbed_flat(tsint):
    assert tsint.f_prime(0.0) == 0.0
    assert not tsint.strict
    assert tsint.lipschitz_L == pytest.approx(2.0, abs=1e-9)


def test_knots_strict_by_dense_grid_oracle(circle, knots_param):
    assert knots_param.strict
    dense = np.linspace(0, TWO_PI, 8192)
    assert np.min(knots_param.f_prime(dense)) > 0.0
    assert np.all(np.diff(knots_param.f(dense)) >= 0)


def test_monotonicity_structural(circle, tsint, knots_param):
    dense = np.linspace(-2 * TWO_PI, 2 * TWO_PI, 4001)
    for p in (tsint, knots_param):
        assert np.all(np.diff(p.f(dense)) >= 0)


def test_quasi_periodicity(circle, tsint, knots_param):
    rng = np.random.default_rng(2)
    t = rng.uniform(-10, 10, 100)
    for p in (tsint, knots_param):
        dev = np.abs(p.f(t + TWO_PI) - p.f(t) - p.length)
        assert np.max(dev) <= 1e-12


def test_lipschitz_grid_bound(circle, tsint, knots_param):
    for p in (tsint, knots_param):
        grid = np.linspace(0, TWO_PI, 4097)
        quot = np.diff(p.f(grid)) / (TWO_PI / 4096)
        assert np.max(quot) <= p.lipschitz_L * (1 + 1e-9)
        assert p.lipschitz_L >= p.length / TWO_PI


def test_invalid_params():
    with pytest.raises(InvalidParams):
        build_param({"type": "sin-perturbed", "a": 0.6, "k": 2}, TWO_PI)


def test_not_monotone():
    spec = {"type": "knots", "t": [0.0, 2.0, 4.0, TWO_PI],
            "f": [0.0, 3.0, 2.0, TWO_PI]}
    with pytest.raises(NotMonotone):
        build_param(spec, TWO_PI)


def test_wrong_period_increment():
    spec = {"type": "knots", "t": [0.0, 2.0, 4.0, TWO_PI],
            "f": [0.0, 1.0, 2.0, 5.0]}
    with pytest.raises(WrongPeriodIncrement):
        build_param(spec, TWO_PI)


def test_map_spec_errors():
    with pytest.raises(SpecError, match="'type'"):
        build_param({}, TWO_PI)
    with pytest.raises(SpecError, match="'k'"):
        build_param({"type": "sin-perturbed", "a": 0.5}, TWO_PI)
    with pytest.raises(SpecError, match="'k'"):
        build_param({"type": "sin-perturbed", "a": 0.5, "k": 1.5}, TWO_PI)


def test_boundary_map_length_mismatch(circle):
    p = build_param({"type": "identity"}, 5.0)
    with pytest.raises(WrongPeriodIncrement):
        BoundaryMap(circle, p)


# -- composed boundary data ---------------------------------------------------

def test_composition_speed_identity(circle, ellipse21, tsint):
    # |F'| = f' via central differences of F (closed forms)
    for curve in (circle, ellipse21):
        p = build_param({"type": "sin-perturbed", "a": 0.5, "k": 1},
                        curve.length)
        bm = BoundaryMap(curve, p)
        tau = np.linspace(0.1, TWO_PI, 40)
        h = 1e-5
        fd = np.abs(bm.F(tau + h) - bm.F(tau - h)) / (2 * h)
        assert np.max(np.abs(fd - p.f_prime(tau))) <= 1e-9 * (1 + np.max(fd))


def test_kernel_dual_formula(circle, ellipse21, polar3, tsint):
    rng = np.random.default_rng(4)
    t, tau = rng.uniform(0, TWO_PI, (2, 1000))
    for curve in (circle, ellipse21, polar3):
        p = build_param({"type": "sin-perturbed", "a": 1, "k": 1}, curve.length)
        bm = BoundaryMap(curve, p)
        dev = np.abs(boundary_kernel(bm, t, tau)
                     - boundary_kernel_direct(bm, t, tau))
        assert np.max(dev) <= 1e-10


def test_kernel_examples(circle, tsint):
    idp = build_param({"type": "identity"}, circle.length)
    bmi = BoundaryMap(circle, idp)
    assert boundary_kernel(bmi, 0.3 + np.pi, 0.3) == pytest.approx(2.0, abs=1e-9)
    assert boundary_kernel(bmi, 1.0, 1.0) == 0.0
    bmt = BoundaryMap(circle, tsint)
    for t in (0.5, 2.0, 4.0, 6.0):
        assert boundary_kernel(bmt, t, 0.0) == 0.0   # f'(0) = 0 annihilates


# -- mollification -----------------------------------------------------------

def test_mollify_fixes_linear_maps(circle):
    idp = build_param({"type": "identity"}, circle.length)
    grid = np.linspace(0, TWO_PI, 257)
    for n in (1, 2, 7, 16):
        mn = mollify(idp, n)
        assert np.max(np.abs(mn.f(grid) - idp.f(grid))) <= 1e-14
        assert mn.strict


def test_mollify_sup_norm_bound(circle, tsint):
    # grid-evaluation oracle for the sup distance at n = 10
    m = mollify(tsint, 10)
    dense = np.linspace(0, TWO_PI, 8192, endpoint=False)
    sup = np.max(np.abs(m.f(dense) - tsint.f(dense)))
    assert sup <= 2 * (np.pi / 10) + 0.1


def test_mollify_contracts(circle, tsint, knots_param):
    dense = np.linspace(0, TWO_PI, 8192, endpoint=False)
    quot_grid = np.linspace(0, TWO_PI, 8193)
    for p in (tsint, knots_param):
        prev = np.inf
        for n in (2, 4, 8, 16, 32):
            mn = mollify(p, n)
            assert mn.strict
            floor = (1.0 / n) * p.length / TWO_PI
            assert np.min(mn.f_prime(dense)) >= floor - 1e-12
            quot = np.diff(mn.f(quot_grid)) / (TWO_PI / 8192)
            assert np.max(quot) <= p.lipschitz_L * (1 + 1e-9)
            sup = float(np.max(np.abs(mn.f(dense) - p.f(dense))))
            assert sup <= prev + 1e-15
            # envelope from the construction itself
            p_part = p.f(dense) - dense * p.length / TWO_PI
            bound = (p.lipschitz_L * np.pi / n
                     + np.max(np.abs(p_part)) / n)
            assert sup <= bound + 1e-12
            prev = sup


def test_mollify_preserves_quasi_period(circle, tsint):
    m = mollify(tsint, 5)
    rng = np.random.default_rng(9)
    t = rng.uniform(-7, 7, 50)
    assert np.max(np.abs(m.f(t + TWO_PI) - m.f(t) - m.length)) <= 1e-12


# -- Lipschitz estimates -----------------------------------------------------

def test_lipschitz_estimate_identity(circle):
    p = build_param({"type": "identity"}, circle.length)
    b = lipschitz_estimate(p, 512)
    assert b.L_lower == pytest.approx(1.0, abs=1e-9)
    assert b.ell_lower == pytest.approx(1.0, abs=1e-9)


def test_lipschitz_estimate_flat_derivative(circle, tsint):
    b1 = lipschitz_estimate(tsint, 512)
    b2 = lipschitz_estimate(tsint, 2048)
    assert b2.ell_lower < b1.ell_lower      # vanishes with refinement
    assert b2.ell_lower < 1e-4


def test_lipschitz_estimate_strict(circle):
    p = build_param({"type": "sin-perturbed", "a": 0.5, "k": 1}, circle.length)
    b1 = lipschitz_estimate(p, 512)
    b2 = lipschitz_estimate(p, 2048)
    assert b1.ell_lower >= 0.5 - 1e-9       # f' >= 0.5 forces this
    assert abs(b1.ell_lower - b2.ell_lower) <= 1e-4   # stable in grid_n
    assert b1.L_lower <= p.lipschitz_L * (1 + 1e-9)
