"""Boundary Jacobian factor T and its dominating-function diagnostics.

T(tau) is the angular factor of the boundary Jacobian of the harmonic
extension: J along the boundary splits as f'(tau) * T(tau).  It is computed
by two independent quadrature routes,

* singular route: (1/2 pi) integral of K(f(tau), f(tau+u)) / (2 sin^2(u/2))
  over u in (-pi, pi), where K is the curve chord kernel;
* cotangent route: (1/2 pi) integral of
  f'(tau+u) sin(beta(f(tau+u)) - beta(f(tau))) cot(u/2),
  obtained from the first by parts, with beta the turning-angle lift.

Both integrands are absolutely integrable for Dini-smooth curves with
Lipschitz parametrizations; the 1/(2 pi) normalization is pinned by the
identity map on the unit circle, whose factor must be exactly 1.  The
agreement of the two routes is the strongest internal correctness check of
the toolkit and is enforced by the profile cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .boundary import BoundaryMap
from .curves import ModulusOfContinuity, chord_kernel, turning_angle
from .errors import CrossCheckFailed, DiniViolation, QuadratureNotConverged
from .quadrature import graded_quad

TWO_PI = 2.0 * np.pi


@dataclass
class TPointResult:
    value: float
    err_est: float
    levels: int


@dataclass
class TProfile:
    """Sampled factor values over a uniform boundary grid."""

    taus: np.ndarray
    values: np.ndarray
    errors_est: np.ndarray
    route: str
    min_value: float
    argmin: float
    f_prime: np.ndarray
    tol: float
    values_singular: Optional[np.ndarray] = None
    values_cotangent: Optional[np.ndarray] = None


@dataclass
class DominatingBound:
    """Pointwise dominator Q of the normalized singular integrand.

    integral_value is 2 * int_0^pi Q (the mass over (-pi, pi)); the same
    quantity evaluated through the reduction identity for iterated
    modulus integrals is kept alongside as a certification of the
    implementation, with their relative gap.
    """

    Q: Callable
    integral_value: float
    identity_value: float
    rel_gap: float
    lipschitz_L: float


def _singular_values(bmap: BoundaryMap, taus: np.ndarray, tol: float,
                     max_levels: int = 60):
    curve, param = bmap.curve, bmap.param
    f = param.f
    ftau = f(taus)
    pscale = max(1.0, 0.5 * curve.diameter + float(np.abs(curve.position(0.0))))
    eps_k = 8.0 * 2.3e-16 * pscale

    def integrand(idx, u):
        k = chord_kernel(curve, ftau[idx], f(taus[idx] + u))
        return k / (2.0 * np.sin(0.5 * u) ** 2) / TWO_PI

    def noise_at(u):
        return eps_k / (2.0 * np.sin(0.5 * u) ** 2) / TWO_PI

    return graded_quad(integrand, taus.size, tol, noise_at=noise_at,
                       max_levels=max_levels)


def _cotangent_values(bmap: BoundaryMap, taus: np.ndarray, tol: float,
                      max_levels: int = 60):
    curve, param = bmap.curve, bmap.param
    f, fp = param.f, param.f_prime
    beta = turning_angle(curve).beta
    btau = beta(f(taus))
    eps_b = 8.0 * 2.3e-16 * max(1.0, param.lipschitz_L)

    def integrand(idx, u):
        fval = f(taus[idx] + u)
        return (fp(taus[idx] + u) * np.sin(beta(fval) - btau[idx])
                / np.tan(0.5 * u)) / TWO_PI

    def noise_at(u):
        return eps_b * abs(1.0 / np.tan(0.5 * u)) / TWO_PI

    return graded_quad(integrand, taus.size, tol, noise_at=noise_at,
                       max_levels=max_levels)


def _single(engine, bmap, tau, tol, max_levels) -> TPointResult:
    if tol < 1e-10:
        raise ValueError("tol must be >= 1e-10")
    res = engine(bmap, np.atleast_1d(float(tau)), tol, max_levels)
    value, err, lev = float(res.value[0]), float(res.err[0]), int(res.levels[0])
    if err > tol:
        raise QuadratureNotConverged(
            f"error estimate {err:.3e} > tol {tol:.3e} after {lev} levels")
    return TPointResult(value=value, err_est=err, levels=lev)


def t_singular(bmap: BoundaryMap, tau: float, tol: float = 1e-7,
               max_levels: int = 60) -> TPointResult:
    """Factor at tau by graded quadrature of the chord-kernel integrand."""
    return _single(_singular_values, bmap, tau, tol, max_levels)


def t_cotangent(bmap: BoundaryMap, tau: float, tol: float = 1e-7,
                max_levels: int = 60) -> TPointResult:
    """Factor at tau by the integrated-by-parts cotangent integrand."""
    return _single(_cotangent_values, bmap, tau, tol, max_levels)


def t_profile(bmap: BoundaryMap, grid_n: int, tol: float = 1e-7,
              route: str = "both-averaged") -> TProfile:
    """Factor profile on a uniform grid of size grid_n (>= 64).

    Route "both-averaged" evaluates both quadrature routes, enforces
    pointwise agreement within 10 * tol, and stores their average.
    """
    if grid_n < 64:
        raise ValueError("grid_n must be >= 64")
    if tol < 1e-10:
        raise ValueError("tol must be >= 1e-10")
    taus = TWO_PI * np.arange(grid_n) / grid_n
    vs = vc = None
    if route in ("singular", "both-averaged"):
        rs = _singular_values(bmap, taus, tol)
        _raise_if_unconverged(rs, taus, tol, "singular")
        vs = rs
    if route in ("cotangent", "both-averaged"):
        rc = _cotangent_values(bmap, taus, tol)
        _raise_if_unconverged(rc, taus, tol, "cotangent")
        vc = rc
    if route == "singular":
        values, errors = vs.value, vs.err
    elif route == "cotangent":
        values, errors = vc.value, vc.err
    elif route == "both-averaged":
        gap = np.abs(vs.value - vc.value)
        worst = int(np.argmax(gap))
        if gap[worst] > 10.0 * tol:
            raise CrossCheckFailed(
                f"routes disagree by {gap[worst]:.3e} > 10*tol at "
                f"tau = {taus[worst]:.6f}")
        values = 0.5 * (vs.value + vc.value)
        errors = np.maximum(vs.err, vc.err)
    else:
        raise ValueError(f"unknown route {route!r}")
    imin = int(np.argmin(values))
    return TProfile(
        taus=taus, values=values, errors_est=errors, route=route,
        min_value=float(values[imin]), argmin=float(taus[imin]),
        f_prime=np.asarray(bmap.param.f_prime(taus), dtype=float), tol=tol,
        values_singular=None if vs is None else vs.value,
        values_cotangent=None if vc is None else vc.value)


def _raise_if_unconverged(res, taus, tol, name):
    bad = int(np.argmax(res.err))
    if res.err[bad] > tol:
        raise QuadratureNotConverged(
            f"{name} route: error estimate {res.err[bad]:.3e} > tol {tol:.3e} "
            f"at tau = {taus[bad]:.6f}")


def boundary_jacobian(bmap: BoundaryMap, profile: TProfile) -> np.ndarray:
    """Boundary Jacobian samples f'(tau_i) * T(tau_i)."""
    return profile.f_prime * profile.values


def dominating_bound(bmap: BoundaryMap, omega: ModulusOfContinuity) -> DominatingBound:
    """Assemble Q(t) = (pi L^2 / 4 t^2) int_0^t omega_up(L u) du and its mass.

    The mass over (-pi, pi) is computed twice: directly, and through the
    identity that rewrites the iterated integral of a modulus against 1/t^2
    as a single weighted modulus integral.  Their relative gap certifies the
    implementation; failure of either quadrature to converge means the curve
    is not numerically Dini-smooth at the working resolution.
    """
    L = bmap.param.lipschitz_L

    def q_fn(t):
        t = np.asarray(t, dtype=float)
        out = (np.pi * L / 4.0) * omega.cumulative_upper(L * t) / t ** 2
        return out if out.ndim else float(out)

    if omega._env is not None:
        direct = _q_mass_exact(omega, L)
        ident = _identity_mass_exact(omega, L)
    else:
        res_d = graded_quad(
            lambda idx, t: (np.pi * L / 4.0) * omega.cumulative_upper(L * t) / t ** 2,
            1, 1e-9, two_sided=False, max_levels=60)
        res_i = graded_quad(
            lambda idx, x: (np.pi * L * L / 4.0) * omega.upper(L * x)
            * (1.0 / x - 1.0 / np.pi),
            1, 1e-9, two_sided=False, max_levels=60)
        if res_d.err[0] > 1e-6 * max(abs(res_d.value[0]), 1e-12):
            raise DiniViolation(
                "direct dominating-bound integral failed to converge")
        direct, ident = float(res_d.value[0]), float(res_i.value[0])
    rel_gap = abs(direct - ident) / max(abs(direct), 1e-300)
    return DominatingBound(Q=q_fn, integral_value=2.0 * direct,
                           identity_value=2.0 * ident, rel_gap=rel_gap,
                           lipschitz_L=L)


def _envelope_pieces(omega: ModulusOfContinuity, L: float):
    """Breakpoints/rates of x -> omega.upper(L x) on (0, pi], plus W pieces.

    Returns arrays (x_edges, rate) where omega_up(L x) = rate[i] on
    (x_edges[i], x_edges[i+1]]; the first piece is the linear ramp.
    """
    h = omega._lag
    n = omega._env.size
    edges = [0.0]
    k = 1
    while k * h / L < np.pi and k < n - 1:
        edges.append(k * h / L)
        k += 1
    edges.append(np.pi)
    edges = np.asarray(edges)
    rates = omega.safety * omega._env[np.minimum(np.arange(1, edges.size), n - 1)]
    return edges, rates


def _q_mass_exact(omega: ModulusOfContinuity, L: float) -> float:
    """int_0^pi (pi L^2/4) W(x)/x^2 dx exactly, W(x) = int_0^x omega_up(L u) du.

    W is quadratic on the ramp piece and affine on each step piece, so each
    contribution has a closed form.
    """
    edges, rates = _envelope_pieces(omega, L)
    h_over_l = omega._lag / L
    total = 0.0
    w_at = 0.0
    # ramp piece: omega_up(Lu) = rate0 * u / h_over_l, W = rate0 u^2 / (2 h/L)
    a, b = edges[0], edges[1]
    total += rates[0] * (b - a) / (2.0 * h_over_l)  # int W/x^2 = int rate0 x/(2h') dx / ...
    w_at = rates[0] * b * b / (2.0 * h_over_l)
    for i in range(1, edges.size - 1):
        a, b, r = edges[i], edges[i + 1], rates[i]
        # W(x) = w_at + r (x - a) = alpha + r x, alpha = w_at - r a
        alpha = w_at - r * a
        total += alpha * (1.0 / a - 1.0 / b) + r * np.log(b / a)
        w_at += r * (b - a)
    return float(np.pi * L * L / 4.0) * total


def _identity_mass_exact(omega: ModulusOfContinuity, L: float) -> float:
    """int_0^pi (pi L^2/4) omega_up(L x) (1/x - 1/pi) dx exactly."""
    edges, rates = _envelope_pieces(omega, L)
    total = 0.0
    a, b = edges[0], edges[1]
    h_over_l = omega._lag / L
    # ramp: omega_up = rate0 x / h', integrand rate0 (1/h' - x/(pi h'))
    total += rates[0] * ((b - a) - (b * b - a * a) / (2.0 * np.pi)) / h_over_l
    for i in range(1, edges.size - 1):
        a, b, r = edges[i], edges[i + 1], rates[i]
        total += r * (np.log(b / a) - (b - a) / np.pi)
    return float(np.pi * L * L / 4.0) * total
