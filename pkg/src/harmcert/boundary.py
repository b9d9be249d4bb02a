"""Weak homeomorphisms of the circle onto [0, length] and their smoothing.

A boundary parametrization is a nondecreasing Lipschitz ``f`` with
``f(t + 2*pi) = f(t) + length``; composed with the arc-length curve it gives
the boundary data ``F(t) = position(f(t))`` whose harmonic extension the
certifier studies.  ``mollify`` produces strictly increasing approximants by
convolving the periodic part of ``f`` with a compactly supported bump and
mixing in a linear share, which preserves the Lipschitz constant and the
quasi-period exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.interpolate import PchipInterpolator

from .curves import JordanCurve, chord_kernel
from .errors import InvalidParams, NotMonotone, SpecError, WrongPeriodIncrement

TWO_PI = 2.0 * np.pi


@dataclass
class WeakHomeomorphism:
    """Nondecreasing circle parametrization with quasi-period ``length``.

    ``f`` and ``f_prime`` are vectorized over ndarrays; ``f_prime`` is the
    a.e. derivative (one-sided values at interpolation knots), clamped to be
    nonnegative.  ``lipschitz_L`` is an upper bound for the slope, exact for
    closed forms and grid-estimated (times a 1.02 safety factor) otherwise.
    """

    f: Callable
    f_prime: Callable
    lipschitz_L: float
    strict: bool
    length: float
    source: dict
    spec: dict
    map_id: str


@dataclass
class BoundaryMap:
    """Composed boundary data F = position o f on a validated pair."""

    curve: JordanCurve
    param: WeakHomeomorphism

    def __post_init__(self):
        if abs(self.curve.length - self.param.length) > 1e-9 * max(1.0, self.curve.length):
            raise WrongPeriodIncrement(
                f"parametrization increment {self.param.length:.12g} does not match "
                f"curve length {self.curve.length:.12g}")

    def F(self, t):
        return self.curve.position(self.param.f(t))

    def F_prime(self, t):
        return self.curve.tangent(self.param.f(t)) * self.param.f_prime(t)


@dataclass
class LipschitzBounds:
    L_lower: float
    ell_lower: float


def _scalar_ok(fn):
    def wrapped(t):
        t_arr = np.asarray(t, dtype=float)
        out = fn(np.atleast_1d(t_arr))
        return float(out[0]) if t_arr.ndim == 0 else out.reshape(t_arr.shape)
    return wrapped


def build_param(spec: dict, curve_length: float) -> WeakHomeomorphism:
    """Build a validated parametrization from a specification dict.

    Types: identity (proportional to arc length), sin-perturbed
    (f = c (t - a sin(k t)) with integer k and |a k| <= 1), knots (monotone
    samples on [0, 2*pi], monotone cubic interpolation).
    """
    if not isinstance(spec, dict):
        raise SpecError("map spec must be a JSON object; missing field 'type'")
    if "type" not in spec:
        raise SpecError("map spec missing required field 'type'")
    kind = spec["type"]
    c = curve_length / TWO_PI

    if kind == "identity":
        f = _scalar_ok(lambda t: c * t)
        fp = _scalar_ok(lambda t: np.full_like(t, c))
        return WeakHomeomorphism(
            f=f, f_prime=fp, lipschitz_L=c, strict=True, length=curve_length,
            source={"kind": "closed-form", "name": "identity", "params": {}},
            spec=dict(spec), map_id="identity")

    if kind == "sin-perturbed":
        if "a" not in spec:
            raise SpecError("sin-perturbed map spec missing required field 'a'")
        if "k" not in spec:
            raise SpecError("sin-perturbed map spec missing required field 'k'")
        a = float(spec["a"])
        k_raw = spec["k"]
        if float(k_raw) != int(float(k_raw)) or int(float(k_raw)) < 1:
            raise SpecError("sin-perturbed map spec field 'k' must be a positive integer")
        k = int(float(k_raw))
        if abs(a * k) > 1.0 + 1e-15:
            raise InvalidParams(
                f"|a*k| = {abs(a * k):g} > 1 would break monotonicity")
        f = _scalar_ok(lambda t: c * (t - a * np.sin(k * t)))
        fp = _scalar_ok(lambda t: np.maximum(c * (1.0 - a * k * np.cos(k * t)), 0.0))
        return WeakHomeomorphism(
            f=f, f_prime=fp, lipschitz_L=c * (1.0 + abs(a * k)),
            strict=bool(abs(a * k) < 1.0), length=curve_length,
            source={"kind": "closed-form", "name": "sin-perturbed",
                    "params": {"a": a, "k": k}},
            spec=dict(spec), map_id=f"sin-perturbed(a={a:g},k={k})")

    if kind == "knots":
        return _knots_param(spec, curve_length)

    raise SpecError(f"map spec field 'type' unknown: {kind!r}")


def _knots_param(spec: dict, curve_length: float) -> WeakHomeomorphism:
    for key in ("t", "f"):
        if key not in spec:
            raise SpecError(f"knots map spec missing required field '{key}'")
    tk = np.asarray(spec["t"], dtype=float)
    fk = np.asarray(spec["f"], dtype=float)
    if tk.size != fk.size or tk.size < 3:
        raise SpecError("knots map spec fields 't'/'f' must be equal-length (>= 3)")
    if abs(tk[0]) > 1e-12 or abs(tk[-1] - TWO_PI) > 1e-12:
        raise SpecError("knots map spec field 't' must start at 0 and end at 2*pi")
    if np.any(np.diff(tk) <= 0):
        raise SpecError("knots map spec field 't' must be strictly increasing")
    if np.any(np.diff(fk) < 0):
        raise NotMonotone("knots map spec field 'f' must be nondecreasing")
    inc = fk[-1] - fk[0]
    if abs(inc - curve_length) > 1e-9 * max(1.0, curve_length):
        raise WrongPeriodIncrement(
            f"f(2*pi) - f(0) = {inc:.12g} does not equal curve length "
            f"{curve_length:.12g}")
    interp = PchipInterpolator(tk, fk)
    dinterp = interp.derivative()
    f0 = float(fk[0])

    def f(t):
        wraps = np.floor(t / TWO_PI)
        return interp(t - wraps * TWO_PI) + wraps * curve_length

    def fp(t):
        wraps = np.floor(t / TWO_PI)
        return np.maximum(dinterp(t - wraps * TWO_PI), 0.0)

    grid = np.linspace(0.0, TWO_PI, 4096, endpoint=False)
    d = np.maximum(dinterp(grid), 0.0)
    lip = 1.02 * float(np.max((np.diff(interp(np.linspace(0.0, TWO_PI, 4097)))
                               / (TWO_PI / 4096))))
    lip = max(lip, curve_length / TWO_PI)
    strict = bool(np.min(d) > 0.0)
    return WeakHomeomorphism(
        f=_scalar_ok(f), f_prime=_scalar_ok(fp), lipschitz_L=lip, strict=strict,
        length=curve_length,
        source={"kind": "sampled", "name": "knots",
                "params": {"n": int(tk.size), "interpolation": "pchip",
                           "f0": f0}},
        spec=dict(spec), map_id=f"knots(n={tk.size})")


def boundary_kernel(bmap: BoundaryMap, t, tau):
    """Kernel of the composed boundary data: f'(tau) K(f(tau), f(t)).

    Identical (to rounding) with the direct form
    Re[conj(F(t) - F(tau)) * i F'(tau)], see ``boundary_kernel_direct``.
    """
    f = bmap.param.f
    return bmap.param.f_prime(tau) * chord_kernel(bmap.curve, f(tau), f(t))


def boundary_kernel_direct(bmap: BoundaryMap, t, tau):
    """Direct evaluation Re[conj(F(t) - F(tau)) * i F'(tau)] (self-test)."""
    diff = bmap.F(t) - bmap.F(tau)
    return np.real(np.conjugate(diff) * (1j * bmap.F_prime(tau)))


# ---------------------------------------------------------------------------
# mollification

_BUMP_M = 63


def _bump_nodes():
    v = np.linspace(-1.0, 1.0, _BUMP_M + 2)[1:-1]
    phi = np.exp(-1.0 / (1.0 - v * v))
    w = phi / np.sum(phi)          # exact unit mass by normalization
    return v, w


_BUMP_V, _BUMP_W = _bump_nodes()


def mollify(param: WeakHomeomorphism, n: int) -> WeakHomeomorphism:
    """Strictly increasing smoothing of ``param`` at scale pi/n.

    f_n = (1 - 1/n) (f * bump_{pi/n}) + (1/n) (length / 2 pi) t, where the
    convolution acts on the periodic part of f only, so linear maps are fixed
    points and the quasi-period is preserved exactly.  The derivative uses
    the same quadrature weights as the value, hence f_n' >= (1/n) length/2 pi
    holds as an exact inequality of floats.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    c = param.length / TWO_PI
    h = np.pi / float(n)
    lam = 1.0 - 1.0 / float(n)
    base_f, base_fp = param.f, param.f_prime
    shifts = h * _BUMP_V

    def f(t):
        t = np.asarray(t, dtype=float)
        args = t[..., None] - shifts
        pvals = base_f(args.ravel()).reshape(args.shape) - c * args
        return c * t + lam * (pvals @ _BUMP_W)

    def fp(t):
        t = np.asarray(t, dtype=float)
        args = t[..., None] - shifts
        dvals = base_fp(args.ravel()).reshape(args.shape)
        return c / float(n) + lam * (dvals @ _BUMP_W)

    return WeakHomeomorphism(
        f=_scalar_ok(f), f_prime=_scalar_ok(fp),
        lipschitz_L=param.lipschitz_L, strict=True, length=param.length,
        source={"kind": "closed-form", "name": "mollified",
                "params": {"n": int(n), "base": param.map_id}},
        spec={"type": "mollified", "n": int(n), "base": dict(param.spec)},
        map_id=f"mollified(n={n},{param.map_id})")


def lipschitz_estimate(param: WeakHomeomorphism, grid_n: int = 4096) -> LipschitzBounds:
    """Extremal difference quotients over all grid offsets up to pi.

    L_lower is a lower bound for the true Lipschitz constant; ell_lower > 0
    certifies bi-Lipschitz behavior at grid scale.
    """
    if grid_n < 256:
        raise ValueError("grid_n must be >= 256")
    h = TWO_PI / grid_n
    t = np.arange(grid_n) * h
    vals = param.f(t)
    lmax, lmin = -np.inf, np.inf
    for m in range(1, grid_n // 2 + 1):
        shifted = np.roll(vals, -m).copy()
        shifted[grid_n - m:] += param.length
        q = (shifted - vals) / (m * h)
        lmax = max(lmax, float(q.max()))
        lmin = min(lmin, float(q.min()))
    return LipschitzBounds(L_lower=lmax, ell_lower=lmin)
