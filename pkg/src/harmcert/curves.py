"""Jordan curves in arc-length parametrization and their boundary kernel.

A curve is represented by vectorized callables ``position(s)`` and
``tangent(s)`` over arc length ``s in [0, length]``, extended periodically.
Tangents are unit vectors by construction: every supported family keeps an
underlying angular parameter ``theta`` with an analytic (or spline) velocity,
and arc length is inverted through a cumulative Gauss table polished by
Newton steps, so ``tangent = dp/|dp|`` exactly.

The chord kernel ``K(s, t) = Re[conj(g(t) - g(s)) * i g'(s)]`` measures the
component of the chord from ``g(s)`` to ``g(t)`` along the inner normal at
``g(s)``; it is nonnegative for convex curves and is the raw material of the
boundary Jacobian factor computed in :mod:`harmcert.toperator`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import (
    NotClosed,
    SelfIntersecting,
    SpecError,
    TooFewSamples,
    UnwrapFailure,
)
from .quadrature import fixed_gauss

_GL10_X, _GL10_W = np.polynomial.legendre.leggauss(10)
_GL6_X, _GL6_W = np.polynomial.legendre.leggauss(6)


# ---------------------------------------------------------------------------
# domain types


@dataclass
class JordanCurve:
    """Closed simple plane curve at unit speed, positively oriented.

    position/tangent accept scalars or ndarrays of arc length values and
    reduce them mod ``length``.  ``curvature`` is available for every built-in
    family (used by test oracles, not by the certification pipeline).
    Instances are immutable by convention; all operations are pure.
    """

    length: float
    position: Callable
    tangent: Callable
    source: dict
    spec: dict
    curve_id: str
    diameter: float
    curvature: Optional[Callable] = None
    _cache: dict = field(default_factory=dict, repr=False)


@dataclass
class TurningAngle:
    """Continuous lift beta with tangent(s) = exp(i beta(s))."""

    beta: Callable
    total: float          # beta(length) - beta(0); 2*pi for a Jordan curve
    grid_n: int


@dataclass
class ModulusOfContinuity:
    """Modulus of continuity of the tangent, raw plus safe upper envelope.

    ``omega`` is the raw estimate (exact for closed forms, a grid
    under-estimate otherwise).  Bound checks must use ``upper``/
    ``cumulative_upper`` which round grid lags up and apply the recorded
    safety factor.
    """

    omega: Callable
    kind: str             # "closed-form" | "grid-estimated"
    safety: float
    length: float
    _env: Optional[np.ndarray] = None      # grid envelope, lag m -> sup
    _lag: float = 0.0                      # grid lag width
    _breaks: tuple = ()                    # known kinks of a closed form

    def upper(self, delta):
        """Safety-factored upper envelope; rounds grid lags up.

        Below the first grid lag the step envelope is replaced by a linear
        ramp (a valid upper bound for curves whose tangent is Lipschitz at
        grid scale), which keeps the dominating function integrable.
        """
        delta = np.asarray(delta, dtype=float)
        if self._env is not None:
            r = delta / self._lag
            idx = np.clip(np.ceil(r).astype(int), 1, self._env.size - 1)
            out = np.where(r < 1.0, self.safety * self._env[1] * r,
                           self.safety * self._env[idx])
        else:
            out = self.safety * np.asarray(self.omega(np.minimum(delta, self.length)))
        return out if out.ndim else float(out)

    def cumulative_upper(self, x):
        """Integral of the upper envelope over [0, x] (x may be an array).

        Exact for the step envelope; vectorized Gauss panels otherwise.
        """
        x = np.asarray(x, dtype=float)
        scalar = x.ndim == 0
        x = np.atleast_1d(x).astype(float)
        if self._env is not None:
            h = self._lag
            pref = self._cum_prefix()
            j = np.clip((x / h).astype(int), 0, self._env.size - 1)
            rate = self.safety * self._env[np.minimum(j + 1, self._env.size - 1)]
            out = pref[j] + (x - j * h) * rate
            ramp = self.safety * self._env[1] * x * x / (2.0 * h)
            out = np.where(x < h, ramp, out)
        else:
            glx, glw = np.polynomial.legendre.leggauss(32)
            edges = [0.0] + sorted(b for b in self._breaks if b > 0) + [np.inf]
            out = np.zeros_like(x)
            for lo, hi in zip(edges[:-1], edges[1:]):
                a = np.minimum(np.maximum(x, lo), hi if np.isfinite(hi) else x)
                width = a - lo
                mid = lo + 0.5 * width
                nodes = mid[:, None] + 0.5 * width[:, None] * glx[None, :]
                weights = 0.5 * width[:, None] * glw[None, :]
                vals = self.upper(nodes.ravel()).reshape(nodes.shape)
                out += np.where(width > 0, np.sum(weights * vals, axis=1), 0.0)
        out = np.maximum(out, 0.0)
        return float(out[0]) if scalar else out

    def _cum_prefix(self):
        if "cum" not in self.__dict__:
            n = self._env.size
            rates = self.safety * self._env[np.minimum(np.arange(1, n + 1), n - 1)]
            steps = rates * self._lag
            steps[0] = 0.5 * self.safety * self._env[1] * self._lag  # ramp piece
            self.__dict__["cum"] = np.concatenate([[0.0], np.cumsum(steps)])
        return self.__dict__["cum"]


@dataclass
class DiniResult:
    convergent: bool
    value: Optional[float]
    levels: int
    last_increment: float
    partial: float


@dataclass
class KernelBound:
    lhs: float
    rhs: float
    holds: bool


# ---------------------------------------------------------------------------
# curve families: theta-parametrized machinery


class _ThetaCurve:
    """Curve given by p(theta) on [0, period], closed and periodic."""

    def __init__(self, p, dp, d2p, period=2.0 * np.pi, cells=4096, speed=None):
        self.p, self.dp, self.d2p = p, dp, d2p
        self.speed = speed if speed is not None else (lambda th: np.abs(dp(th)))
        self.period = period
        edges = np.linspace(0.0, period, cells + 1)
        mid = 0.5 * (edges[:-1] + edges[1:])
        half = 0.5 * (edges[1] - edges[0])
        nodes = mid[:, None] + half * _GL10_X[None, :]
        speeds = self.speed(nodes.ravel()).reshape(nodes.shape)
        if speeds.min() <= 1e-12:
            raise SelfIntersecting("curve velocity vanishes (cusp or degenerate loop)")
        cell_len = half * np.sum(_GL10_W[None, :] * speeds, axis=1)
        cum = np.cumsum(cell_len.astype(np.longdouble)).astype(float)
        self.s_table = np.concatenate([[0.0], cum])
        self.edges = edges
        self.length = float(self.s_table[-1])
        self._h = edges[1] - edges[0]

    def _s_of_theta(self, th):
        th = np.mod(th, self.period)
        k = np.minimum((th / self._h).astype(int), self.edges.size - 2)
        a = self.edges[k]
        mid = 0.5 * (a + th)
        half = 0.5 * (th - a)
        nodes = mid[:, None] + half[:, None] * _GL6_X[None, :]
        speeds = self.speed(nodes.ravel()).reshape(nodes.shape)
        return self.s_table[k] + half * np.sum(_GL6_W[None, :] * speeds, axis=1)

    def theta_of_s(self, s):
        s = np.mod(np.asarray(s, dtype=float), self.length)
        th = np.interp(s, self.s_table, self.edges)
        for _ in range(2):
            th = th - (self._s_of_theta(th) - s) / self.speed(np.mod(th, self.period))
        return np.mod(th, self.period)


def _wrap_scalar(fn):
    def wrapped(s):
        s_arr = np.asarray(s, dtype=float)
        out = fn(np.atleast_1d(s_arr))
        if s_arr.ndim == 0:
            return complex(out[0]) if np.iscomplexobj(out) else float(out[0])
        return out.reshape(s_arr.shape)
    return wrapped


def _make_curve(tc: _ThetaCurve, source: dict, spec: dict, curve_id: str) -> JordanCurve:
    def position(s):
        return tc.p(tc.theta_of_s(s))

    def tangent(s):
        th = tc.theta_of_s(s)
        d = tc.dp(th)
        return d / np.abs(d)

    def curvature(s):
        th = tc.theta_of_s(s)
        d, d2 = tc.dp(th), tc.d2p(th)
        return (d.real * d2.imag - d.imag * d2.real) / np.abs(d) ** 3

    grid = tc.p(np.linspace(0.0, tc.period, 512, endpoint=False))
    center = grid.mean()
    diameter = 2.0 * float(np.max(np.abs(grid - center)))
    return JordanCurve(
        length=tc.length,
        position=_wrap_scalar(position),
        tangent=_wrap_scalar(tangent),
        source=source,
        spec=spec,
        curve_id=curve_id,
        diameter=diameter,
        curvature=_wrap_scalar(curvature),
    )


_POLAR_FORMULAS = {
    # formula_id -> builder(params) -> (r, dr, d2r) callables of theta
    "cosine": lambda prm: _cosine_polar(prm),
}


def _cosine_polar(prm):
    base = float(prm.get("base", 1.0))
    eps = float(prm.get("eps", 0.0))
    k = float(prm.get("k", 1))
    phase = float(prm.get("phase", 0.0))
    if base - abs(eps) <= 0:
        raise SpecError("polar spec field 'eps' too large: radius must stay positive")
    r = lambda th: base + eps * np.cos(k * th + phase)
    dr = lambda th: -eps * k * np.sin(k * th + phase)
    d2r = lambda th: -eps * k * k * np.cos(k * th + phase)
    return r, dr, d2r


def _polar_theta_curve(r, dr, d2r):
    def p(th):
        return r(th) * np.exp(1j * th)

    def dp(th):
        return (dr(th) + 1j * r(th)) * np.exp(1j * th)

    def d2p(th):
        return (d2r(th) + 2j * dr(th) - r(th)) * np.exp(1j * th)

    def speed(th):
        return np.hypot(r(th), dr(th))

    return p, dp, d2p, speed


def _num(spec, key, family):
    if key not in spec:
        raise SpecError(f"{family} spec missing required field '{key}'")
    try:
        return float(spec[key])
    except (TypeError, ValueError):
        raise SpecError(f"{family} spec field '{key}' must be a number")


# ---------------------------------------------------------------------------
# operations


def build_curve(spec: dict, validate_n: int = 1024) -> JordanCurve:
    """Build a validated arc-length JordanCurve from a specification dict.

    Supported families: circle, ellipse, polar (registered formula or raw
    theta/r samples), points (closed loop of >= 16 distinct vertices).
    """
    if not isinstance(spec, dict):
        raise SpecError("curve spec must be a JSON object; missing field 'type'")
    if "type" not in spec:
        raise SpecError("curve spec missing required field 'type'")
    kind = spec["type"]

    if kind == "circle":
        radius = float(spec.get("radius", 1.0))
        if radius <= 0:
            raise SpecError("circle spec field 'radius' must be positive")
        p, dp, d2p, speed = _polar_theta_curve(
            lambda th: radius + 0.0 * th, lambda th: 0.0 * th, lambda th: 0.0 * th)
        tc = _ThetaCurve(p, dp, d2p, speed=speed)
        curve = _make_curve(
            tc, {"kind": "analytic-family", "name": "circle",
                 "params": {"radius": radius}},
            dict(spec), f"circle(radius={radius:g})")
    elif kind == "ellipse":
        a = _num(spec, "a", "ellipse")
        b = _num(spec, "b", "ellipse")
        if a <= 0 or b <= 0:
            raise SpecError("ellipse spec fields 'a'/'b' must be positive")
        p = lambda th: a * np.cos(th) + 1j * b * np.sin(th)
        dp = lambda th: -a * np.sin(th) + 1j * b * np.cos(th)
        d2p = lambda th: -a * np.cos(th) - 1j * b * np.sin(th)
        speed = lambda th: np.hypot(a * np.sin(th), b * np.cos(th))
        tc = _ThetaCurve(p, dp, d2p, speed=speed)
        curve = _make_curve(
            tc, {"kind": "analytic-family", "name": "ellipse",
                 "params": {"a": a, "b": b}},
            dict(spec), f"ellipse(a={a:g},b={b:g})")
    elif kind == "polar":
        if "formula_id" in spec:
            fid = spec["formula_id"]
            if fid not in _POLAR_FORMULAS:
                raise SpecError(f"polar spec field 'formula_id' unknown: {fid!r}")
            prm = spec.get("params", {})
            r, dr, d2r = _POLAR_FORMULAS[fid](prm)
            p, dp, d2p, speed = _polar_theta_curve(r, dr, d2r)
            tc = _ThetaCurve(p, dp, d2p, cells=8192, speed=speed)
            pid = ",".join(f"{k}={float(v):g}" for k, v in sorted(prm.items()))
            curve = _make_curve(
                tc, {"kind": "analytic-family", "name": f"polar-{fid}",
                     "params": dict(prm)},
                dict(spec), f"polar-{fid}({pid})")
        elif "theta" in spec and "r" in spec:
            curve = _sampled_polar(spec)
        else:
            raise SpecError(
                "polar spec missing field 'formula_id' (or 'theta'/'r' samples)")
    elif kind == "points":
        curve = _points_curve(spec)
    else:
        raise SpecError(f"curve spec field 'type' unknown: {kind!r}")

    _validate_curve(curve, validate_n)
    return curve


def _sampled_polar(spec) -> JordanCurve:
    theta = np.asarray(spec["theta"], dtype=float)
    r = np.asarray(spec["r"], dtype=float)
    if theta.size != r.size:
        raise SpecError("polar spec fields 'theta' and 'r' must have equal length")
    if theta.size >= 2 and abs(theta[-1] - theta[0] - 2.0 * np.pi) < 1e-9:
        if abs(r[-1] - r[0]) > 1e-9 * max(1.0, np.max(np.abs(r))):
            raise NotClosed("polar samples: r at theta=0 and theta=2*pi differ")
        theta, r = theta[:-1], r[:-1]
    if theta.size < 16:
        raise TooFewSamples("polar samples: need at least 16 distinct angles")
    if np.any(np.diff(theta) <= 0):
        raise SpecError("polar spec field 'theta' must be strictly increasing")
    if np.any(r <= 0):
        raise SpecError("polar spec field 'r' must be positive")
    th_ext = np.concatenate([theta, [theta[0] + 2.0 * np.pi]])
    r_ext = np.concatenate([r, [r[0]]])
    sp = CubicSpline(th_ext, r_ext, bc_type="periodic")
    dsp, d2sp = sp.derivative(1), sp.derivative(2)
    shift = theta[0]
    rr = lambda th: sp(shift + np.mod(th - shift, 2.0 * np.pi))
    drr = lambda th: dsp(shift + np.mod(th - shift, 2.0 * np.pi))
    d2rr = lambda th: d2sp(shift + np.mod(th - shift, 2.0 * np.pi))
    p, dp, d2p, speed = _polar_theta_curve(rr, drr, d2rr)
    tc = _ThetaCurve(p, dp, d2p, cells=8192, speed=speed)
    return _make_curve(
        tc, {"kind": "sampled", "name": "polar-samples",
             "params": {"n": int(theta.size), "interpolation": "cubic"}},
        dict(spec), f"polar-samples(n={theta.size})")


def _points_curve(spec) -> JordanCurve:
    if "xy" not in spec:
        raise SpecError("points spec missing required field 'xy'")
    xy = np.asarray(spec["xy"], dtype=float)
    if xy.ndim != 2 or xy.shape[1] != 2:
        raise SpecError("points spec field 'xy' must be a list of [x, y] pairs")
    z = xy[:, 0] + 1j * xy[:, 1]
    if z.size >= 2 and abs(z[0] - z[-1]) < 1e-12 * max(1.0, np.max(np.abs(z))):
        z = z[:-1]
    if np.unique(np.round(z, 12)).size != z.size:
        raise SpecError("points spec field 'xy' contains duplicate points")
    if z.size < 16:
        raise TooFewSamples(f"points spec: need >= 16 distinct points, got {z.size}")
    closing = abs(z[-1] - z[0])
    edges = np.abs(np.diff(z))
    if closing > 10.0 * np.median(edges):
        raise NotClosed("points spec: endpoint gap too large for a closed loop")
    # positive orientation: reverse if the polygon area is negative
    area = 0.5 * np.sum(z.real * np.roll(z.imag, -1) - np.roll(z.real, -1) * z.imag)
    if area < 0:
        z = z[::-1]
    zc = np.concatenate([z, [z[0]]])
    u = np.concatenate([[0.0], np.cumsum(np.abs(np.diff(zc)))])
    period = u[-1]
    spx = CubicSpline(u, zc.real, bc_type="periodic")
    spy = CubicSpline(u, zc.imag, bc_type="periodic")
    dx, dy = spx.derivative(1), spy.derivative(1)
    d2x, d2y = spx.derivative(2), spy.derivative(2)
    p = lambda t: spx(np.mod(t, period)) + 1j * spy(np.mod(t, period))
    dp = lambda t: dx(np.mod(t, period)) + 1j * dy(np.mod(t, period))
    d2p = lambda t: d2x(np.mod(t, period)) + 1j * d2y(np.mod(t, period))
    speed = lambda t: np.hypot(dx(np.mod(t, period)), dy(np.mod(t, period)))
    tc = _ThetaCurve(p, dp, d2p, period=period, cells=4096, speed=speed)
    return _make_curve(
        tc, {"kind": "sampled", "name": "points",
             "params": {"n": int(z.size), "interpolation": "cubic"}},
        dict(spec), f"points(n={z.size})")


def _validate_curve(curve: JordanCurve, n: int) -> None:
    s = np.linspace(0.0, curve.length, n, endpoint=False)
    g = curve.position(s)
    # closure
    gap = abs(complex(curve.position(0.0)) - complex(curve.position(curve.length)))
    if gap > 1e-8 * max(1.0, curve.diameter):
        raise NotClosed(f"curve endpoint gap {gap:.3e} exceeds tolerance")
    # unit speed
    dev = float(np.max(np.abs(np.abs(curve.tangent(s)) - 1.0)))
    if dev > 1e-8:
        raise SelfIntersecting(f"unit-speed deviation {dev:.3e} (degenerate data)")
    # positive orientation: winding of the boundary around the centroid
    center = g.mean()
    rel = g - center
    turns = np.angle(np.roll(rel, -1) / rel)
    winding = int(round(float(np.sum(turns)) / (2.0 * np.pi)))
    if winding != 1:
        raise SelfIntersecting(f"boundary winding about centroid is {winding}, not 1")
    # simple curve: brute-force segment-pair crossing test
    _check_simple(g)


def _check_simple(g: np.ndarray) -> None:
    n = g.size
    a = g
    b = np.roll(g, -1)
    for i in range(n - 2):
        j0 = i + 2
        j1 = n if i > 0 else n - 1   # skip adjacent and the wrap pair
        if j0 >= j1:
            continue
        c, d = a[j0:j1], b[j0:j1]
        d1 = _cross(b[i] - a[i], c - a[i]) * _cross(b[i] - a[i], d - a[i])
        d2 = _cross(d - c, a[i] - c) * _cross(d - c, b[i] - c)
        if np.any((d1 < 0) & (d2 < 0)):
            raise SelfIntersecting("segment-pair check found a crossing")


def _cross(u, v):
    return u.real * np.asarray(v).imag - u.imag * np.asarray(v).real


def chord_kernel(curve: JordanCurve, s, t):
    """K(s, t): inner-normal component at g(s) of the chord to g(t).

    Periodic in both arguments with period ``curve.length``; K(s, s) = 0.
    On the unit circle K(s, t) = 1 - cos(t - s).
    """
    gs = curve.position(s)
    gt = curve.position(t)
    tp = curve.tangent(s)
    out = np.real(np.conjugate(gt - gs) * (1j * tp))
    return out


def is_convex(curve: JordanCurve, grid_n: int = 256) -> bool:
    """Grid test K >= -tol for all pairs, cross-checked by tangent monotonicity."""
    if grid_n < 64:
        raise ValueError("grid_n must be >= 64")
    s = np.linspace(0.0, curve.length, grid_n, endpoint=False)
    g = curve.position(s)
    tp = curve.tangent(s)
    kmat = np.real(np.conjugate(g[None, :] - g[:, None]) * (1j * tp)[:, None])
    tol = 1e-10 * curve.diameter ** 2
    kernel_ok = bool(kmat.min() >= -tol)
    ta = turning_angle(curve)
    dense = np.linspace(0.0, curve.length, 4 * grid_n, endpoint=False)
    beta = ta.beta(dense)
    monotone = bool(np.min(np.diff(beta)) >= -1e-8)
    return kernel_ok and monotone


def turning_angle(curve: JordanCurve, grid_n: int = 4096) -> TurningAngle:
    """Continuous lift of arg(tangent), unwrapped over a refining grid."""
    key = ("turning", grid_n)
    if key in curve._cache:
        return curve._cache[key]
    n = grid_n
    while True:
        s = np.linspace(0.0, curve.length, n, endpoint=False)
        tp = curve.tangent(s)
        steps = np.angle(np.roll(tp, -1) / tp)
        if np.max(np.abs(steps)) <= 0.5 * np.pi:
            break
        if n >= 2 ** 20:
            raise UnwrapFailure(
                "tangent turns by more than pi/2 between adjacent grid points")
        n *= 2
    beta0 = float(np.angle(tp[0]))
    cum = beta0 + np.concatenate([[0.0], np.cumsum(steps)])  # size n+1, cum[n]=beta0+total
    total = float(cum[-1] - cum[0])
    h = curve.length / n

    def beta(sq):
        sq = np.asarray(sq, dtype=float)
        shape_scalar = sq.ndim == 0
        sq = np.atleast_1d(sq)
        wraps = np.floor(sq / curve.length)
        red = sq - wraps * curve.length
        k = np.minimum(np.round(red / h).astype(int), n)
        anchor = cum[k] + wraps * total
        tloc = curve.tangent(red)
        tanchor = tp[k % n]
        out = anchor + np.angle(tloc * np.conjugate(tanchor))
        return float(out[0]) if shape_scalar else out

    result = TurningAngle(beta=beta, total=total, grid_n=n)
    curve._cache[key] = result
    return result


def modulus_of_continuity(curve: JordanCurve, grid_n: int = 1024) -> ModulusOfContinuity:
    """Modulus of continuity of the tangent.

    Circles get the closed form 2 sin(delta / (2 r)); everything else gets a
    nondecreasing step envelope estimated over all grid pairs, with a 1.05
    safety factor applied by the upper-envelope accessors.
    """
    if grid_n < 256:
        raise ValueError("grid_n must be >= 256")
    if curve.source.get("name") == "circle":
        radius = curve.source["params"]["radius"]

        def omega(delta):
            delta = np.asarray(delta, dtype=float)
            out = 2.0 * np.sin(np.minimum(delta, np.pi * radius) / (2.0 * radius))
            return out if out.ndim else float(out)

        return ModulusOfContinuity(
            omega=omega, kind="closed-form", safety=1.0, length=curve.length,
            _breaks=(np.pi * radius,))

    s = np.linspace(0.0, curve.length, grid_n, endpoint=False)
    tp = curve.tangent(s)
    best = np.zeros(grid_n)
    for m in range(1, grid_n):
        best[m] = np.max(np.abs(np.roll(tp, -m) - tp))
    env = np.maximum.accumulate(best)
    h = curve.length / grid_n

    def omega(delta):
        delta = np.asarray(delta, dtype=float)
        idx = np.clip((delta / h).astype(int), 0, grid_n - 1)
        out = env[idx]
        return out if out.ndim else float(out)

    return ModulusOfContinuity(
        omega=omega, kind="grid-estimated", safety=1.05, length=curve.length,
        _env=env, _lag=h)


def dini_integral(omega: ModulusOfContinuity, k: float, *, levels: int = 60,
                  rel_tol: float = 1e-3) -> DiniResult:
    """Estimate int_0^k omega(t)/t dt over dyadic shells shrinking to 0.

    Convergence is declared when the innermost shell contributes less than
    ``rel_tol`` of the running total; this is a heuristic (no finite procedure
    can decide the integrability condition) and the flag is advisory.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    incs = []
    fn = omega.omega
    hi = float(k)
    for _ in range(levels):
        lo = 0.5 * hi
        incs.append(fixed_gauss(lambda u: np.asarray(fn(u)) / u, lo, hi, 2))
        hi = lo
    incs = np.asarray(incs)
    total = float(np.sum(incs))
    last = float(abs(incs[-1]))
    if total <= 0:
        return DiniResult(True, 0.0, levels, last, total)
    if last >= rel_tol * total:
        return DiniResult(False, None, levels, last, total)
    ratio = abs(incs[-1]) / abs(incs[-2]) if abs(incs[-2]) > 0 else 0.0
    ratio = min(ratio, 0.9)
    tail = last * ratio / (1.0 - ratio)
    return DiniResult(True, total + tail, levels, last, total)


def kernel_bound_check(curve: JordanCurve, omega: ModulusOfContinuity,
                       s: float, t: float) -> KernelBound:
    """Check |K(s,t)| <= int_0^d omega, d = circle distance between s and t."""
    lhs = float(abs(chord_kernel(curve, float(s), float(t))))
    d = abs(float(s) - float(t)) % curve.length
    d = min(d, curve.length - d)
    rhs = float(omega.cumulative_upper(d))
    return KernelBound(lhs=lhs, rhs=rhs, holds=bool(lhs <= rhs + 1e-10))


def unit_speed_deviation(curve: JordanCurve, n: int = 1024) -> float:
    s = np.linspace(0.0, curve.length, n, endpoint=False)
    return float(np.max(np.abs(np.abs(curve.tangent(s)) - 1.0)))
