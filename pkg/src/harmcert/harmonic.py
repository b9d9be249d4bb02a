"""Harmonic extension of boundary data via Fourier coefficients.

The extension of ``F`` is evaluated as the series
``w(z) = sum_{k>=0} c_k z^k + sum_{k>0} c_{-k} conj(z)^k`` whose coefficients
come from a dense discrete Fourier analysis of the boundary samples.  Series
evaluation is exact in the radius, which keeps radial limits toward the
boundary well conditioned; the direct convolution against the disk kernel is
retained only as a cross-validation helper.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .boundary import BoundaryMap
from .errors import OutsideDomain, TailNotDecaying

MAX_MODES = 65536


@dataclass
class HarmonicMap:
    """Truncated coefficient table c_k, |k| <= order, of boundary data.

    coeffs[order + k] stores c_k.  tail_bound estimates the mass of the
    dropped modes by geometric extrapolation of the last octave;
    recon_error is the measured reconstruction defect on the sample grid.
    """

    coeffs: np.ndarray
    order: int
    tail_bound: float
    recon_error: float
    source_id: str
    poisson_check: Optional[float] = None

    def analytic_coeffs(self):
        return self.coeffs[self.order:]

    def anti_coeffs(self):
        return self.coeffs[self.order::-1]   # c_0, c_-1, ..., c_-order

    def eval_error_bound(self, z) -> float:
        r = float(np.max(np.abs(z)))
        return float(self.tail_bound * r ** (self.order // 2))


def analyze_samples(samples: np.ndarray, n_modes: int):
    """Discrete Fourier analysis of uniform boundary samples (linear in data).

    Returns (coeffs, tail_bound, recon_error); raises TailNotDecaying when
    the last octave of kept modes carries more than 10% of the total mass.
    """
    m = samples.size
    spec = np.fft.fft(samples) / m
    ks = np.arange(-n_modes, n_modes + 1)
    coeffs = spec[np.mod(ks, m)].copy()
    mags = np.abs(coeffs)
    total = float(np.sum(mags))
    absk = np.abs(ks)
    s_last = float(np.sum(mags[(absk > n_modes // 2) & (absk <= n_modes)]))
    s_prev = float(np.sum(mags[(absk > n_modes // 4) & (absk <= n_modes // 2)]))
    if total > 0 and s_last > 0.1 * total:
        raise TailNotDecaying(
            f"last-octave coefficient mass {s_last:.3e} exceeds 10% of total "
            f"{total:.3e} at order {n_modes}")
    rho = min(s_last / s_prev, 0.95) if s_prev > 0 else 0.0
    tail_bound = s_last * rho / (1.0 - rho)
    trunc = np.zeros(m, dtype=complex)
    trunc[np.mod(ks, m)] = coeffs
    recon = np.fft.ifft(trunc) * m
    recon_error = float(np.max(np.abs(recon - samples)))
    return coeffs, tail_bound, recon_error


def fourier_coefficients(bmap: BoundaryMap, n_modes: int,
                         validate: bool = False) -> HarmonicMap:
    """Fourier analysis of F on 4 * n_modes uniform boundary samples.

    n_modes must be a power of two in [64, 65536].  Raises TailNotDecaying
    when the last octave of coefficients carries more than 10% of the total
    mass (boundary data too rough for the requested order).
    """
    _check_order(n_modes)
    m = 4 * n_modes
    t = 2.0 * np.pi * np.arange(m) / m
    samples = bmap.F(t)
    coeffs, tail_bound, recon_error = analyze_samples(samples, n_modes)
    hm = HarmonicMap(coeffs=coeffs, order=n_modes, tail_bound=tail_bound,
                     recon_error=recon_error,
                     source_id=f"{bmap.curve.curve_id}|{bmap.param.map_id}")
    if validate:
        rng = np.random.default_rng(0)
        z = rng.uniform(0.05, 0.5, 10) * np.exp(2j * np.pi * rng.uniform(0, 1, 10))
        direct = poisson_integral_direct(bmap, z, samples=samples)
        hm.poisson_check = float(np.max(np.abs(eval_w(hm, z) - direct)))
    return hm


def auto_fourier(bmap: BoundaryMap, tol: float = 1e-8, start: int = 1024,
                 cap: int = MAX_MODES) -> HarmonicMap:
    """Double the order until tail_bound < tol (or the cap is reached)."""
    n = start
    last_err = None
    while True:
        try:
            hm = fourier_coefficients(bmap, n)
            if hm.tail_bound < tol or n >= cap:
                return hm
        except TailNotDecaying as exc:
            if n >= cap:
                raise
            last_err = exc
        n *= 2


def _check_order(n_modes: int) -> None:
    if not (64 <= n_modes <= MAX_MODES) or (n_modes & (n_modes - 1)) != 0:
        raise ValueError(f"n_modes must be a power of two in [64, {MAX_MODES}]")


def _check_inside(z, limit: float) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) > limit):
        raise OutsideDomain(f"evaluation requires |z| <= {limit}")
    return z


def _horner(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    out = np.zeros_like(z)
    for a in c[::-1]:
        out = out * z + a
    return out


def eval_w(hm: HarmonicMap, z):
    """Evaluate the harmonic extension at z, |z| <= 1 - 1e-9."""
    zz = _check_inside(z, 1.0 - 1e-9)
    scalar = zz.ndim == 0
    zz = np.atleast_1d(zz)
    out = _horner(hm.analytic_coeffs(), zz)
    out += _horner(hm.anti_coeffs(), np.conjugate(zz)) - hm.coeffs[hm.order]
    return complex(out[0]) if scalar else out


def jacobian_interior(hm: HarmonicMap, z):
    """J(z) = |d/dz analytic part|^2 - |d/dzbar anti-analytic part|^2."""
    zz = _check_inside(z, 1.0 - 1e-9)
    scalar = zz.ndim == 0
    zz = np.atleast_1d(zz)
    ks = np.arange(1, hm.order + 1)
    da = _horner(hm.analytic_coeffs()[1:] * ks, zz)
    db = _horner(hm.anti_coeffs()[1:] * ks, np.conjugate(zz))
    out = np.abs(da) ** 2 - np.abs(db) ** 2
    return float(out[0]) if scalar else out


@dataclass
class RadialJacobian:
    values: np.ndarray
    limit: float
    err_indicator: float


def radial_jacobian(hm: HarmonicMap, tau: float, r_list) -> RadialJacobian:
    """Jacobian along the ray r -> e^{i tau} with extrapolated boundary limit.

    The limit estimate is polynomial (Neville) extrapolation in 1 - r to 0
    over the last entries; the error indicator is the difference of the two
    deepest extrapolants.
    """
    r = np.asarray(r_list, dtype=float)
    if r.ndim != 1 or r.size < 2 or np.any(np.diff(r) <= 0):
        raise ValueError("r_list must be increasing with at least 2 entries")
    if r[-1] > 1.0 - 1e-6:
        raise OutsideDomain("radial samples must satisfy r <= 1 - 1e-6")
    z = r * np.exp(1j * tau)
    vals = jacobian_interior(hm, z)
    x = 1.0 - r
    keep = min(r.size, 6)
    xs, ys = x[-keep:], vals[-keep:]
    levels = [list(ys)]
    for m in range(1, keep):
        prev = levels[-1]
        cur = [
            (xs[i] * prev[i + 1] - xs[i + m] * prev[i]) / (xs[i] - xs[i + m])
            for i in range(keep - m)
        ]
        levels.append(cur)
    limit = levels[-1][0]
    sub = levels[-2][1] if keep > 1 else limit   # drop the farthest sample
    return RadialJacobian(values=vals, limit=float(limit),
                          err_indicator=float(abs(limit - sub)))


def poisson_integral_direct(bmap: BoundaryMap, z, samples=None,
                            n_samples: int = 32768):
    """Direct disk-kernel convolution; validation oracle for the series."""
    zz = np.atleast_1d(np.asarray(z, dtype=complex))
    if samples is None:
        t = 2.0 * np.pi * np.arange(n_samples) / n_samples
        samples = bmap.F(t)
    m = samples.size
    t = 2.0 * np.pi * np.arange(m) / m
    r = np.abs(zz)
    tau = np.angle(zz)
    kern = (1.0 - r[:, None] ** 2) / (
        2.0 * np.pi * (1.0 - 2.0 * r[:, None] * np.cos(t[None, :] - tau[:, None])
                       + r[:, None] ** 2))
    out = (2.0 * np.pi / m) * (kern @ samples)
    return complex(out[0]) if np.asarray(z).ndim == 0 else out


def harmonic_from_coeffs(pairs: dict, order: int = 64) -> HarmonicMap:
    """Synthetic map from {k: c_k} (testing and oracle sanity checks)."""
    _check_order(order)
    coeffs = np.zeros(2 * order + 1, dtype=complex)
    for k, c in pairs.items():
        if abs(int(k)) > order:
            raise ValueError("mode index exceeds order")
        coeffs[order + int(k)] = c
    return HarmonicMap(coeffs=coeffs, order=order, tail_bound=0.0,
                       recon_error=0.0, source_id="synthetic")
