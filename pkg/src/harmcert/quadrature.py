"""Adaptive graded-mesh quadrature for absolutely integrable endpoint singularities.

The integrands handled here are smooth away from an isolated point (the
quadrature-variable origin) where they may be merely Dini-integrable.  The
mesh is graded dyadically toward that point (panel ratio 1/2); every panel is
additionally bisected until a Gauss-Legendre self-comparison meets its share
of the error budget.  The mass inside the innermost gap is recovered by
geometric extrapolation of the dyadic panel sums, with a model-consistency
error estimate, so the scheme never evaluates the integrand where float
cancellation would dominate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_GL_X, _GL_W = np.polynomial.legendre.leggauss(16)


@dataclass
class QuadResult:
    """Per-target integral values with accumulated error estimates."""

    value: np.ndarray
    err: np.ndarray
    levels: np.ndarray   # dyadic depth reached per target
    gap: np.ndarray      # extrapolated mass of the innermost gap


def _panel_values(fn, idx, a, b):
    """Gauss-Legendre 16 on panels [a, b] for targets idx; returns sums."""
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    u = mid[:, None] + half[:, None] * _GL_X[None, :]
    w = half[:, None] * _GL_W[None, :]
    vals = fn(np.repeat(idx, 16), u.ravel()).reshape(u.shape)
    return np.sum(w * vals, axis=1)


def _refine(fn, idx, a, b, per_width_tol, cap, noise_at=None,
            max_pending=40000):
    """Bisect panels until two refinement scales of GL16 agree per panel.

    Acceptance compares the half-panel sum against the quarter-panel sum (a
    single coincidental agreement of consecutive scales, as oscillatory
    integrands can produce, is not enough to stop).  Panels whose comparison
    error sits at the integrand's float-noise floor are accepted as-is:
    subdividing cannot reduce noise, only multiply panels.  A hard cap on
    the pending worklist bounds worst-case work.  Returns (value_sum,
    err_sum) aggregated per position of the input panels.
    """
    n = idx.size
    out_v = np.zeros(n)
    out_e = np.zeros(n)
    orig = np.arange(n)
    depth = np.zeros(n, dtype=int)
    m = 0.5 * (a + b)
    h_left = _panel_values(fn, idx, a, m)
    h_right = _panel_values(fn, idx, m, b)
    while idx.size:
        m = 0.5 * (a + b)
        qa = 0.5 * (a + m)
        qb = 0.5 * (m + b)
        q1 = _panel_values(fn, idx, a, qa)
        q2 = _panel_values(fn, idx, qa, m)
        q3 = _panel_values(fn, idx, m, qb)
        q4 = _panel_values(fn, idx, qb, b)
        v_fine = q1 + q2 + q3 + q4
        e = np.abs((h_left + h_right) - v_fine)
        w = b - a
        budget = per_width_tol * w
        if noise_at is not None:
            umin = np.minimum(np.abs(a), np.abs(b))
            budget = np.maximum(budget, 2.0 * w * noise_at(np.maximum(umin, 1e-300)))
        done = (e <= budget) | (depth >= cap) | (w <= 1e-13)
        if idx.size > max_pending:
            done = np.ones_like(done)
        np.add.at(out_v, orig[done], v_fine[done])
        np.add.at(out_e, orig[done], e[done])
        keep = ~done
        idx = np.concatenate([idx[keep], idx[keep]])
        orig = np.concatenate([orig[keep], orig[keep]])
        depth = np.concatenate([depth[keep] + 1, depth[keep] + 1])
        a, b = np.concatenate([a[keep], m[keep]]), np.concatenate([m[keep], b[keep]])
        h_left = np.concatenate([q1[keep], q3[keep]])
        h_right = np.concatenate([q2[keep], q4[keep]])
    return out_v, out_e


def graded_quad(fn, n_targets, tol, *, upper=np.pi, two_sided=True,
                noise_at=None, min_levels=6, max_levels=60, split_cap=26):
    """Integrate fn over (0, upper] (and [-upper, 0) if two_sided) per target.

    fn(idx, u) must be vectorized over equally sized arrays; it is never
    called at u = 0.  noise_at(u) optionally gives the absolute float noise
    of integrand values near |u| (monotone increasing toward 0), used both
    to stop the dyadic grading before cancellation dominates and to account
    for the noise already absorbed by accepted panels.
    """
    value = np.zeros(n_targets)
    err = np.zeros(n_targets)
    gap_out = np.zeros(n_targets)
    levels = np.zeros(n_targets, dtype=int)
    pair_hist = np.zeros((3, n_targets))  # pair sums at j-2, j-1, j
    active = np.arange(n_targets)
    per_width_tol = tol / (4.0 * np.pi)

    delta = upper
    for j in range(max_levels + 1):
        lo = 0.5 * delta
        idx = active
        if two_sided:
            pan_idx = np.concatenate([idx, idx])
            pan_a = np.concatenate([np.full(idx.size, lo), np.full(idx.size, -delta)])
            pan_b = np.concatenate([np.full(idx.size, delta), np.full(idx.size, -lo)])
        else:
            pan_idx = idx
            pan_a = np.full(idx.size, lo)
            pan_b = np.full(idx.size, delta)
        v_ref, e_ref = _refine(fn, pan_idx, pan_a, pan_b, per_width_tol,
                               split_cap, noise_at=noise_at)
        if two_sided:
            pair = v_ref[: idx.size] + v_ref[idx.size:]
            pair_e = e_ref[: idx.size] + e_ref[idx.size:]
        else:
            pair, pair_e = v_ref, e_ref
        value[idx] += pair
        err[idx] += pair_e
        if noise_at is not None:
            sides = 2.0 if two_sided else 1.0
            err[idx] += sides * (delta - lo) * noise_at(lo)
        pair_hist = np.roll(pair_hist, -1, axis=0)
        pair_hist[2, :] = 0.0
        pair_hist[2, idx] = pair
        levels[idx] = j

        if j < min_levels and j < max_levels:
            delta = lo
            continue

        # innermost-gap extrapolation from the last three dyadic pair sums
        curr = pair_hist[2, idx]
        prev = pair_hist[1, idx]
        prev2 = pair_hist[0, idx]
        with np.errstate(divide="ignore", invalid="ignore"):
            rho = np.where(np.abs(prev) > 0, curr / prev, 0.0)
        ok = (rho > 0.02) & (rho < 0.85)
        rho_c = np.clip(rho, 0.02, 0.85)
        gap = np.where(ok, curr * rho_c / (1.0 - rho_c), curr)
        with np.errstate(divide="ignore", invalid="ignore"):
            rho_p = np.where(np.abs(prev2) > 0, prev / prev2, 0.0)
        ok_p = (rho_p > 0.02) & (rho_p < 0.85)
        rho_pc = np.clip(rho_p, 0.02, 0.85)
        est_prev = np.where(ok_p, prev * rho_pc / (1.0 - rho_pc), prev)
        err_model = np.abs(est_prev - (curr + gap))
        if noise_at is not None:
            sides = 2.0 if two_sided else 1.0
            gap_noise = 2.0 * sides * lo * noise_at(0.75 * delta)
        else:
            gap_noise = np.zeros_like(gap)
        gap_err = err_model + gap_noise
        stop = gap_err <= 0.3 * tol
        # deepening is pointless once float noise exceeds the model error
        stop |= gap_noise > np.maximum(err_model, 1e-300)
        if j == max_levels:
            stop = np.ones_like(stop, dtype=bool)
        if np.any(stop):
            sel = idx[stop]
            value[sel] += gap[stop]
            gap_out[sel] = gap[stop]
            err[sel] += gap_err[stop]
            active = idx[~stop]
            pair_hist = pair_hist  # history rows keyed by target index stay valid
        if active.size == 0:
            break
        delta = lo

    return QuadResult(value=value, err=err, levels=levels, gap=gap_out)


def fixed_gauss(fn, a, b, n_panels=32):
    """Plain composite Gauss-Legendre 16 over [a, b]; smooth integrands only."""
    edges = np.linspace(a, b, n_panels + 1)
    pa, pb = edges[:-1], edges[1:]
    mid = 0.5 * (pa + pb)
    half = 0.5 * (pb - pa)
    u = mid[:, None] + half[:, None] * _GL_X[None, :]
    w = half[:, None] * _GL_W[None, :]
    return float(np.sum(w * fn(u.ravel()).reshape(u.shape)))
