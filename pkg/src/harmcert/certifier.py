"""Certification pipeline: factor positivity, oracle cross-check, probes.

A certificate records whether the factor profile stays above the numerical
margin (in which case the harmonic extension is a diffeomorphism of the open
disk onto the Jordan domain), together with advisory smoothness flags and an
optional independent univalence oracle run on a polar evaluation grid.  The
oracle is evidence, not proof: grid injectivity cannot certify injectivity,
which the verdict names make explicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .boundary import BoundaryMap, WeakHomeomorphism, mollify
from .curves import JordanCurve, dini_integral, is_convex, modulus_of_continuity
from .errors import ConvexityContradiction, NotADiffeomorphism
from .harmonic import (HarmonicMap, auto_fourier, eval_w,
                       fourier_coefficients, jacobian_interior)
from .toperator import TProfile, boundary_jacobian, t_profile

TOOLKIT_VERSION = "0.1.0"

VERDICT_CERTIFIED = "certified-diffeomorphism"
VERDICT_NOT = "not-certified"
VERDICT_INCONCLUSIVE = "inconclusive"

ORACLE_OK = "univalent-evidence"
ORACLE_FOLD = "folding-detected"


@dataclass
class OracleReport:
    grid_r: int
    grid_theta: int
    min_interior_J: float
    injective_on_grid: bool
    boundary_winding: int
    verdict: str

    def to_dict(self) -> dict:
        return {
            "grid_r": self.grid_r,
            "grid_theta": self.grid_theta,
            "min_interior_J": self.min_interior_J,
            "injective_on_grid": self.injective_on_grid,
            "boundary_winding": self.boundary_winding,
            "verdict": self.verdict,
        }


@dataclass
class Certificate:
    curve_id: str
    map_id: str
    dini_convergent: bool
    convex: bool
    min_T: float
    argmin_T: float
    grid_n: int
    tol: float
    verdict: str
    margin: float
    oracle: Optional[OracleReport]
    curve_spec: dict
    map_spec: dict
    profile: TProfile   # not serialized; kept for downstream analysis

    def to_dict(self) -> dict:
        out = {
            "curve_id": self.curve_id,
            "map_id": self.map_id,
            "dini_convergent": self.dini_convergent,
            "convex": self.convex,
            "min_T": self.min_T,
            "argmin_T": self.argmin_T,
            "grid_n": self.grid_n,
            "tol": self.tol,
            "verdict": self.verdict,
            "margin": self.margin,
            "oracle": None if self.oracle is None else self.oracle.to_dict(),
            "curve_spec": self.curve_spec,
            "map_spec": self.map_spec,
            "toolkit_version": TOOLKIT_VERSION,
            "note": "essential infimum approximated by a grid minimum; "
                    "dini flag is a heuristic at working resolution",
        }
        return out


def verdict_from(min_t: float, margin: float, convex: bool) -> str:
    """Margin rule for the strict positivity condition.

    Positivity cannot be resolved inside numerical noise, so values within
    +-margin are inconclusive.  A convex curve with a nonpositive minimum
    contradicts the convexity lower bound and is surfaced as a fault.
    """
    if convex and min_t <= 0.0:
        raise ConvexityContradiction(
            f"convex curve produced min_T = {min_t:.6g} <= 0")
    if min_t > margin:
        return VERDICT_CERTIFIED
    if abs(min_t) <= margin:
        return VERDICT_INCONCLUSIVE
    return VERDICT_NOT


def certify(curve: JordanCurve, param: WeakHomeomorphism, grid_n: int = 256,
            tol: float = 1e-7, *, route: str = "both-averaged",
            with_oracle: bool = False, fourier_order: Optional[int] = None,
            oracle_grid: tuple = (32, 128)) -> Certificate:
    """Run the full positivity pipeline and assemble a certificate."""
    if grid_n < 64:
        raise ValueError("grid_n must be >= 64")
    bmap = BoundaryMap(curve, param)
    profile = t_profile(bmap, grid_n, tol, route)
    margin = max(10.0 * tol, float(np.max(profile.errors_est)))
    convex = is_convex(curve)
    omega = modulus_of_continuity(curve)
    dini = dini_integral(omega, k=curve.length / 2.0)
    verdict = verdict_from(profile.min_value, margin, convex)
    oracle = None
    if with_oracle:
        hm = _extension(bmap, fourier_order)
        oracle = univalence_oracle(hm, *oracle_grid)
    return Certificate(
        curve_id=curve.curve_id, map_id=param.map_id,
        dini_convergent=dini.convergent, convex=convex,
        min_T=profile.min_value, argmin_T=profile.argmin, grid_n=grid_n,
        tol=tol, verdict=verdict, margin=margin, oracle=oracle,
        curve_spec=dict(curve.spec), map_spec=dict(param.spec),
        profile=profile)


def _extension(bmap: BoundaryMap, fourier_order: Optional[int]) -> HarmonicMap:
    if fourier_order is not None:
        return fourier_coefficients(bmap, fourier_order)
    return auto_fourier(bmap, tol=1e-8, start=1024)


def univalence_oracle(hm: HarmonicMap, grid_r: int = 32,
                      grid_theta: int = 128) -> OracleReport:
    """Brute-force univalence evidence on a polar grid of the open disk.

    Checks the interior Jacobian sign, grid injectivity via spatial-bucket
    collision search, and the winding of the outermost ring image around the
    image centroid.  Degenerate images count as folding.
    """
    if grid_r < 24 or grid_theta < 96:
        raise ValueError("oracle grid must satisfy grid_r >= 24, grid_theta >= 96")
    rmax = 1.0 - 1e-3
    radii = rmax * np.arange(1, grid_r + 1) / grid_r
    thetas = 2.0 * np.pi * np.arange(grid_theta) / grid_theta
    zgrid = radii[:, None] * np.exp(1j * thetas)[None, :]
    jmin = float(np.min(jacobian_interior(hm, zgrid.ravel())))

    wgrid = np.empty_like(zgrid)
    for i in range(grid_r):
        wgrid[i, :] = _eval_row(hm, zgrid[i, :])
    injective = _grid_injective(wgrid)

    ring = _eval_row(hm, rmax * np.exp(1j * 2.0 * np.pi
                                       * np.arange(4 * grid_theta) / (4 * grid_theta)))
    centroid = ring.mean()
    rel = ring - centroid
    if np.min(np.abs(rel)) <= 1e-14 * max(1.0, float(np.max(np.abs(ring)))):
        winding = 0
    else:
        winding = int(round(float(np.sum(np.angle(np.roll(rel, -1) / rel)))
                            / (2.0 * np.pi)))

    verdict = ORACLE_OK
    if jmin < 0.0 or not injective or winding != 1:
        verdict = ORACLE_FOLD
    return OracleReport(grid_r=grid_r, grid_theta=grid_theta,
                        min_interior_J=jmin, injective_on_grid=injective,
                        boundary_winding=winding, verdict=verdict)


def _eval_row(hm: HarmonicMap, z):
    return eval_w(hm, z)


def _grid_injective(wgrid: np.ndarray) -> bool:
    nr, nt = wgrid.shape
    d_theta = np.abs(np.roll(wgrid, -1, axis=1) - wgrid)
    d_r = np.abs(wgrid[1:, :] - wgrid[:-1, :])
    m = min(float(d_theta.min()), float(d_r.min()))
    scale = float(np.max(np.abs(wgrid)))
    if m <= 1e-14 * max(1.0, scale):
        return False                      # degenerate image
    sep = 0.5 * m
    buckets: dict = {}
    pts = wgrid.ravel()
    for flat, w in enumerate(pts):
        key = (int(np.floor(w.real / sep)), int(np.floor(w.imag / sep)))
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for other in buckets.get((key[0] + dx, key[1] + dy), ()):
                    if abs(pts[other] - w) < sep:
                        i0, j0 = divmod(other, nt)
                        i1, j1 = divmod(flat, nt)
                        dj = abs(j0 - j1)
                        if abs(i0 - i1) <= 1 and min(dj, nt - dj) <= 1:
                            continue      # grid-adjacent, not a fold
                        return False
        buckets.setdefault(key, []).append(flat)
    return True


@dataclass
class ANCheck:
    min_boundary_J: float
    passes: bool
    margin: float


def alessandrini_nesi_check(curve: JordanCurve, param: WeakHomeomorphism,
                            grid_n: int = 256, tol: float = 1e-7) -> ANCheck:
    """Boundary Jacobian positivity for strictly increasing boundary data.

    Refuses weak homeomorphisms with vanishing derivative: the hypothesis
    requires an orientation-preserving C1 diffeomorphism of the circle.
    """
    if not param.strict:
        raise NotADiffeomorphism(
            "boundary data is not strict: f' vanishes on the grid")
    bmap = BoundaryMap(curve, param)
    profile = t_profile(bmap, grid_n, tol, "both-averaged")
    jb = boundary_jacobian(bmap, profile)
    margin = max(10.0 * tol, float(np.max(profile.errors_est * profile.f_prime)))
    return ANCheck(min_boundary_J=float(np.min(jb)),
                   passes=bool(np.min(jb) > margin), margin=margin)


@dataclass
class ConjectureProbe:
    ess_inf_estimate: float
    oracle_verdict: str
    min_T: float
    margin: float
    exploratory: bool = True


def conjecture_probe(curve: JordanCurve, param: WeakHomeomorphism,
                     grid_n: int = 256, tol: float = 1e-7,
                     fourier_order: Optional[int] = None,
                     oracle_grid: tuple = (32, 128)) -> ConjectureProbe:
    """Exploratory probe: grid estimate of ess inf of the boundary Jacobian
    next to an oracle verdict.  No equivalence claim is made; sets of measure
    zero are invisible to the grid."""
    bmap = BoundaryMap(curve, param)
    profile = t_profile(bmap, grid_n, tol, "both-averaged")
    jb = boundary_jacobian(bmap, profile)
    margin = max(10.0 * tol, float(np.max(profile.errors_est)))
    hm = _extension(bmap, fourier_order)
    oracle = univalence_oracle(hm, *oracle_grid)
    return ConjectureProbe(ess_inf_estimate=float(np.min(jb)),
                           oracle_verdict=oracle.verdict,
                           min_T=profile.min_value, margin=margin)


@dataclass
class MollifiedReport:
    certificates: list
    base_min_T: float
    distances_to_base: list       # max-grid |T[f_n] - T[f]| per n
    successive_distances: list    # between consecutive mollified profiles
    n0: Optional[int]             # first n with min_T(f_n) >= min_T(f)/2


def mollified_pipeline(curve: JordanCurve, param: WeakHomeomorphism,
                       n_list: Sequence[int], grid_n: int = 128,
                       tol: float = 1e-7, *, with_oracle: bool = True,
                       fourier_order: Optional[int] = None) -> MollifiedReport:
    """Certify the mollified family and track profile convergence.

    For each n the parametrization is smoothed, certified, and (optionally)
    cross-checked by the oracle on its own extension; the report records the
    uniform distances between successive factor profiles and the first n
    whose profile minimum clears half the base minimum.
    """
    if list(n_list) != sorted(n_list) or len(n_list) == 0:
        raise ValueError("n_list must be nonempty and increasing")
    bmap = BoundaryMap(curve, param)
    base = t_profile(bmap, grid_n, tol, "both-averaged")
    certs, dists, succ = [], [], []
    prev_values = None
    n0 = None
    for n in n_list:
        pn = mollify(param, int(n))
        cert = certify(curve, pn, grid_n, tol, with_oracle=with_oracle,
                       fourier_order=fourier_order)
        certs.append(cert)
        dists.append(float(np.max(np.abs(cert.profile.values - base.values))))
        if prev_values is not None:
            succ.append(float(np.max(np.abs(cert.profile.values - prev_values))))
        prev_values = cert.profile.values
        if n0 is None and cert.min_T >= 0.5 * base.min_value:
            n0 = int(n)
    return MollifiedReport(certificates=certs, base_min_T=base.min_value,
                           distances_to_base=dists, successive_distances=succ,
                           n0=n0)
