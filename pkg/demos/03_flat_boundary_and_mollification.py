"""Weak boundary data: a flat derivative point and its smoothing ladder.

f(t) = t - sin t is nondecreasing but has f'(0) = 0, so the boundary
correspondence stalls at one point: the boundary Jacobian f' T vanishes
there even though the factor T itself stays continuous and positive.  The
mollification ladder replaces f by strictly increasing approximants without
raising the Lipschitz constant, and their factor profiles converge uniformly
back to the weak one, which is exactly why the certificate for the weak data
is trustworthy.
"""

import numpy as np

from harmcert import (BoundaryMap, build_curve, build_param, mollified_pipeline,
                      mollify, t_profile)

curve = build_curve({"type": "circle"})
weak = build_param({"type": "sin-perturbed", "a": 1, "k": 1}, curve.length)
print(f"map {weak.map_id}: strict={weak.strict}, L={weak.lipschitz_L:.3f}, "
      f"f'(0)={weak.f_prime(0.0):.1f}")

bmap = BoundaryMap(curve, weak)
prof = t_profile(bmap, 128, 1e-7)
jb = prof.f_prime * prof.values
print(f"factor T:        min {prof.min_value:+.6f} (positive, continuous)")
print(f"boundary J=f'T:  min {jb.min():+.6f} (vanishes at the flat point)")
print()

dense = np.linspace(0, 2 * np.pi, 8192, endpoint=False)
print("smoothing ladder: n, sup|f_n - f|, min f_n', Lipschitz quotient")
for n in (2, 4, 8, 16, 32):
    fn = mollify(weak, n)
    sup = np.max(np.abs(fn.f(dense) - weak.f(dense)))
    print(f"  n={n:2d}  {sup:.6f}  {np.min(fn.f_prime(dense)):.6f}  "
          f"{np.max(np.diff(fn.f(np.linspace(0, 2*np.pi, 8193))) / (2*np.pi/8192)):.6f}")
print()

report = mollified_pipeline(curve, weak, [2, 4, 8, 16], grid_n=64, tol=1e-6,
                            with_oracle=True, fourier_order=512)
print(f"base profile min T = {report.base_min_T:+.6f}")
print("certified ladder:")
for n, cert, dist in zip((2, 4, 8, 16), report.certificates,
                         report.distances_to_base):
    print(f"  n={n:2d}: {cert.verdict} (min T {cert.min_T:+.6f}), "
          f"oracle {cert.oracle.verdict}, profile distance to base {dist:.5f}")
print(f"first n with min T >= half the base minimum: n0 = {report.n0}")
