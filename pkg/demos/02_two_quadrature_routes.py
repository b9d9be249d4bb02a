"""The factor T evaluated by two independent singular-integral routes.

Route one integrates the chord kernel against the periodic singular weight
1 / (2 sin^2(u/2)); route two is its integration by parts, pairing the
parametrization derivative and the turning-angle increment with cot(u/2).
The routes share no code beyond curve evaluation, so their pointwise
agreement is the strongest internal check the toolkit has.
"""

import numpy as np

from harmcert import BoundaryMap, build_curve, build_param, t_profile

cases = [
    ("unit circle / identity (T must be exactly 1)",
     {"type": "circle"}, {"type": "identity"}),
    ("2:1 ellipse / slowed-down",
     {"type": "ellipse", "a": 2, "b": 1},
     {"type": "sin-perturbed", "a": 0.5, "k": 1}),
    ("five-lobed wiggly curve / identity",
     {"type": "polar", "formula_id": "cosine", "params": {"eps": 0.35, "k": 5}},
     {"type": "identity"}),
]

for title, cspec, mspec in cases:
    curve = build_curve(cspec)
    bmap = BoundaryMap(curve, build_param(mspec, curve.length))
    prof = t_profile(bmap, grid_n=128, tol=1e-7, route="both-averaged")
    gap = np.abs(prof.values_singular - prof.values_cotangent)
    print(f"== {title}")
    print(f"   min T = {prof.min_value:+.8f}, max T = {prof.values.max():+.8f}")
    print(f"   route disagreement: max {gap.max():.2e}, median {np.median(gap):.2e}")
    print(f"   quadrature error estimates: max {prof.errors_est.max():.2e}")
    k = int(np.argmax(gap))
    print(f"   worst point tau = {prof.taus[k]:.4f}: "
          f"singular {prof.values_singular[k]:+.10f} vs "
          f"cotangent {prof.values_cotangent[k]:+.10f}")
    print()
