"""Exploratory sweep: factor positivity versus oracle univalence evidence.

Positivity of T is a sufficient condition for the extension to be a
diffeomorphism.  Sweeping a cosine polar family with the arc-length
parametrization, the zero crossing of min T coincides (to the sweep
resolution) with the onset of folding reported by the independent oracle,
and the grid estimate of the boundary Jacobian infimum turns negative at
the same time: empirical support for reading the infimum condition as an
equivalence.  A weak parametrization with one flat point sits exactly on
the boundary of that reading, with grid infimum 0 and no folding.  All of
this is evidence at grid resolution, not proof.
"""

from harmcert import build_curve, build_param, conjecture_probe

print(f"{'case':<28} {'min fT (grid)':>14} {'min T':>10} {'oracle':>18}")
for k in (2, 3):
    for eps in (0.0, 0.15, 0.3, 0.45, 0.6):
        curve = build_curve({"type": "polar", "formula_id": "cosine",
                             "params": {"eps": eps, "k": k}})
        param = build_param({"type": "identity"}, curve.length)
        probe = conjecture_probe(curve, param, grid_n=64, tol=1e-6,
                                 fourier_order=512)
        label = f"polar eps={eps:.2f} k={k}"
        print(f"{label:<28} {probe.ess_inf_estimate:14.5f} "
              f"{probe.min_T:10.5f} {probe.oracle_verdict:>18}")

circle = build_curve({"type": "circle"})
flat = build_param({"type": "sin-perturbed", "a": 1, "k": 1}, circle.length)
probe = conjecture_probe(circle, flat, grid_n=64, tol=1e-6, fourier_order=512)
label = "circle, flat-point map"
print(f"{label:<28} {probe.ess_inf_estimate:14.5f} "
      f"{probe.min_T:10.5f} {probe.oracle_verdict:>18}")
