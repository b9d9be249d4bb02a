"""Numerical certification of harmonic-extension diffeomorphisms of the disk.

The toolkit builds Dini-smooth Jordan curves in arc-length parametrization,
composes them with weak homeomorphisms of the circle, evaluates the boundary
Jacobian factor T by two independent singular quadrature routes, and decides
whether the harmonic (disk-kernel) extension of the boundary data is a
diffeomorphism of the open unit disk, cross-validated by a brute-force
univalence oracle.
"""

from .boundary import (BoundaryMap, WeakHomeomorphism, boundary_kernel,
                       boundary_kernel_direct, build_param, lipschitz_estimate,
                       mollify)
from .certifier import (ANCheck, Certificate, ConjectureProbe, MollifiedReport,
                      OracleReport, alessandrini_nesi_check, certify,
                      conjecture_probe, mollified_pipeline, univalence_oracle)
from .curves import (DiniResult, JordanCurve, KernelBound, ModulusOfContinuity,
                     TurningAngle, build_curve, chord_kernel, dini_integral,
                     is_convex, kernel_bound_check, modulus_of_continuity,
                     turning_angle, unit_speed_deviation)
from .harmonic import (HarmonicMap, RadialJacobian, auto_fourier, eval_w,
                       fourier_coefficients, harmonic_from_coeffs,
                       jacobian_interior, poisson_integral_direct,
                       radial_jacobian)
from .render import disk_image_polylines, render_svg
from .toperator import (DominatingBound, TProfile, boundary_jacobian,
                        dominating_bound, t_cotangent, t_profile, t_singular)

__version__ = "0.1.0"
