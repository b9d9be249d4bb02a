"""Exception hierarchy for the harmcert toolkit."""


class HarmcertError(Exception):
    """Base class for all toolkit errors."""


class SpecError(HarmcertError):
    """A curve/map specification document is malformed.

    The message always names the offending field.
    """


# -- curve construction and geometry --

class NotClosed(HarmcertError):
    """Input boundary data does not close up into a loop."""


class SelfIntersecting(HarmcertError):
    """The candidate curve crosses itself on the validation grid."""


class TooFewSamples(HarmcertError):
    """Not enough distinct points to define a closed curve."""


class UnwrapFailure(HarmcertError):
    """Tangent-angle lift could not be continued (curve too rough)."""


# -- boundary parametrizations --

class NotMonotone(HarmcertError):
    """Candidate circle parametrization is not nondecreasing."""


class WrongPeriodIncrement(HarmcertError):
    """f(2*pi) - f(0) does not match the curve length."""


class InvalidParams(HarmcertError):
    """Closed-form parametrization parameters violate monotonicity."""


# -- harmonic extension --

class TailNotDecaying(HarmcertError):
    """Fourier tail carries too much mass for the requested order."""


class OutsideDomain(HarmcertError):
    """Evaluation point is outside the admissible part of the disk."""


# -- singular quadrature / boundary factor --

class QuadratureNotConverged(HarmcertError):
    """Adaptive quadrature error estimate stayed above tolerance."""


class CrossCheckFailed(HarmcertError):
    """Independent quadrature routes disagree beyond the cross-check band."""


class DiniViolation(HarmcertError):
    """Dominating-function integral failed to converge numerically."""


# -- certification --

class NotADiffeomorphism(HarmcertError):
    """Operation requires strictly increasing boundary data."""


class ConvexityContradiction(HarmcertError):
    """Convex curve produced a nonpositive factor profile (software fault)."""
