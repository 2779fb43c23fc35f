"""Typed errors shared across the package."""


class SpectraError(Exception):
    """Base class for all library errors."""


class ZeroMass(SpectraError):
    """Normal mass M2 = 0 makes the geometric potential undefined."""


class DegenerateMetric(SpectraError):
    """Numeric fundamental forms hit a non-immersion point (det <= 0)."""


class ComplexAnisotropy(SpectraError):
    """4*M1/M2 + 1 < 0: the anisotropy parameter x is not real."""


class ZeroTwist(SpectraError):
    """omega = 0: the Heun reduction divides by omega^2."""


class RecurrenceBreakdown(SpectraError):
    """Some A_s = 0 in the three-term recurrence (beta a negative integer)."""


class NonConvergence(SpectraError):
    """Series tail bound not reached within the term budget."""


class SingularPath(SpectraError):
    """ODE continuation path would cross the regular singular point z = 1."""


class SingularArgument(SpectraError):
    """ODE residual requested at a singular point (z = 0 or z = 1)."""


class DegenerateAnisotropy(SpectraError):
    """x = 2 (M1/M2 = 3/4), excluded by the first-excited closed forms."""


class ComplexDiscriminant(SpectraError):
    """Discriminant below zero: the state is not allowed."""


class NoRootInWindow(SpectraError):
    """Energy scan found no sign change in the search window."""


class InvalidLine(SpectraError):
    """A spectrum line whose (E, Omega) pair fails the consistency identity."""


class NotAnEigenvalue(SpectraError):
    """Inverse iteration did not reach the residual bound at the given E."""
