"""Quantum states on a twisted minimal surface with anisotropic mass.

The closed-form route (confluent-Heun termination) and the numeric route
(finite-difference Sturm bisection) are deliberately independent; the CLI's
verify pipeline plays them against each other.
"""

from .errors import (
    ComplexAnisotropy,
    ComplexDiscriminant,
    DegenerateAnisotropy,
    DegenerateMetric,
    InvalidLine,
    NoRootInWindow,
    NonConvergence,
    NotAnEigenvalue,
    RecurrenceBreakdown,
    SingularArgument,
    SingularPath,
    SpectraError,
    ZeroMass,
    ZeroTwist,
)
from .geometry import (
    CurvaturePair,
    HelicoidParams,
    SurfaceCoords,
    embed,
    geometric_potential,
    helicoid_embedding,
    metric,
    numeric_curvatures,
    principal_curvatures,
)
from .heun import (
    HeunParams,
    HeunSeries,
    eval_on_grid,
    heunc_eval,
    heunc_eval_method,
    is_polynomial,
    ode_residual,
    series_coefficients,
)
from .model import (
    MassPair,
    ModelParams,
    anisotropy_x,
    classify_minima,
    effective_potential,
    potential_profile,
)
from .solver import (
    DiscreteOperator,
    Eigenpair,
    RadialGrid,
    default_grid,
    discretize,
    eigenfunction,
    eigenvalue_by_index,
    lowest_eigenvalues,
    nearest_eigenvalue,
    sturm_count,
)
from .spectrum import (
    ParameterMap,
    SpectrumLine,
    ValidityFlags,
    WavefunctionSample,
    energy_from_cndA,
    generic_spectrum,
    ground_state,
    heun_parameters,
    n1_spectrum,
    omega_branches_n1,
    radial_wavefunction,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
