"""Berezin calculus on reproducing kernel Hilbert spaces.

Modules
-------
linalg
    Dense complex linear algebra: Jacobi eigensolver, matrix functions,
    polar decomposition, spectral radius.
spaces
    Finite, weighted Hardy and Fock kernel spaces.
berezin
    Berezin transform, radius, norm and the sigma_t seminorm family.
inequalities
    Seeded randomized checks of operator inequalities.
convexity
    Closed-form Berezin ranges and numerical convexity diagnostics.
"""

from .berezin import (
    ClosedFormOperator,
    DiscGrid,
    ExactSampler,
    InterpolationPath,
    MatrixOperator,
    MeanKind,
    RadialGrid,
    adjoint_pairing,
    berezin_norm,
    berezin_radius,
    berezin_transform,
    c_tilde,
    mean_eval,
    min_t_ber_mix,
    pairing,
    sigma_t_norm,
    t_berezin_norm,
)
from .convexity import (
    ConvexityReport,
    SampledRange,
    blaschke_transform,
    convex_hull,
    convexity_diagnostic,
    dilation_convexity,
    finite_rank_transform,
    fock_diag_convexity,
    fock_diag_transform,
    fock_scalar_convexity,
    fock_scalar_transform,
    hardy_dilation_transform,
    rank_one_diag_range,
    rank_one_offdiag_disc,
)
from .errors import (
    BercalcError,
    ContractError,
    ConvergenceError,
    DimensionError,
    DomainError,
    InputError,
    SingularityError,
    SingularMatrixError,
)
from .inequalities import blocks_suite, lemma_suite, run_suite, section3_suite, unitary_check
from .spaces import FiniteSpace, Fock, WeightedHardy, parse_space

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BercalcError",
    "ContractError",
    "ConvergenceError",
    "DimensionError",
    "DomainError",
    "InputError",
    "SingularityError",
    "SingularMatrixError",
    "FiniteSpace",
    "WeightedHardy",
    "Fock",
    "parse_space",
    "MeanKind",
    "InterpolationPath",
    "mean_eval",
    "MatrixOperator",
    "ClosedFormOperator",
    "ExactSampler",
    "DiscGrid",
    "RadialGrid",
    "pairing",
    "adjoint_pairing",
    "berezin_transform",
    "berezin_radius",
    "berezin_norm",
    "c_tilde",
    "sigma_t_norm",
    "t_berezin_norm",
    "min_t_ber_mix",
    "run_suite",
    "lemma_suite",
    "section3_suite",
    "blocks_suite",
    "unitary_check",
    "SampledRange",
    "ConvexityReport",
    "convex_hull",
    "convexity_diagnostic",
    "hardy_dilation_transform",
    "dilation_convexity",
    "blaschke_transform",
    "rank_one_diag_range",
    "rank_one_offdiag_disc",
    "finite_rank_transform",
    "fock_scalar_transform",
    "fock_scalar_convexity",
    "fock_diag_transform",
    "fock_diag_convexity",
]
