"""Radial positive definite and conditionally negative definite functions
on free groups: spherical-function evaluation, measure synthesis, moment
feasibility certificates, and brute-force Cayley-ball oracles."""

from .classify import (
    LinearBoundReport,
    Verdict,
    decide_cnd,
    decide_pd,
    linear_bound_report,
    schoenberg,
)
from .errors import (
    BadInput,
    CapExceeded,
    ConditionLoss,
    ExactnessError,
    FreeradError,
    InsufficientDepth,
    InsufficientRadius,
    InternalDisagreement,
    NonzeroRemainder,
    NotRadial,
    SchemaError,
    SingularMoments,
)
from .moments import (
    AtomicMeasure,
    MomentVerdict,
    RadialFunction,
    atoms_from_moments,
    density_to_atoms,
    hausdorff_check,
    phi_to_moments,
    psi_to_moments,
    synthesize_phi,
    synthesize_psi,
)
from .oracle import (
    GramReport,
    NonradialReport,
    generator_weight,
    gram_cnd,
    gram_pd,
    mu_values,
    nonradial_cnd_example,
    radial_convolve,
)
from .spherical import (
    chebyshev,
    psi_coeffs,
    psi_one,
    psi_value,
    psi_values,
    s_from_z,
    spherical_closed_form,
    spherical_coeffs,
    spherical_value,
    spherical_values,
)
from .words import (
    Letter,
    Rank,
    Word,
    ball,
    ball_size,
    format_word,
    inverse,
    multiply,
    parse_word,
    reduce,
    sphere_size,
)

__version__ = "0.1.0"

__all__ = [
    "AtomicMeasure",
    "BadInput",
    "CapExceeded",
    "ConditionLoss",
    "ExactnessError",
    "FreeradError",
    "GramReport",
    "InsufficientDepth",
    "InsufficientRadius",
    "InternalDisagreement",
    "Letter",
    "LinearBoundReport",
    "MomentVerdict",
    "NonradialReport",
    "NonzeroRemainder",
    "NotRadial",
    "RadialFunction",
    "Rank",
    "SchemaError",
    "SingularMoments",
    "Verdict",
    "Word",
    "atoms_from_moments",
    "ball",
    "ball_size",
    "chebyshev",
    "decide_cnd",
    "decide_pd",
    "density_to_atoms",
    "format_word",
    "generator_weight",
    "gram_cnd",
    "gram_pd",
    "hausdorff_check",
    "inverse",
    "linear_bound_report",
    "mu_values",
    "multiply",
    "nonradial_cnd_example",
    "parse_word",
    "phi_to_moments",
    "psi_coeffs",
    "psi_one",
    "psi_to_moments",
    "psi_value",
    "psi_values",
    "radial_convolve",
    "reduce",
    "s_from_z",
    "schoenberg",
    "spherical_closed_form",
    "spherical_coeffs",
    "spherical_value",
    "spherical_values",
    "sphere_size",
    "synthesize_phi",
    "synthesize_psi",
]
