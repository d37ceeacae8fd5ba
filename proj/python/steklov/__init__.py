"""Steklov eigenvalues and upper bounds for hypersurfaces of revolution."""

from ._core import (
    BoundReport,
    CappedProfile,
    DtnMatrix,
    InvalidInputError,
    NumericalError,
    RevolutionProfile,
    SpectrumResult,
    annulus_profile,
    b_n,
    capped_profile,
    degenerate_profile,
    dirichlet_combo,
    dtn_matrix,
    lstar,
    mixed_eigenvalue_extrapolated,
    mixed_eigenvalue_oracle,
    mode_eigenvalue,
    mode_multiplicity,
    neumann_combo,
    random_profile,
    read_profile_csv,
    richardson,
    sharpness_profile,
    sigma_dirichlet,
    sigma_neumann,
    split_length,
    steklov_spectrum,
    theorem2_bound,
    validate_profile,
    weights,
)

__all__ = [name for name in dir() if not name.startswith("_")]
