"""Parity of orthogonal arrays and mutually orthogonal Latin squares."""

from ._core import (
    DomainError,
    OrthogonalArray,
    ResourceError,
    TauVector,
    achieved_parity_types,
    block_sigma,
    check_plausible,
    circulant_sigma,
    class_of_oa,
    count_latin_squares,
    determining_components,
    enumerate_classes,
    ensemble_census,
    feasible_type_counts,
    is_good,
    linear_mols,
    lower_triangular_sigma,
    max_equiparity,
    mols_to_oa,
    optimal_mu,
    orbit,
    permutation_parity,
    pp_plausible_sigma,
    run_cli,
    sigma_parity,
    tau_from_sigma,
    tau_parity,
    thm45_oa,
)

__all__ = [name for name in dir() if not name.startswith("_")]
