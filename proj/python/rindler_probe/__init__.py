"""Spectra seen by an accelerated observer in ambient wave noise."""

from ._core import (
    RindlerError,
    correction_grid,
    correction_R,
    fit_distance_stationary,
    fit_scene,
    mirror_wigner,
    near_wall_limit,
    psi_closed,
    psi_quadrature,
    rindler_wigner,
    rindler_wigner_planck,
    rindler_wigner_regularized,
    run_suite,
    simulate_rindler,
    stationary_mirror_spectrum,
    suite_names,
)

__all__ = [
    "RindlerError",
    "correction_grid",
    "correction_R",
    "fit_distance_stationary",
    "fit_scene",
    "mirror_wigner",
    "near_wall_limit",
    "psi_closed",
    "psi_quadrature",
    "rindler_wigner",
    "rindler_wigner_planck",
    "rindler_wigner_regularized",
    "run_suite",
    "simulate_rindler",
    "stationary_mirror_spectrum",
    "suite_names",
]
