"""Schroedinger-cat Wigner functions under loss and gain-compensated baths."""

from ._core import (
    CatdecoError,
    CatState,
    EnvironmentModel,
    ErrorReport,
    FockDensityMatrix,
    GridSpec,
    Mixture,
    Parity,
    RealField,
    cat_density_matrix,
    cat_normalization,
    cat_wigner,
    char_function,
    coherent_wigner,
    compare,
    default_cutoff,
    diffusion_as_reordering,
    diffusive_interference_amplitude,
    diffusive_mixture,
    diffusive_wigner,
    fd_evolve,
    integrate,
    lindblad_evolve,
    load_grid,
    mean_photon_from_wigner,
    moment,
    negativity_volume,
    ou_propagate,
    purity,
    purity_from_wigner,
    q_from_rho,
    render_ppm,
    reorder,
    save_grid,
    standard_interference_amplitude,
    standard_wigner,
    vacuum_wigner,
    visibility_table,
    wigner_from_rho,
)

__version__ = "0.1.0"
