"""
Closed-form spectrum of the evolution matrix and spectral reconstruction.
"""
from .eigen import (
    EigenvectorParams,
    Spectrum,
    degenerate_pairs,
    eigenvalue,
    eigenvector,
    eigenvector_params,
    max_residual,
    min_separation,
    spectrum,
    verify_eigenpair,
)
from .fourier import (
    FourierCoeffs,
    fourier_coefficients,
    fourier_table,
    spectral_site_probability,
    wavefunction_spectral,
)
