"""Fisher-Hartwig asymptotics of Toeplitz determinants, checked against
exact finite-N determinants, with the impenetrable Bose gas / free-fermion
correlators as the worked application."""

from .asymptotics import (
    AsymptoticExpansion,
    f_plus_minus,
    fh_determinant_asymptote,
    fh_E_constant,
    fh_expansion,
    smooth_from_function,
    smooth_log_coeffs,
    szego_sum,
)
from .correlators import (
    GasParameters,
    density_density,
    exp_counting_asymptotic,
    exp_counting_exact,
    free_fermion_green,
    free_fermion_green_fh,
    g_alpha_asymptotic,
    g_alpha_exact,
)
from .exact import (
    LogDeterminant,
    ToeplitzCoefficients,
    cue_average_oracle,
    toeplitz_coefficients,
    toeplitz_det,
    toeplitz_determinant,
)
from .special import barnes_g, barnes_ratio, log_barnes_g, log_gamma
from .symbol import (
    FHSingularity,
    FHSymbol,
    Representation,
    SmoothSymbol,
    density_density_symbol,
    density_matrix_symbol,
    enumerate_representations,
    evaluate,
    identity_symbol,
    jump_symbol,
    minimal_representations,
    szego_symbol,
)

__version__ = "0.1.0"
