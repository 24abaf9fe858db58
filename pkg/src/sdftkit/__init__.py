"""Spectral analysis with ordinary and symmetric discrete Fourier transforms.

The ordinary DFT indexes frequencies 0..N-1; the symmetric variants center
the frequency (and time) grid on zero, which makes real signals produce
conjugate-symmetric spectra with the symmetries one expects from the
continuous transform.  This package provides the transforms themselves,
orthogonal-basis/matrix views of them, closed-form spectra of sampled
windows and tones, property verifiers with explicit tolerances (plus
negative controls on the ordinary transform), and band-limited
interpolation by spectrum zero-padding.
"""

from .grids import (
    ContractViolation,
    Convention,
    ConventionError,
    FrequencyGrid,
    Signal,
    Spectrum,
    TimeGrid,
    time_grid,
)
from .kernels import dft_oracle, fast_odft, nsinc
from .transforms import (
    BasisVector,
    FreqChoice,
    TransformMatrix,
    basis_vector,
    forward,
    gram_check,
    inverse,
    matrix_for,
    odft,
    odft_to_sdft,
    sdft,
    transform_matrix,
)
from .windows import (
    ImpulseTrain,
    PhaseConstant,
    PhaseKind,
    SamplingKind,
    SpectrumVariant,
    ToneParams,
    phase_constant,
    rect_dtft,
    sampling_spectrum,
    shifted_window_ft,
    tone_dtft,
    window_ft,
)
from .properties import (
    GammaFactor,
    PropertyReport,
    alpha_beta_estimate,
    conjugate_check,
    dc_identity,
    gamma_estimate,
    gamma_truncated_sum,
    imag_part_sum,
    real_part_sum,
    sample_tones,
    symmetry_check,
    table2_report,
)
from .interpolation import (
    GibbsReport,
    PaddingSpec,
    Placement,
    dfft,
    gibbs,
    gibbs_interpolant,
    interpolate,
    interpolate_ordinary,
    ordinary_route_control,
    pad_freq,
    pad_time,
    square_wave,
)

__version__ = "0.1.0"

__all__ = [
    "ContractViolation",
    "Convention",
    "ConventionError",
    "FrequencyGrid",
    "Signal",
    "Spectrum",
    "TimeGrid",
    "time_grid",
    "dft_oracle",
    "fast_odft",
    "nsinc",
    "BasisVector",
    "FreqChoice",
    "TransformMatrix",
    "basis_vector",
    "forward",
    "gram_check",
    "inverse",
    "matrix_for",
    "odft",
    "odft_to_sdft",
    "sdft",
    "transform_matrix",
    "ImpulseTrain",
    "PhaseConstant",
    "PhaseKind",
    "SamplingKind",
    "SpectrumVariant",
    "ToneParams",
    "phase_constant",
    "rect_dtft",
    "sampling_spectrum",
    "shifted_window_ft",
    "tone_dtft",
    "window_ft",
    "GammaFactor",
    "PropertyReport",
    "alpha_beta_estimate",
    "conjugate_check",
    "dc_identity",
    "gamma_estimate",
    "gamma_truncated_sum",
    "imag_part_sum",
    "real_part_sum",
    "sample_tones",
    "symmetry_check",
    "table2_report",
    "GibbsReport",
    "PaddingSpec",
    "Placement",
    "dfft",
    "gibbs",
    "gibbs_interpolant",
    "interpolate",
    "interpolate_ordinary",
    "ordinary_route_control",
    "pad_freq",
    "pad_time",
    "square_wave",
    "__version__",
]
