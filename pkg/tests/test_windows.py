import numpy as np
import pytest

from sdftkit import (
    Convention,
    FreqChoice,
    PhaseKind,
    SamplingKind,
    Signal,
    SpectrumVariant,
    ToneParams,
    forward,
    phase_constant,
    rect_dtft,
    sample_tones,
    sampling_spectrum,
    shifted_window_ft,
    time_grid,
    tone_dtft,
    window_ft,
)

VARIANT_CONVENTION = {
    SpectrumVariant.ODFT: Convention.ORDINARY_HEAD,
    SpectrumVariant.UNCORRECTED_SDFT: Convention.SYMMETRIC_EVEN_UNCORRECTED,
    SpectrumVariant.CORRECTED_SDFT: Convention.SYMMETRIC_EVEN_CORRECTED,
}


def test_phase_constants():
    n = 10
    c1 = phase_constant(PhaseKind.SHIFTED_WINDOW_NONZERO_START, n)
    assert abs(c1.value - (-np.pi * (n - 1) / n)) < 1e-15
    c1z = phase_constant(PhaseKind.SHIFTED_WINDOW_ZERO_START, n)
    assert c1z.value == -np.pi
    c2 = phase_constant(PhaseKind.UNCORRECTED_EVEN_SDFT, n)
    assert abs(c2.value - np.pi / n) < 1e-15


def test_window_ft_shape():
    n, fs = 16, 2.0
    assert window_ft(n, fs, 0.0) == n / fs
    # nulls at every nonzero multiple of fs/n
    for k in range(1, 2 * n):
        assert abs(window_ft(n, fs, k * fs / n)) < 1e-12


def test_shifted_window_keeps_magnitude():
    n, fs = 12, 1.0
    c = phase_constant(PhaseKind.SHIFTED_WINDOW_NONZERO_START, n)
    for f in np.linspace(-0.5, 0.5, 23):
        a = window_ft(n, fs, f)
        b = shifted_window_ft(n, fs, f, c)
        assert abs(abs(a) - abs(b)) < 1e-12
    # the shift phase is linear in frequency with slope c (in bins)
    f = 0.21
    expected_phase = c.value * f * n / fs
    got = np.angle(shifted_window_ft(n, fs, f, c)) - np.angle(window_ft(n, fs, f))
    assert abs(np.exp(1j * got) - np.exp(1j * expected_phase)) < 1e-12


def test_sampling_spectra():
    fs = 3.0
    odd = sampling_spectrum(SamplingKind.ODD, fs)
    assert odd.location(2) == 2 * fs
    assert odd.weight(2) == fs
    even = sampling_spectrum(SamplingKind.EVEN, fs)
    assert even.weight(0) == fs
    assert even.weight(1) == -fs
    assert even.weight(2) == fs
    gen = sampling_spectrum(SamplingKind.GENERALIZED, fs, r=0.25)
    assert abs(gen.weight(1) - fs * np.exp(-2j * np.pi * 0.25)) < 1e-15
    # r = 1/2 reproduces the alternating-sign even train
    half = sampling_spectrum(SamplingKind.GENERALIZED, fs, r=0.5)
    assert abs(half.weight(1) + fs) < 1e-12
    rev = sampling_spectrum(SamplingKind.REVERSAL, fs)
    assert rev.location(0) == fs / 2
    assert rev.location(1) == 3 * fs / 2
    assert rev.weight(5) == fs
    with pytest.raises(ValueError):
        sampling_spectrum(SamplingKind.GENERALIZED, fs, r=0.75)
    with pytest.raises(ValueError):
        sampling_spectrum(SamplingKind.GENERALIZED, fs)


def test_tone_params_validation():
    with pytest.raises(ValueError):
        ToneParams(-1.0, 0.1, 0.0)


@pytest.mark.parametrize("variant", list(SpectrumVariant))
def test_tone_dtft_matches_discrete_transform(variant):
    # the analytic aliased-window spectrum, evaluated at the bin
    # frequencies, must reproduce the transform of the sampled tone
    n, fs = 8, 1.0
    tone = ToneParams(1.3, 0.13, 0.7)
    conv = VARIANT_CONVENTION[variant]
    grid = time_grid(conv, n)
    sig = Signal(sample_tones([tone], grid.values, fs), grid, fs)
    choice = (FreqChoice.CENTERED_GRID if variant is SpectrumVariant.CORRECTED_SDFT
              else FreqChoice.FAST_GRID)
    spec = forward(sig, choice)
    freqs = spec.grid.values * fs / n
    vals = np.array([tone_dtft(tone, n, fs, float(f), variant, j_max=4000) for f in freqs])
    assert np.max(np.abs(vals - spec.bins)) < 2e-4 * n  # truncated alias tails


@pytest.mark.parametrize("variant", list(SpectrumVariant))
def test_rect_dtft_matches_transform_of_ones(variant):
    # at *integer* bin frequencies the alias sum collapses, so even a tiny
    # j_max is exact there
    n, fs = 8, 1.0
    conv = VARIANT_CONVENTION[variant]
    grid = time_grid(conv, n)
    sig = Signal(np.ones(n), grid, fs)
    spec = forward(sig, FreqChoice.FAST_GRID)
    freqs = spec.grid.values * fs / n
    vals = np.array([rect_dtft(n, fs, float(f), variant, j_max=8) for f in freqs])
    assert np.max(np.abs(vals - spec.bins)) < 1e-10 * n


def test_rect_dtft_on_half_integer_bins():
    # the corrected variant's natural grid has half-integer bins, where the
    # alias tails never vanish; convergence is only as fast as 1/j_max
    n, fs = 8, 1.0
    grid = time_grid(Convention.SYMMETRIC_EVEN_CORRECTED, n)
    sig = Signal(np.ones(n), grid, fs)
    spec = forward(sig, FreqChoice.CENTERED_GRID)
    freqs = spec.grid.values * fs / n
    vals = np.array([
        rect_dtft(n, fs, float(f), SpectrumVariant.CORRECTED_SDFT, j_max=20000)
        for f in freqs
    ])
    assert np.max(np.abs(vals - spec.bins)) < 1e-6 * n


def test_rect_variants_share_magnitude():
    # |X(f)| is the Dirichlet kernel for every variant
    n, fs = 20, 1.0
    rng = np.random.default_rng(7)
    for f in rng.uniform(-0.5, 0.5, 50):
        mags = [abs(rect_dtft(n, fs, float(f), v, j_max=20000)) for v in SpectrumVariant]
        with np.errstate(divide="ignore", invalid="ignore"):
            dirichlet = abs(np.sin(np.pi * n * f / fs) / np.sin(np.pi * f / fs))
        for m in mags:
            assert abs(m - dirichlet) < 2e-3 * n


def test_corrected_rect_is_exactly_real():
    n, fs = 20, 1.0
    rng = np.random.default_rng(11)
    for f in rng.uniform(-0.5, 0.5, 200):
        z = rect_dtft(n, fs, float(f), SpectrumVariant.CORRECTED_SDFT, j_max=50)
        assert z.imag == 0.0


def test_uncorrected_rect_has_linear_phase_ramp():
    # away from the nulls the uncorrected even variant carries phase
    # c2 * f * n / fs, which is neither 0 nor pi in general
    n, fs = 20, 1.0
    f = 0.126
    z = rect_dtft(n, fs, f, SpectrumVariant.UNCORRECTED_SDFT, j_max=20000)
    phase = np.angle(z)
    assert min(abs(phase), abs(abs(phase) - np.pi)) > 1e-3
