"""Numerical verifiers for the properties unique to zero-centered transforms:
symmetry of the spectrum, reversal/conjugation, the DC identity, and the
real/imaginary summation identities with their frequency-dependent scale
factors.

Tolerances follow a two-level hierarchy: structural identities (exact up to
rounding) are checked at 1e-10 scale, leakage-sum identities (which cancel
O(N) sinc tails against each other) at 1e-6.

Negative controls are first-class results here: a control report *passes*
when the head-grid transform deviates as strongly as required, which is what
establishes that these properties are specific to the centered conventions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grids import (
    ContractViolation,
    Convention,
    ConventionError,
    Signal,
    Spectrum,
    time_grid,
)
from .kernels import nsinc
from .transforms import FreqChoice, forward, odft, sdft

__all__ = [
    "PropertyReport",
    "GammaFactor",
    "sample_tones",
    "dc_identity",
    "symmetry_check",
    "conjugate_check",
    "real_part_sum",
    "imag_part_sum",
    "gamma_estimate",
    "gamma_truncated_sum",
    "alpha_beta_estimate",
    "table2_report",
]

STRUCTURAL_TOL = 1e-10
LEAKAGE_TOL = 1e-6


@dataclass(frozen=True)
class PropertyReport:
    name: str
    measured: complex | float
    expected: complex | float
    abs_error: float
    tolerance: float
    passed: bool
    note: str = ""


def _report(name, measured, expected, abs_error, tolerance, note="") -> PropertyReport:
    # nan abs_error (not-applicable) compares False, so the report fails closed
    passed = bool(abs_error <= tolerance)
    return PropertyReport(name, measured, expected, float(abs_error), float(tolerance),
                          passed, note)


def _negative_control(name, deviation, required, note="") -> PropertyReport:
    """Encode 'must deviate by at least `required`' in the passed-iff-
    abs_error<=tolerance frame: the shortfall is the error."""
    shortfall = max(0.0, float(required) - float(deviation))
    note = (note + " " if note else "") + "negative control: measured deviation must reach expected"
    return _report(name, float(deviation), float(required), shortfall, 0.0, note)


def _scale(samples: np.ndarray) -> float:
    return float(np.max(np.abs(samples))) if samples.size else 0.0


def _imag_sum(spectrum: Spectrum) -> complex:
    """S = sum_{m>0} X(m) - sum_{m<0} X(m) over the spectrum's own grid."""
    v2 = spectrum.grid.values2
    pos = spectrum.bins[v2 > 0].sum()
    neg = spectrum.bins[v2 < 0].sum()
    return complex(pos - neg)


def sample_tones(tones, time_values, fs: float = 1.0) -> np.ndarray:
    """sum_i A_i cos(2 pi f_i t / fs + phi_i) over the given time values."""
    t = np.asarray(time_values, dtype=float)
    x = np.zeros(t.shape)
    for tone in tones:
        x = x + tone.amp * np.cos(2 * np.pi * tone.f0 * t / fs + tone.phi)
    return x


def dc_identity(signal: Signal) -> PropertyReport:
    """Bin m = 0 equals the plain sample sum, any convention."""
    spec = forward(signal, FreqChoice.FAST_GRID)
    idx = np.nonzero(spec.grid.values2 == 0)[0]
    x0_bin = complex(spec.bins[idx[0]])
    total = complex(signal.samples.sum())
    tol = STRUCTURAL_TOL * signal.n * _scale(signal.samples)
    return _report("dc-identity", x0_bin, total, abs(x0_bin - total), tol)


def symmetry_check(signal: Signal) -> tuple[PropertyReport, PropertyReport]:
    """Even real input -> real, even spectrum; odd real input -> imaginary,
    odd spectrum (centered grid).  Inputs that are neither come back as
    not-applicable reports rather than being coerced."""
    conv = signal.grid.convention
    if conv not in (Convention.SYMMETRIC_ODD, Convention.SYMMETRIC_EVEN_CORRECTED):
        raise ConventionError(
            f"symmetry check needs a grid symmetric about t=0, got {conv.value}"
        )
    if not signal.is_real:
        raise ContractViolation("symmetry check is defined for real samples")
    x = signal.samples.real
    scale = _scale(signal.samples)
    tol = STRUCTURAL_TOL * max(1.0, signal.n * scale)
    detect = 1e-9 * max(scale, 1e-30)
    is_even = np.max(np.abs(x - x[::-1])) <= detect
    is_odd = np.max(np.abs(x + x[::-1])) <= detect
    if not (is_even or is_odd):
        nan = float("nan")
        note = "input is neither even nor odd about t=0; symmetry class not applicable"
        return (_report("spectrum-real", nan, 0.0, nan, tol, note),
                _report("spectrum-even-symmetry", nan, 0.0, nan, tol, note))
    spec = sdft(signal, FreqChoice.CENTERED_GRID)
    bins = spec.bins
    if is_even:
        r1 = _report("spectrum-real", float(np.max(np.abs(bins.imag))), 0.0,
                     float(np.max(np.abs(bins.imag))), tol,
                     "even input: imaginary part of the spectrum must vanish")
        dev = float(np.max(np.abs(bins - bins[::-1])))
        r2 = _report("spectrum-even-symmetry", dev, 0.0, dev, tol,
                     "even input: X(m) = X(-m)")
    else:
        r1 = _report("spectrum-imaginary", float(np.max(np.abs(bins.real))), 0.0,
                     float(np.max(np.abs(bins.real))), tol,
                     "odd input: real part of the spectrum must vanish")
        dev = float(np.max(np.abs(bins + bins[::-1])))
        r2 = _report("spectrum-odd-symmetry", dev, 0.0, dev, tol,
                     "odd input: X(m) = -X(-m)")
    return r1, r2


def conjugate_check(signal: Signal) -> PropertyReport:
    """Reversing a real record conjugates its centered spectrum.  On the
    head grid the same comparison must fail for generic input, so an
    ordinary-convention signal yields a negative-control report."""
    if not signal.is_real:
        raise ContractViolation("conjugate check is defined for real samples")
    if signal.grid.convention is Convention.SYMMETRIC_EVEN_UNCORRECTED:
        # reflecting t = -N/2 lands off the grid, so record reversal is not
        # a time reflection there and the property has no clean statement
        raise ConventionError("conjugate check needs a reflection-symmetric grid")
    rev = Signal(signal.samples[::-1], signal.grid, signal.sample_rate)
    scale = _scale(signal.samples)
    if signal.grid.convention is Convention.ORDINARY_HEAD:
        x_spec = odft(signal)
        r_spec = odft(rev)
        dev = float(np.max(np.abs(r_spec.bins - np.conj(x_spec.bins))))
        return _negative_control(
            "conjugate-reversal-control", dev, 1e-2 * signal.n * scale,
            "head-grid reversal produces an unrelated spectrum;")
    x_spec = sdft(signal, FreqChoice.CENTERED_GRID)
    r_spec = sdft(rev, FreqChoice.CENTERED_GRID)
    dev = float(np.max(np.abs(r_spec.bins - np.conj(x_spec.bins))))
    tol = STRUCTURAL_TOL * max(1.0, signal.n * scale)
    return _report("conjugate-reversal", dev, 0.0, dev, tol,
                   "reversed record's spectrum must equal the conjugate spectrum")


def real_part_sum(signal: Signal) -> PropertyReport:
    """Sum of the real parts of all bins equals N * x(0) on the odd centered
    grid.  On the head grid the bin sum collapses to N times the *head*
    sample instead, so measured against the record-center origin it must
    deviate for generic input — that case returns a negative control."""
    n = signal.n
    scale = _scale(signal.samples)
    if signal.grid.convention is Convention.SYMMETRIC_ODD:
        spec = sdft(signal, FreqChoice.FAST_GRID)
        s = float(np.sum(spec.bins.real))
        x0 = float(signal.samples[(n - 1) // 2].real)
        expected = n * x0
        tol = 1e-8 * n * scale
        return _report("real-part-sum", s, expected, abs(s - expected), tol)
    if signal.grid.convention is Convention.ORDINARY_HEAD:
        if n % 2 == 0:
            raise ConventionError("the head-grid control needs an odd record length")
        spec = odft(signal)
        s = float(np.sum(spec.bins.real))
        center = float(signal.samples[(n - 1) // 2].real)
        dev = abs(s - n * center)
        return _negative_control(
            "real-part-sum-control", dev, 1e-2 * n * scale,
            "head-grid bin sum returns N*x(head), not N times the record center;")
    raise ConventionError("real-part summation identity holds on the odd centered grid")


@dataclass(frozen=True)
class GammaFactor:
    """Scale factor relating the imaginary-part sum of a single sampled tone
    to N * A * sin(phi); depends only on N, fs and the tone frequency."""

    f_i: float
    n: int
    fs: float
    gamma: float


def gamma_estimate(f_i: float, n: int, fs: float = 1.0) -> GammaFactor:
    """Constructive estimate: transform the unit probe tone with phi = pi/2
    (for which the identity reads S = i * gamma * N) and read gamma off.

    Exact up to transform precision; independent of amplitude and phase by
    construction.  Cross-check against gamma_truncated_sum.
    """
    if n % 2 == 0:
        raise ConventionError("gamma is defined for odd record lengths")
    grid = time_grid(Convention.SYMMETRIC_ODD, n)
    x = np.cos(2 * np.pi * f_i * grid.values / fs + np.pi / 2)
    spec = sdft(Signal(x, grid, fs), FreqChoice.FAST_GRID)
    s = _imag_sum(spec)
    return GammaFactor(float(f_i), n, float(fs), float(s.imag) / n)


def gamma_truncated_sum(f_i: float, n: int, fs: float = 1.0, j_max: int = 1000) -> float:
    """Independent route to gamma: the double sinc sums over positive minus
    negative bins, alias sum truncated to j in [-j_max, j_max]."""
    if n % 2 == 0:
        raise ConventionError("gamma is defined for odd record lengths")
    b = f_i * n / fs
    k = (n - 1) // 2
    m = np.arange(1, k + 1, dtype=float)
    jn = np.arange(-j_max, j_max + 1, dtype=float) * n
    pos = float(np.sum(nsinc(np.add.outer(m - b, jn))))
    neg = float(np.sum(nsinc(np.add.outer(-m - b, jn))))
    return pos - neg


def imag_part_sum(signal: Signal, tones) -> list[PropertyReport]:
    """Per-tone imaginary-part summation: S_i = i * gamma_i * N * A_i *
    sin(phi_i), plus a linearity report tying the per-tone sums to the full
    signal's sum."""
    if signal.grid.convention is not Convention.SYMMETRIC_ODD:
        raise ConventionError("imaginary-part summation needs the odd centered grid")
    n = signal.n
    fs = signal.sample_rate
    t = signal.grid.values
    reports: list[PropertyReport] = []

    resampled = sample_tones(tones, t, fs)
    model_dev = float(np.max(np.abs(signal.samples - resampled)))
    model_tol = 1e-8 * max(1.0, n * _scale(signal.samples))
    reports.append(_report("tone-model-match", model_dev, 0.0, model_dev, model_tol,
                           "signal must be the sampled sum of the given tones"))

    per_tone_sums = []
    for i, tone in enumerate(tones):
        xi = tone.amp * np.cos(2 * np.pi * tone.f0 * t / fs + tone.phi)
        si = _imag_sum(sdft(Signal(xi, signal.grid, fs), FreqChoice.FAST_GRID))
        per_tone_sums.append(si)
        gamma = gamma_estimate(tone.f0, n, fs).gamma
        denom = gamma * n * tone.amp
        name = f"tone{i}-imag-sum"
        if abs(denom) < 1e-9:
            nan = float("nan")
            reports.append(_report(name, si, nan, nan, LEAKAGE_TOL,
                                   "indeterminate: gamma*N*A below 1e-9, phase unrecoverable"))
            continue
        expected = 1j * denom * math.sin(tone.phi)
        reports.append(_report(name, si, expected, abs(si - expected),
                               LEAKAGE_TOL * abs(denom)))

    s_total = _imag_sum(sdft(signal, FreqChoice.FAST_GRID))
    s_parts = complex(np.sum(per_tone_sums)) if per_tone_sums else 0.0
    amp_total = sum(tone.amp for tone in tones)
    lin_tol = 1e-8 * n * max(1.0, amp_total)
    reports.append(_report("imag-sum-linearity", s_total, s_parts,
                           abs(s_total - s_parts), lin_tol,
                           "per-tone sums must add up to the full signal's sum"))
    return reports


def alpha_beta_estimate(f_i: float, n: int, fs: float = 1.0) -> tuple[float, float]:
    """Constructive scale factors for the even-length corrected convention on
    its centered half-integer bins: alpha from a phi=0 probe through the
    real-part sum, beta from a phi=pi/2 probe through the imaginary-part sum.
    """
    if n % 2 == 1:
        raise ConventionError("alpha/beta are defined for even record lengths")
    grid = time_grid(Convention.SYMMETRIC_EVEN_CORRECTED, n)
    x_cos = np.cos(2 * np.pi * f_i * grid.values / fs)
    spec_cos = sdft(Signal(x_cos, grid, fs), FreqChoice.CENTERED_GRID)
    alpha = float(np.sum(spec_cos.bins.real)) / n
    x_sin = np.cos(2 * np.pi * f_i * grid.values / fs + np.pi / 2)
    spec_sin = sdft(Signal(x_sin, grid, fs), FreqChoice.CENTERED_GRID)
    beta = float(_imag_sum(spec_sin).imag) / n
    return alpha, beta


def table2_report(tones, n: int, fs: float = 1.0) -> list[PropertyReport]:
    """Evaluate the summation-identity table for a multi-tone signal: the
    centered-grid identities must hold, and the head-grid row must fail
    (it has no such identity)."""
    tones = list(tones)
    amp_total = sum(tone.amp for tone in tones)
    reports: list[PropertyReport] = []
    if n % 2 == 1:
        grid = time_grid(Convention.SYMMETRIC_ODD, n)
        x = sample_tones(tones, grid.values, fs)
        signal = Signal(x, grid, fs)
        reports.append(real_part_sum(signal))
        s = _imag_sum(sdft(signal, FreqChoice.FAST_GRID))
        expected = 1j * n * sum(
            gamma_estimate(tone.f0, n, fs).gamma * tone.amp * math.sin(tone.phi)
            for tone in tones)
        reports.append(_report("odd-imag-sum", s, expected, abs(s - expected),
                               LEAKAGE_TOL * n * max(1.0, amp_total)))
    else:
        grid = time_grid(Convention.SYMMETRIC_EVEN_CORRECTED, n)
        x = sample_tones(tones, grid.values, fs)
        signal = Signal(x, grid, fs)
        spec = sdft(signal, FreqChoice.CENTERED_GRID)
        coeffs = [alpha_beta_estimate(tone.f0, n, fs) for tone in tones]
        s_re = float(np.sum(spec.bins.real))
        exp_re = n * sum(a * tone.amp * math.cos(tone.phi)
                         for (a, _), tone in zip(coeffs, tones))
        reports.append(_report("even-real-sum", s_re, exp_re, abs(s_re - exp_re),
                               LEAKAGE_TOL * n * max(1.0, amp_total)))
        s_im = _imag_sum(spec)
        exp_im = 1j * n * sum(b * tone.amp * math.sin(tone.phi)
                              for (_, b), tone in zip(coeffs, tones))
        reports.append(_report("even-imag-sum", s_im, exp_im, abs(s_im - exp_im),
                               LEAKAGE_TOL * n * max(1.0, amp_total)))

    # head-grid row: the real-part identity must NOT hold for generic input
    head = time_grid(Convention.ORDINARY_HEAD, n)
    x_head = sample_tones(tones, np.arange(n) - (n - 1) / 2.0, fs)
    head_signal = Signal(x_head, head, fs)
    spec_o = odft(head_signal)
    s_o = float(np.sum(spec_o.bins.real))
    center = float(x_head[(n - 1) // 2])
    scale = _scale(head_signal.samples)
    if n % 2 == 1:
        expected_value = n * center
    else:
        expected_value = exp_re
    dev = abs(s_o - expected_value)
    reports.append(_negative_control("odft-real-sum-control", dev, 1e-2 * n * scale,
                                     "head-grid transform has no summation identity;"))
    return reports
