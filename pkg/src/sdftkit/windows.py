"""Analytic continuous-frequency spectra: window transforms with their phase
constants, sampling-function spectra as symbolic impulse trains, and the
alias-sum DTFT of single tones and rectangular windows under each transform
convention.

Frequency units for phase terms: every phase constant multiplies the
frequency expressed in *bins*, i.e. c * (f N / fs).  That is the only reading
under which the nonzero-start constant -pi(N-1)/N at a one-bin offset
reproduces a shift by (N-1)/2 samples, and it is applied consistently here.

The tone spectra are double alias sums.  The negative-frequency term carries
the phase e^{+i(c*b2 - phi)} with b2 the binned offset (f + f0 + j fs) N/fs:
it is the conjugate-symmetry image of the positive-frequency term, and the
tests pin it against the discrete transforms of sampled tones.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .grids import ContractViolation
from .kernels import nsinc

__all__ = [
    "PhaseKind",
    "PhaseConstant",
    "phase_constant",
    "window_ft",
    "shifted_window_ft",
    "SamplingKind",
    "ImpulseTrain",
    "sampling_spectrum",
    "ToneParams",
    "SpectrumVariant",
    "tone_dtft",
    "rect_dtft",
]


class PhaseKind(enum.Enum):
    SHIFTED_WINDOW_NONZERO_START = "shifted-window-nonzero-start"
    SHIFTED_WINDOW_ZERO_START = "shifted-window-zero-start"
    UNCORRECTED_EVEN_SDFT = "uncorrected-even-sdft"


@dataclass(frozen=True)
class PhaseConstant:
    """Linear-phase coefficient (radians per bin of frequency offset)."""

    kind: PhaseKind
    n: int
    value: float


def phase_constant(kind: PhaseKind, n: int) -> PhaseConstant:
    if n < 1:
        raise ContractViolation(f"window length must be >= 1, got {n}")
    if kind is PhaseKind.SHIFTED_WINDOW_NONZERO_START:
        value = -np.pi * (n - 1) / n
    elif kind is PhaseKind.SHIFTED_WINDOW_ZERO_START:
        value = -np.pi
    else:
        value = np.pi / n
    return PhaseConstant(kind, n, float(value))


def window_ft(n: int, fs: float, f: float) -> complex:
    """Transform of the centered length-N rectangular window:
    (N/fs) nsinc(N f / fs).  Real for all f; N/fs at f = 0."""
    if fs <= 0:
        raise ContractViolation(f"fs must be positive, got {fs}")
    return complex((n / fs) * nsinc(n * f / fs))


def shifted_window_ft(n: int, fs: float, f: float, constant: PhaseConstant) -> complex:
    """Window transform after shifting the window off center: the magnitude
    is unchanged and the phase picks up constant.value per bin of f."""
    bins = f * n / fs
    return window_ft(n, fs, f) * np.exp(1j * constant.value * bins)


class SamplingKind(enum.Enum):
    ODD = "odd"
    EVEN = "even"
    GENERALIZED = "generalized"
    REVERSAL = "reversal"


@dataclass(frozen=True)
class ImpulseTrain:
    """Symbolic impulse train sum_j w(j) delta(f - offset - j*spacing).

    Dirac combs cannot be evaluated pointwise; convolving against one means
    summing weighted shifted copies, which is exactly what the alias sums in
    tone_dtft/rect_dtft do.
    """

    spacing: float
    offset: float
    weight_fn: Callable[[int], complex]

    def location(self, j: int) -> float:
        return self.offset + j * self.spacing

    def weight(self, j: int) -> complex:
        return complex(self.weight_fn(j))


def sampling_spectrum(kind: SamplingKind, fs: float, r: float | None = None) -> ImpulseTrain:
    """Spectrum of the equidistant sampling functions.

    Odd (samples at n*dT) gives impulses at j*fs with weight fs; even
    (samples at (n+0.5)*dT) alternates the sign; the generalized offset r
    rotates impulse j by e^{-i 2 pi r j}; the reversal train moves the
    impulses to half-integer multiples of fs.
    """
    if fs <= 0:
        raise ContractViolation(f"fs must be positive, got {fs}")
    if kind is SamplingKind.ODD:
        return ImpulseTrain(fs, 0.0, lambda j: fs)
    if kind is SamplingKind.EVEN:
        return ImpulseTrain(fs, 0.0, lambda j: fs * (-1.0) ** (j % 2))
    if kind is SamplingKind.GENERALIZED:
        if r is None or not (-0.5 < r <= 0.5):
            raise ContractViolation(f"generalized sampling offset needs -0.5 < r <= 0.5, got {r}")
        return ImpulseTrain(fs, 0.0, lambda j, _r=float(r): fs * np.exp(-2j * np.pi * _r * j))
    if kind is SamplingKind.REVERSAL:
        return ImpulseTrain(fs, fs / 2.0, lambda j: fs)
    raise ContractViolation(f"unknown sampling kind {kind}")  # pragma: no cover


@dataclass(frozen=True)
class ToneParams:
    """A cos(2 pi f0 t / fs_units + phi); phi is the phase at the
    convention's time origin."""

    amp: float
    f0: float
    phi: float

    def __post_init__(self):
        if self.amp < 0:
            raise ContractViolation(f"tone amplitude must be >= 0, got {self.amp}")


class SpectrumVariant(enum.Enum):
    ODFT = "odft"
    UNCORRECTED_SDFT = "sdft-uncorrected"
    CORRECTED_SDFT = "sdft-corrected"


def _alias_terms(f: float, f0: float, n: int, fs: float, j_max: int):
    j = np.arange(-j_max, j_max + 1)
    b1 = (f - f0 + j * fs) * n / fs  # binned offsets of the +f0 line's aliases
    b2 = (f + f0 + j * fs) * n / fs  # ... and of the -f0 line's
    return j, b1, b2


def tone_dtft(tone: ToneParams, n: int, fs: float, f: float,
              variant: SpectrumVariant, j_max: int = 1000) -> complex:
    """Windowed-tone spectrum under the chosen convention, as the alias sum
    over j in [-j_max, j_max].

    The corrected variant has no linear-phase factor at all — every term is
    real apart from e^{+-i phi} — which is what makes its rectangular-window
    phase exactly 0 or pi.
    """
    if j_max < 0:
        raise ContractViolation(f"alias half-width must be >= 0, got {j_max}")
    j, b1, b2 = _alias_terms(f, tone.f0, n, fs, j_max)
    half = n * tone.amp / 2.0
    if variant is SpectrumVariant.CORRECTED_SDFT:
        sign = np.where(j % 2 == 0, 1.0, -1.0)
        s1 = np.sum(sign * nsinc(b1))
        s2 = np.sum(sign * nsinc(b2))
        return complex(half * (s1 * np.exp(1j * tone.phi) + s2 * np.exp(-1j * tone.phi)))
    if variant is SpectrumVariant.ODFT:
        c = phase_constant(PhaseKind.SHIFTED_WINDOW_NONZERO_START, n).value
    else:
        c = phase_constant(PhaseKind.UNCORRECTED_EVEN_SDFT, n).value
    t1 = nsinc(b1) * np.exp(1j * (c * b1 + tone.phi))
    t2 = nsinc(b2) * np.exp(1j * (c * b2 - tone.phi))
    return complex(half * (np.sum(t1) + np.sum(t2)))


def rect_dtft(n: int, fs: float, f: float,
              variant: SpectrumVariant, j_max: int = 1000) -> complex:
    """DTFT of the length-N all-ones record under each convention.

    All three variants share the magnitude |sin(pi N f/fs) / sin(pi f/fs)|;
    only the phase differs, and the corrected variant's value is exactly
    real (phase 0 or pi).
    """
    if j_max < 0:
        raise ContractViolation(f"alias half-width must be >= 0, got {j_max}")
    j = np.arange(-j_max, j_max + 1)
    b = (f + j * fs) * n / fs
    if variant is SpectrumVariant.CORRECTED_SDFT:
        sign = np.where(j % 2 == 0, 1.0, -1.0)
        return complex(n * np.sum(sign * nsinc(b)))
    if variant is SpectrumVariant.ODFT:
        c = phase_constant(PhaseKind.SHIFTED_WINDOW_NONZERO_START, n).value
    else:
        c = phase_constant(PhaseKind.UNCORRECTED_EVEN_SDFT, n).value
    return complex(n * np.sum(nsinc(b) * np.exp(1j * c * b)))
