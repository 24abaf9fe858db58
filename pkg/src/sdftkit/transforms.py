"""Forward/inverse transforms for every grid convention, transform matrices,
and the orthogonal basis vectors they are built from.

Fast paths all reduce to one identity: for integer frequencies m and a
unit-spaced time grid starting at t0,

    X(m) = sum_n x(t0 + n) e^{-i 2 pi m (t0 + n) / N}
         = e^{-i 2 pi m t0 / N} * Xo(m mod N)

where Xo is the head-grid FFT of the samples in grid order.  The half-sample
advance of the corrected even grid is just t0 = -(N-1)/2 here.  Half-integer
*frequency* grids have no such reduction and go through the brute-force
oracle instead.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .grids import (
    SYMMETRIC_CONVENTIONS,
    ContractViolation,
    Convention,
    ConventionError,
    FrequencyGrid,
    Signal,
    Spectrum,
    TimeGrid,
    time_grid,
)
from .kernels import dft_oracle, fast_odft

__all__ = [
    "FreqChoice",
    "TransformMatrix",
    "BasisVector",
    "odft",
    "sdft",
    "forward",
    "inverse",
    "odft_to_sdft",
    "transform_matrix",
    "matrix_for",
    "basis_vector",
    "gram_check",
]


class FreqChoice(enum.Enum):
    """Frequency grid selection for the symmetric transforms."""

    FAST_GRID = "fast"
    CENTERED_GRID = "centered"


def _twisted_fft(samples: np.ndarray, t0: float, freq_values: np.ndarray, n: int) -> np.ndarray:
    """Integer-frequency transform of a unit-spaced record starting at t0."""
    xo = fast_odft(samples)
    m = np.rint(freq_values).astype(np.int64)
    twist = np.exp(-2j * np.pi * m * t0 / n)
    return twist * xo[np.mod(m, n)]


def odft(signal: Signal) -> Spectrum:
    """Head-grid DFT: bins m = sum_n x(n) e^{-i2pi mn/N}, m in {0..N-1}."""
    if signal.grid.convention is not Convention.ORDINARY_HEAD:
        raise ConventionError(
            f"odft needs a head-indexed signal, got {signal.grid.convention.value}"
        )
    bins = fast_odft(signal.samples)
    return Spectrum(bins, FrequencyGrid.ordinary(signal.n), Convention.ORDINARY_HEAD,
                    signal.sample_rate)


def sdft(signal: Signal, freq_choice: FreqChoice = FreqChoice.FAST_GRID) -> Spectrum:
    """Symmetric DFT of a zero-centered record.

    FAST_GRID picks the integer bins {-N/2 .. N/2-1} (== {-(N-1)/2 ..
    (N-1)/2} for odd N) and is computed by FFT plus a per-bin phase twist.
    CENTERED_GRID picks {-(N-1)/2 .. (N-1)/2}; for even N those bins are
    half-integers, there is no FFT reduction, and the brute-force oracle is
    used.
    """
    conv = signal.grid.convention
    if conv not in SYMMETRIC_CONVENTIONS:
        raise ConventionError(f"sdft needs a symmetric signal, got {conv.value}")
    n = signal.n
    if freq_choice is FreqChoice.FAST_GRID:
        fgrid = FrequencyGrid.fast_symmetric(n)
    else:
        fgrid = FrequencyGrid.centered_symmetric(n)
    if fgrid.is_integer:
        t0 = signal.grid.values2[0] / 2.0
        bins = _twisted_fft(signal.samples, t0, fgrid.values, n)
    else:
        bins = dft_oracle(signal.samples, signal.grid.values, fgrid.values, n)
    return Spectrum(bins, fgrid, conv, signal.sample_rate)


def forward(signal: Signal, freq_choice: FreqChoice = FreqChoice.FAST_GRID) -> Spectrum:
    """Dispatch to odft or sdft based on the signal's convention."""
    if signal.grid.convention is Convention.ORDINARY_HEAD:
        return odft(signal)
    return sdft(signal, freq_choice)


def inverse(spectrum: Spectrum) -> Signal:
    """Inverse transform: x = (1/N) M^H X for the forward matrix M implied by
    the spectrum's grids.

    For the unit-spaced grids used throughout this is evaluated in
    O(N log N): modulate, inverse FFT, demodulate.  Writing m_p = m0 + p and
    t_n = t0 + n,

        x(t_n) = e^{i 2 pi m0 (t0+n)/N} * IFFT[ X_p e^{i 2 pi p t0 / N} ](n)

    which the tests pin against the literal (1/N) M^H X matrix product.
    """
    n = spectrum.n
    tgrid = time_grid(spectrum.source_convention, n)
    t0 = tgrid.values2[0] / 2.0
    m0 = spectrum.grid.values2[0] / 2.0
    p = np.arange(n)
    y = np.fft.ifft(spectrum.bins * np.exp(2j * np.pi * p * t0 / n))
    x = np.exp(2j * np.pi * m0 * (t0 + p) / n) * y
    return Signal(x, tgrid, spectrum.sample_rate)


def odft_to_sdft(ordinary: Spectrum) -> Spectrum:
    """Re-center a head-grid spectrum onto the symmetric convention.

    The record is shifted so it starts at t0 = -(N-1)/2 (integer positions
    for odd N, half-integer for even N), which multiplies bin m by
    e^{+i pi m (N-1)/N}; negative bins are read from the head spectrum by
    periodicity X_o(m) = X_o(m + N).  The sign of the exponent is pinned by a
    regression test against direct evaluation on the re-centered grid.
    """
    if ordinary.source_convention is not Convention.ORDINARY_HEAD:
        raise ConventionError("odft_to_sdft expects a head-grid spectrum")
    n = ordinary.n
    if not np.array_equal(ordinary.grid.values2, 2 * np.arange(n)):
        raise ContractViolation("odft_to_sdft expects bins on the ordinary grid {0..N-1}")
    fgrid = FrequencyGrid.fast_symmetric(n)
    m = np.rint(fgrid.values).astype(np.int64)
    twist = np.exp(1j * np.pi * m * (n - 1) / n)
    bins = twist * ordinary.bins[np.mod(m, n)]
    target = Convention.SYMMETRIC_ODD if n % 2 else Convention.SYMMETRIC_EVEN_CORRECTED
    return Spectrum(bins, fgrid, target, ordinary.sample_rate)


@dataclass(frozen=True, eq=False)
class TransformMatrix:
    """N x N matrix with entries exp(-i 2 pi f_m t_n / N).

    Rows are indexed by ``freq_values``, columns by ``time_offsets``.  When
    both lists are unit-spaced the rows are orthogonal: M M^H = N I.
    """

    entries: np.ndarray
    time_offsets: np.ndarray
    freq_values: np.ndarray
    n: int

    def gram_deviation(self) -> float:
        """max |M M^H - N I|."""
        g = self.entries @ self.entries.conj().T
        g = g - self.n * np.eye(self.n)
        return float(np.abs(g).max())

    def apply(self, samples) -> np.ndarray:
        return self.entries @ np.asarray(samples, dtype=complex)

    def invert(self, bins) -> np.ndarray:
        """(1/N) M^H X — the literal inverse-matrix product."""
        return self.entries.conj().T @ np.asarray(bins, dtype=complex) / self.n


def transform_matrix(freq_values, time_values, n: int) -> TransformMatrix:
    f = np.asarray(freq_values, dtype=float)
    t = np.asarray(time_values, dtype=float)
    if f.size != n or t.size != n:
        raise ContractViolation(
            f"need {n} frequency and time values, got {f.size} and {t.size}"
        )
    entries = np.exp(-2j * np.pi * np.outer(f, t) / n)
    return TransformMatrix(entries, t, f, n)


def matrix_for(convention: Convention, freq_choice: FreqChoice, n: int) -> TransformMatrix:
    """Forward matrix for a convention on its canonical grids."""
    tgrid = time_grid(convention, n)
    if convention is Convention.ORDINARY_HEAD:
        fgrid = FrequencyGrid.ordinary(n)
    elif freq_choice is FreqChoice.FAST_GRID:
        fgrid = FrequencyGrid.fast_symmetric(n)
    else:
        fgrid = FrequencyGrid.centered_symmetric(n)
    return transform_matrix(fgrid.values, tgrid.values, n)


@dataclass(frozen=True, eq=False)
class BasisVector:
    """q(r): components e^{-i 2 pi t_k r / N} over a unit-spaced time grid."""

    r: float
    components: np.ndarray


def basis_vector(r: float, grid) -> BasisVector:
    """Basis vector at frequency parameter ``r``.

    ``grid`` is a TimeGrid or any explicit sequence of time values — the
    latter covers off-convention grids such as {0.5, 1.5, 2.5, 3.5}, where
    the component index itself starts at a half sample.
    """
    if isinstance(grid, TimeGrid):
        t = grid.values
    else:
        t = np.asarray(grid, dtype=float)
    if t.ndim != 1 or t.size == 0:
        raise ContractViolation("basis_vector needs a non-empty 1-d time grid")
    n = t.size
    comps = np.exp(-2j * np.pi * t * r / n)
    return BasisVector(float(r), comps)


def gram_check(vectors) -> float:
    """max over pairs of |<q_i, q_j> - N delta_ij| with the second argument
    conjugated in the inner product.  Accepts BasisVectors or plain arrays."""
    vecs = [np.asarray(getattr(v, "components", v), dtype=complex) for v in vectors]
    if not vecs:
        return 0.0
    n = vecs[0].size
    if any(v.size != n for v in vecs):
        raise ContractViolation("gram_check needs vectors of equal length")
    worst = 0.0
    for i, vi in enumerate(vecs):
        for j, vj in enumerate(vecs):
            inner = np.sum(vi * np.conj(vj))
            target = n if i == j else 0.0
            worst = max(worst, abs(inner - target))
    return float(worst)
