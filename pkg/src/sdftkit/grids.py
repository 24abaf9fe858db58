"""Grid and container types shared by every transform in the kit.

Time and frequency grids are stored as *doubled* integer values (``values2``)
so that half-integer grids stay exact; floats appear only when a grid is
handed to an exponential.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Convention",
    "ConventionError",
    "ContractViolation",
    "TimeGrid",
    "FrequencyGrid",
    "Signal",
    "Spectrum",
    "time_grid",
]


class Convention(enum.Enum):
    """Which time grid a record lives on."""

    ORDINARY_HEAD = "odft"
    SYMMETRIC_ODD = "sdft-odd"
    SYMMETRIC_EVEN_UNCORRECTED = "sdft-even-uncorrected"
    SYMMETRIC_EVEN_CORRECTED = "sdft-even-corrected"


SYMMETRIC_CONVENTIONS = (
    Convention.SYMMETRIC_ODD,
    Convention.SYMMETRIC_EVEN_UNCORRECTED,
    Convention.SYMMETRIC_EVEN_CORRECTED,
)


class ConventionError(ValueError):
    """An operation was handed a record on an incompatible grid."""


class ContractViolation(ValueError):
    """Mismatched lengths or otherwise malformed arguments."""


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class TimeGrid:
    """N time indices in sample units.

    ``values2`` holds 2x the time values as integers: even entries are whole
    samples, odd entries are the half-integer positions of the corrected
    even-length grid.
    """

    convention: Convention
    length: int
    values2: np.ndarray

    @property
    def values(self) -> np.ndarray:
        return self.values2 / 2.0

    def __len__(self) -> int:
        return self.length


def time_grid(convention: Convention, n: int) -> TimeGrid:
    """Build the canonical grid for ``convention`` at length ``n``."""
    if n < 1:
        raise ContractViolation(f"grid length must be >= 1, got {n}")
    if convention is Convention.ORDINARY_HEAD:
        v2 = 2 * np.arange(n, dtype=np.int64)
    elif convention is Convention.SYMMETRIC_ODD:
        if n % 2 == 0:
            raise ConventionError(f"symmetric-odd grid needs odd length, got {n}")
        v2 = 2 * np.arange(n, dtype=np.int64) - (n - 1)
    elif convention is Convention.SYMMETRIC_EVEN_UNCORRECTED:
        if n % 2 == 1:
            raise ConventionError(f"uncorrected even grid needs even length, got {n}")
        v2 = 2 * np.arange(n, dtype=np.int64) - n
    elif convention is Convention.SYMMETRIC_EVEN_CORRECTED:
        if n % 2 == 1:
            raise ConventionError(f"corrected even grid needs even length, got {n}")
        # half-integer positions: the record is exactly symmetric about t=0
        v2 = 2 * np.arange(n, dtype=np.int64) - (n - 1)
    else:  # pragma: no cover - enum is closed
        raise ConventionError(f"unknown convention {convention}")
    return TimeGrid(convention, n, _frozen(v2))


@dataclass(frozen=True, eq=False)
class FrequencyGrid:
    """N strictly increasing unit-spaced bin values (units of fs/N).

    Like TimeGrid, ``values2`` is 2x the bin values so half-integer bins are
    exact.
    """

    length: int
    values2: np.ndarray

    @property
    def values(self) -> np.ndarray:
        return self.values2 / 2.0

    def __len__(self) -> int:
        return self.length

    @property
    def is_integer(self) -> bool:
        """True when every bin value is a whole number."""
        return bool(np.all(self.values2 % 2 == 0))

    @staticmethod
    def ordinary(n: int) -> FrequencyGrid:
        """Bins {0 .. N-1}."""
        if n < 1:
            raise ContractViolation(f"grid length must be >= 1, got {n}")
        return FrequencyGrid(n, _frozen(2 * np.arange(n, dtype=np.int64)))

    @staticmethod
    def fast_symmetric(n: int) -> FrequencyGrid:
        """Integer bins straddling zero: {-N/2 .. N/2-1} for even N,
        {-(N-1)/2 .. (N-1)/2} for odd N (where the two notions coincide)."""
        if n < 1:
            raise ContractViolation(f"grid length must be >= 1, got {n}")
        if n % 2 == 0:
            v2 = 2 * np.arange(n, dtype=np.int64) - n
        else:
            v2 = 2 * np.arange(n, dtype=np.int64) - (n - 1)
        return FrequencyGrid(n, _frozen(v2))

    @staticmethod
    def centered_symmetric(n: int) -> FrequencyGrid:
        """Bins {-(N-1)/2 .. (N-1)/2}: integers for odd N, half-integers for
        even N."""
        if n < 1:
            raise ContractViolation(f"grid length must be >= 1, got {n}")
        return FrequencyGrid(n, _frozen(2 * np.arange(n, dtype=np.int64) - (n - 1)))


@dataclass(frozen=True, eq=False)
class Signal:
    """Time-domain samples tied to their grid."""

    samples: np.ndarray
    grid: TimeGrid
    sample_rate: float = 1.0

    def __post_init__(self):
        samples = np.asarray(self.samples)
        if samples.dtype.kind != "c":
            samples = samples.astype(complex)
        else:
            samples = samples.copy()
        object.__setattr__(self, "samples", _frozen(samples))
        if self.samples.ndim != 1 or self.samples.size != self.grid.length:
            raise ContractViolation(
                f"samples length {self.samples.size} does not match grid length {self.grid.length}"
            )
        if not self.sample_rate > 0:
            raise ContractViolation(f"sample_rate must be positive, got {self.sample_rate}")

    @property
    def n(self) -> int:
        return self.grid.length

    @property
    def is_real(self) -> bool:
        return bool(np.all(self.samples.imag == 0.0))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Frequency-domain bins tied to their grid and to the time convention
    the record came from (the inverse transform never guesses)."""

    bins: np.ndarray
    grid: FrequencyGrid
    source_convention: Convention
    sample_rate: float = 1.0

    def __post_init__(self):
        bins = np.asarray(self.bins)
        if bins.dtype.kind != "c":
            bins = bins.astype(complex)
        else:
            bins = bins.copy()
        object.__setattr__(self, "bins", _frozen(bins))
        if self.bins.ndim != 1 or self.bins.size != self.grid.length:
            raise ContractViolation(
                f"bin count {self.bins.size} does not match grid length {self.grid.length}"
            )

    @property
    def n(self) -> int:
        return self.grid.length
