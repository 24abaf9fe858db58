import numpy as np
import pytest

from sdftkit import Convention, Signal, ToneParams, sample_tones, time_grid


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_tones(rng, count, f_lo=0.03, f_hi=0.45):
    """Generic off-bin tones: amplitudes O(1), phases away from 0 and pi."""
    tones = []
    for _ in range(count):
        amp = float(rng.uniform(0.5, 2.0))
        f0 = float(rng.uniform(f_lo, f_hi))
        phi = float(rng.uniform(0.3, 2.8) * rng.choice([-1.0, 1.0]))
        tones.append(ToneParams(amp, f0, phi))
    return tones


def tone_signal(rng, convention, n, count=3, fs=1.0):
    tones = random_tones(rng, count)
    grid = time_grid(convention, n)
    samples = sample_tones(tones, grid.values, fs)
    return Signal(samples, grid, fs), tones


CONVENTION_SIZES = [
    (Convention.ORDINARY_HEAD, 8),
    (Convention.ORDINARY_HEAD, 9),
    (Convention.SYMMETRIC_ODD, 9),
    (Convention.SYMMETRIC_EVEN_UNCORRECTED, 8),
    (Convention.SYMMETRIC_EVEN_CORRECTED, 8),
]
