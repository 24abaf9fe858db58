import numpy as np
import pytest
from hypothesis import given, strategies as st

from sdftkit import (
    Convention,
    ConventionError,
    FrequencyGrid,
    Signal,
    Spectrum,
    time_grid,
)


def test_time_grid_values():
    assert time_grid(Convention.ORDINARY_HEAD, 4).values.tolist() == [0, 1, 2, 3]
    assert time_grid(Convention.SYMMETRIC_ODD, 5).values.tolist() == [-2, -1, 0, 1, 2]
    assert time_grid(Convention.SYMMETRIC_EVEN_UNCORRECTED, 4).values.tolist() == [-2, -1, 0, 1]
    assert time_grid(Convention.SYMMETRIC_EVEN_CORRECTED, 4).values.tolist() == [-1.5, -0.5, 0.5, 1.5]


def test_time_grid_parity_guards():
    with pytest.raises(ConventionError):
        time_grid(Convention.SYMMETRIC_ODD, 4)
    with pytest.raises(ConventionError):
        time_grid(Convention.SYMMETRIC_EVEN_UNCORRECTED, 5)
    with pytest.raises(ConventionError):
        time_grid(Convention.SYMMETRIC_EVEN_CORRECTED, 5)
    with pytest.raises(ValueError):
        time_grid(Convention.ORDINARY_HEAD, 0)


def test_frequency_grids():
    assert FrequencyGrid.ordinary(4).values.tolist() == [0, 1, 2, 3]
    assert FrequencyGrid.fast_symmetric(4).values.tolist() == [-2, -1, 0, 1]
    assert FrequencyGrid.fast_symmetric(5).values.tolist() == [-2, -1, 0, 1, 2]
    assert FrequencyGrid.centered_symmetric(4).values.tolist() == [-1.5, -0.5, 0.5, 1.5]
    assert FrequencyGrid.centered_symmetric(5).values.tolist() == [-2, -1, 0, 1, 2]
    assert FrequencyGrid.ordinary(4).is_integer
    assert not FrequencyGrid.centered_symmetric(4).is_integer


@given(st.integers(min_value=1, max_value=257))
def test_grid_spacing_and_center(n):
    for conv in Convention:
        if conv is Convention.SYMMETRIC_ODD and n % 2 == 0:
            continue
        if conv in (Convention.SYMMETRIC_EVEN_UNCORRECTED, Convention.SYMMETRIC_EVEN_CORRECTED) and n % 2 == 1:
            continue
        g = time_grid(conv, n)
        assert len(g) == n
        if n > 1:
            assert np.all(np.diff(g.values2) == 2)  # unit spacing
        if conv is Convention.ORDINARY_HEAD:
            assert g.values2[0] == 0
        elif conv is Convention.SYMMETRIC_EVEN_UNCORRECTED:
            assert g.values2[0] == -n
        else:
            # centered: grid is its own reflection
            assert np.array_equal(g.values2, -g.values2[::-1])


def test_signal_validation():
    g = time_grid(Convention.SYMMETRIC_ODD, 5)
    with pytest.raises(ValueError):
        Signal(np.zeros(4), g)
    with pytest.raises(ValueError):
        Signal(np.zeros(5), g, sample_rate=0.0)
    s = Signal(np.arange(5.0), g)
    assert s.n == 5
    assert s.is_real
    assert not Signal(np.arange(5.0) * 1j, g).is_real


def test_containers_are_frozen():
    g = time_grid(Convention.SYMMETRIC_ODD, 5)
    with pytest.raises(ValueError):
        g.values2[0] = 7
    s = Signal(np.zeros(5), g)
    with pytest.raises(ValueError):
        s.samples[0] = 1.0
    sp = Spectrum(np.zeros(5, dtype=complex), FrequencyGrid.fast_symmetric(5), Convention.SYMMETRIC_ODD)
    with pytest.raises(ValueError):
        sp.bins[0] = 1.0


def test_signal_copies_input():
    g = time_grid(Convention.SYMMETRIC_ODD, 5)
    x = np.zeros(5)
    s = Signal(x, g)
    x[0] = 99.0
    assert s.samples[0] == 0.0
