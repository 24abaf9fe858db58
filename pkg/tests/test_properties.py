import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sdftkit import (
    Convention,
    ConventionError,
    Signal,
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
    time_grid,
)

from conftest import CONVENTION_SIZES, random_tones


@pytest.mark.parametrize("conv,n", CONVENTION_SIZES)
def test_dc_identity(rng, conv, n):
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    rep = dc_identity(Signal(x, time_grid(conv, n)))
    assert rep.passed, rep


def test_dc_identity_needs_dc_bin(rng):
    # the corrected even centered grid has no integer bins at all, but the
    # fast grid used by dc_identity always carries bin zero
    x = rng.standard_normal(8)
    rep = dc_identity(Signal(x, time_grid(Convention.SYMMETRIC_EVEN_CORRECTED, 8)))
    assert rep.passed


@pytest.mark.parametrize("conv,n", [
    (Convention.SYMMETRIC_ODD, 9),
    (Convention.SYMMETRIC_EVEN_CORRECTED, 8),
])
def test_symmetry_even_and_odd_parts(rng, conv, n):
    base = rng.standard_normal(n)
    even = (base + base[::-1]) / 2
    odd = (base - base[::-1]) / 2
    rep_a, rep_b = symmetry_check(Signal(even, time_grid(conv, n)))
    assert rep_a.passed and rep_b.passed, (rep_a, rep_b)
    assert "real" in rep_a.name
    rep_a, rep_b = symmetry_check(Signal(odd, time_grid(conv, n)))
    assert rep_a.passed and rep_b.passed, (rep_a, rep_b)
    assert "imaginary" in rep_a.name


def test_symmetry_not_applicable_for_generic_input(rng):
    x = rng.standard_normal(9) + np.arange(9)
    rep_a, rep_b = symmetry_check(Signal(x, time_grid(Convention.SYMMETRIC_ODD, 9)))
    assert not rep_a.passed and not rep_b.passed
    assert "neither" in rep_a.note or "applicable" in rep_a.note


def test_symmetry_rejects_head_grid(rng):
    x = rng.standard_normal(9)
    with pytest.raises(ConventionError):
        symmetry_check(Signal(x, time_grid(Convention.ORDINARY_HEAD, 9)))


def test_uncorrected_even_breaks_symmetry(rng):
    # the integer time grid of the uncorrected even convention is not
    # symmetric about zero, so an even record cannot even be formed on it;
    # reversal there pairs t with -1-t and the spectrum symmetry fails
    n = 8
    base = rng.standard_normal(n)
    even = (base + base[::-1]) / 2
    with pytest.raises(ConventionError):
        symmetry_check(Signal(even, time_grid(Convention.SYMMETRIC_EVEN_UNCORRECTED, n)))


@pytest.mark.parametrize("conv,n", [
    (Convention.SYMMETRIC_ODD, 9),
    (Convention.SYMMETRIC_EVEN_CORRECTED, 8),
])
def test_conjugate_property(rng, conv, n):
    x = rng.standard_normal(n)
    rep = conjugate_check(Signal(x, time_grid(conv, n)))
    assert rep.passed, rep
    assert rep.abs_error <= 1e-10 * max(1.0, n * np.max(np.abs(x)))


def test_conjugate_negative_control(rng):
    # same check on the head-grid transform must deviate for generic input
    x = rng.standard_normal(9)
    rep = conjugate_check(Signal(x, time_grid(Convention.ORDINARY_HEAD, 9)))
    assert rep.passed, rep  # control passes *because* the property fails
    assert "control" in rep.name


def test_real_part_sum_on_tones(rng):
    for n in [9, 33, 101]:
        tones = random_tones(rng, 3)
        grid = time_grid(Convention.SYMMETRIC_ODD, n)
        sig = Signal(sample_tones(tones, grid.values), grid)
        rep = real_part_sum(sig)
        assert rep.passed, rep


def test_real_part_sum_head_control(rng):
    n = 101
    tones = random_tones(rng, 3)
    grid = time_grid(Convention.ORDINARY_HEAD, n)
    sig = Signal(sample_tones(tones, time_grid(Convention.SYMMETRIC_ODD, n).values), grid)
    rep = real_part_sum(sig)
    assert rep.passed, rep
    assert "control" in rep.name


def test_real_part_sum_rejects_even_length(rng):
    x = rng.standard_normal(8)
    with pytest.raises(ConventionError):
        real_part_sum(Signal(x, time_grid(Convention.SYMMETRIC_EVEN_CORRECTED, 8)))


def test_gamma_two_routes_agree():
    n = 101
    for f_i in [0.5 / n, 3.5 / n, 17.25 / n, 0.437]:
        g_c = gamma_estimate(f_i, n).gamma
        g_t = gamma_truncated_sum(f_i, n, j_max=1000)
        assert abs(g_c - g_t) < 1e-6, (f_i, g_c, g_t)


def test_gamma_frozen_value():
    # midway between bins 3 and 4 of a 101-point record
    g = gamma_estimate(3.5 / 101, 101).gamma
    assert abs(g - 1.022461543) < 1e-8


def test_gamma_is_one_on_bin():
    # an on-bin tone puts all its energy in the matching +/- bins, so the
    # positive-minus-negative sum collapses to i*N exactly and gamma = 1
    n = 101
    g = gamma_estimate(5.0 / n, n).gamma
    assert abs(g - 1.0) < 1e-12
    assert abs(gamma_truncated_sum(5.0 / n, n) - 1.0) < 1e-12


def test_conjugate_rejects_uncorrected_grid(rng):
    x = rng.standard_normal(8)
    with pytest.raises(ConventionError):
        conjugate_check(Signal(x, time_grid(Convention.SYMMETRIC_EVEN_UNCORRECTED, 8)))


def test_imag_part_sum_reports(rng):
    n = 101
    tones = random_tones(rng, 1)
    grid = time_grid(Convention.SYMMETRIC_ODD, n)
    sig = Signal(sample_tones(tones, grid.values), grid)
    reports = imag_part_sum(sig, tones)
    assert len(reports) >= 2
    for rep in reports:
        assert rep.passed, rep


def test_alpha_beta_basics():
    n = 16
    a, b = alpha_beta_estimate(2.37 / n, n)
    assert np.isfinite(a) and np.isfinite(b)
    # on-bin probes put all energy in matching bins; the half-integer grid
    # has no matching bin, so neither factor blows up
    assert abs(a) < 2.0 and abs(b) < 2.0


def test_alpha_beta_requires_even_length():
    with pytest.raises(ConventionError):
        alpha_beta_estimate(0.1, 9)


@pytest.mark.parametrize("n", [101, 16])
def test_table2_report_passes(rng, n):
    tones = random_tones(rng, 2)
    for rep in table2_report(tones, n):
        assert rep.passed, rep


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=2**31))
def test_real_sum_identity_is_translation_free(seed):
    # scaling and adding a constant keeps the identity exact
    rng = np.random.default_rng(seed)
    n = 33
    grid = time_grid(Convention.SYMMETRIC_ODD, n)
    tones = random_tones(rng, 2)
    x = sample_tones(tones, grid.values) * float(rng.uniform(0.1, 10)) + float(rng.uniform(-5, 5))
    rep = real_part_sum(Signal(x, grid))
    assert rep.passed, rep
