import math

import numpy as np
import pytest

from shbraket.angular_momentum import HarmonicIndex
from shbraket.braket_core import Method, basis_iter
from shbraket.fourier_driver import (
    EffectiveMassProfile,
    FourierSeries,
    effective_mass_coupling,
    series_from_samples,
    sin_power_expand,
)
from shbraket.oracle import quadrature_function_overlap

RNG = np.random.default_rng(31)


# ---------------------------------------------------------------------------
# FourierSeries container


def test_series_normalizes_negative_polar_orders():
    s = FourierSeries()
    s.add("cos", -3, 1, 2.0)
    s.add("sin", -2, 0, 0.5)
    assert s.coefficient("cos", 3, 1) == 2.0
    assert s.coefficient("sin", 2, 0) == -0.5


def test_series_drops_zero_sine_operator():
    s = FourierSeries({("sin", 0, 2): 3.0})
    assert len(s) == 0


def test_series_cancellation_removes_key():
    s = FourierSeries()
    s.add("cos", 1, 0, 1.5)
    s.add("cos", 1, 0, -1.5)
    assert len(s) == 0


def test_series_rejects_bad_kind():
    with pytest.raises(ValueError):
        FourierSeries().add("tan", 1, 0, 1.0)


def test_series_evaluate():
    s = FourierSeries({("cos", 2, 0): 1.0, ("sin", 1, 1): 0.5})
    t, p = 0.7, 1.3
    expected = math.cos(2 * t) + 0.5 * math.sin(t) * np.exp(1j * p)
    assert s.evaluate(t, p) == pytest.approx(expected, abs=1e-15)


# ---------------------------------------------------------------------------
# sin^{2q} expansion


def test_sin_power_expand_q1():
    # sin^2 t = 1/2 - cos(2t)/2
    s = sin_power_expand(1)
    assert s.items() == [(("cos", 0, 0), 0.5), (("cos", 2, 0), -0.5)]


def test_sin_power_expand_q2():
    # (1 - cos 2t)^2 / 4 = 3/8 - cos(2t)/2 + cos(4t)/8
    s = sin_power_expand(2)
    assert s.items() == [
        (("cos", 0, 0), 0.375),
        (("cos", 2, 0), -0.5),
        (("cos", 4, 0), 0.125),
    ]


def test_sin_power_expand_pointwise():
    thetas = RNG.uniform(0, math.pi, 100)
    for q in range(1, 9):
        s = sin_power_expand(q)
        recon = s.evaluate(thetas)
        assert np.max(np.abs(recon.imag)) == 0.0
        assert np.max(np.abs(recon.real - np.sin(thetas) ** (2 * q))) < 1e-13


def test_sin_power_expand_rejects_nonpositive():
    with pytest.raises(ValueError):
        sin_power_expand(0)


# ---------------------------------------------------------------------------
# effective-mass coupling matrices


def test_profile_validation():
    with pytest.raises(ValueError):
        EffectiveMassProfile(0, 1.0, 1.0)


def test_constant_profile_gives_identity():
    mat = effective_mass_coupling(EffectiveMassProfile(1, 0.0, 1.0), 2)
    assert np.array_equal(mat.entries, np.eye(9))


def test_pipeline_linearity_is_exact():
    base = effective_mass_coupling(EffectiveMassProfile(2, 1.0, 0.0), 4)
    combo = effective_mass_coupling(EffectiveMassProfile(2, 2.0, 0.5), 4)
    assert np.array_equal(combo.entries, 2.0 * base.entries + 0.5 * np.eye(25))


def test_effective_mass_matches_2d_quadrature():
    profile = EffectiveMassProfile(1, 1.0, 0.0)
    mat = effective_mass_coupling(profile, 3)
    f = lambda t, p: np.sin(t) ** 2
    for l1, m1 in basis_iter(3):
        for l2, m2 in basis_iter(3):
            ref, im = quadrature_function_overlap(HarmonicIndex(l1, m1), HarmonicIndex(l2, m2), f)
            assert abs(im) < 1e-12
            assert mat.value(l1, m1, l2, m2) == pytest.approx(ref, abs=1e-10)


def test_effective_mass_structure():
    for q in (1, 2):
        mat = effective_mass_coupling(EffectiveMassProfile(q, 1.3, 0.0), 6)
        assert np.max(np.abs(mat.entries - mat.entries.T)) < 1e-12
        for l1, m1 in basis_iter(6):
            for l2, m2 in basis_iter(6):
                if m1 != m2:
                    assert mat.value(l1, m1, l2, m2) == 0.0
                elif abs(l1 - l2) > 2 * q:
                    assert abs(mat.value(l1, m1, l2, m2)) < 1e-12


def test_variant_method_gives_identical_pipeline():
    profile = EffectiveMassProfile(2, 0.7, 0.1)
    a = effective_mass_coupling(profile, 3, Method.MAIN)
    b = effective_mass_coupling(profile, 3, Method.VARIANT)
    assert np.array_equal(a.entries, b.entries)


# ---------------------------------------------------------------------------
# numeric projection entry point


def test_series_from_samples_basis_element():
    series, residual = series_from_samples(lambda t, p: np.cos(3 * t), n_max=6, k_max=1)
    assert series.coefficient("cos", 3, 0) == pytest.approx(1.0, abs=1e-12)
    assert residual < 1e-12


def test_series_from_samples_recovers_power_expansion():
    series, residual = series_from_samples(lambda t, p: np.sin(t) ** 4, n_max=6, k_max=0)
    expected = sin_power_expand(2)
    assert residual < 1e-10
    for (kind, n, k), c in expected.items():
        assert series.coefficient(kind, n, k) == pytest.approx(c, abs=1e-10)


def test_series_from_samples_flags_truncation():
    series, residual = series_from_samples(lambda t, p: np.cos(5 * t), n_max=3, k_max=0)
    assert residual > 0.1
