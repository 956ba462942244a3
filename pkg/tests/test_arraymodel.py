import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from superarray import (
    ArrayConfig,
    DegenerateQuotientError,
    PhysicalConstants,
    SteeringContext,
    ValidationError,
    beampattern,
    coherence_matrix,
    df,
    element_pattern,
    manifold,
    validate_spacing,
    wng,
)
from superarray.specfun import bessel_j

from oracles import quadrature_coherence, quadrature_df


def random_config(rng, m=None, span=0.2):
    m = m or int(rng.integers(2, 9))
    return ArrayConfig(positions=np.sort(rng.uniform(0.0, span, m)),
                       directivity=rng.uniform(0.0, 1.0, m))


# --- element pattern -------------------------------------------------------

@given(theta=st.floats(-10.0, 10.0))
def test_omni_element_is_flat(theta):
    assert element_pattern(1.0, theta) == 1.0


def test_element_pattern_special_points():
    assert element_pattern(0.0, math.pi / 2) == pytest.approx(1.0)
    assert element_pattern(0.5, 0.0) == pytest.approx(0.5)


# --- manifold --------------------------------------------------------------

def test_manifold_omni_broadside_is_ones():
    cfg = ArrayConfig(positions=np.linspace(0, 0.1, 5),
                      directivity=np.ones(5))
    d = manifold(cfg, math.pi / 2, 2 * math.pi * 2000.0)
    assert np.allclose(d, np.ones(5))


def test_manifold_single_element_at_origin():
    cfg = ArrayConfig(positions=np.array([0.0]),
                      directivity=np.array([0.3]))
    for theta in (0.1, 1.0, 4.0):
        d = manifold(cfg, theta, 2 * math.pi * 500.0)
        assert d[0] == pytest.approx(element_pattern(0.3, theta))


def test_manifold_interleaved_at_endfire(baseline):
    # bidirectional entries vanish at theta = 0, omni entries have unit modulus
    d = manifold(baseline, 0.0, 2 * math.pi * 1000.0)
    assert np.allclose(d[1::2], 0.0, atol=1e-15)
    assert np.allclose(np.abs(d[0::2]), 1.0)


def test_manifold_omni_unit_modulus(rng):
    cfg = ArrayConfig(positions=np.sort(rng.uniform(0, 0.2, 6)),
                      directivity=np.ones(6))
    d = manifold(cfg, rng.uniform(0, 2 * np.pi, 17), 2 * math.pi * 3000.0)
    assert np.allclose(np.abs(d), 1.0)


# --- beampattern -----------------------------------------------------------

def test_beampattern_basis_filter():
    cfg = ArrayConfig(positions=np.array([0.0, 0.05]),
                      directivity=np.array([1.0, 0.2]))
    h = np.array([1.0 + 0.0j, 0.0])
    for theta in np.linspace(0, 2 * np.pi, 9):
        assert beampattern(h, cfg, theta, 2 * math.pi * 1000.0) == \
            pytest.approx(1.0 + 0.0j)


def test_beampattern_zero_filter(baseline):
    assert beampattern(np.zeros(7, dtype=complex), baseline, 1.0,
                       2 * math.pi * 1000.0) == 0.0


def test_beampattern_dimension_mismatch(baseline):
    with pytest.raises(ValidationError):
        beampattern(np.ones(3, dtype=complex), baseline, 0.0,
                    2 * math.pi * 1000.0)


# --- white noise gain ------------------------------------------------------

def test_wng_single_omni():
    cfg = ArrayConfig(positions=np.array([0.0]), directivity=np.array([1.0]))
    ctx = SteeringContext(theta_s=1.0, omega=2 * math.pi * 1000.0)
    assert wng(np.array([1.0 + 0j]), cfg, ctx) == pytest.approx(1.0)


def test_wng_delay_and_sum_equals_m(rng):
    m = 5
    cfg = ArrayConfig(positions=np.linspace(0, 0.1, m),
                      directivity=np.ones(m))
    ctx = SteeringContext(theta_s=0.7, omega=2 * math.pi * 1500.0)
    d = manifold(cfg, ctx.theta_s, ctx.omega)
    assert wng(d / m, cfg, ctx) == pytest.approx(m, rel=1e-12)


@given(scale_re=st.floats(-3.0, 3.0), scale_im=st.floats(-3.0, 3.0))
def test_wng_scale_invariance(scale_re, scale_im):
    scale = complex(scale_re, scale_im)
    if abs(scale) < 1e-6:
        return
    cfg = ArrayConfig(positions=np.array([0.0, 0.03, 0.08]),
                      directivity=np.array([1.0, 0.5, 0.0]))
    ctx = SteeringContext(theta_s=1.2, omega=2 * math.pi * 2000.0)
    h = np.array([0.3 + 0.1j, -0.2 + 0.4j, 0.7 - 0.3j])
    assert wng(scale * h, cfg, ctx) == pytest.approx(wng(h, cfg, ctx),
                                                     rel=1e-9)


def test_wng_zero_filter_rejected(baseline):
    ctx = SteeringContext(theta_s=1.0, omega=2 * math.pi * 1000.0)
    with pytest.raises(ValidationError):
        wng(np.zeros(7, dtype=complex), baseline, ctx)


# --- coherence matrix ------------------------------------------------------

def test_coherence_all_omni_is_j0(rng):
    cfg = ArrayConfig(positions=np.sort(rng.uniform(0, 0.2, 5)),
                      directivity=np.ones(5))
    omega = 2 * math.pi * 2500.0
    gamma = coherence_matrix(cfg, omega)
    wn = omega / 343.0
    for i in range(5):
        for j in range(5):
            expected = bessel_j(0, wn * abs(cfg.positions[i] - cfg.positions[j]))
            assert gamma[i, j] == pytest.approx(expected, abs=1e-13)


@given(a=st.floats(0.0, 1.0))
def test_coherence_diagonal(a):
    cfg = ArrayConfig(positions=np.array([0.0, 0.05]),
                      directivity=np.array([a, 1.0]))
    gamma = coherence_matrix(cfg, 2 * math.pi * 1000.0)
    assert gamma[0, 0] == pytest.approx(a ** 2 + (1 - a) ** 2 / 2, abs=1e-14)


def test_coherence_quadrature_oracle(rng):
    for _ in range(10):
        cfg = random_config(rng)
        f = rng.uniform(200.0, 8000.0)
        gamma = coherence_matrix(cfg, 2 * math.pi * f)
        oracle = quadrature_coherence(cfg, 2 * math.pi * f)
        assert np.max(np.abs(gamma - oracle)) <= 1e-6


def test_coherence_symmetric_and_psd(rng):
    for _ in range(10):
        cfg = random_config(rng)
        gamma = coherence_matrix(cfg, 2 * math.pi * rng.uniform(200, 8000))
        assert np.array_equal(gamma, gamma.T)
        assert np.linalg.eigvalsh(gamma).min() >= -1e-10


# --- directivity factor ----------------------------------------------------

def test_df_single_omni():
    cfg = ArrayConfig(positions=np.array([0.0]), directivity=np.array([1.0]))
    ctx = SteeringContext(theta_s=0.3, omega=2 * math.pi * 1000.0)
    assert df(np.array([2.0 + 1.0j]), cfg, ctx) == pytest.approx(1.0)


def test_df_scale_invariance(rng):
    cfg = random_config(rng, m=5)
    ctx = SteeringContext(theta_s=1.0, omega=2 * math.pi * 3000.0)
    h = rng.normal(size=5) + 1j * rng.normal(size=5)
    assert df(1.7j * h, cfg, ctx) == pytest.approx(df(h, cfg, ctx), rel=1e-10)


def test_df_quadrature_oracle(rng):
    for _ in range(10):
        cfg = random_config(rng)
        h = rng.normal(size=cfg.size) + 1j * rng.normal(size=cfg.size)
        theta_s = rng.uniform(0, np.pi)
        omega = 2 * math.pi * rng.uniform(200, 8000)
        ctx = SteeringContext(theta_s=theta_s, omega=omega)
        oracle = quadrature_df(h, cfg, theta_s, omega)
        assert df(h, cfg, ctx) == pytest.approx(oracle, rel=1e-5)


def test_df_degenerate_denominator():
    # two coincident omnis: Gamma is singular and h in its null space
    cfg = ArrayConfig(positions=np.array([0.01, 0.01]),
                      directivity=np.array([1.0, 1.0]))
    ctx = SteeringContext(theta_s=0.5, omega=2 * math.pi * 1000.0)
    with pytest.raises(DegenerateQuotientError):
        df(np.array([1.0 + 0j, -1.0 + 0j]), cfg, ctx)


# --- validation helpers ----------------------------------------------------

def test_validate_spacing_flags_violations(baseline):
    validate_spacing(baseline, 0.02, 0.15)
    with pytest.raises(ValidationError, match="spacing"):
        validate_spacing(baseline, 0.03, 0.15)
    with pytest.raises(ValidationError, match="aperture"):
        validate_spacing(baseline, 0.02, 0.10)


def test_array_config_invariants():
    with pytest.raises(ValidationError):
        ArrayConfig(positions=np.array([0.0, -0.01]),
                    directivity=np.array([1.0, 1.0]))
    with pytest.raises(ValidationError):
        ArrayConfig(positions=np.array([0.0, 0.02]),
                    directivity=np.array([1.0, 1.5]))
    with pytest.raises(ValidationError):
        ArrayConfig(positions=np.array([0.0, 0.02]),
                    directivity=np.array([1.0]))


def test_steering_context_invariants():
    with pytest.raises(ValidationError):
        SteeringContext(theta_s=0.0, omega=0.0)
    with pytest.raises(ValidationError):
        SteeringContext(theta_s=7.0, omega=1.0)
    with pytest.raises(ValidationError):
        PhysicalConstants(speed_of_sound=-1.0)
