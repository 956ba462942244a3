import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from superarray import (
    IdpSpec,
    ValidationError,
    expand_idp,
    idp_value,
    reconstruct_expansion,
    supercardioid_order2,
)

THETA_GRID = np.arange(1024) * (2.0 * np.pi / 1024)


def random_spec(draw_alpha, order):
    alpha = np.asarray(draw_alpha, dtype=float)
    alpha = alpha / alpha.sum()
    return IdpSpec(order=order, alpha=alpha)


alpha_lists = st.integers(1, 4).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.floats(0.05, 1.0), min_size=n + 1, max_size=n + 1),
    )
)


# --- spec validation --------------------------------------------------------

def test_spec_requires_normalized_alpha():
    with pytest.raises(ValidationError):
        IdpSpec(order=1, alpha=np.array([0.5, 0.6]))
    with pytest.raises(ValidationError):
        IdpSpec(order=2, alpha=np.array([0.5, 0.5]))
    with pytest.raises(ValidationError):
        IdpSpec(order=0, alpha=np.array([1.0]))


def test_supercardioid_coefficients():
    spec = supercardioid_order2()
    assert spec.order == 2
    assert np.allclose(spec.alpha, [0.309, 0.484, 0.207])


# --- direct evaluation ------------------------------------------------------

def test_value_at_steering_is_one(supercardioid):
    for theta_s in (0.0, math.radians(60), 2.1):
        assert idp_value(supercardioid, theta_s, theta_s) == \
            pytest.approx(1.0, abs=1e-12)


def test_cardioid_null_at_back():
    spec = IdpSpec(order=1, alpha=np.array([0.5, 0.5]))
    assert idp_value(spec, 0.0, math.pi) == pytest.approx(0.0, abs=1e-15)


def test_supercardioid_hand_value(supercardioid):
    # alpha_0 + alpha_1 cos(60 deg) + alpha_2 cos(120 deg)
    assert idp_value(supercardioid, math.radians(60), 0.0) == \
        pytest.approx(0.4475, abs=1e-12)


# --- expansion --------------------------------------------------------------

def test_eta_zero_is_alpha_zero(supercardioid):
    for theta_s in (0.0, 1.0, 2.5):
        coeffs = expand_idp(supercardioid, theta_s)
        assert coeffs.eta_at(0) == pytest.approx(supercardioid.alpha[0])


def test_weighted_block_vanishes_at_zero_steering(supercardioid):
    coeffs = expand_idp(supercardioid, 0.0)
    assert np.allclose(coeffs.eta_tilde, 0.0)


def test_coefficient_symmetry(supercardioid):
    coeffs = expand_idp(supercardioid, 1.3)
    for n in range(1, supercardioid.order + 1):
        assert coeffs.eta_at(-n) == coeffs.eta_at(n)
    for n in range(1, supercardioid.order):
        assert coeffs.eta_tilde_at(-n) == coeffs.eta_tilde_at(n)


@given(data=alpha_lists, theta_s=st.floats(0.0, 2.0 * math.pi,
                                           exclude_max=True))
def test_reconstruction_identity(data, theta_s):
    order, raw_alpha = data
    spec = random_spec(raw_alpha, order)
    coeffs = expand_idp(spec, theta_s)
    rec = reconstruct_expansion(coeffs, THETA_GRID)
    direct = idp_value(spec, theta_s, THETA_GRID)
    assert np.max(np.abs(rec.real - direct)) <= 1e-10
    assert np.max(np.abs(rec.imag)) <= 1e-12


def test_least_squares_fit_oracle(supercardioid, rng):
    # the combined basis spans the target space, so the best dense-grid
    # least-squares fit has zero residual; our coefficients achieve it
    theta_s = 1.1
    n = supercardioid.order
    basis = [np.exp(1j * k * THETA_GRID) for k in range(-n, n + 1)]
    basis += [np.sin(THETA_GRID) * np.exp(1j * k * THETA_GRID)
              for k in range(-(n - 1), n)]
    target = idp_value(supercardioid, theta_s, THETA_GRID)
    coeffs, *_ = np.linalg.lstsq(np.stack(basis, axis=1), target, rcond=None)
    fit = np.stack(basis, axis=1) @ coeffs
    assert np.max(np.abs(fit - target)) <= 1e-10
    rec = reconstruct_expansion(expand_idp(supercardioid, theta_s), THETA_GRID)
    assert np.max(np.abs(rec - target)) <= 1e-12


# --- the printed two-step formulas ------------------------------------------

def _two_step_weighted_coeffs(spec, theta_s, flip_binomials=True):
    """Binomial-form route: expand in powers of cos(theta) first.

    With ``flip_binomials`` the binomial symbols are read with the larger
    index on top, i.e. C(i + k, k) and C(n' + 2k, k); as printed (smaller
    index on top) they vanish for positive harmonics.
    """
    n_ord = spec.order
    alpha = spec.alpha

    def binom(top, bottom):
        return math.comb(top, bottom) if 0 <= bottom <= top else 0

    gamma = np.zeros(n_ord)
    for i in range(n_ord):
        for k in range((n_ord - 1 - i) // 2 + 1):
            if flip_binomials:
                b = binom(i + k, k)
            else:
                b = binom(k, i + k)
            gamma[i] += ((-1) ** k * alpha[i + 2 * k + 1]
                         * math.sin((i + 2 * k + 1) * theta_s) * 2 ** i * b)
    eta_tilde = np.zeros(2 * n_ord - 1)
    for idx, n_p in enumerate(range(-(n_ord - 1), n_ord)):
        for k in range(max(-n_p, 0), (n_ord - 1 - n_p) // 2 + 1):
            if flip_binomials:
                b = binom(n_p + 2 * k, k)
            else:
                b = binom(k, n_p + 2 * k)
            eta_tilde[idx] += gamma[n_p + 2 * k] * b * 2.0 ** (-n_p - 2 * k)
    return eta_tilde


@given(data=alpha_lists, theta_s=st.floats(0.0, 2.0 * math.pi,
                                           exclude_max=True))
def test_two_step_route_matches_direct(data, theta_s):
    order, raw_alpha = data
    spec = random_spec(raw_alpha, order)
    direct = expand_idp(spec, theta_s).eta_tilde.real
    two_step = _two_step_weighted_coeffs(spec, theta_s, flip_binomials=True)
    assert np.allclose(direct, two_step, atol=1e-12)


def test_literal_binomial_orientation_fails_reconstruction(supercardioid):
    # reading the binomials literally zeroes the positive harmonics, so
    # the reconstruction oracle rejects that orientation
    theta_s = 1.0
    literal = _two_step_weighted_coeffs(supercardioid, theta_s,
                                        flip_binomials=False)
    coeffs = expand_idp(supercardioid, theta_s)
    rec = (np.exp(1j * np.outer(THETA_GRID, np.arange(-2, 3))) @ coeffs.eta
           + np.sin(THETA_GRID)
           * (np.exp(1j * np.outer(THETA_GRID, np.arange(-1, 2))) @ literal))
    direct = idp_value(supercardioid, theta_s, THETA_GRID)
    assert np.max(np.abs(rec.real - direct)) > 1e-3
