"""Ideal directivity pattern (IDP) targets and their series decomposition.

The target is the order-N cosine series

    B_N(theta_s, theta) = sum_{n=0}^{N} alpha_n cos(n (theta - theta_s))

with coefficients summing to one, so the response toward the steering
direction is exactly 1. For the design linear system the target is split
into an exponential block and a sin(theta)-weighted exponential block,

    B_N = sum_{n=-N}^{N} eta_n e^{j n theta}
          + sin(theta) sum_{n'=-(N-1)}^{N-1} eta_tilde_{n'} e^{j n' theta},

whose coefficients follow in closed form from the Chebyshev identity
sin(n theta) = sin(theta) * U_{n-1}(cos(theta)) with
U_{n-1}(cos(theta)) = sum_{k=0}^{n-1} e^{j (n-1-2k) theta}. Pointwise
reconstruction of B_N is the correctness oracle for the expansion.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

_ALPHA_SUM_TOL = 1e-12


@dataclass(frozen=True)
class IdpSpec:
    """Order and cosine-series coefficients of the target pattern."""

    order: int
    alpha: np.ndarray

    def __post_init__(self):
        if self.order < 1:
            raise ValidationError(f"order must be >= 1, got {self.order}")
        alpha = np.asarray(self.alpha, dtype=float)
        if alpha.ndim != 1 or alpha.size != self.order + 1:
            raise ValidationError(
                f"alpha must have order + 1 = {self.order + 1} entries, "
                f"got shape {alpha.shape}"
            )
        if not np.all(np.isfinite(alpha)):
            raise ValidationError("alpha coefficients must be finite")
        total = float(alpha.sum())
        if abs(total - 1.0) > _ALPHA_SUM_TOL:
            raise ValidationError(
                f"alpha coefficients must sum to 1 within {_ALPHA_SUM_TOL}, "
                f"got {total!r}"
            )
        object.__setattr__(self, "alpha", alpha)


def supercardioid_order2() -> IdpSpec:
    """Second-order supercardioid target (coefficients 0.309, 0.484, 0.207)."""
    return IdpSpec(order=2, alpha=np.array([0.309, 0.484, 0.207]))


@dataclass(frozen=True)
class IdpCoefficients:
    """Expansion coefficients of one steered target pattern.

    ``eta[i]`` holds the exponential-block coefficient for harmonic
    i - order (orders -N..N); ``eta_tilde[i]`` holds the weighted-block
    coefficient for harmonic i - (order - 1) (orders -(N-1)..N-1). Both
    are even in the harmonic index and real-valued by construction.
    """

    order: int
    theta_s: float
    eta: np.ndarray
    eta_tilde: np.ndarray

    def eta_at(self, n: int) -> complex:
        return self.eta[n + self.order]

    def eta_tilde_at(self, n: int) -> complex:
        return self.eta_tilde[n + self.order - 1]


def idp_value(spec: IdpSpec, theta_s: float, theta):
    """Evaluate the target pattern by direct cosine summation.

    Returns a float for scalar ``theta`` and an ndarray otherwise; the
    value at theta = theta_s is 1 by coefficient normalization.
    """
    th = np.asarray(theta, dtype=float)
    n = np.arange(spec.order + 1)
    out = np.sum(spec.alpha * np.cos(n * (th[..., None] - theta_s)), axis=-1)
    if np.ndim(theta) == 0:
        return float(out)
    return out


def expand_idp(spec: IdpSpec, theta_s: float) -> IdpCoefficients:
    """Decompose the steered target into its two coefficient blocks.

    The exponential block carries half of each cosine coefficient,
    modulated by cos(n * theta_s); the weighted block collects the
    sin(n * theta_s) parts, where harmonic n' receives every alpha_n with
    n > |n'| of opposite parity:

        eta_tilde_{n'} = sum_{n = |n'|+1, |n'|+3, ..} alpha_n sin(n theta_s).
    """
    n_ord = spec.order
    alpha = spec.alpha
    eta = np.zeros(2 * n_ord + 1, dtype=complex)
    eta[n_ord] = alpha[0]
    for n in range(1, n_ord + 1):
        val = 0.5 * alpha[n] * np.cos(n * theta_s)
        eta[n_ord + n] = val
        eta[n_ord - n] = val
    eta_tilde = np.zeros(max(2 * n_ord - 1, 0), dtype=complex)
    for idx, n_prime in enumerate(range(-(n_ord - 1), n_ord)):
        total = 0.0
        for n in range(abs(n_prime) + 1, n_ord + 1, 2):
            total += alpha[n] * np.sin(n * theta_s)
        eta_tilde[idx] = total
    return IdpCoefficients(order=n_ord, theta_s=theta_s, eta=eta,
                           eta_tilde=eta_tilde)


def reconstruct_expansion(coeffs: IdpCoefficients, theta) -> np.ndarray:
    """Evaluate the two-block series; used as the expansion oracle."""
    th = np.atleast_1d(np.asarray(theta, dtype=float))
    n = np.arange(-coeffs.order, coeffs.order + 1)
    out = np.exp(1j * np.outer(th, n)) @ coeffs.eta
    if coeffs.eta_tilde.size:
        n_p = np.arange(-(coeffs.order - 1), coeffs.order)
        out = out + np.sin(th) * (np.exp(1j * np.outer(th, n_p)) @ coeffs.eta_tilde)
    return out
