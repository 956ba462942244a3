"""Series-expansion beamformer design.

The plane-wave phase of each manifold entry is expanded into a Bessel
weighted Fourier series in the azimuth. Matching the retained harmonics
of the expanded beampattern against the two coefficient blocks of the
target pattern yields a small underdetermined linear system

    [Theta * diag(a); Theta * diag(1 - a)] h = rhs

with 2 * trunc + 2 rows, whose minimum-norm solution is obtained through
the Gram matrix of the stacked system. Feasibility requires at least
2 * trunc + 2 microphones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .arraymodel import DEFAULT_CONSTANTS, ArrayConfig, PhysicalConstants
from .errors import (
    RankDeficiencyError,
    TruncationTooSmallError,
    UnderDeterminedError,
)
from .idp import IdpSpec, expand_idp
from .specfun import bessel_j_orders, jacobi_anger_coeff

if TYPE_CHECKING:
    from .metrics import DesignGrid

# Relative diagonal loading of the Gram matrix. The actual load is
# regularization * trace(G) / (2 * trunc + 2); at very low frequencies the
# higher-order rows collapse toward zero and the unloaded Gram becomes
# numerically rank deficient.
DEFAULT_REGULARIZATION = 1e-10

_COND_LIMIT = 1e14


@dataclass(frozen=True)
class DesignSystem:
    """Stacked design matrix, target vector, and their metadata."""

    matrix: np.ndarray
    rhs: np.ndarray
    trunc: int
    omega: float

    def __post_init__(self):
        rows = 2 * self.trunc + 2
        if self.matrix.shape[0] != rows or self.rhs.shape != (rows,):
            raise ValueError(
                f"system shapes {self.matrix.shape}/{self.rhs.shape} do not "
                f"match truncation order {self.trunc}"
            )


@dataclass(frozen=True)
class FilterBank:
    """Filters for every (frequency, steering) grid point.

    ``filters[fi, si]`` is the length-M complex filter for frequency
    index fi and steering index si of ``grid``.
    """

    filters: np.ndarray
    grid: "DesignGrid"
    trunc: int

    def at(self, freq_index: int, steer_index: int) -> np.ndarray:
        return self.filters[freq_index, steer_index]


def jacobi_anger_vector(cfg: ArrayConfig, n: int, omega: float,
                        consts: PhysicalConstants = DEFAULT_CONSTANTS) -> np.ndarray:
    """Per-element expansion coefficients j^n J_n(omega/c * x_m)."""
    wn = consts.wavenumber(omega)
    return np.array([jacobi_anger_coeff(n, wn * x) for x in cfg.positions])


def series_beampattern(h: np.ndarray, cfg: ArrayConfig, theta, omega: float,
                       trunc: int,
                       consts: PhysicalConstants = DEFAULT_CONSTANTS):
    """Beampattern of the truncated series expansion.

    Converges to the exact beampattern as the truncation order grows; the
    harmonic coefficients are even in the harmonic index, so only orders
    0..trunc are evaluated.
    """
    if trunc < 0:
        raise ValueError(f"truncation order must be >= 0, got {trunc}")
    h = np.asarray(h)
    th = np.asarray(theta, dtype=float)
    a = cfg.directivity
    wn = consts.wavenumber(omega)
    jv = np.empty((trunc + 1, cfg.size))
    for m, x in enumerate(cfg.positions):
        jv[:, m] = bessel_j_orders(trunc, wn * x)
    beta = (1j ** np.arange(trunc + 1))[:, None] * jv
    c_omni = beta @ (a * np.conj(h))
    c_grad = beta @ ((1.0 - a) * np.conj(h))
    orders = np.arange(trunc + 1)
    # harmonics n and -n carry identical coefficients, so the pair sums
    # collapse to 2 cos(n theta) with the n = 0 term counted once
    weights = np.cos(np.multiply.outer(th, orders))
    weights *= np.where(orders == 0, 1.0, 2.0)
    out = weights @ c_omni + np.sin(th) * (weights @ c_grad)
    if np.ndim(theta) == 0:
        return complex(out)
    return out


def _system_matrix(cfg: ArrayConfig, omega: float, trunc: int,
                   consts: PhysicalConstants) -> np.ndarray:
    """Stacked (2*trunc + 2, M) design matrix for one frequency."""
    wn = consts.wavenumber(omega)
    jv = np.empty((trunc + 1, cfg.size))
    for m, x in enumerate(cfg.positions):
        jv[:, m] = bessel_j_orders(trunc, wn * x)
    theta = np.conj((1j ** np.arange(trunc + 1))[:, None] * jv)
    a = cfg.directivity
    return np.vstack([theta * a, theta * (1.0 - a)])


def _rhs_vector(spec: IdpSpec, theta_s: float, trunc: int) -> np.ndarray:
    """Zero-padded target vector of length 2*trunc + 2."""
    coeffs = expand_idp(spec, theta_s)
    n = spec.order
    rhs = np.zeros(2 * trunc + 2, dtype=complex)
    rhs[: n + 1] = coeffs.eta[n:]
    if n >= 1:
        rhs[trunc + 1: trunc + 1 + n] = coeffs.eta_tilde[n - 1:]
    return rhs


def assemble_system(cfg: ArrayConfig, spec: IdpSpec, theta_s: float,
                    omega: float, trunc: int,
                    consts: PhysicalConstants = DEFAULT_CONSTANTS) -> DesignSystem:
    """Build the design system for one frequency and steering direction.

    Raises UnderDeterminedError when the array has fewer than
    2 * trunc + 2 elements and TruncationTooSmallError when the truncation
    order cannot carry the target order.
    """
    if trunc < spec.order:
        raise TruncationTooSmallError(
            f"truncation order {trunc} is below the target order {spec.order}"
        )
    rows = 2 * trunc + 2
    if cfg.size < rows:
        raise UnderDeterminedError(
            f"need at least {rows} microphones for truncation order {trunc}, "
            f"got {cfg.size}"
        )
    return DesignSystem(
        matrix=_system_matrix(cfg, omega, trunc, consts),
        rhs=_rhs_vector(spec, theta_s, trunc),
        trunc=trunc,
        omega=omega,
    )


def _solve_gram(matrix: np.ndarray, rhs: np.ndarray,
                regularization: float) -> np.ndarray:
    """Minimum-norm solve through the Gram system, batched over columns.

    ``rhs`` may be a vector or a (rows, k) matrix. Two iterative
    refinement steps keep the residual at the rounding floor even for
    poorly scaled low-frequency systems.
    """
    gram = matrix @ matrix.conj().T
    rows = gram.shape[0]
    if regularization:
        gram = gram + (regularization * np.trace(gram).real / rows) * np.eye(rows)
    else:
        cond = np.linalg.cond(gram)
        if not np.isfinite(cond) or cond > _COND_LIMIT:
            raise RankDeficiencyError(
                f"Gram matrix numerically singular without regularization "
                f"(condition estimate {cond:.3e})",
                condition=float(cond),
            )
    try:
        y = np.linalg.solve(gram, rhs)
        for _ in range(2):
            y = y + np.linalg.solve(gram, rhs - gram @ y)
    except np.linalg.LinAlgError as exc:
        raise RankDeficiencyError(
            f"Gram solve failed: {exc}", condition=float("inf")
        ) from exc
    return matrix.conj().T @ y


def solve_filter(system: DesignSystem,
                 regularization: float = DEFAULT_REGULARIZATION) -> np.ndarray:
    """Minimum-norm filter of an assembled design system.

    With ``regularization`` zero and a full-row-rank system the relative
    residual stays below 1e-10 and, among all exact solutions, the
    returned filter has minimal Euclidean norm.
    """
    return _solve_gram(system.matrix, system.rhs, regularization)


def design_bank(cfg: ArrayConfig, spec: IdpSpec, grid: "DesignGrid",
                trunc: int,
                regularization: float = DEFAULT_REGULARIZATION,
                consts: PhysicalConstants = DEFAULT_CONSTANTS) -> FilterBank:
    """Solve the design system at every (frequency, steering) grid point.

    The Gram factorization is shared across steering directions at each
    frequency since only the target vector depends on the steering. The
    result is deterministic for fixed inputs; grid points are laid out in
    grid order regardless of evaluation order. Solver failures are
    re-raised tagged with the offending frequency.
    """
    if trunc < spec.order:
        raise TruncationTooSmallError(
            f"truncation order {trunc} is below the target order {spec.order}"
        )
    rows = 2 * trunc + 2
    if cfg.size < rows:
        raise UnderDeterminedError(
            f"need at least {rows} microphones for truncation order {trunc}, "
            f"got {cfg.size}"
        )
    freqs = grid.frequencies_hz
    steers = grid.steerings_rad
    rhs_cols = np.stack(
        [_rhs_vector(spec, ts, trunc) for ts in steers], axis=1
    )
    filters = np.empty((freqs.size, steers.size, cfg.size), dtype=complex)
    for fi, f in enumerate(freqs):
        omega = 2.0 * np.pi * f
        matrix = _system_matrix(cfg, omega, trunc, consts)
        try:
            solved = _solve_gram(matrix, rhs_cols, regularization)
        except RankDeficiencyError as exc:
            raise RankDeficiencyError(
                f"design failed at f = {f:g} Hz: {exc}",
                condition=exc.condition,
            ) from exc
        filters[fi] = solved.T
    return FilterBank(filters=filters, grid=grid, trunc=trunc)
