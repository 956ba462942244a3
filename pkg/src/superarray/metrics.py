"""Beampattern approximation-error functionals.

The per-direction error is the circular mean of the squared deviation
between the designed beampattern and the target pattern; the overall
error averages it over the (frequency x steering) design grid, which is
the fitness the geometry optimizer minimizes. The mean (rather than sum)
keeps values comparable across grid resolutions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arraymodel import DEFAULT_CONSTANTS, ArrayConfig, PhysicalConstants, manifold
from .beamformer import DEFAULT_REGULARIZATION, FilterBank, design_bank
from .errors import ValidationError
from .idp import IdpSpec, idp_value


@dataclass(frozen=True)
class DesignGrid:
    """Frequency band, steering range, and evaluation-angle discretization.

    ``eval_angles`` must be uniform on [0, 2*pi); on such a grid the
    trapezoid rule is spectrally accurate for the trigonometric
    integrands appearing here.
    """

    frequencies_hz: np.ndarray
    steerings_rad: np.ndarray
    eval_angles: np.ndarray

    def __post_init__(self):
        freqs = np.sort(np.asarray(self.frequencies_hz, dtype=float))
        steers = np.sort(np.asarray(self.steerings_rad, dtype=float))
        angles = np.asarray(self.eval_angles, dtype=float)
        if freqs.size == 0 or steers.size == 0 or angles.size == 0:
            raise ValidationError("design grid axes must be non-empty")
        if np.any(freqs <= 0.0) or not np.all(np.isfinite(freqs)):
            raise ValidationError("grid frequencies must be finite and > 0")
        if not np.all(np.isfinite(steers)):
            raise ValidationError("grid steerings must be finite")
        expected = np.arange(angles.size) * (2.0 * np.pi / angles.size)
        if angles.shape != expected.shape or not np.allclose(angles, expected,
                                                             atol=1e-9):
            raise ValidationError(
                "eval_angles must be the uniform grid k * 2*pi / K on [0, 2*pi)"
            )
        object.__setattr__(self, "frequencies_hz", freqs)
        object.__setattr__(self, "steerings_rad", steers)
        object.__setattr__(self, "eval_angles", angles)

    @classmethod
    def regular(cls, f_lo: float, f_hi: float, f_step: float,
                theta_s_lo_deg: float, theta_s_hi_deg: float,
                theta_s_step_deg: float, eval_angle_count: int = 720) -> "DesignGrid":
        """Inclusive stepped grids with uniform evaluation angles."""
        if f_step <= 0 or theta_s_step_deg <= 0:
            raise ValidationError("grid steps must be > 0")
        if f_hi < f_lo or theta_s_hi_deg < theta_s_lo_deg:
            raise ValidationError("grid upper bounds must be >= lower bounds")
        freqs = np.arange(f_lo, f_hi + 0.5 * f_step, f_step)
        steers_deg = np.arange(theta_s_lo_deg, theta_s_hi_deg + 0.5 * theta_s_step_deg,
                               theta_s_step_deg)
        angles = np.arange(eval_angle_count) * (2.0 * np.pi / eval_angle_count)
        return cls(frequencies_hz=freqs, steerings_rad=np.deg2rad(steers_deg),
                   eval_angles=angles)

    @classmethod
    def single(cls, frequency_hz: float, theta_s_rad: float,
               eval_angle_count: int = 720) -> "DesignGrid":
        angles = np.arange(eval_angle_count) * (2.0 * np.pi / eval_angle_count)
        return cls(frequencies_hz=np.array([frequency_hz]),
                   steerings_rad=np.array([theta_s_rad]),
                   eval_angles=angles)


def check_angular_resolution(grid: DesignGrid, spec: IdpSpec, trunc: int) -> None:
    """Enforce the Nyquist margin K >= 8 * (N + trunc) on the angle grid."""
    needed = 8 * (spec.order + trunc)
    if grid.eval_angles.size < needed:
        raise ValidationError(
            f"eval_angles has {grid.eval_angles.size} points; "
            f"needs at least {needed} for order {spec.order} and "
            f"truncation {trunc}"
        )


def direction_error(h: np.ndarray, cfg: ArrayConfig, spec: IdpSpec,
                    theta_s: float, omega: float, grid: DesignGrid,
                    consts: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Circular mean of |B(theta) - target(theta)|^2 over the angle grid."""
    h = np.asarray(h)
    if h.shape != (cfg.size,):
        raise ValidationError(
            f"filter length {h.shape} does not match array size {cfg.size}"
        )
    d = manifold(cfg, grid.eval_angles, omega, consts)
    b = d @ np.conj(h)
    target = idp_value(spec, theta_s, grid.eval_angles)
    return float(np.mean(np.abs(b - target) ** 2))


def error_table(cfg: ArrayConfig, spec: IdpSpec, grid: DesignGrid, trunc: int,
                regularization: float = DEFAULT_REGULARIZATION,
                consts: PhysicalConstants = DEFAULT_CONSTANTS,
                bank: FilterBank | None = None) -> np.ndarray:
    """Per-grid-point direction errors, shape (frequencies, steerings).

    Designs the filter bank (unless one is supplied) and evaluates every
    grid point with shared per-frequency manifold matrices.
    """
    check_angular_resolution(grid, spec, trunc)
    if bank is None:
        bank = design_bank(cfg, spec, grid, trunc, regularization, consts)
    angles = grid.eval_angles
    targets = np.stack(
        [idp_value(spec, ts, angles) for ts in grid.steerings_rad], axis=1
    )
    errors = np.empty((grid.frequencies_hz.size, grid.steerings_rad.size))
    for fi, f in enumerate(grid.frequencies_hz):
        d = manifold(cfg, angles, 2.0 * np.pi * f, consts)
        b = d @ np.conj(bank.filters[fi]).T
        errors[fi] = np.mean(np.abs(b - targets) ** 2, axis=0)
    return errors


def overall_error(cfg: ArrayConfig, spec: IdpSpec, grid: DesignGrid, trunc: int,
                  regularization: float = DEFAULT_REGULARIZATION,
                  consts: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Mean direction error over the whole design grid."""
    return float(np.mean(error_table(cfg, spec, grid, trunc, regularization,
                                     consts)))
