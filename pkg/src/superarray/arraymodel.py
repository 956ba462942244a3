"""Physical model of a linear superarray.

Elements sit on the x-axis and carry a first-order directivity pattern
``a + (1 - a) sin(theta)`` controlled by a single parameter per element:
a = 1 is omnidirectional, a = 0 is bidirectional with the main lobe along
the positive y-axis. The module provides the manifold vector, beampattern,
white noise gain, directivity factor, and the 2D diffuse-field coherence
matrix all downstream modules build on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateQuotientError, ValidationError
from .specfun import bessel_j_orders


@dataclass(frozen=True)
class PhysicalConstants:
    """Propagation constants; only the speed of sound matters here."""

    speed_of_sound: float = 343.0

    def __post_init__(self):
        if not self.speed_of_sound > 0.0:
            raise ValidationError(
                f"speed_of_sound must be > 0, got {self.speed_of_sound}"
            )

    def wavenumber(self, omega: float) -> float:
        return omega / self.speed_of_sound


DEFAULT_CONSTANTS = PhysicalConstants()


@dataclass(frozen=True)
class ArrayConfig:
    """Microphone positions (m, on the x-axis) and directivity parameters.

    Positions must be non-negative and directivities in [0, 1]; spacing
    and aperture constraints involve problem-level bounds and are checked
    by :func:`validate_spacing`.
    """

    positions: np.ndarray
    directivity: np.ndarray

    def __post_init__(self):
        pos = np.asarray(self.positions, dtype=float)
        dirv = np.asarray(self.directivity, dtype=float)
        if pos.ndim != 1 or dirv.ndim != 1 or pos.shape != dirv.shape:
            raise ValidationError(
                "positions and directivity must be 1-D vectors of equal length"
            )
        if pos.size == 0:
            raise ValidationError("array must contain at least one microphone")
        if not np.all(np.isfinite(pos)) or not np.all(np.isfinite(dirv)):
            raise ValidationError("positions and directivity must be finite")
        if np.any(pos < 0.0):
            raise ValidationError("positions must be >= 0")
        if np.any(dirv < 0.0) or np.any(dirv > 1.0):
            raise ValidationError("directivity parameters must lie in [0, 1]")
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "directivity", dirv)

    @property
    def size(self) -> int:
        return self.positions.size


@dataclass(frozen=True)
class SteeringContext:
    """Steering direction (rad) and angular frequency (rad/s)."""

    theta_s: float
    omega: float

    def __post_init__(self):
        if not self.omega > 0.0:
            raise ValidationError(f"omega must be > 0, got {self.omega}")
        if not 0.0 <= self.theta_s < 2.0 * np.pi:
            raise ValidationError(
                f"theta_s must lie in [0, 2*pi), got {self.theta_s}"
            )


def validate_spacing(cfg: ArrayConfig, min_spacing: float, aperture: float) -> None:
    """Check the pairwise spacing and aperture constraints.

    Raises ValidationError naming the first violated constraint.
    """
    pos = cfg.positions
    if np.any(pos > aperture + 1e-12):
        m = int(np.argmax(pos))
        raise ValidationError(
            f"position {m} = {pos[m]:.6g} m exceeds the aperture {aperture:.6g} m"
        )
    if pos.size > 1:
        srt = np.sort(pos)
        gaps = np.diff(srt)
        if np.any(gaps < min_spacing - 1e-12):
            i = int(np.argmin(gaps))
            raise ValidationError(
                f"spacing {gaps[i]:.6g} m between sorted elements {i} and {i + 1} "
                f"is below the minimum {min_spacing:.6g} m"
            )


def element_pattern(a_m, theta):
    """First-order element response a + (1 - a) sin(theta)."""
    return a_m + (1.0 - a_m) * np.sin(theta)


def manifold(cfg: ArrayConfig, theta, omega: float,
             consts: PhysicalConstants = DEFAULT_CONSTANTS) -> np.ndarray:
    """Array manifold vector d(x, theta, omega).

    Element m combines its directivity response with the propagation
    phase exp(j * (omega/c) * x_m * cos(theta)).

    Parameters
    ----------
    theta : float or ndarray
        Azimuth angle(s) in radians.

    Returns
    -------
    ndarray
        Complex, shape (M,) for scalar theta, otherwise theta.shape + (M,).
    """
    th = np.asarray(theta, dtype=float)
    wn = consts.wavenumber(omega)
    a = cfg.directivity
    amp = a + (1.0 - a) * np.sin(th)[..., None]
    phase = np.exp(1j * wn * cfg.positions * np.cos(th)[..., None])
    return amp * phase


def beampattern(h: np.ndarray, cfg: ArrayConfig, theta, omega: float,
                consts: PhysicalConstants = DEFAULT_CONSTANTS):
    """Beamformer spatial response h^H d(x, theta, omega)."""
    h = np.asarray(h)
    if h.shape != (cfg.size,):
        raise ValidationError(
            f"filter length {h.shape} does not match array size {cfg.size}"
        )
    d = manifold(cfg, theta, omega, consts)
    out = d @ np.conj(h)
    if np.isscalar(theta) or np.ndim(theta) == 0:
        return complex(out)
    return out


def wng(h: np.ndarray, cfg: ArrayConfig, ctx: SteeringContext,
        consts: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """White noise gain |h^H d(theta_s)|^2 / (h^H h)."""
    h = np.asarray(h)
    energy = float(np.real(np.vdot(h, h)))
    if energy == 0.0:
        raise ValidationError("white noise gain is undefined for a zero filter")
    b = beampattern(h, cfg, ctx.theta_s, ctx.omega, consts)
    return abs(b) ** 2 / energy


def coherence_matrix(cfg: ArrayConfig, omega: float,
                     consts: PhysicalConstants = DEFAULT_CONSTANTS) -> np.ndarray:
    """2D diffuse-field coherence matrix of the superarray.

    Entry (i, j) is the angular average over [0, 2*pi) of the product of
    element responses and the propagation phase difference, which reduces
    in closed form to a combination of J_0 and J_2 of the scaled element
    separation. The result is real symmetric and positive semidefinite up
    to rounding.
    """
    pos = cfg.positions
    a = cfg.directivity
    m = cfg.size
    wn = consts.wavenumber(omega)
    omni = np.outer(a, a)
    grad = 0.5 * np.outer(1.0 - a, 1.0 - a)
    gamma = np.empty((m, m))
    for i in range(m):
        for j in range(i, m):
            j0, _, j2 = bessel_j_orders(2, wn * abs(pos[i] - pos[j]))
            val = (omni[i, j] + grad[i, j]) * j0 + grad[i, j] * j2
            gamma[i, j] = val
            gamma[j, i] = val
    return gamma


def df(h: np.ndarray, cfg: ArrayConfig, ctx: SteeringContext,
       consts: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Directivity factor |h^H d(theta_s)|^2 / (h^H Gamma h).

    Raises DegenerateQuotientError when the diffuse-noise output power
    falls to rounding level relative to the filter energy, instead of
    returning an artificially inflated gain.
    """
    h = np.asarray(h)
    energy = float(np.real(np.vdot(h, h)))
    if energy == 0.0:
        raise ValidationError("directivity factor is undefined for a zero filter")
    gamma = coherence_matrix(cfg, ctx.omega, consts)
    denom = float(np.real(np.conj(h) @ gamma @ h))
    if denom < 1e-14 * energy:
        raise DegenerateQuotientError(
            f"diffuse output power {denom:.3e} is degenerate relative to "
            f"filter energy {energy:.3e}"
        )
    b = beampattern(h, cfg, ctx.theta_s, ctx.omega, consts)
    return abs(b) ** 2 / denom
