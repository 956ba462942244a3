"""Experiment harness: metric sweeps, baselines, and polar cuts.

Sweeps report the directivity factor and white noise gain in dB together
with the beampattern approximation error, either per frequency at a fixed
steering direction or per steering direction averaged over the band.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .arraymodel import (
    DEFAULT_CONSTANTS,
    ArrayConfig,
    PhysicalConstants,
    SteeringContext,
    df,
    manifold,
    validate_spacing,
    wng,
)
from .beamformer import DEFAULT_REGULARIZATION, design_bank
from .errors import ValidationError
from .idp import IdpSpec, idp_value
from .metrics import DesignGrid, error_table

# Reported WNG values below this are floored in CSV output (with the flag
# column set); in-memory results are never clipped.
WNG_DB_FLOOR = -100.0


def interleaved_superarray(spacing: float = 0.02) -> ArrayConfig:
    """Reference 7-element design: omni and bidirectional alternating.

    Four omnidirectional and three bidirectional elements, uniformly
    spaced, starting and ending with an omni.
    """
    positions = np.arange(7) * spacing
    directivity = np.array([1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0])
    return ArrayConfig(positions=positions, directivity=directivity)


def uniform_omni_array(m: int, spacing: float) -> ArrayConfig:
    return ArrayConfig(positions=np.arange(m) * spacing,
                       directivity=np.ones(m))


@dataclass
class BaselineCatalog:
    """Named reference configurations plus user-defined entries."""

    entries: dict[str, ArrayConfig] = field(default_factory=dict)

    @classmethod
    def default(cls) -> "BaselineCatalog":
        return cls(entries={
            "interleaved": interleaved_superarray(),
            "uniform-omni": uniform_omni_array(7, 0.02),
        })

    def add(self, name: str, cfg: ArrayConfig,
            min_spacing: float | None = None,
            aperture: float | None = None) -> None:
        if min_spacing is not None and aperture is not None:
            validate_spacing(cfg, min_spacing, aperture)
        self.entries[name] = cfg

    def __getitem__(self, name: str) -> ArrayConfig:
        return self.entries[name]


@dataclass(frozen=True)
class SweepResult:
    """One metrics table along a frequency, steering, or angle axis."""

    axis: str
    axis_values: np.ndarray
    df_db: np.ndarray
    wng_db: np.ndarray
    approx_error: np.ndarray
    label: str
    fixed: dict


@dataclass(frozen=True)
class BeampatternCut:
    """Polar cut of the designed magnitude with the target overlay."""

    angles: np.ndarray
    magnitude: np.ndarray
    target: np.ndarray
    theta_s: float
    omega: float
    label: str


def _db(values: np.ndarray) -> np.ndarray:
    return 10.0 * np.log10(values)


def sweep_frequency(cfg: ArrayConfig, spec: IdpSpec, theta_s: float,
                    grid: DesignGrid, trunc: int | None = None,
                    regularization: float = DEFAULT_REGULARIZATION,
                    consts: PhysicalConstants = DEFAULT_CONSTANTS,
                    label: str = "") -> SweepResult:
    """Per-frequency DF, WNG, and approximation error at one steering."""
    if trunc is None:
        trunc = spec.order
    sub = DesignGrid(frequencies_hz=grid.frequencies_hz,
                     steerings_rad=np.array([theta_s]),
                     eval_angles=grid.eval_angles)
    bank = design_bank(cfg, spec, sub, trunc, regularization, consts)
    errors = error_table(cfg, spec, sub, trunc, regularization, consts,
                         bank=bank)[:, 0]
    df_db = np.empty(sub.frequencies_hz.size)
    wng_db = np.empty(sub.frequencies_hz.size)
    for fi, f in enumerate(sub.frequencies_hz):
        ctx = SteeringContext(theta_s=theta_s, omega=2.0 * np.pi * f)
        h = bank.filters[fi, 0]
        df_db[fi] = _db(df(h, cfg, ctx, consts))
        wng_db[fi] = _db(wng(h, cfg, ctx, consts))
    return SweepResult(axis="frequency", axis_values=sub.frequencies_hz,
                       df_db=df_db, wng_db=wng_db, approx_error=errors,
                       label=label,
                       fixed={"theta_s_deg": float(np.rad2deg(theta_s)),
                              "trunc": trunc,
                              "regularization": regularization})


def sweep_steering(cfg: ArrayConfig, spec: IdpSpec, grid: DesignGrid,
                   trunc: int | None = None,
                   regularization: float = DEFAULT_REGULARIZATION,
                   consts: PhysicalConstants = DEFAULT_CONSTANTS,
                   label: str = "") -> SweepResult:
    """Band-averaged DF/WNG (dB domain) and mean error per steering."""
    if trunc is None:
        trunc = spec.order
    bank = design_bank(cfg, spec, grid, trunc, regularization, consts)
    errors = error_table(cfg, spec, grid, trunc, regularization, consts,
                         bank=bank)
    n_f = grid.frequencies_hz.size
    n_s = grid.steerings_rad.size
    df_db = np.empty((n_f, n_s))
    wng_db = np.empty((n_f, n_s))
    for fi, f in enumerate(grid.frequencies_hz):
        omega = 2.0 * np.pi * f
        for si, ts in enumerate(grid.steerings_rad):
            ctx = SteeringContext(theta_s=ts, omega=omega)
            h = bank.filters[fi, si]
            df_db[fi, si] = _db(df(h, cfg, ctx, consts))
            wng_db[fi, si] = _db(wng(h, cfg, ctx, consts))
    return SweepResult(axis="steering",
                       axis_values=np.rad2deg(grid.steerings_rad),
                       df_db=df_db.mean(axis=0), wng_db=wng_db.mean(axis=0),
                       approx_error=errors.mean(axis=0), label=label,
                       fixed={"f_lo_hz": float(grid.frequencies_hz[0]),
                              "f_hi_hz": float(grid.frequencies_hz[-1]),
                              "band_average": "arithmetic mean of dB values "
                                              "over the frequency grid",
                              "trunc": trunc,
                              "regularization": regularization})


def beampattern_cut(cfg: ArrayConfig, spec: IdpSpec, theta_s: float,
                    omega: float, n_angles: int,
                    trunc: int | None = None,
                    regularization: float = DEFAULT_REGULARIZATION,
                    consts: PhysicalConstants = DEFAULT_CONSTANTS,
                    h: np.ndarray | None = None,
                    label: str = "") -> BeampatternCut:
    """Polar cut of |B| against the target at one design point.

    A filter may be supplied directly; otherwise one is designed for the
    requested point. For well-conditioned designs the mainlobe peak of
    |B| lies within one angular bin of the steering direction.
    """
    if n_angles < 72:
        raise ValidationError(f"n_angles must be >= 72, got {n_angles}")
    if trunc is None:
        trunc = spec.order
    angles = np.arange(n_angles) * (2.0 * np.pi / n_angles)
    if h is None:
        sub = DesignGrid(frequencies_hz=np.array([omega / (2.0 * np.pi)]),
                         steerings_rad=np.array([theta_s]),
                         eval_angles=angles)
        bank = design_bank(cfg, spec, sub, trunc, regularization, consts)
        h = bank.filters[0, 0]
    else:
        h = np.asarray(h)
        if h.shape != (cfg.size,):
            raise ValidationError(
                f"filter length {h.shape} does not match array size {cfg.size}"
            )
    b = manifold(cfg, angles, omega, consts) @ np.conj(h)
    return BeampatternCut(angles=angles, magnitude=np.abs(b),
                          target=idp_value(spec, theta_s, angles),
                          theta_s=theta_s, omega=omega, label=label)


def band_summary(cfg: ArrayConfig, spec: IdpSpec, grid: DesignGrid,
                 trunc: int | None = None,
                 regularization: float = DEFAULT_REGULARIZATION,
                 consts: PhysicalConstants = DEFAULT_CONSTANTS) -> dict:
    """Overall error plus grid-mean DF/WNG in dB, for comparisons."""
    if trunc is None:
        trunc = spec.order
    result = sweep_steering(cfg, spec, grid, trunc, regularization, consts)
    return {
        "overall_error": float(result.approx_error.mean()),
        "mean_df_db": float(result.df_db.mean()),
        "mean_wng_db": float(result.wng_db.mean()),
    }
