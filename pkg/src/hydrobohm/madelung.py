"""Madelung variables and the quantum-potential machinery around them.

A complex field Psi = A e^{iS/hbar} sampled along a 1D grid line is held as a
PolarForm.  The operations here compute the Bohm potential

    V_Bohm = -(hbar^2 / 2m) lap(A) / A            (strict amplitude form)
    V_Bohm = -(hbar^2 / 2m) lap(psi) / psi        (full-field form; equal for
                                                   real or m = 0 fields)

the quantum potential V_Q = V + V_Bohm, the probability current, and the
pointwise residuals of the quantum Hamilton-Jacobi, continuity and Euler
equations.  For hydrogen eigenstates the full-field form is available in
closed form (analytic radial derivatives plus the exact angular eigenvalue),
which is what makes V_Q = E_n a numerically testable statement: the
finite-difference path provides the independent oracle it is tested against.

Fields sampled along one grid line cannot see transverse structure, so a
PolarForm optionally carries analytically known transverse terms (the
azimuthal kinetic term and the angular part of lap(A)/A) plus analytic
amplitude derivatives.  Amplitude zeros are handled by a validity mask;
difference stencils never straddle masked points.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .core import AxisGrid, PhysicalConstants, RadialGrid
from .hydrogen import (
    EigenstateSpec,
    energy_level,
    laguerre_spec,
    node_mask,
    radial_R_derivatives,
)
from .specfun import laguerre, laguerre_derivative, spherical_harmonic

__all__ = [
    "PolarForm",
    "PotentialProfile",
    "CurrentField",
    "AMPLITUDE_FLOOR",
    "decompose",
    "reconstruct",
    "coulomb_profile",
    "bohm_potential_analytic",
    "bohm_potential_fd",
    "quantum_potential",
    "quantum_acceleration",
    "probability_current",
    "hj_residual",
    "hj_residual_field",
    "continuity_residual",
    "euler_residual",
    "polar_section",
]

AMPLITUDE_FLOOR = 1e-12


@dataclass(frozen=True)
class PolarForm:
    """Amplitude and unwrapped action phase along one grid line.

    geometry selects the Laplacian of the line coordinate: "cartesian" for
    d2/dx2, "radial" for d2/dr2 + (2/r) d/dr.  The optional arrays supply
    what a single line cannot capture: the transverse (grad S)^2, the
    transverse part of lap(A)/A, and analytic d/dq, d2/dq2 of the amplitude.
    """

    coords: np.ndarray
    amplitude: np.ndarray
    phase: np.ndarray
    valid: np.ndarray
    geometry: str = "cartesian"
    kinetic_transverse: np.ndarray | None = None
    amp_laplacian_transverse: np.ndarray | None = None
    amplitude_d1: np.ndarray | None = None
    amplitude_d2: np.ndarray | None = None


@dataclass(frozen=True)
class PotentialProfile:
    """Potential samples; node_mask is True where the value is not usable."""

    coords: np.ndarray
    values: np.ndarray
    node_mask: np.ndarray
    kind: str


@dataclass(frozen=True)
class CurrentField:
    """One component of the probability current along a grid line."""

    coords: np.ndarray
    values: np.ndarray
    direction: str = "x"


def _as_points(grid) -> np.ndarray:
    if isinstance(grid, (RadialGrid, AxisGrid)):
        return grid.points
    return np.asarray(grid)


def _uniform_spacing(coords: np.ndarray) -> float:
    steps = np.diff(coords)
    h = float(steps.mean())
    if coords.size < 5:
        raise ValueError("need at least 5 grid points for interior stencils")
    if np.max(np.abs(steps - h)) > 1e-9 * abs(h):
        raise ValueError("finite differences require a uniform grid")
    return h


def _interior(valid: np.ndarray) -> np.ndarray:
    """Points whose full 3-point stencil lies inside the valid set."""
    ok = valid.copy()
    ok[0] = False
    ok[-1] = False
    ok[1:-1] &= valid[:-2] & valid[2:]
    return ok


def _central_first(values: np.ndarray, coords: np.ndarray) -> np.ndarray:
    """Second-order first derivative on a possibly nonuniform grid."""
    out = np.full(values.shape, np.nan, dtype=np.result_type(values, coords, float))
    h1 = coords[1:-1] - coords[:-2]
    h2 = coords[2:] - coords[1:-1]
    out[1:-1] = (
        values[2:] * h1**2 - values[:-2] * h2**2 + values[1:-1] * (h2**2 - h1**2)
    ) / (h1 * h2 * (h1 + h2))
    return out


def _central_second(values: np.ndarray, coords: np.ndarray) -> np.ndarray:
    out = np.full(values.shape, np.nan, dtype=np.result_type(values, coords, float))
    h1 = coords[1:-1] - coords[:-2]
    h2 = coords[2:] - coords[1:-1]
    out[1:-1] = 2.0 * (
        values[:-2] * h2 - values[1:-1] * (h1 + h2) + values[2:] * h1
    ) / (h1 * h2 * (h1 + h2))
    return out


def decompose(
    values,
    grid,
    constants: PhysicalConstants,
    geometry: str = "cartesian",
    amplitude_floor: float = AMPLITUDE_FLOOR,
) -> PolarForm:
    """Split complex samples into amplitude and unwrapped action phase.

    The phase is unwrapped independently on each contiguous run of points
    whose amplitude clears the floor; below the floor the phase is undefined
    and the point is flagged invalid.  A phase step larger than pi hbar/2
    between neighbouring valid points is an unwrap failure (a sign-flip node
    crossed above the floor, or an under-resolved grid): both endpoints are
    flagged invalid so the jump splits the run.
    """
    coords = _as_points(grid)
    values = np.asarray(values, dtype=complex)
    if values.shape != coords.shape:
        raise ValueError("field and grid shapes differ")
    amplitude = np.abs(values)
    peak = amplitude.max() if amplitude.size else 0.0
    valid = amplitude >= amplitude_floor * peak if peak > 0.0 else np.zeros_like(amplitude, bool)
    hbar = float(constants.hbar)
    phase = np.zeros_like(amplitude)
    raw = np.angle(values)
    for start, stop in _runs(valid):
        phase[start:stop] = hbar * np.unwrap(raw[start:stop])
    jump = (valid[:-1] & valid[1:]) & (np.abs(np.diff(phase)) > 0.5 * math.pi * hbar)
    valid[:-1] &= ~jump
    valid[1:] &= ~jump
    phase = np.where(valid, phase, 0.0)
    return PolarForm(coords=coords, amplitude=amplitude, phase=phase, valid=valid, geometry=geometry)


def _runs(valid: np.ndarray):
    edges = np.flatnonzero(np.diff(valid.astype(np.int8)))
    bounds = np.concatenate([[0], edges + 1, [valid.size]])
    for start, stop in zip(bounds[:-1], bounds[1:]):
        if valid[start]:
            yield int(start), int(stop)


def reconstruct(polar: PolarForm, constants: PhysicalConstants) -> np.ndarray:
    """A e^{iS/hbar}; inverse of decompose wherever the form is valid."""
    return polar.amplitude * np.exp(1j * polar.phase / float(constants.hbar))


def coulomb_profile(constants: PhysicalConstants, grid) -> PotentialProfile:
    """Attractive external potential V(r) = -coulomb / r."""
    r = _as_points(grid)
    values = -float(constants.coulomb) / r
    return PotentialProfile(coords=r, values=values, node_mask=np.zeros(r.shape, bool), kind="external")


def bohm_potential_analytic(
    spec: EigenstateSpec,
    grid,
    form: str = "full",
    theta: float = math.pi / 2,
) -> PotentialProfile:
    """Closed-form Bohm potential of a hydrogen eigenstate on the grid.

    form="full" divides the whole eigenfunction (exact angular eigenvalue
    -l(l+1)/r^2; independent of both theta and m).  form="amplitude" uses
    the real amplitude |psi| instead, which for m != 0 differs by the
    azimuthal kinetic term hbar^2 m^2 / (2 M r^2 sin^2 theta).

    The radial part is assembled in the rho^l-factored form

        lap(psi)/psi = c^2 [ 2(l+1)/rho (L'/L - 1/2) + 1/4 - L'/L + L''/L ],

    c = 2/(n a), which cancels the l/r^2 growth symbolically and keeps the
    evaluation well conditioned down to small r.  L, L' and L'' come from
    three separate recurrence evaluations, so the identity V_Q = E_n stays
    a nontrivial numerical statement about those recurrences.
    """
    if form not in ("full", "amplitude"):
        raise ValueError(f"unknown form {form!r}")
    r = _as_points(grid)
    constants = spec.constants
    hb, mass = float(constants.hbar), float(constants.mass)
    poly = laguerre_spec(spec.qn)
    a = float(constants.bohr_radius)
    c = 2.0 / (spec.n * a)
    rho = c * r
    lag = laguerre(poly.k, poly.alpha, rho)
    lag1 = laguerre_derivative(poly.k, poly.alpha, rho) if poly.k >= 1 else np.zeros_like(rho)
    lag2 = laguerre_derivative(poly.k, poly.alpha, rho, order=2) if poly.k >= 2 else np.zeros_like(rho)
    mask = node_mask(spec, r)
    safe_lag = np.where(mask, 1.0, lag)
    ratio1 = lag1 / safe_lag
    ratio2 = lag2 / safe_lag
    lap_ratio = c * c * (
        2.0 * (spec.l + 1) / rho * (ratio1 - 0.5) + 0.25 - ratio1 + ratio2
    )
    values = -(hb * hb / (2.0 * mass)) * lap_ratio
    if form == "amplitude":
        values = values - (hb * spec.m) ** 2 / (2.0 * mass * (r * math.sin(theta)) ** 2)
    values = np.where(mask, np.nan, values)
    return PotentialProfile(coords=r, values=values, node_mask=mask, kind="bohm")


def bohm_potential_fd(
    values,
    grid,
    constants: PhysicalConstants,
    geometry: str = "cartesian",
    angular_l: int | None = None,
    amplitude_floor: float = AMPLITUDE_FLOOR,
) -> PotentialProfile:
    """Bohm potential by second-order central differences on a uniform grid.

    For hydrogen this operates on the radial factor with the centrifugal
    term -l(l+1)/r^2 added analytically (pass angular_l); for Cartesian
    fields it is the plain 1D Laplacian.  Points below the amplitude floor,
    and points whose stencil touches one, are masked: the 0/0 at amplitude
    zeros is analytically finite but numerically ill conditioned.
    """
    coords = _as_points(grid)
    field = np.asarray(values)
    if field.shape != coords.shape:
        raise ValueError("field and grid shapes differ")
    h = _uniform_spacing(coords)
    magnitude = np.abs(field)
    peak = magnitude.max()
    clear = magnitude >= amplitude_floor * peak if peak > 0.0 else np.zeros(field.shape, bool)
    ok = _interior(clear)
    lap = np.empty_like(field)
    lap[1:-1] = (field[2:] - 2.0 * field[1:-1] + field[:-2]) / (h * h)
    lap[0] = lap[-1] = np.nan
    if geometry == "radial":
        d1 = np.empty_like(field)
        d1[1:-1] = (field[2:] - field[:-2]) / (2.0 * h)
        d1[0] = d1[-1] = np.nan
        lap = lap + 2.0 * d1 / coords
    elif geometry != "cartesian":
        raise ValueError(f"unknown geometry {geometry!r}")
    if angular_l is not None:
        lap = lap - angular_l * (angular_l + 1) * field / coords**2
    hb, mass = float(constants.hbar), float(constants.mass)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = lap / field
    if np.iscomplexobj(ratio):
        ratio = ratio.real
    result = np.where(ok, -(hb * hb / (2.0 * mass)) * ratio, np.nan)
    return PotentialProfile(coords=coords, values=result, node_mask=~ok, kind="bohm")


def quantum_potential(external: PotentialProfile, bohm: PotentialProfile) -> PotentialProfile:
    """V_Q = V + V_Bohm on a shared grid; masks combine."""
    if not np.array_equal(external.coords, bohm.coords):
        raise ValueError("potential profiles live on different grids")
    return PotentialProfile(
        coords=bohm.coords,
        values=external.values + bohm.values,
        node_mask=external.node_mask | bohm.node_mask,
        kind="quantum",
    )


def quantum_acceleration(quantum: PotentialProfile, constants: PhysicalConstants) -> np.ndarray:
    """a_Q = -grad(V_Q)/m by central differences; NaN where not computable.

    Gradients are taken only inside contiguous unmasked runs (three-point
    stencils never straddle a masked node), so runs shorter than three
    points contribute nothing.
    """
    ok = _interior(~quantum.node_mask)
    grad = _central_first(quantum.values, quantum.coords)
    accel = -grad / float(constants.mass)
    return np.where(ok, accel, np.nan)


def probability_current(values, grid, constants: PhysicalConstants, direction: str = "x") -> CurrentField:
    """j = (hbar/m) Im(conj(Psi) dPsi/dq) along the line; ends are NaN.

    The coordinate is treated as arc length, so for an azimuthal ring pass
    r sin(theta) phi as the grid.
    """
    coords = _as_points(grid)
    field = np.asarray(values, dtype=complex)
    if field.shape != coords.shape:
        raise ValueError("field and grid shapes differ")
    derivative = _central_first(field, coords)
    j = (float(constants.hbar) / float(constants.mass)) * np.imag(np.conj(field) * derivative)
    return CurrentField(coords=coords, values=j, direction=direction)


def _laplacian_ratio(polar: PolarForm) -> tuple[np.ndarray, np.ndarray]:
    """lap(A)/A along the line plus transverse part; returns (ratio, ok)."""
    amp = polar.amplitude
    ok = _interior(polar.valid)
    if polar.amplitude_d2 is not None:
        d1 = polar.amplitude_d1
        d2 = polar.amplitude_d2
        ok = polar.valid
    else:
        d1 = _central_first(amp, polar.coords)
        d2 = _central_second(amp, polar.coords)
    lap = d2.copy()
    if polar.geometry == "radial":
        if d1 is None:
            raise ValueError("radial geometry requires the first derivative")
        lap = lap + 2.0 * d1 / polar.coords
    elif polar.geometry != "cartesian":
        raise ValueError(f"unknown geometry {polar.geometry!r}")
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = lap / amp
    if polar.amp_laplacian_transverse is not None:
        ratio = ratio + polar.amp_laplacian_transverse
    return ratio, ok


def hj_residual_field(
    polar: PolarForm, v_external, ds_dt, constants: PhysicalConstants
) -> tuple[np.ndarray, np.ndarray]:
    """Pointwise (grad S)^2/2m - (hbar^2/2m) lap(A)/A + V + dS/dt.

    Returns the residual samples and the mask of points where every term
    could be evaluated.  Stationary states supply dS/dt = -E_n analytically;
    time-dependent packets pass closed-form or finite-differenced samples.
    """
    hb, mass = float(constants.hbar), float(constants.mass)
    grad_s = _central_first(polar.phase, polar.coords)
    ok = _interior(polar.valid)
    kinetic = grad_s**2
    if polar.kinetic_transverse is not None:
        kinetic = kinetic + polar.kinetic_transverse
    lap_ratio, lap_ok = _laplacian_ratio(polar)
    residual = kinetic / (2.0 * mass) - (hb * hb / (2.0 * mass)) * lap_ratio + v_external + ds_dt
    usable = ok & lap_ok
    if not usable.any():
        raise ValueError("no usable interior points")
    return residual, usable


def hj_residual(polar: PolarForm, v_external, ds_dt, constants: PhysicalConstants) -> float:
    """Max |residual| of the quantum Hamilton-Jacobi equation over valid points."""
    residual, usable = hj_residual_field(polar, v_external, ds_dt, constants)
    return float(np.abs(residual[usable]).max())


def continuity_residual(
    polar_a: PolarForm, polar_b: PolarForm, dt: float, constants: PhysicalConstants
) -> float:
    """Max |div(A^2 grad S / m) + d(A^2)/dt| at the midpoint of two times.

    The two forms bracket the evaluation time symmetrically, so the time
    derivative is second-order accurate.  A stationary state may simply be
    passed twice (its density difference vanishes identically).
    """
    if not np.array_equal(polar_a.coords, polar_b.coords):
        raise ValueError("polar forms live on different grids")
    mass = float(constants.mass)
    coords = polar_a.coords
    valid = polar_a.valid & polar_b.valid
    density = 0.5 * (polar_a.amplitude**2 + polar_b.amplitude**2)
    phase = 0.5 * (polar_a.phase + polar_b.phase)
    flux = density * _central_first(phase, coords) / mass
    divergence = _central_first(flux, coords)
    if polar_a.geometry == "radial":
        divergence = divergence + 2.0 * flux / coords
    density_rate = (polar_b.amplitude**2 - polar_a.amplitude**2) / dt
    usable = _interior(_interior(valid))
    if not usable.any():
        raise ValueError("no usable interior points")
    return float(np.abs((divergence + density_rate)[usable]).max())


def euler_residual(
    polar_a: PolarForm,
    polar_b: PolarForm,
    dt: float,
    quantum: PotentialProfile,
    constants: PhysicalConstants,
) -> float:
    """Max |dp/dt + (p/m) grad p + grad V_Q| with p = grad S.

    Newton's law for the momentum field: the convective derivative of p
    balances the quantum-potential gradient.  The two polar forms bracket
    the evaluation time; a stationary state may be passed twice.
    """
    if not np.array_equal(polar_a.coords, polar_b.coords):
        raise ValueError("polar forms live on different grids")
    if not np.array_equal(quantum.coords, polar_a.coords):
        raise ValueError("quantum profile lives on a different grid")
    mass = float(constants.mass)
    coords = polar_a.coords
    p_a = _central_first(polar_a.phase, coords)
    p_b = _central_first(polar_b.phase, coords)
    p_mid = 0.5 * (p_a + p_b)
    dp_dt = (p_b - p_a) / dt
    advection = (p_mid / mass) * _central_first(p_mid, coords)
    grad_q = _central_first(quantum.values, coords)
    residual = dp_dt + advection + grad_q
    valid = polar_a.valid & polar_b.valid & ~quantum.node_mask
    usable = _interior(_interior(valid))
    if not usable.any():
        raise ValueError("no usable interior points")
    return float(np.abs(residual[usable]).max())


def polar_section(
    spec: EigenstateSpec,
    grid,
    theta: float = math.pi / 2,
    phi: float = 0.0,
    time: float = 0.0,
    amplitude_floor: float = AMPLITUDE_FLOOR,
) -> PolarForm:
    """Radial section of a hydrogen eigenstate as a PolarForm.

    Samples Psi = psi_nlm e^{-i E_n t / hbar} along r at fixed angles and
    attaches the analytically known pieces a radial line cannot see: the
    azimuthal kinetic term (hbar m / (r sin theta))^2 and the angular part
    (m^2/sin^2 theta - l(l+1)) / r^2 of lap(A)/A, plus analytic amplitude
    derivatives (so residuals are limited by the closed forms, not by
    stencil truncation).
    """
    r = _as_points(grid)
    constants = spec.constants
    hb = float(constants.hbar)
    e_n = float(energy_level(spec.n, constants))
    harmonic = complex(spherical_harmonic(spec.l, spec.m, theta, phi))
    big_r, d1, d2 = radial_R_derivatives(spec, r)
    values = big_r * harmonic * np.exp(-1j * e_n * time / hb)
    polar = decompose(values, r, constants, geometry="radial", amplitude_floor=amplitude_floor)
    sign = np.where(big_r < 0.0, -1.0, 1.0)
    y_abs = abs(harmonic)
    sin_t = math.sin(theta)
    kinetic = np.full(r.shape, (hb * spec.m / sin_t) ** 2) / r**2 if spec.m else np.zeros(r.shape)
    angular = (spec.m**2 / sin_t**2 - spec.l * (spec.l + 1)) / r**2
    return dataclasses.replace(
        polar,
        kinetic_transverse=kinetic,
        amp_laplacian_transverse=angular,
        amplitude_d1=sign * d1 * y_abs,
        amplitude_d2=sign * d2 * y_abs,
    )
