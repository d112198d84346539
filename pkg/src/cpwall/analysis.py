"""Derived features of the atom-wall potential landscape.

The thermal part of the potential is repulsive at short range and
attractive at long range, so it has a stable minimum (near 0.52
lambda_T); the total potential stays attractive because the vacuum
part dominates everywhere the thermal well lives.  The operations here
locate that equilibrium, find where the thermal term overtakes the
vacuum term, fit harmonic windows around the thermal well, and
tabulate the validity of every asymptotic regime against exact values.

Root-finding uses Brent's bracketed bisection-secant hybrid on a
5-point central finite difference of the exact series (step 1e-4
lambda_T); no analytic derivative exists in the main path, which keeps
the derivative route independent of the series internals.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import brentq

from .constants import PhysicalConstants
from .errors import ConvergenceError, DomainError, ValidityError
from .thermal import (
    ThermalEnvironment,
    lifshitz_asymptote,
    thermal_long_expansion,
    thermal_potential_exact,
    thermal_short_leading,
    total_potential,
)
from .vacuum import (
    AtomParams,
    nonretarded_asymptote,
    retarded_asymptote,
    vacuum_potential,
)

__all__ = [
    "CurvatureSign",
    "EquilibriumResult",
    "QuadraticFit",
    "RegimeErrorRow",
    "dominance_crossover",
    "find_thermal_equilibrium",
    "quadratic_fit",
    "regime_error_table",
]

_DEFAULT_CONSTANTS = PhysicalConstants()

EQUILIBRIUM_BRACKET = (0.3, 0.7)
FD_STEP_LAMBDA_T = 1e-4
ROOT_XTOL_LAMBDA_T = 1e-4

PotentialFn = Callable[[AtomParams, ThermalEnvironment, float], float]


class CurvatureSign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class EquilibriumResult:
    """Stable minimum of the thermal potential, in lambda_T units."""

    z_star_over_lambdaT: float
    second_derivative_sign: CurvatureSign
    bracket: tuple[float, float]
    iterations: int

    def __post_init__(self) -> None:
        lo, hi = self.bracket
        if not lo <= self.z_star_over_lambdaT <= hi:
            raise DomainError(
                f"z* = {self.z_star_over_lambdaT} outside bracket {self.bracket}"
            )
        if self.second_derivative_sign is not CurvatureSign.POSITIVE:
            raise DomainError("equilibrium must be stable (positive curvature)")


@dataclass(frozen=True)
class QuadraticFit:
    """Least-squares parabola a + b*u + c*u^2 in u = z/lambda_T."""

    window: tuple[float, float]
    coefficients: tuple[float, float, float]
    rms_residual_relative: float

    def __post_init__(self) -> None:
        if not self.rms_residual_relative < 0.02:
            raise DomainError(
                "fit residual exceeds 2% of the window value range: "
                f"{self.rms_residual_relative}"
            )


@dataclass(frozen=True)
class RegimeErrorRow:
    """Relative errors of each approximation at one grid point; NaN
    where an expansion refuses to evaluate outside its window."""

    z: float
    x0: float
    z_over_lambdaT: float
    err_non_retarded: float
    err_retarded: float
    err_short_leading: float
    err_long_expansion: float
    err_lifshitz: float


def _thermal_value_fn(constants: PhysicalConstants) -> PotentialFn:
    def fn(atom: AtomParams, env: ThermalEnvironment, z: float) -> float:
        return thermal_potential_exact(atom, env, z, constants)

    return fn


def _fd_derivative(
    fn: PotentialFn,
    atom: AtomParams,
    env: ThermalEnvironment,
    z: float,
    h: float,
) -> float:
    vm2 = fn(atom, env, z - 2.0 * h)
    vm1 = fn(atom, env, z - h)
    vp1 = fn(atom, env, z + h)
    vp2 = fn(atom, env, z + 2.0 * h)
    return (vm2 - 8.0 * vm1 + 8.0 * vp1 - vp2) / (12.0 * h)


def _fd_second_derivative(
    fn: PotentialFn,
    atom: AtomParams,
    env: ThermalEnvironment,
    z: float,
    h: float,
) -> float:
    vm2 = fn(atom, env, z - 2.0 * h)
    vm1 = fn(atom, env, z - h)
    v0 = fn(atom, env, z)
    vp1 = fn(atom, env, z + h)
    vp2 = fn(atom, env, z + 2.0 * h)
    return (-vm2 + 16.0 * vm1 - 30.0 * v0 + 16.0 * vp1 - vp2) / (12.0 * h * h)


def find_thermal_equilibrium(
    atom: AtomParams,
    env: ThermalEnvironment,
    constants: PhysicalConstants | None = None,
    bracket: tuple[float, float] = EQUILIBRIUM_BRACKET,
    potential_fn: PotentialFn | None = None,
) -> EquilibriumResult:
    """Locate the stable minimum of the thermal potential.

    bracket is in lambda_T units; potential_fn exists so the same
    search can run against the quadrature oracle (cross-validation).
    """
    cst = constants if constants is not None else _DEFAULT_CONSTANTS
    fn = potential_fn if potential_fn is not None else _thermal_value_fn(cst)
    lam = env.lambda_T
    h = FD_STEP_LAMBDA_T * lam
    lo, hi = bracket
    if not 0.0 < lo < hi:
        raise DomainError(f"bad bracket {bracket}")

    def deriv(zr: float) -> float:
        return _fd_derivative(fn, atom, env, zr * lam, h)

    d_lo = deriv(lo)
    d_hi = deriv(hi)
    if d_lo == 0.0:
        z_star = lo
        iterations = 0
    elif d_hi == 0.0:
        z_star = hi
        iterations = 0
    elif d_lo * d_hi > 0.0:
        raise ConvergenceError(
            f"derivative does not change sign on [{lo}, {hi}] lambda_T: "
            f"{d_lo:+.3e} vs {d_hi:+.3e}"
        )
    else:
        z_star, info = brentq(
            deriv, lo, hi, xtol=ROOT_XTOL_LAMBDA_T, full_output=True
        )
        if not info.converged:
            raise ConvergenceError(f"root search did not converge: {info.flag}")
        iterations = info.iterations

    curv = _fd_second_derivative(fn, atom, env, z_star * lam, h)
    sign = CurvatureSign.POSITIVE if curv > 0.0 else CurvatureSign.NEGATIVE
    return EquilibriumResult(
        z_star_over_lambdaT=float(z_star),
        second_derivative_sign=sign,
        bracket=(lo, hi),
        iterations=int(iterations),
    )


def dominance_crossover(
    atom: AtomParams,
    env: ThermalEnvironment,
    constants: PhysicalConstants | None = None,
    bracket: tuple[float, float] = (0.5, 2.0),
) -> float:
    """Distance (um) where |V_T| = |V0|, by the log-ratio root."""
    cst = constants if constants is not None else _DEFAULT_CONSTANTS
    lam = env.lambda_T

    def log_ratio(zr: float) -> float:
        z = zr * lam
        vt = thermal_potential_exact(atom, env, z, cst)
        v0 = vacuum_potential(atom, z, cst)
        if vt == 0.0:
            return -math.inf
        return math.log(abs(vt) / abs(v0))

    lo, hi = bracket
    g_lo = log_ratio(lo)
    g_hi = log_ratio(hi)
    if g_lo * g_hi > 0.0:
        raise ConvergenceError(
            f"|V_T|/|V0| does not cross 1 on [{lo}, {hi}] lambda_T"
        )
    zr_cross = brentq(log_ratio, lo, hi, xtol=ROOT_XTOL_LAMBDA_T)
    return float(zr_cross) * lam


def quadratic_fit(
    atom: AtomParams,
    env: ThermalEnvironment,
    window: tuple[float, float],
    constants: PhysicalConstants | None = None,
    n_points: int = 25,
    potential_fn: PotentialFn | None = None,
) -> QuadraticFit:
    """Unweighted least-squares parabola to V_T on a window (lambda_T
    units), the harmonic description of the thermal well."""
    cst = constants if constants is not None else _DEFAULT_CONSTANTS
    fn = potential_fn if potential_fn is not None else _thermal_value_fn(cst)
    z_lo, z_hi = window
    if not (0.0 < z_lo < z_hi < 1.5):
        raise DomainError(f"window must lie within (0, 1.5) lambda_T, got {window}")
    if n_points < 20:
        raise DomainError(f"need at least 20 sample points, got {n_points}")
    if z_hi - z_lo < 1e-3:
        raise DomainError(f"degenerate window {window}")

    lam = env.lambda_T
    u = np.linspace(z_lo, z_hi, n_points)
    v = np.array([fn(atom, env, float(zr) * lam) for zr in u])
    # polyfit returns highest degree first
    c2, c1, c0 = np.polyfit(u, v, 2)
    resid = v - (c0 + c1 * u + c2 * u * u)
    value_range = float(np.max(v) - np.min(v))
    if value_range <= 0.0:
        raise DomainError(f"degenerate (constant) samples on window {window}")
    rms_rel = float(np.sqrt(np.mean(resid**2))) / value_range
    return QuadraticFit(
        window=(float(z_lo), float(z_hi)),
        coefficients=(float(c0), float(c1), float(c2)),
        rms_residual_relative=rms_rel,
    )


def _relative_error(approx: float, exact: float) -> float:
    if exact == 0.0:
        return math.nan
    return abs(approx - exact) / abs(exact)


def regime_error_table(
    atom: AtomParams,
    env: ThermalEnvironment,
    grid: Sequence[float],
    constants: PhysicalConstants | None = None,
) -> list[RegimeErrorRow]:
    """Relative error of every approximation at each z (um, ascending):
    non-retarded and retarded against the exact vacuum potential,
    short-leading and long-expansion against the exact thermal
    potential, Lifshitz against the exact total."""
    cst = constants if constants is not None else _DEFAULT_CONSTANTS
    zs = [float(z) for z in grid]
    if any(b <= a for a, b in zip(zs, zs[1:])):
        raise DomainError("grid must be sorted strictly ascending")
    if any(not (math.isfinite(z) and z > 0.0) for z in zs):
        raise DomainError("grid points must be positive and finite")

    rows: list[RegimeErrorRow] = []
    for z in zs:
        v0 = vacuum_potential(atom, z, cst)
        vt = thermal_potential_exact(atom, env, z, cst)
        vtot = total_potential(atom, z, env, cst).total
        err_nr = _relative_error(nonretarded_asymptote(atom, z, cst), v0)
        err_ret = _relative_error(retarded_asymptote(atom, z, cst), v0)
        err_short = _relative_error(thermal_short_leading(atom, env, z, cst), vt)
        try:
            err_long = _relative_error(thermal_long_expansion(atom, env, z, cst), vt)
        except ValidityError:
            err_long = math.nan
        err_lif = _relative_error(lifshitz_asymptote(atom, env, z, cst), vtot)
        rows.append(
            RegimeErrorRow(
                z=z,
                x0=2.0 * atom.k0 * z,
                z_over_lambdaT=z / env.lambda_T,
                err_non_retarded=err_nr,
                err_retarded=err_ret,
                err_short_leading=err_short,
                err_long_expansion=err_long,
                err_lifshitz=err_lif,
            )
        )
    return rows
