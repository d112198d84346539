"""Command-line surface: point evaluation, figure-data emission,
verification runs, and analysis reports.

Subcommands: eval, curve, figure (alias of curve), verify, analyze.
Constants can be pinned through a flat key=value file named by the
CPWALL_CONFIG environment variable (keys hbar_c_ev_nm, k_b_ev_per_k,
default_theta), so emitted CSVs stay reproducible even if the default
constants table is ever updated.

Exit codes: 0 success, 1 verification failure, 2 invalid flags,
3 domain/validity errors, 4 convergence failures.

The scaled figure curves are dimensionless functions of (theta, z/x
abscissa) only, so curve emission fixes T = 300 K and alpha0 = 1 nm^3
internally; both cancel in the plotted ratios.  CSV cells carry 17
significant digits, comma separators, '.' decimal; output is
bit-identical across runs with identical flags (fixed grids, fixed
summation order, single-threaded assembly).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, TextIO

import numpy as np

from .analysis import (
    dominance_crossover,
    find_thermal_equilibrium,
    quadratic_fit,
    regime_error_table,
)
from .constants import PhysicalConstants, load_constants
from .errors import ConvergenceError, CpwallError, DomainError, ValidityError
from .oracle import (
    bose_integral,
    bose_integral_quadrature,
    f_integral_oracle,
    thermal_quadrature,
    thermal_quadrature_static,
    vacuum_split_quadrature,
)
from .specfun import auxiliary_f, auxiliary_g, bose_sum_p, kernel_g, zeta_even
from .thermal import (
    C_SHORT,
    CURV_SHORT,
    ThermalEnvironment,
    lifshitz_asymptote,
    recommended_approximation,
    thermal_potential_exact,
    thermal_short_expansion,
    thermal_short_leading,
    total_potential,
)
from .vacuum import (
    AtomParams,
    classify_regime,
    nonretarded_asymptote,
    retarded_asymptote,
    vacuum_potential,
)

__all__ = [
    "CriterionResult",
    "CurveSpec",
    "cmd_analyze",
    "cmd_curve",
    "cmd_eval",
    "cmd_verify",
    "main",
    "run_verification",
]

EV_TO_J = 1.602176634e-19
UM_TO_M = 1e-6

PAPER_FIT_WINDOWS = ((0.2, 0.45), (0.5, 0.75))

_FIGURE_RANGES = {1: (0.01, 50.0), 2: (0.1, 3.0), 3: (0.0, 1.5)}
_FIGURE_COLUMNS = {
    1: ("k0z", "exact_scaled", "nonretarded_scaled", "retarded_scaled"),
    2: ("z_over_lambdaT", "total_scaled", "lifshitz_scaled"),
    3: (
        "z_over_lambdaT",
        "thermal_scaled",
        "short_leading_scaled",
        "vacuum_retarded_scaled",
    ),
}


@dataclass(frozen=True)
class CurveSpec:
    """One figure-data request; per-figure defaults give the standard
    ranges (figure 3 runs over z/lambda_T in (0, 1.5), open at 0)."""

    figure_id: int
    theta: float
    points: int
    x_range: tuple[float, float]
    columns: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.figure_id not in (1, 2, 3):
            raise DomainError(f"figure_id must be 1, 2 or 3, got {self.figure_id}")
        if self.points < 2:
            raise DomainError(f"need at least 2 points, got {self.points}")
        lo, hi = self.x_range
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi and lo >= 0.0):
            raise DomainError(f"bad x_range {self.x_range}")
        if tuple(self.columns) != _FIGURE_COLUMNS[self.figure_id]:
            raise DomainError(
                f"figure {self.figure_id} emits columns "
                f"{_FIGURE_COLUMNS[self.figure_id]}, got {self.columns}"
            )

    @classmethod
    def for_figure(
        cls,
        figure_id: int,
        theta: float,
        points: int = 200,
        x_range: tuple[float, float] | None = None,
    ) -> "CurveSpec":
        if figure_id not in (1, 2, 3):
            raise DomainError(f"figure_id must be 1, 2 or 3, got {figure_id}")
        rng = x_range if x_range is not None else _FIGURE_RANGES[figure_id]
        return cls(
            figure_id=figure_id,
            theta=theta,
            points=points,
            x_range=(float(rng[0]), float(rng[1])),
            columns=_FIGURE_COLUMNS[figure_id],
        )


def _fmt(value: float) -> str:
    # 17 significant digits, enough to round-trip any double
    return f"{value:.16e}"


def _figure_grid(spec: CurveSpec) -> np.ndarray:
    lo, hi = spec.x_range
    if spec.figure_id == 1:
        return np.geomspace(lo, hi, spec.points)
    if lo == 0.0:
        # open-left interval: the integrands are singular or undefined
        # at contact, so a range starting at 0 excludes the endpoint
        steps = np.arange(1, spec.points + 1, dtype=float)
        return lo + (hi - lo) * steps / float(spec.points)
    return np.linspace(lo, hi, spec.points)


def _reference_pair(
    theta: float, cst: PhysicalConstants, alpha0_um3: float = 1.0e-9
) -> tuple[AtomParams, ThermalEnvironment]:
    """Room-temperature atom/environment pair at the requested theta."""
    lam = cst.thermal_wavelength_um(300.0)
    atom = AtomParams(k0=theta / lam, alpha0=alpha0_um3)
    env = ThermalEnvironment(temperature=300.0, lambda_T=lam, theta=theta)
    return atom, env


def cmd_curve(
    spec: CurveSpec,
    constants: PhysicalConstants | None = None,
    stream: TextIO | None = None,
) -> int:
    """Emit one figure's data as CSV with a header row."""
    cst = constants if constants is not None else load_constants()
    out = stream if stream is not None else sys.stdout
    grid = _figure_grid(spec)
    out.write(",".join(spec.columns) + "\n")

    if spec.figure_id == 1:
        atom = AtomParams(k0=1.0, alpha0=1.0)
        denom = cst.hbar_c_ev_um  # alpha0 = k0 = 1
        for x in grid:
            z = float(x)
            v = vacuum_potential(atom, z, cst)
            nr = nonretarded_asymptote(atom, z, cst)
            ret = retarded_asymptote(atom, z, cst)
            s = z**3 / denom
            out.write(
                ",".join((_fmt(z), _fmt(v * s), _fmt(nr * s), _fmt(ret * s))) + "\n"
            )
        return 0

    atom, env = _reference_pair(spec.theta, cst)
    lam = env.lambda_T
    scale = cst.hbar_c_ev_um * atom.alpha0 / lam**4

    if spec.figure_id == 2:
        for u in grid:
            zr = float(u)
            z = zr * lam
            tot = total_potential(atom, z, env, cst).total
            lif = lifshitz_asymptote(atom, env, z, cst)
            s = zr**3 / scale
            out.write(",".join((_fmt(zr), _fmt(tot * s), _fmt(lif * s))) + "\n")
        return 0

    for u in grid:
        zr = float(u)
        z = zr * lam
        vt = thermal_potential_exact(atom, env, z, cst)
        short = thermal_short_leading(atom, env, z, cst)
        ret = retarded_asymptote(atom, z, cst)
        out.write(
            ",".join(
                (_fmt(zr), _fmt(vt / scale), _fmt(short / scale), _fmt(ret / scale))
            )
            + "\n"
        )
    return 0


# ----------------------------------------------------------------------
# eval


def _eval_payload(args: argparse.Namespace, cst: PhysicalConstants) -> dict:
    alpha0_um3 = args.alpha0 * 1e-9  # nm^3 -> um^3
    temperature = args.temperature
    preset_label = None

    if temperature < 0.0 or not math.isfinite(temperature):
        raise DomainError(f"temperature must be >= 0 K, got {temperature}")
    if temperature > 0.0:
        lam = cst.thermal_wavelength_um(temperature)
    else:
        lam = None

    if args.k0 is not None:
        k0 = args.k0
    elif args.lambda0 is not None:
        if args.lambda0 <= 0.0:
            raise DomainError(f"--lambda0 must be positive, got {args.lambda0}")
        k0 = 2.0 * math.pi / args.lambda0
    else:
        if lam is None:
            raise _FlagError(
                "with --temperature 0 an explicit --k0 or --lambda0 is required"
            )
        k0 = cst.default_theta / lam
        if cst.default_theta == 100.0:
            preset_label = "optical transition at room temperature"

    atom = AtomParams(k0=k0, alpha0=alpha0_um3)
    env = (
        ThermalEnvironment(temperature=temperature, lambda_T=lam, theta=k0 * lam)
        if lam is not None
        else None
    )
    breakdown = total_potential(atom, args.z, env, cst)

    x0 = 2.0 * atom.k0 * args.z
    tag = classify_regime(x0).value
    if env is not None:
        recommended = recommended_approximation(args.z / env.lambda_T)
    else:
        recommended = {
            "non_retarded": "nonretarded_asymptote",
            "crossover": "exact_closed_form",
            "retarded": "retarded_asymptote",
        }[tag]

    si = args.units == "si"
    e_scale = EV_TO_J if si else 1.0
    l_scale = UM_TO_M if si else 1.0
    payload = {
        "inputs": {
            "k0": atom.k0 / l_scale if si else atom.k0,  # 1/m in SI
            "lambda0": atom.lambda0 * l_scale,
            "alpha0": alpha0_um3 * l_scale**3,
            "z": args.z * l_scale,
            "temperature_K": temperature,
        },
        "units": {
            "energy": "J" if si else "eV",
            "length": "m" if si else "um",
        },
        "derived": {
            "lambda_T": (lam * l_scale) if lam is not None else None,
            "theta": (k0 * lam) if lam is not None else None,
            "x0": x0,
            "z_over_lambda0": args.z / atom.lambda0,
            "z_over_lambda_T": (args.z / lam) if lam is not None else None,
            "regime_tag": tag,
        },
        "potential": {
            "vacuum": breakdown.vacuum * e_scale,
            "thermal": breakdown.thermal * e_scale,
            "total": breakdown.total * e_scale,
        },
        "recommended_approximation": recommended,
        "preset_label": preset_label,
        "notes": breakdown.notes,
    }
    return payload


def _flatten(payload: dict, prefix: str = "") -> list[tuple[str, object]]:
    items: list[tuple[str, object]] = []
    for key, val in payload.items():
        name = f"{prefix}{key}"
        if isinstance(val, dict):
            items.extend(_flatten(val, prefix=f"{name}."))
        else:
            items.append((name, val))
    return items


def _print_eval(payload: dict, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        json.dump(payload, out, indent=2)
        out.write("\n")
        return
    if fmt == "csv":
        cells = _flatten(payload)
        out.write(",".join(name for name, _ in cells) + "\n")
        row = []
        for _, val in cells:
            if isinstance(val, float):
                row.append(_fmt(val))
            elif val is None:
                row.append("")
            else:
                row.append(str(val))
        out.write(",".join(row) + "\n")
        return
    inp = payload["inputs"]
    der = payload["derived"]
    pot = payload["potential"]
    u_e = payload["units"]["energy"]
    u_l = payload["units"]["length"]
    if payload["preset_label"]:
        out.write(f"preset: {payload['preset_label']}\n")
    out.write(f"k0 = {inp['k0']:.9g} 1/{u_l} (lambda0 = {inp['lambda0']:.9g} {u_l})\n")
    out.write(f"alpha0 = {inp['alpha0']:.9g} {u_l}^3\n")
    if der["lambda_T"] is not None:
        out.write(
            f"temperature = {inp['temperature_K']:.9g} K, "
            f"lambda_T = {der['lambda_T']:.9g} {u_l}, theta = {der['theta']:.6g}\n"
        )
    else:
        out.write("temperature = 0 K (vacuum only)\n")
    out.write(
        f"z = {inp['z']:.9g} {u_l} (x0 = {der['x0']:.6g}, "
        f"regime = {der['regime_tag']})\n"
    )
    out.write(f"vacuum  = {pot['vacuum']:+.12e} {u_e}\n")
    out.write(f"thermal = {pot['thermal']:+.12e} {u_e}\n")
    out.write(f"total   = {pot['total']:+.12e} {u_e}\n")
    out.write(f"recommended approximation: {payload['recommended_approximation']}\n")
    out.write(f"notes: {payload['notes']}\n")


def cmd_eval(
    args: argparse.Namespace,
    constants: PhysicalConstants | None = None,
    stream: TextIO | None = None,
) -> int:
    cst = constants if constants is not None else load_constants()
    out = stream if stream is not None else sys.stdout
    payload = _eval_payload(args, cst)
    _print_eval(payload, args.fmt, out)
    return 0


# ----------------------------------------------------------------------
# analyze


def cmd_analyze(
    args: argparse.Namespace,
    constants: PhysicalConstants | None = None,
    stream: TextIO | None = None,
) -> int:
    cst = constants if constants is not None else load_constants()
    out = stream if stream is not None else sys.stdout
    theta = args.theta if args.theta is not None else cst.default_theta
    atom, env = _reference_pair(theta, cst)
    lam = env.lambda_T

    eq = find_thermal_equilibrium(atom, env, cst)
    out.write(
        f"equilibrium: z*/lambda_T = {eq.z_star_over_lambdaT:.6f} "
        f"({eq.second_derivative_sign.value} curvature), "
        f"bracket [{eq.bracket[0]:g}, {eq.bracket[1]:g}], "
        f"{eq.iterations} iterations\n"
    )
    zc = dominance_crossover(atom, env, cst)
    out.write(
        f"dominance crossover |V_T| = |V0|: z = {zc:.6f} um "
        f"= {zc / lam:.5f} lambda_T\n"
    )

    windows = [tuple(args.fit_window)] if args.fit_window else list(PAPER_FIT_WINDOWS)
    for win in windows:
        # reject malformed user windows up front: the try below is only
        # allowed to absorb the fit-quality bound, not input errors
        if not (0.0 < win[0] < win[1] < 1.5 and win[1] - win[0] >= 1e-3):
            raise DomainError(
                f"fit window must satisfy 0 < lo < hi < 1.5 lambda_T, got {win}"
            )
        try:
            fit = quadratic_fit(atom, env, win, cst)
        except DomainError as exc:
            out.write(f"fit window ({win[0]:g}, {win[1]:g}) lambda_T: rejected: {exc}\n")
            continue
        a, b, c = fit.coefficients
        out.write(
            f"fit window ({win[0]:g}, {win[1]:g}) lambda_T: "
            f"V_T ~ a + b u + c u^2 with a = {a:.6e}, b = {b:.6e}, "
            f"c = {c:.6e}, rms residual {100.0 * fit.rms_residual_relative:.3f}% "
            f"of range\n"
        )

    grid_zr = (0.02, 0.05, 0.1, 0.2, 0.5, 0.75, 1.0, 1.5, 2.0)
    rows = regime_error_table(atom, env, [zr * lam for zr in grid_zr], cst)
    out.write(
        "regime error table (relative errors vs exact):\n"
        "z_over_lambdaT,x0,err_non_retarded,err_retarded,"
        "err_short_leading,err_long_expansion,err_lifshitz\n"
    )
    for row in rows:
        out.write(
            f"{row.z_over_lambdaT:.4f},{row.x0:.6g},"
            f"{row.err_non_retarded:.3e},{row.err_retarded:.3e},"
            f"{row.err_short_leading:.3e},{row.err_long_expansion:.3e},"
            f"{row.err_lifshitz:.3e}\n"
        )
    return 0


# ----------------------------------------------------------------------
# verify: the acceptance-criteria harness


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    measured: str
    tolerance: str
    note: str = ""


def _verify_setup(cst: PhysicalConstants):
    lam = cst.thermal_wavelength_um(300.0)
    atom, env = _reference_pair(100.0, cst, alpha0_um3=3.0e-9)
    return atom, env, lam


def _crit_vacuum_oracle(quick: bool, cst: PhysicalConstants) -> CriterionResult:
    n = 10 if quick else 50
    atom = AtomParams(k0=1.0, alpha0=1.0)
    worst = 0.0
    for x0 in np.geomspace(0.05, 100.0, n):
        z = float(x0) / 2.0
        rep = vacuum_split_quadrature(atom, z, "total", cst)
        ref = vacuum_potential(atom, z, cst)
        worst = max(worst, abs(rep.value - ref) / abs(ref))
    return CriterionResult(
        1,
        "vacuum closed form vs quadrature oracle",
        worst < 1e-8,
        f"worst rel {worst:.3e} on {n} points x0 in [0.05, 100]",
        "< 1e-8",
    )


def _crit_thermal_oracle(quick: bool, cst: PhysicalConstants) -> CriterionResult:
    thetas = (100.0,) if quick else (30.0, 100.0, 300.0)
    n = 8 if quick else 40
    worst = 0.0
    for theta in thetas:
        atom, env = _reference_pair(theta, cst, alpha0_um3=3.0e-9)
        for zr in np.geomspace(0.01, 2.0, n):
            z = float(zr) * env.lambda_T
            rep = thermal_quadrature(atom, env, z, cst)
            ref = thermal_potential_exact(atom, env, z, cst)
            worst = max(worst, abs(rep.value - ref) / abs(ref))
    return CriterionResult(
        2,
        "thermal exact series vs quadrature oracle",
        worst < 1e-6,
        f"worst rel {worst:.3e} on {n} points x theta in {thetas}",
        "< 1e-6",
    )


def _crit_nonretarded(quick: bool, cst: PhysicalConstants) -> CriterionResult:
    atom = AtomParams(k0=1.0, alpha0=1.0)
    worst = 0.0
    for x0 in np.geomspace(0.01, 0.0999, 12 if quick else 25):
        z = float(x0) / 2.0
        exact = vacuum_potential(atom, z, cst)
        approx = nonretarded_asymptote(atom, z, cst)
        worst = max(worst, abs(approx - exact) / abs(exact))
    return CriterionResult(
        3,
        "non-retarded limit within 2% for x0 < 0.1",
        worst < 0.02,
        f"worst rel {worst:.4%} (at the x0 -> 0.1 edge)",
        "< 2%",
        note=(
            "the 1/z^3 asymptote is 3.26% off at x0 = 0.1; the 2% level "
            "is only reached for x0 < 0.062"
        ),
    )


def _crit_retarded(quick: bool, cst: PhysicalConstants) -> CriterionResult:
    atom = AtomParams(k0=1.0, alpha0=1.0)
    lam0 = atom.lambda0
    worst = 0.0
    for z in np.geomspace(1.3 * lam0, 20.0 * lam0, 12 if quick else 25):
        exact = vacuum_potential(atom, float(z), cst)
        approx = retarded_asymptote(atom, float(z), cst)
        worst = max(worst, abs(approx - exact) / abs(exact))
    return CriterionResult(
        4,
        "retarded limit within 1% for z > 1.3 lambda0",
        worst <= 0.01,
        f"worst rel {worst:.4%} (at the z = 1.3 lambda0 edge)",
        "<= 1%",
        note=(
            "the 1/z^4 asymptote is 2.35% off at z = 1.3 lambda0; the 1% "
            "level is only reached for z > 2.03 lambda0"
        ),
    )


def _crit_lifshitz(quick: bool, cst: PhysicalConstants) -> CriterionResult:
    atom, env, lam = _verify_setup(cst)
    worst = 0.0
    for zr in np.linspace(1.0, 5.0, 9 if quick else 17):
        z = float(zr) * lam
        tot = total_potential(atom, z, env, cst).total
        lif = lifshitz_asymptote(atom, env, z, cst)
        worst = max(worst, abs(lif - tot) / abs(tot))
    return CriterionResult(
        5,
        "Lifshitz limit within 1% for z >= lambda_T",
        worst < 0.01,
        f"worst rel {worst:.3e} on z/lambda_T in [1, 5]",
        "< 1%",
    )


def _round_sig(value: float, sig: int) -> float:
    if value == 0.0:
        return 0.0
    exp = math.floor(math.log10(abs(value)))
    return round(value, sig - 1 - exp)


def _crit_thermal_constant(quick: bool, cst: PhysicalConstants) -> CriterionResult:
    atom, env, lam = _verify_setup(cst)
    scale = cst.hbar_c_ev_um * atom.alpha0 / lam**4
    z = 1e-3 * lam
    c_series = thermal_potential_exact(atom, env, z, cst) / scale
    c_oracle = thermal_quadrature(atom, env, z, cst).value / scale
    mutual = abs(c_series - c_oracle) / abs(c_series)
    strict = C_SHORT  # 2 pi^3 / 45 = 1.3781...
    two_sig = _round_sig(c_series, 2) == _round_sig(strict, 2)
    passed = mutual < 1e-3 and two_sig
    return CriterionResult(
        6,
        "thermal constant C(T) = 1.38 hbar c alpha0 / lambda_T^4",
        passed,
        f"series {c_series:.6f}, oracle {c_oracle:.6f}, strict limit "
        f"{strict:.6f}, mutual rel {mutual:.2e}",
        "mutual < 0.1%, 2 significant figures vs 1.3781",
        note=(
            "the measured constant at theta = 100 sits 0.19% above the "
            "strict z -> 0 limit (finite-theta offset ~ 19/theta^2)"
        ),
    )


def _crit_short_law(quick: bool, cst: PhysicalConstants) -> CriterionResult:
    atom, env, lam = _verify_setup(cst)
    # operational constant: series at z = 1e-4 lambda_T (z^2 bias 4e-4%)
    c_op = thermal_potential_exact(atom, env, 1e-4 * lam, cst)
    curvature = CURV_SHORT * cst.hbar_c_ev_um * atom.alpha0 / lam**6
    worst = 0.0
    for zr in (0.005, 0.01, 0.02, 0.035, 0.05):
        z = zr * lam
        measured = thermal_potential_exact(atom, env, z, cst) - c_op
        predicted = -curvature * z * z
        worst = max(worst, abs(measured - predicted) / abs(predicted))
    # independent coefficient derivation: x^2 Taylor coefficient of the
    # kernel from exact rational arithmetic, times the n = 5 Bose moment
    c2 = (
        -Fraction(1, math.factorial(3))
        + 2 * Fraction(1, math.factorial(4))
        - 2 * Fraction(1, math.factorial(5))
    )
    assert c2 == Fraction(-1, 10)
    coeff = (8.0 / math.pi) * float(-c2) * bose_integral(5)
    coeff_rel = abs(coeff - CURV_SHORT) / CURV_SHORT
    kernel_tie = abs(kernel_g(1e-3) - (1.0 / 3.0 - 1e-6 / 10.0))
    passed = worst < 0.05 and coeff_rel < 1e-13 and kernel_tie < 1e-14
    return CriterionResult(
        7,
        "short-distance law -(2 pi)^5/315 z^2/lambda_T^6",
        passed,
        f"worst rel {worst:.4%} for z <= 0.05 lambda_T; coefficient "
        f"re-derivation rel {coeff_rel:.1e}",
        "< 5%; coefficient to machine precision",
    )


def _crit_equilibrium(quick: bool, cst: PhysicalConstants) -> CriterionResult:
    atom, env, _ = _verify_setup(cst)
    eq = find_thermal_equilibrium(atom, env, cst)
    ok = abs(eq.z_star_over_lambdaT - 0.52) < 0.02
    return CriterionResult(
        8,
        "thermal equilibrium at 0.52 +- 0.02 lambda_T, stable",
        ok and eq.second_derivative_sign.value == "positive",
        f"z*/lambda_T = {eq.z_star_over_lambdaT:.6f}, curvature "
        f"{eq.second_derivative_sign.value}",
        "0.52 +- 0.02, positive curvature",
    )


def _crit_attractive(quick: bool, cst: PhysicalConstants) -> CriterionResult:
    atom, env, lam = _verify_setup(cst)
    n = 50 if quick else 200
    bad = 0
    for zr in np.geomspace(1e-3, 10.0, n):
        z = float(zr) * lam
        h = 1e-4 * z
        vp = total_potential(atom, z + h, env, cst).total
        vm = total_potential(atom, z - h, env, cst).total
        if (vp - vm) / (2.0 * h) <= 0.0:
            bad += 1
    return CriterionResult(
        9,
        "force attractive: d(total)/dz > 0 everywhere",
        bad == 0,
        f"{bad} non-positive slopes on {n} points z/lambda_T in [1e-3, 10]",
        "0 violations",
    )


def _crit_thermal_smallness(quick: bool, cst: PhysicalConstants) -> CriterionResult:
    atom, env, lam = _verify_setup(cst)
    z = 0.1 * lam
    ratio = abs(thermal_potential_exact(atom, env, z, cst)) / abs(
        vacuum_potential(atom, z, cst)
    )
    return CriterionResult(
        10,
        "thermal smallness |V_T|/|V0| < 1e-4 at 0.1 lambda_T",
        ratio < 1e-4,
        f"ratio {ratio:.3e}",
        "< 1e-4",
        note=(
            "|V_T| at 0.1 lambda_T is still dominated by the constant "
            "C(T) while |V0| falls as 1/z^4, so the ratio scales as "
            "11.6 (z/lambda_T)^4 ~ 1e-3 there, one order above the bound"
        ),
    )


def _crit_lambda_anchor(quick: bool, cst: PhysicalConstants) -> CriterionResult:
    lam = cst.thermal_wavelength_um(300.0)
    return CriterionResult(
        11,
        "lambda_T(300 K) in [7.55, 7.70] um",
        7.55 <= lam <= 7.70,
        f"lambda_T = {lam:.6f} um",
        "[7.55, 7.70] um",
    )


def _crit_identities(quick: bool, cst: PhysicalConstants) -> CriterionResult:
    checks: list[tuple[str, float, float]] = []

    # P(eta) closed form vs truncated sum; the tail is the midpoint-rule
    # integral from M + 1/2 plus its f'/24 Euler-Maclaurin correction
    for eta in (0.5, 5.0):
        m_vals = np.arange(1, 1001, dtype=float)
        partial = float(np.sum(1.0 / ((m_vals * eta) ** 2 + 1.0)))
        m_half = 1000.5
        fp = -2.0 * m_half * eta**2 / ((m_half * eta) ** 2 + 1.0) ** 2
        tail = (math.pi / 2.0 - math.atan(m_half * eta)) / eta + fp / 24.0
        checks.append((f"P({eta})", abs(partial + tail - bose_sum_p(eta)), 1e-10))

    # G vs finite difference of F (Richardson on central differences)
    for x in (0.5, 2.0, 10.0):
        h = 1e-4 * max(1.0, x)
        d1 = (auxiliary_f(x + h) - auxiliary_f(x - h)) / (2.0 * h)
        d2 = (auxiliary_f(x + h / 2) - auxiliary_f(x - h / 2)) / h
        fd = (4.0 * d2 - d1) / 3.0
        checks.append((f"G({x})", abs(fd - auxiliary_g(x)), 1e-7))

    # F vs its integral representation
    rep = f_integral_oracle(5.0)
    checks.append(("F(5) integral", abs(rep.value - auxiliary_f(5.0)), 1e-10))

    checks.append(("zeta(2)", abs(zeta_even(1) - math.pi**2 / 6.0), 1e-15))
    checks.append(("zeta(4)", abs(zeta_even(2) - math.pi**4 / 90.0), 1e-15))
    bose3 = bose_integral_quadrature(3)
    checks.append(("bose n=3 quadrature", abs(bose3.value - math.pi**4 / 15.0), 1e-10))
    checks.append(("bose n=3 closed", abs(bose_integral(3) - math.pi**4 / 15.0), 1e-12))

    failed = [name for name, err, tol in checks if not err < tol]
    worst = max(err / tol for _, err, tol in checks)
    return CriterionResult(
        12,
        "special-function identity suite",
        not failed,
        f"{len(checks)} identities, worst error/tolerance {worst:.2e}"
        + (f"; failed: {failed}" if failed else ""),
        "all identities within stated tolerances",
    )


def _crit_dispersion(quick: bool, cst: PhysicalConstants) -> CriterionResult:
    atom, env, lam = _verify_setup(cst)
    worst = 0.0
    worst_zr = 0.0
    # the grid is kept at full resolution even under --quick: the metric
    # degeneration near the V_T zero crossing sits between coarse-grid
    # points and the verdict must not depend on the mode
    for zr in np.geomspace(0.05, 2.0, 25):
        z = float(zr) * lam
        full = thermal_quadrature(atom, env, z, cst).value
        static = thermal_quadrature_static(atom, env, z, cst).value
        rel = abs(static - full) / abs(full)
        if rel > worst:
            worst, worst_zr = rel, float(zr)
    return CriterionResult(
        13,
        "dispersion insensitivity: static alpha within 1%",
        worst < 0.01,
        f"worst rel {worst:.4%} at z = {worst_zr:.3f} lambda_T",
        "< 1%",
        note=(
            "away from the V_T zero crossing (z ~ 0.307 lambda_T) the "
            "difference stays below 0.3%; at the crossing both results "
            "pass through zero at slightly different abscissae and the "
            "per-point relative metric degenerates"
        ),
    )


def _crit_ht_report(quick: bool, cst: PhysicalConstants) -> CriterionResult:
    atom, env, lam = _verify_setup(cst)
    rows = []
    for zr in (0.01, 0.02, 0.03, 0.04, 0.049):
        z = zr * lam
        exact = thermal_potential_exact(atom, env, z, cst)
        printed = thermal_short_expansion(atom, env, z, cst)
        rows.append((zr, abs(printed - exact) / abs(exact)))
    measured = "; ".join(f"z/lambda_T={zr}: rel {rel:.2e}" for zr, rel in rows)
    return CriterionResult(
        14,
        "H_T short-expansion discrepancy report",
        True,
        measured,
        "report produced and flagged",
        note=(
            "open question: the as-printed short-distance H_T expansion "
            "composes consistently with the exact series (relative "
            "deviation < 2e-9 for z < 0.05 lambda_T, superasymptotic in "
            "theta); the suspected prefactor inconsistency does not "
            "materialize at theta >= 30, so the printed form is kept"
        ),
    )


_CRITERIA: Sequence[Callable[[bool, PhysicalConstants], CriterionResult]] = (
    _crit_vacuum_oracle,
    _crit_thermal_oracle,
    _crit_nonretarded,
    _crit_retarded,
    _crit_lifshitz,
    _crit_thermal_constant,
    _crit_short_law,
    _crit_equilibrium,
    _crit_attractive,
    _crit_thermal_smallness,
    _crit_lambda_anchor,
    _crit_identities,
    _crit_dispersion,
    _crit_ht_report,
)


def run_verification(
    quick: bool = False, constants: PhysicalConstants | None = None
) -> list[CriterionResult]:
    """Run every acceptance criterion; returns one result per criterion
    in order.  Shared by cmd_verify and the acceptance test suite."""
    cst = constants if constants is not None else load_constants()
    return [fn(quick, cst) for fn in _CRITERIA]


def cmd_verify(
    args: argparse.Namespace,
    constants: PhysicalConstants | None = None,
    stream: TextIO | None = None,
) -> int:
    cst = constants if constants is not None else load_constants()
    out = stream if stream is not None else sys.stdout
    t0 = time.monotonic()
    results = run_verification(quick=args.quick, constants=cst)
    elapsed = time.monotonic() - t0

    if args.fmt == "json":
        payload = {
            "quick": args.quick,
            "elapsed_s": elapsed,
            "all_passed": all(r.passed for r in results),
            "criteria": [
                {
                    "number": r.number,
                    "name": r.name,
                    "passed": r.passed,
                    "measured": r.measured,
                    "tolerance": r.tolerance,
                    "note": r.note,
                }
                for r in results
            ],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            out.write(
                f"criterion {r.number:02d} [{status}] {r.name}: "
                f"{r.measured} (tolerance {r.tolerance})\n"
            )
            if r.note:
                out.write(f"             note: {r.note}\n")
        n_fail = sum(not r.passed for r in results)
        out.write(
            f"{len(results) - n_fail}/{len(results)} criteria passed "
            f"in {elapsed:.1f} s"
            + (f"; {n_fail} documented failures" if n_fail else "")
            + "\n"
        )
    return 0 if all(r.passed for r in results) else 1


# ----------------------------------------------------------------------
# argument parsing


class _FlagError(Exception):
    """Invalid flag combination detected after argparse."""


def _add_curve_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--figure", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--points", type=int, default=200)
    p.add_argument(
        "--x-range", type=float, nargs=2, default=None, metavar=("LO", "HI")
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpwall",
        description=(
            "Casimir-Polder potential of a two-level atom near a perfectly "
            "conducting wall, in vacuum and at finite temperature"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate the potential at one point")
    group = p_eval.add_mutually_exclusive_group()
    group.add_argument("--k0", type=float, help="transition wavenumber (1/um)")
    group.add_argument("--lambda0", type=float, help="transition wavelength (um)")
    p_eval.add_argument(
        "--alpha0", type=float, default=1.0, help="static polarizability (nm^3)"
    )
    p_eval.add_argument("--z", type=float, required=True, help="wall distance (um)")
    p_eval.add_argument("--temperature", type=float, default=300.0, help="kelvin")
    p_eval.add_argument("--units", choices=("si", "natural"), default="natural")
    p_eval.add_argument(
        "--format", dest="fmt", choices=("json", "csv", "text"), default="text"
    )
    p_eval.set_defaults(handler="eval")

    for name in ("curve", "figure"):
        p_curve = sub.add_parser(
            name, help="emit figure data as CSV" + (" (alias of curve)" if name == "figure" else "")
        )
        _add_curve_args(p_curve)
        p_curve.set_defaults(handler="curve")

    p_verify = sub.add_parser("verify", help="run the acceptance criteria")
    p_verify.add_argument("--quick", action="store_true", help="reduced grids")
    p_verify.add_argument(
        "--format", dest="fmt", choices=("json", "text"), default="text"
    )
    p_verify.set_defaults(handler="verify")

    p_an = sub.add_parser("analyze", help="equilibrium, crossover, fits, regimes")
    p_an.add_argument("--theta", type=float, default=None)
    p_an.add_argument(
        "--fit-window", type=float, nargs=2, default=None, metavar=("LO", "HI")
    )
    p_an.set_defaults(handler="analyze")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        constants = load_constants()
        if args.handler == "eval":
            return cmd_eval(args, constants)
        if args.handler == "curve":
            theta = args.theta if args.theta is not None else constants.default_theta
            spec = CurveSpec.for_figure(
                args.figure,
                theta=theta,
                points=args.points,
                x_range=tuple(args.x_range) if args.x_range else None,
            )
            return cmd_curve(spec, constants)
        if args.handler == "verify":
            return cmd_verify(args, constants)
        if args.handler == "analyze":
            return cmd_analyze(args, constants)
        raise AssertionError(f"unhandled command {args.handler}")
    except _FlagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ValidityError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    except ConvergenceError as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return 4
    except CpwallError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
