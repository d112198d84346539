"""Thermal correction to the atom-wall interaction.

The thermal part of the shift comes entirely from atomic polarization by
thermal photons,

    V_T(z) = (hbar c / 8 pi) (alpha0 k0 / z^3) W(eta, x0),
    W = (x0^2 - 2) K0 + 2 K1 - 2 x0 P(eta),

with eta = lambda_T / 2z, x0 = 2 k0 z, and theta = eta x0 = k0 lambda_T
the single dimensionless temperature parameter (theta >= 10 is required
for the two-level description; we refuse smaller values rather than
extrapolate).  K0 and K1 are imaginary/real parts of two series of
scaled exponential integrals,

    J0+ = sum_m E1t(m theta - i x0),
    J0- = i pi e^{i x0} / (e^theta - 1) + sum_m E1t(-(m theta - i x0)),
    K0  = Im(J0+ - J0-),    K1 = -x0 Re(J0+ + J0-),

where E1t is ``specfun.scaled_e1``.  The individual sums diverge
logarithmically in their real parts; only the displayed combinations
converge.  We therefore sum a finite head of m-terms and close both
series with asymptotic tails built from Hurwitz zeta / digamma values
of argument M + 1 - i/eta.  The tails are folded half-and-half into the
reported J0+ / J0- so that the K0 and K1 compositions above hold
exactly, float by float, on the stored fields; the split of the tail
between the two J's is a reporting convention (only the combinations
are physical), and the pole term belongs to J0-.

Short- and long-distance expansions (H_T with its double zeta sum, L_T
with its polygamma sums) and the Lifshitz total asymptote
-(k_B T) alpha0 / 4 z^3 complete the module.  All series are summed in
a fixed order so repeated runs are bit-identical.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .constants import PhysicalConstants
from .errors import ConvergenceError, DomainError, ValidityError
from .specfun import (
    ComplexValue,
    _digamma,
    _hurwitz,
    _polygamma_scaled,
    bose_sum_p,
    q_series,
    scaled_e1,
    zeta_even,
)
from .vacuum import AtomParams, classify_regime, vacuum_potential

__all__ = [
    "PotentialBreakdown",
    "ThermalEnvironment",
    "ThermalSeriesTerms",
    "THETA_MIN",
    "j0_series",
    "lifshitz_asymptote",
    "recommended_approximation",
    "thermal_potential_exact",
    "thermal_series_terms",
    "thermal_long_expansion",
    "thermal_short_expansion",
    "thermal_short_leading",
    "total_potential",
]

_DEFAULT_CONSTANTS = PhysicalConstants()

THETA_MIN = 10.0

# Leading short-distance coefficients: C(T) = (2 pi^3 / 45) hbar c
# alpha0 / lambda_T^4 and curvature (2 pi)^5 / 315.
C_SHORT = 2.0 * math.pi**3 / 45.0
CURV_SHORT = (2.0 * math.pi) ** 5 / 315.0

# Head length: m-terms up to m*theta >= this are summed explicitly,
# the rest goes into the zeta/digamma tails.
_HEAD_SCALE = 240.0
_TERM_CAP = 100_000


@dataclass(frozen=True)
class ThermalEnvironment:
    """Thermal state of the field: temperature (K), thermal wavelength
    lambda_T = hbar c / k_B T (um), and theta = k0 lambda_T.

    Build with :meth:`for_atom` so lambda_T and theta are consistent
    with the constants table in use; direct construction validates only
    positivity and the theta >= 10 applicability gate.
    """

    temperature: float
    lambda_T: float
    theta: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.temperature) and self.temperature > 0.0):
            raise DomainError(
                f"temperature must be positive and finite, got {self.temperature}"
            )
        if not (math.isfinite(self.lambda_T) and self.lambda_T > 0.0):
            raise DomainError(
                f"lambda_T must be positive and finite, got {self.lambda_T}"
            )
        if not (math.isfinite(self.theta) and self.theta >= THETA_MIN):
            raise DomainError(
                f"theta = k0 lambda_T must be >= {THETA_MIN} for the two-level "
                f"description, got {self.theta}"
            )

    @classmethod
    def for_atom(
        cls,
        atom: AtomParams,
        temperature: float,
        constants: PhysicalConstants | None = None,
    ) -> "ThermalEnvironment":
        cst = constants if constants is not None else _DEFAULT_CONSTANTS
        lam = cst.thermal_wavelength_um(temperature)
        return cls(temperature=temperature, lambda_T=lam, theta=atom.k0 * lam)


@dataclass(frozen=True)
class ThermalSeriesTerms:
    """Assembled pieces of the exact thermal series at one (eta, x0).

    k0_val is stored exactly as Im(j0_plus - j0_minus) and k1_val as
    -x0 Re(j0_plus + j0_minus); tail_bound bounds the truncation error
    of the W bracket (the asymptotic tails make it superasymptotically
    small for theta >= 10).
    """

    j0_plus: ComplexValue
    j0_minus: ComplexValue
    k0_val: float
    k1_val: float
    p_val: float
    terms_used: int
    tail_bound: float

    def __post_init__(self) -> None:
        for name in ("k0_val", "k1_val", "p_val", "tail_bound"):
            if not math.isfinite(getattr(self, name)):
                raise ConvergenceError(f"non-finite {name} in ThermalSeriesTerms")
        if self.tail_bound < 0.0:
            raise DomainError(f"tail_bound must be >= 0, got {self.tail_bound}")
        if self.k0_val != self.j0_plus.im - self.j0_minus.im:
            raise DomainError("k0_val is not the exact Im(j0_plus - j0_minus)")


@dataclass(frozen=True)
class PotentialBreakdown:
    """Total interaction split into vacuum and thermal parts (eV); the
    total is the exact float sum of the parts."""

    vacuum: float
    thermal: float
    total: float
    notes: str

    def __post_init__(self) -> None:
        if self.total != self.vacuum + self.thermal:
            raise DomainError("PotentialBreakdown total must equal vacuum + thermal")


def _check_pair(eta: float, x0: float) -> float:
    """Validate (eta, x0) and return theta = eta * x0."""
    if not (math.isfinite(eta) and eta > 0.0):
        raise DomainError(f"eta must be positive and finite, got {eta}")
    if not (math.isfinite(x0) and x0 > 0.0):
        raise DomainError(f"x0 must be positive and finite, got {x0}")
    theta = eta * x0
    if theta < THETA_MIN * (1.0 - 1e-12):
        raise DomainError(
            f"theta = eta*x0 = {theta} below the applicability gate {THETA_MIN}"
        )
    return theta


def thermal_series_terms(eta: float, x0: float) -> ThermalSeriesTerms:
    """Exact-series building blocks of W at one geometry point.

    Sums scaled exponential integrals for m theta up to ~240 and closes
    the remainder with digamma / Hurwitz-zeta asymptotic tails of the
    paired combinations (the pairing decays like 1/m^2; the unpaired
    real parts diverge and never appear alone).
    """
    theta = _check_pair(eta, x0)
    n_head = max(4, int(math.ceil(_HEAD_SCALE / theta)))
    if n_head > _TERM_CAP:
        raise ConvergenceError(
            f"thermal series needs more than {_TERM_CAP} terms at theta={theta}"
        )

    hp_re = hp_im = hm_re = hm_im = 0.0
    for m in range(1, n_head + 1):
        w = complex(m * theta, -x0)
        ep = scaled_e1(w)
        em = scaled_e1(-w)
        hp_re += ep.re
        hp_im += ep.im
        hm_re += em.re
        hm_im += em.im

    # Tails over m > n_head from the paired large-w expansions:
    #   E1t(w) - E1t(-w) ~ 2/w + 4/w^3 + 48/w^5 + 1440/w^7
    #   E1t(w) + E1t(-w) ~ -2/w^2 - 12/w^4 - 240/w^6 - 10080/w^8
    # with sum_{m>M} w_m^{-s} = zeta(s, M+1-i/eta)/theta^s and the s=1
    # imaginary part via the digamma function.
    zc = complex(n_head + 1, -1.0 / eta)
    psi = _digamma(zc)
    z3 = _hurwitz(3, zc)
    z5 = _hurwitz(5, zc)
    z7 = _hurwitz(7, zc)
    imtail = (
        -2.0 * psi.imag / theta
        + 4.0 * z3.imag / theta**3
        + 48.0 * z5.imag / theta**5
        + 1440.0 * z7.imag / theta**7
    )
    z2 = _hurwitz(2, zc)
    z4 = _hurwitz(4, zc)
    z6 = _hurwitz(6, zc)
    z8 = _hurwitz(8, zc)
    retail = (
        -2.0 * z2.real / theta**2
        - 12.0 * z4.real / theta**4
        - 240.0 * z6.real / theta**6
        - 10080.0 * z8.real / theta**8
    )
    # First omitted orders bound the truncation (the expansion parameter
    # is 1/(m theta)^2 <= 1/240^2, so the remainders are dominated by
    # their leading terms; 1.5 covers the geometric excess).
    tb_diff = 2.0 * math.factorial(8) * abs(_hurwitz(9, zc)) / theta**9
    tb_sum = 2.0 * math.factorial(9) * abs(_hurwitz(10, zc)) / theta**10
    tail_bound = 1.5 * (abs(x0 * x0 - 2.0) * tb_diff + 2.0 * x0 * tb_sum)

    # Pole term of J0-: i pi e^{i x0} / (e^theta - 1), Bose factor in
    # decaying-exponential form.
    bose = math.exp(-theta) / (1.0 - math.exp(-theta))
    pole_re = -math.pi * math.sin(x0) * bose
    pole_im = math.pi * math.cos(x0) * bose

    j_plus = ComplexValue(re=hp_re + 0.5 * retail, im=hp_im + 0.5 * imtail)
    j_minus = ComplexValue(
        re=hm_re + 0.5 * retail + pole_re, im=hm_im - 0.5 * imtail + pole_im
    )
    return ThermalSeriesTerms(
        j0_plus=j_plus,
        j0_minus=j_minus,
        k0_val=j_plus.im - j_minus.im,
        k1_val=-x0 * (j_plus.re + j_minus.re),
        p_val=bose_sum_p(eta),
        terms_used=n_head,
        tail_bound=tail_bound,
    )


def j0_series(eta: float, x0: float) -> tuple[ComplexValue, ComplexValue]:
    """(J0+, J0-) at one geometry point; see the module docstring for the
    tail-folding convention on the individually divergent real parts."""
    terms = thermal_series_terms(eta, x0)
    return terms.j0_plus, terms.j0_minus


def _w_bracket(terms: ThermalSeriesTerms, x0: float) -> float:
    return (
        (x0 * x0 - 2.0) * terms.k0_val
        + 2.0 * terms.k1_val
        - 2.0 * x0 * terms.p_val
    )


def _check_env(atom: AtomParams, env: ThermalEnvironment) -> None:
    derived = atom.k0 * env.lambda_T
    if abs(derived - env.theta) > 1e-8 * derived:
        raise DomainError(
            f"environment theta {env.theta} inconsistent with k0*lambda_T "
            f"= {derived}; was it built for a different atom?"
        )


def thermal_potential_exact(
    atom: AtomParams,
    env: ThermalEnvironment,
    z: float,
    constants: PhysicalConstants | None = None,
) -> float:
    """Ground-truth thermal correction V_T(z) in eV from the exact series."""
    if not (math.isfinite(z) and z > 0.0):
        raise DomainError(f"z must be positive and finite, got {z}")
    _check_env(atom, env)
    cst = constants if constants is not None else _DEFAULT_CONSTANTS
    eta = env.lambda_T / (2.0 * z)
    x0 = 2.0 * atom.k0 * z
    terms = thermal_series_terms(eta, x0)
    pref = cst.hbar_c_ev_um * atom.alpha0 * atom.k0 / (8.0 * math.pi * z**3)
    return pref * _w_bracket(terms, x0)


def thermal_short_leading(
    atom: AtomParams,
    env: ThermalEnvironment,
    z: float,
    constants: PhysicalConstants | None = None,
) -> float:
    """Leading short-distance law C(T) - (2 pi)^5/315 hbar c alpha0 z^2
    / lambda_T^6 with C(T) = (2 pi^3/45) hbar c alpha0 / lambda_T^4.

    Valid (to ~5%) for z <= 0.05 lambda_T; defined for all z >= 0.
    """
    if not (math.isfinite(z) and z >= 0.0):
        raise DomainError(f"z must be >= 0 and finite, got {z}")
    _check_env(atom, env)
    cst = constants if constants is not None else _DEFAULT_CONSTANTS
    lam = env.lambda_T
    scale = cst.hbar_c_ev_um * atom.alpha0
    return scale * (C_SHORT / lam**4 - CURV_SHORT * z * z / lam**6)


def _ht_inner_sum(m: int, theta: float, n_cap: int) -> float:
    """sum_{j=m}^{<=n_cap} (2j-1)! zeta(2j) / theta^{2j}, truncated at the
    smallest term of the asymptotic sequence."""
    log_t = math.lgamma(2 * m) - 2 * m * math.log(theta)
    if log_t < -700.0:
        return 0.0
    t = math.exp(log_t) * zeta_even(m)
    acc = 0.0
    prev = math.inf
    for j in range(m, n_cap + 1):
        if t > prev:
            break
        acc += t
        if t <= 1e-18 * acc:
            break
        prev = t
        t *= (2 * j) * (2 * j + 1) / (theta * theta)
        t *= zeta_even(j + 1) / zeta_even(j)
    return acc


def thermal_short_expansion(
    atom: AtomParams,
    env: ThermalEnvironment,
    z: float,
    constants: PhysicalConstants | None = None,
) -> float:
    """Short-distance H_T form: V_T = (hbar c / 2 pi)(alpha0 k0^2 / z^2)
    [Q(eta) + double zeta sum], inner sums truncated adaptively and
    capped at N = ceil(theta).

    Requires z < 0.2 lambda_T (eta > 2.5) so Q and the sums converge;
    raises ValidityError outside that window.
    """
    if not (math.isfinite(z) and z > 0.0):
        raise DomainError(f"z must be positive and finite, got {z}")
    _check_env(atom, env)
    if z >= 0.2 * env.lambda_T:
        raise ValidityError(
            f"short-distance expansion needs z < 0.2 lambda_T, got "
            f"z/lambda_T = {z / env.lambda_T}"
        )
    cst = constants if constants is not None else _DEFAULT_CONSTANTS
    eta = env.lambda_T / (2.0 * z)
    x0 = 2.0 * atom.k0 * z
    theta = eta * x0
    n_cap = int(math.ceil(theta))

    h_t = q_series(eta)
    log_x0 = math.log(x0)
    small = 0
    for m in range(2, 601):
        inner = _ht_inner_sum(m, theta, n_cap)
        log_a = (2 * m - 1) * log_x0 - math.lgamma(2 * m)
        a_m = math.exp(log_a) if log_a > -700.0 else 0.0
        b_m = 2.0 / x0 - x0 * (1.0 - 1.0 / m)
        term = a_m * b_m * inner
        h_t += term if m % 2 == 0 else -term
        if abs(term) <= 1e-17 * (abs(h_t) + 1e-300):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
    else:
        raise ConvergenceError(
            f"H_T outer sum did not converge at z/lambda_T = {z / env.lambda_T}"
        )
    pref = cst.hbar_c_ev_um * atom.alpha0 * atom.k0**2 / (2.0 * math.pi * z**2)
    return pref * h_t


def thermal_long_expansion(
    atom: AtomParams,
    env: ThermalEnvironment,
    z: float,
    constants: PhysicalConstants | None = None,
) -> float:
    """Long-distance L_T form: V_T = (hbar c / 2 pi)(alpha0 k0 / z^3) L_T
    with polygamma sums of argument -i/eta, adaptively truncated and
    capped at N = ceil(theta).

    The polygamma convention here is F^(m)(x) = psi^(m)(x + 1).
    Requires z >= 0.5 lambda_T (eta <= 1); raises ValidityError below.
    """
    if not (math.isfinite(z) and z > 0.0):
        raise DomainError(f"z must be positive and finite, got {z}")
    _check_env(atom, env)
    if z < 0.5 * env.lambda_T:
        raise ValidityError(
            f"long-distance expansion needs z >= 0.5 lambda_T, got "
            f"z/lambda_T = {z / env.lambda_T}"
        )
    cst = constants if constants is not None else _DEFAULT_CONSTANTS
    eta = env.lambda_T / (2.0 * z)
    x0 = 2.0 * atom.k0 * z
    theta = eta * x0
    n_cap = int(math.ceil(theta))
    zarg = complex(1.0, -1.0 / eta)
    log_theta = math.log(theta)

    sum_im = 0.0
    prev = math.inf
    for j in range(1, n_cap + 1):
        v = _polygamma_scaled(2 * j, zarg, (2 * j + 1) * log_theta)
        if abs(v.imag) > prev:
            break
        sum_im += v.imag
        if abs(v.imag) <= 1e-18 * (abs(sum_im) + 1e-300):
            break
        prev = abs(v.imag)

    sum_re = 0.0
    prev = math.inf
    for j in range(1, n_cap + 1):
        v = _polygamma_scaled(2 * j - 1, zarg, 2 * j * log_theta)
        if abs(v.real) > prev:
            break
        sum_re += v.real
        if abs(v.real) <= 1e-18 * (abs(sum_re) + 1e-300):
            break
        prev = abs(v.real)

    l_t = (
        -bose_sum_p(eta) / x0
        + (1.0 - 0.5 * x0 * x0) * sum_im
        + x0 * sum_re
    )
    pref = cst.hbar_c_ev_um * atom.alpha0 * atom.k0 / (2.0 * math.pi * z**3)
    return pref * l_t


def lifshitz_asymptote(
    atom: AtomParams,
    env: ThermalEnvironment,
    z: float,
    constants: PhysicalConstants | None = None,
) -> float:
    """Asymptote of the TOTAL interaction for z >> lambda_T:
    -(k_B T / 4) alpha0 / z^3, linear in T and hbar-free."""
    if not (math.isfinite(z) and z > 0.0):
        raise DomainError(f"z must be positive and finite, got {z}")
    cst = constants if constants is not None else _DEFAULT_CONSTANTS
    return -cst.k_B * env.temperature * atom.alpha0 / (4.0 * z**3)


def recommended_approximation(z_over_lambda_t: float) -> str:
    """Auto-mode window for reporting: which approximation is expected
    to describe the thermal part best at this separation."""
    if z_over_lambda_t <= 0.05:
        return "short_leading"
    if z_over_lambda_t < 1.0:
        return "exact_series"
    return "lifshitz"


def total_potential(
    atom: AtomParams,
    z: float,
    env: ThermalEnvironment | None = None,
    constants: PhysicalConstants | None = None,
) -> PotentialBreakdown:
    """Vacuum + thermal breakdown at separation z (um).

    ``env=None`` means a zero-temperature field: the thermal part is
    exactly zero and only the vacuum term survives.
    """
    vac = vacuum_potential(atom, z, constants)
    x0 = 2.0 * atom.k0 * z
    tag = classify_regime(x0).value
    if env is None:
        return PotentialBreakdown(
            vacuum=vac,
            thermal=0.0,
            total=vac + 0.0,
            notes=f"x0 = {x0:.6g} ({tag}); zero-temperature field, thermal term absent",
        )
    th = thermal_potential_exact(atom, env, z, constants)
    zr = z / env.lambda_T
    notes = (
        f"x0 = {x0:.6g} ({tag}); z/lambda_T = {zr:.6g}; "
        f"thermal part {'repulsive' if th > 0 else 'attractive'}; "
        f"auto mode: {recommended_approximation(zr)}"
    )
    return PotentialBreakdown(vacuum=vac, thermal=th, total=vac + th, notes=notes)
