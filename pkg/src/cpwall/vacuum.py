"""Vacuum-state atom-wall interaction: exact closed form and its limits.

The vacuum shift factorizes into a dimensional prefactor and a
dimensionless shape function,

    V0(z) = (hbar c / 8 pi) (k0 alpha0 / z^3) H0(x0),    x0 = 2 k0 z,
    H0(x) = (x^2 - 2) F(x) + 2 x G(x) - x,

with F and G the auxiliary sine/cosine-integral combinations from
:mod:`cpwall.specfun`.  H0 interpolates between -pi at contact (the
non-retarded, image-potential regime) and -6/x at large separation
(the retarded regime).  Only the total is available in closed form;
the rr/fr split exists solely as a pair of principal-value integrals,
so :class:`VacuumShift` carries a flag marking its parts as
quadrature-derived (see :mod:`cpwall.oracle`).

All dimensional work happens in :func:`vacuum_potential` and the two
asymptote functions; everything else is dimensionless.  Units: k0 in
rad/um, alpha0 in um^3, z in um, energies in eV.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .constants import PhysicalConstants
from .errors import DomainError
from .specfun import DEFAULT_BUDGET, auxiliary_f, auxiliary_g

__all__ = [
    "AtomParams",
    "GeometryPoint",
    "RegimeTag",
    "VacuumShift",
    "X0_NON_RETARDED_MAX",
    "X0_RETARDED_MIN",
    "classify_regime",
    "h0",
    "nonretarded_asymptote",
    "retarded_asymptote",
    "vacuum_potential",
]

_DEFAULT_CONSTANTS = PhysicalConstants()

# Validity thresholds for the asymptotic regimes.  The short-distance
# form needs x0 = 2 k0 z < 0.1; the long-distance form is quoted as
# reliable for z > 1.3 lambda0, i.e. x0 > 2.6 * 2 pi.
X0_NON_RETARDED_MAX = 0.1
X0_RETARDED_MIN = 2.6 * 2.0 * math.pi


class RegimeTag(enum.Enum):
    """Distance regime of a geometry point, keyed on x0 = 2 k0 z."""

    NON_RETARDED = "non_retarded"
    CROSSOVER = "crossover"
    RETARDED = "retarded"


@dataclass(frozen=True)
class AtomParams:
    """Two-level atom: transition wavenumber k0 (rad/um) and static
    polarizability alpha0 (um^3)."""

    k0: float
    alpha0: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.k0) and self.k0 > 0.0):
            raise DomainError(f"k0 must be positive and finite, got {self.k0}")
        if not (math.isfinite(self.alpha0) and self.alpha0 > 0.0):
            raise DomainError(
                f"alpha0 must be positive and finite, got {self.alpha0}"
            )

    @property
    def lambda0(self) -> float:
        """Transition wavelength 2 pi / k0 in um."""
        return 2.0 * math.pi / self.k0


def classify_regime(x0: float) -> RegimeTag:
    """Regime tag for dimensionless separation x0 = 2 k0 z."""
    if not (math.isfinite(x0) and x0 > 0.0):
        raise DomainError(f"x0 must be positive and finite, got {x0}")
    if x0 < X0_NON_RETARDED_MAX:
        return RegimeTag.NON_RETARDED
    if x0 > X0_RETARDED_MIN:
        return RegimeTag.RETARDED
    return RegimeTag.CROSSOVER


@dataclass(frozen=True)
class GeometryPoint:
    """Dimensionless geometry: x0 = 2 k0 z with derived z / lambda0 and
    regime tag.  Build via :meth:`from_x0`; direct construction checks
    the derived fields for consistency."""

    x0: float
    z_over_lambda0: float
    regime_tag: RegimeTag

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x0) and self.x0 > 0.0):
            raise DomainError(f"x0 must be positive and finite, got {self.x0}")
        derived = self.x0 / (4.0 * math.pi)
        tol = DEFAULT_BUDGET.rel_tol_composed
        if abs(self.z_over_lambda0 - derived) > tol * derived:
            raise DomainError(
                "z_over_lambda0 inconsistent with x0 / 4 pi: "
                f"{self.z_over_lambda0} vs {derived}"
            )
        if self.regime_tag is not classify_regime(self.x0):
            raise DomainError(
                f"regime_tag {self.regime_tag} inconsistent with x0 = {self.x0}"
            )

    @classmethod
    def from_x0(cls, x0: float) -> "GeometryPoint":
        return cls(
            x0=x0,
            z_over_lambda0=x0 / (4.0 * math.pi),
            regime_tag=classify_regime(x0),
        )


@dataclass(frozen=True)
class VacuumShift:
    """Vacuum level shift split into reservoir-reaction (rr) and
    reservoir-fluctuation (fr) parts, in eV.

    The closed form yields only the total; the parts come from the
    oracle module's principal-value quadrature, hence the origin flag.
    Additivity is enforced at construction.
    """

    total: float
    rr_part: float
    fr_part: float
    parts_from_quadrature: bool

    def __post_init__(self) -> None:
        scale = abs(self.total) + abs(self.rr_part) + abs(self.fr_part)
        tol = DEFAULT_BUDGET.rel_tol_composed
        if abs(self.total - (self.rr_part + self.fr_part)) > tol * scale + 1e-300:
            raise DomainError(
                "VacuumShift parts do not sum to total: "
                f"{self.rr_part} + {self.fr_part} != {self.total}"
            )


def h0(x0: float) -> float:
    """Dimensionless vacuum shape H0(x) = (x^2 - 2) F(x) + 2 x G(x) - x.

    Tends to -pi as x -> 0+ and falls off as -6/x for large x.  Strictly
    negative on the whole half-line.  Domain errors from the auxiliary
    functions propagate unchanged.
    """
    f = auxiliary_f(x0)
    g = auxiliary_g(x0)
    return (x0 * x0 - 2.0) * f + 2.0 * x0 * g - x0


def vacuum_potential(
    atom: AtomParams,
    z: float,
    constants: PhysicalConstants | None = None,
) -> float:
    """Exact vacuum interaction energy V0(z) in eV for z in um.

    V0(z) = (hbar c / 8 pi) (k0 alpha0 / z^3) H0(2 k0 z); strictly
    negative (attractive) at every separation.
    """
    if not (math.isfinite(z) and z > 0.0):
        raise DomainError(f"z must be positive and finite, got {z}")
    cst = constants if constants is not None else _DEFAULT_CONSTANTS
    prefactor = cst.hbar_c_ev_um / (8.0 * math.pi) * atom.k0 * atom.alpha0 / z**3
    return prefactor * h0(2.0 * atom.k0 * z)


def nonretarded_asymptote(
    atom: AtomParams,
    z: float,
    constants: PhysicalConstants | None = None,
) -> float:
    """Short-distance (image-potential) form -hbar omega0 alpha0 / 8 z^3.

    Expressed via hbar omega0 = hbar c k0 (eV); c drops out of the
    physics once the transition energy is fixed.
    """
    if not (math.isfinite(z) and z > 0.0):
        raise DomainError(f"z must be positive and finite, got {z}")
    cst = constants if constants is not None else _DEFAULT_CONSTANTS
    hbar_omega0 = cst.hbar_c_ev_um * atom.k0
    return -hbar_omega0 * atom.alpha0 / (8.0 * z**3)


def retarded_asymptote(
    atom: AtomParams,
    z: float,
    constants: PhysicalConstants | None = None,
) -> float:
    """Long-distance form -(3 / 8 pi) hbar c alpha0 / z^4 (k0-free)."""
    if not (math.isfinite(z) and z > 0.0):
        raise DomainError(f"z must be positive and finite, got {z}")
    cst = constants if constants is not None else _DEFAULT_CONSTANTS
    return -3.0 / (8.0 * math.pi) * cst.hbar_c_ev_um * atom.alpha0 / z**4
