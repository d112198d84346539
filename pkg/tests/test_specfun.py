import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cpwall import specfun as sf
from cpwall.errors import ConvergenceError, DomainError

from _reference_values import REFERENCE as REF

TARGET = 1e-12      # per-function target
GUARANTEE = 1e-10   # guaranteed bound used where branches stack


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


# ----------------------------------------------------------------------
# frozen high-precision references


@pytest.mark.parametrize("x", [0.5, 1.0, 20.0])
def test_ci_si_reference(x):
    assert rel(sf.cosine_integral(x), REF[f"ci_{x:g}"]) < TARGET
    assert rel(sf.sine_integral_si(x), REF[f"si_{x:g}"]) < TARGET


@pytest.mark.parametrize("x", [0.1, 2.0, 5.0, 30.0])
def test_auxiliary_f_reference(x):
    assert rel(sf.auxiliary_f(x), REF[f"aux_f_{x:g}"]) < TARGET


@pytest.mark.parametrize("x", [2.0, 30.0])
def test_auxiliary_g_reference(x):
    assert rel(sf.auxiliary_g(x), REF[f"aux_g_{x:g}"]) < TARGET


@pytest.mark.parametrize("u", [1e-3, 0.1, 5.0])
def test_kernel_reference(u):
    assert rel(sf.kernel_g(u), REF[f"kernel_g_{u:g}"]) < TARGET


E1_POINTS = [
    1.0, 0.5, 10.0,
    2.5 - 7.5j, -10 + 1j, -10 + 0.2j, -30 + 2j, -50 + 5j,
    -35.1 + 30j, 10 - 20j, 100 - 400j, 300 - 600j,
    0.3 + 0.4j, -3 + 0.5j,
]


@pytest.mark.parametrize("w", E1_POINTS, ids=str)
def test_scaled_e1_reference(w):
    assert rel(complex(sf.scaled_e1(w)), REF[f"scaled_e1_{w}"]) < TARGET


def test_polygamma_reference():
    assert rel(complex(sf.polygamma(1, 1 - 2j)), REF["psi1_1-2j"]) < TARGET
    assert rel(complex(sf.polygamma(5, 0.5 - 4j)), REF["psi5_0.5-4j"]) < TARGET
    assert rel(complex(sf.polygamma(0, 1 - 0.5j)), REF["psi0_1-0.5j"]) < TARGET
    assert rel(complex(sf.polygamma(4, -20j)), REF["psi4_-20j"]) < TARGET


@pytest.mark.parametrize("eta", [0.01, 0.1, 1.0, 10.0])
def test_bose_sum_p_reference(eta):
    assert rel(sf.bose_sum_p(eta), REF[f"bose_p_{eta:g}"]) < TARGET


def test_q_series_reference():
    assert rel(sf.q_series(10.0), REF["q_10"]) < 1e-13
    assert rel(sf.q_series(2.0), REF["q_2"]) < TARGET


# ----------------------------------------------------------------------
# limits and classical values


def test_ci_small_argument_limit():
    x = 1e-6
    assert abs(sf.cosine_integral(x) - math.log(x) - sf.EULER_GAMMA) < 1e-12


def test_ci_decays_at_infinity():
    x = 1e4
    assert abs(sf.cosine_integral(x)) < 2.0 / x


def test_si_endpoints():
    assert sf.sine_integral_si(0.0) == -0.5 * math.pi
    assert abs(sf.sine_integral_si(1e4)) < 2.0 / 1e4


def test_auxiliary_f_limits():
    assert sf.auxiliary_f(0.0) == 0.5 * math.pi
    # f ~ 1/x - 2/x^3: the defect dies faster than 1/x^2
    for x in (50.0, 200.0):
        assert abs(sf.auxiliary_f(x) - 1.0 / x) < 2.2 / x**3


def test_auxiliary_g_limits():
    # g ~ -1/x^2 + 6/x^4
    for x in (50.0, 200.0):
        assert abs(sf.auxiliary_g(x) + 1.0 / x**2) < 6.6 / x**4
    # log divergence at 0: g unbounded below but x g(x) -> 0
    assert sf.auxiliary_g(1e-7) < -10.0
    assert abs(1e-7 * sf.auxiliary_g(1e-7)) < 1e-5


def test_auxiliary_g_is_derivative_of_f():
    h = 1e-5
    fd = (sf.auxiliary_f(2.0 + h) - sf.auxiliary_f(2.0 - h)) / (2 * h)
    assert abs(sf.auxiliary_g(2.0) - fd) < 1e-7


def test_kernel_values():
    assert sf.kernel_g(0.0) == pytest.approx(1.0 / 3.0, rel=1e-15)
    assert sf.kernel_g(math.pi) == pytest.approx(-2.0 / math.pi**2, rel=1e-14)


def test_zeta_even_classical():
    assert rel(sf.zeta_even(1), math.pi**2 / 6) < 1e-15
    assert rel(sf.zeta_even(2), math.pi**4 / 90) < 1e-15


def test_zeta_even_forty():
    d = sf.zeta_even(20) - 1.0
    assert 0.0 < d < 1e-12
    assert rel(d, REF["zeta_40_minus_1"]) < 1e-6  # representation-limited


def test_zeta_even_monotone_to_one():
    tab = [sf.zeta_even(m) for m in range(1, 261)]
    assert all(a >= b for a, b in zip(tab, tab[1:]))
    assert all(v >= 1.0 for v in tab)
    assert tab[-1] == 1.0


def test_polygamma_classical():
    assert rel(complex(sf.polygamma(1, 1.0)).real, math.pi**2 / 6) < TARGET


def test_polygamma_recurrence_spec_point():
    z = 3 + 2j
    lhs = complex(sf.polygamma(2, z)) - complex(sf.polygamma(2, z + 1))
    assert rel(lhs, -2.0 / z**3) < TARGET


def test_polygamma_fd_cross_order():
    # psi^(4)(-i/eta) at eta = 0.05 vs central difference of psi^(3)
    z = -20j
    h = 3e-3
    fd = (complex(sf.polygamma(3, z + h)) - complex(sf.polygamma(3, z - h))) / (2 * h)
    assert rel(complex(sf.polygamma(4, z)), fd) < 1e-6


def test_bose_sum_p_limits():
    assert sf.bose_sum_p(1e4) < 2e-8
    eta = 0.1
    assert abs(sf.bose_sum_p(eta) - (0.5 * math.pi / eta - 0.5)) < 1e-14


def test_bose_sum_p_direct_sum_oracle():
    # P(1) vs truncated sum with integral tail estimate
    m = np.arange(1, 1_000_001, dtype=float)
    direct = float(np.sum(1.0 / (1.0 + m * m)))
    tail = 1.0 / 1_000_000.5  # Int_{1e6}^inf dm/m^2 at eta = 1, midpoint
    closed = sf.bose_sum_p(1.0)
    assert abs(closed - (direct + tail)) < 1e-10
    assert rel(closed, 0.5 * math.pi / math.tanh(math.pi) - 0.5) < 1e-15


def test_q_series_leading_order():
    x = 50.0
    lead = 0.5 * sf.zeta_even(2) / x**4
    assert rel(sf.q_series(x), lead) < 2.0 / x**2


def test_q_series_alternating_bound():
    # |Q| does not exceed the first term of the alternating series
    for x in (2.0, 1.2):
        assert abs(sf.q_series(x)) <= 0.5 * sf.zeta_even(2) / x**4


# ----------------------------------------------------------------------
# domain errors


def test_domain_errors():
    for bad in (0.0, -1.0):
        with pytest.raises(DomainError):
            sf.cosine_integral(bad)
    with pytest.raises(DomainError):
        sf.sine_integral_si(-0.5)
    with pytest.raises(DomainError):
        sf.auxiliary_f(-1.0)
    with pytest.raises(DomainError):
        sf.auxiliary_g(0.0)
    with pytest.raises(DomainError):
        sf.kernel_g(-0.1)
    with pytest.raises(DomainError):
        sf.scaled_e1(0.0)
    with pytest.raises(DomainError):
        sf.scaled_e1(-3.0)  # branch cut
    for bad_m in (0, 261, 2.0, True):
        with pytest.raises(DomainError):
            sf.zeta_even(bad_m)
    with pytest.raises(DomainError):
        sf.polygamma(1, 0.0)
    with pytest.raises(DomainError):
        sf.polygamma(2, -3.0)
    with pytest.raises(DomainError):
        sf.bose_sum_p(0.0)
    for bad in (1.0, 0.5):
        with pytest.raises(DomainError):
            sf.q_series(bad)


def test_polygamma_overflow_is_flagged():
    with pytest.raises(OverflowError):
        sf.polygamma(300, 1.0 + 0j)


def test_complex_value_finiteness():
    with pytest.raises(ConvergenceError):
        sf.ComplexValue(math.nan, 0.0)
    with pytest.raises(ConvergenceError):
        sf.ComplexValue(0.0, math.inf)
    w = sf.ComplexValue(1.5, -2.5)
    assert complex(w) == 1.5 - 2.5j


def test_accuracy_budget_invariant():
    b = sf.AccuracyBudget()
    assert 0 < b.rel_tol_specfun <= b.rel_tol_composed < 1e-3
    with pytest.raises(DomainError):
        sf.AccuracyBudget(rel_tol_specfun=1e-6, rel_tol_composed=1e-8)
    with pytest.raises(DomainError):
        sf.AccuracyBudget(rel_tol_specfun=0.0)
    with pytest.raises(DomainError):
        sf.AccuracyBudget(rel_tol_composed=1e-2)


# ----------------------------------------------------------------------
# branch-consistency grids (straddling every switch point)


def test_kernel_branch_consistency():
    # Taylor (package) vs closed form (reference route) across the switch
    for u in np.linspace(0.05, 0.2, 100):
        s, c = math.sin(u), math.cos(u)
        closed = (u * u * s + 2 * u * c - 2 * s) / u**3
        assert rel(sf.kernel_g(float(u)), closed) < GUARANTEE


def test_ci_si_branch_consistency():
    # series route vs auxiliary route, both evaluated on [3, 5]
    for x in np.linspace(3.0, 5.0, 100):
        x = float(x)
        series_ci = sf._ci_series(x)
        aux_ci = sf.auxiliary_f(x) * math.sin(x) + sf.auxiliary_g(x) * math.cos(x)
        assert rel(series_ci, aux_ci) < GUARANTEE
        series_si = sf._si_series(x) - 0.5 * math.pi
        aux_si = sf.auxiliary_g(x) * math.sin(x) - sf.auxiliary_f(x) * math.cos(x)
        assert abs(series_si - aux_si) < GUARANTEE


def test_scaled_e1_radial_switch_consistency():
    # power series vs continued fraction across |w| = 2
    for r in np.linspace(1.7, 2.4, 10):
        for ph in np.linspace(-0.74 * math.pi, 0.74 * math.pi, 10):
            w = r * cmath.exp(1j * ph)
            assert rel(sf._e1t_power_series(w), sf._e1t_continued_fraction(w)) < GUARANTEE


def test_scaled_e1_angular_switch_consistency():
    # continued fraction vs power series across arg w = 3pi/4
    for r in np.geomspace(2.5, 33.0, 10):
        for ph in np.linspace(0.72 * math.pi, 0.78 * math.pi, 10):
            w = r * cmath.exp(1j * ph)
            assert rel(sf._e1t_power_series(w), sf._e1t_continued_fraction(w)) < GUARANTEE


def test_scaled_e1_outer_switch_consistency():
    # power series vs asymptotic series across |w| = 35 in the far sector
    for r in np.linspace(33.0, 38.0, 10):
        for ph in np.linspace(0.80 * math.pi, 0.97 * math.pi, 10):
            w = r * cmath.exp(1j * ph)
            assert rel(sf._e1t_power_series(w), sf._e1t_asymptotic(w)) < 5e-11


def test_bose_branch_consistency():
    # closed form vs alternating series around eta = 2
    for eta in np.linspace(1.5, 2.5, 100):
        eta = float(eta)
        closed = 0.5 * math.pi / (math.tanh(math.pi / eta) * eta) - 0.5
        inv2 = 1.0 / (eta * eta)
        s, p = 0.0, 1.0
        for k in range(1, 400):
            p *= inv2
            term = sf._zeta_even_unchecked(k) * p
            s += term if k % 2 == 1 else -term
            if term < 1e-18:
                break
        assert rel(sf.bose_sum_p(eta), closed) < GUARANTEE
        assert rel(sf.bose_sum_p(eta), s) < GUARANTEE


# ----------------------------------------------------------------------
# property-based checks


@given(st.floats(min_value=1e-3, max_value=1e3))
def test_f_bounds_and_sign(x):
    f = sf.auxiliary_f(x)
    assert 0.0 < f <= min(0.5 * math.pi, 1.0 / x) * (1 + 1e-12)


@given(st.floats(min_value=1e-3, max_value=1e3))
def test_g_negative_and_bounded(x):
    g = sf.auxiliary_g(x)
    assert g < 0.0
    assert abs(g) <= 1.0 / (x * x) * (1 + 1e-9) + 1e-300


@given(st.floats(min_value=1e-3, max_value=500.0), st.floats(min_value=1.001, max_value=2.0))
def test_f_monotone_decreasing(x, factor):
    assert sf.auxiliary_f(x) > sf.auxiliary_f(x * factor)


@given(st.floats(min_value=0.1, max_value=100.0))
def test_ci_si_reconstruction(x):
    # f, g and Ci, si are two encodings of the same pair
    f, g = sf.auxiliary_f(x), sf.auxiliary_g(x)
    ci, si = sf.cosine_integral(x), sf.sine_integral_si(x)
    s, c = math.sin(x), math.cos(x)
    assert abs(ci - (f * s + g * c)) < GUARANTEE * (1 + abs(ci))
    assert abs(si - (g * s - f * c)) < GUARANTEE * (1 + abs(si))
    assert abs(f - (ci * s - si * c)) < GUARANTEE * (1 + abs(f))
    assert abs(g - (ci * c + si * s)) < GUARANTEE * (1 + abs(g))


@given(
    st.floats(min_value=0.05, max_value=60.0),
    st.floats(min_value=-math.pi * 0.97, max_value=math.pi * 0.97),
)
def test_scaled_e1_conjugate_symmetry(r, phase):
    w = r * cmath.exp(1j * phase)
    a = complex(sf.scaled_e1(w))
    b = complex(sf.scaled_e1(w.conjugate()))
    assert a == b.conjugate()


@given(st.floats(min_value=0.0, max_value=1e4))
def test_kernel_bounded(x):
    assert abs(sf.kernel_g(x)) <= 1.0


@given(st.floats(min_value=0.01, max_value=50.0), st.floats(min_value=1.1, max_value=3.0))
def test_bose_sum_p_positive_decreasing(eta, factor):
    p1 = sf.bose_sum_p(eta)
    p2 = sf.bose_sum_p(eta * factor)
    assert p1 > 0.0
    assert p1 > p2


@given(
    st.integers(min_value=1, max_value=8),
    st.complex_numbers(
        min_magnitude=0.1, max_magnitude=20.0, allow_nan=False, allow_infinity=False
    ),
)
def test_polygamma_recurrence_property(m, z):
    z = complex(z.real + 1.0, z.imag + 0.5)  # keep clear of the poles
    lhs = complex(sf.polygamma(m, z)) - complex(sf.polygamma(m, z + 1))
    step = -((-1.0) ** m) * math.factorial(m) / z ** (m + 1)
    assert abs(lhs - step) < 1e-10 * (1 + abs(step) + abs(complex(sf.polygamma(m, z))))


@given(st.floats(min_value=1e6, max_value=1e12))
def test_scaled_e1_tends_to_inverse(x):
    assert rel(complex(sf.scaled_e1(x)), 1.0 / x) < 2.0 / x


def test_scaled_e1_far_left_matches_inverse_loosely():
    w = -10 + 1j
    got = complex(sf.scaled_e1(w))
    assert abs(got - 1.0 / w) <= 0.15 * abs(1.0 / w)
