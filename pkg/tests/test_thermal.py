"""Thermal module: exact series against frozen references, composition
invariants, expansion windows, and limiting behavior."""

from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cpwall.constants import PhysicalConstants
from cpwall.errors import DomainError, ValidityError
from cpwall.specfun import scaled_e1
from cpwall.thermal import (
    PotentialBreakdown,
    ThermalEnvironment,
    ThermalSeriesTerms,
    _w_bracket,
    j0_series,
    lifshitz_asymptote,
    recommended_approximation,
    thermal_long_expansion,
    thermal_potential_exact,
    thermal_series_terms,
    thermal_short_expansion,
    thermal_short_leading,
    total_potential,
)
from cpwall.vacuum import AtomParams, vacuum_potential

from _reference_values import REFERENCE

CST = PhysicalConstants()
LAMBDA_T = 7.632948
TEMP = CST.hbar_c_ev_um / (CST.k_B * LAMBDA_T)


def make_pair(theta: float) -> tuple[AtomParams, ThermalEnvironment]:
    atom = AtomParams(k0=theta / LAMBDA_T, alpha0=3.0e-8)
    env = ThermalEnvironment(
        temperature=TEMP, lambda_T=LAMBDA_T, theta=atom.k0 * LAMBDA_T
    )
    return atom, env


class TestFrozenReferences:
    @pytest.mark.parametrize(
        "theta,zr",
        [(100.0, 0.05), (100.0, 0.3), (100.0, 1.0), (30.0, 0.5), (300.0, 0.2)],
    )
    def test_w_bracket(self, theta: float, zr: float) -> None:
        x0 = 2.0 * theta * zr
        terms = thermal_series_terms(1.0 / (2.0 * zr), x0)
        ref = REFERENCE[f"w_theta{theta:g}_zr{zr:g}"]
        assert _w_bracket(terms, x0) == pytest.approx(ref, rel=5e-10)

    @pytest.mark.parametrize(
        "theta,zr",
        [(100.0, 0.05), (100.0, 0.3), (100.0, 1.0), (30.0, 0.5), (300.0, 0.2)],
    )
    def test_vhat_dimensional_path(self, theta: float, zr: float) -> None:
        atom, env = make_pair(theta)
        v = thermal_potential_exact(atom, env, zr * LAMBDA_T)
        vhat = v / (CST.hbar_c_ev_um * atom.alpha0 / LAMBDA_T**4)
        ref = REFERENCE[f"vhat_theta{theta:g}_zr{zr:g}"]
        assert vhat == pytest.approx(ref, rel=5e-10)


class TestSeriesTerms:
    def test_composition_is_exact(self) -> None:
        terms = thermal_series_terms(1.0, 100.0)
        assert terms.k0_val == terms.j0_plus.im - terms.j0_minus.im
        assert terms.k1_val == -100.0 * (terms.j0_plus.re + terms.j0_minus.re)

    def test_j0_series_matches_terms(self) -> None:
        jp, jm = j0_series(2.0, 30.0)
        terms = thermal_series_terms(2.0, 30.0)
        assert jp == terms.j0_plus
        assert jm == terms.j0_minus

    def test_tail_bound_small_relative_to_result(self) -> None:
        for theta in (30.0, 100.0, 300.0):
            for zr in (0.05, 0.1, 0.2, 0.5, 1.0, 2.0):
                x0 = 2.0 * theta * zr
                terms = thermal_series_terms(1.0 / (2.0 * zr), x0)
                w = _w_bracket(terms, x0)
                assert terms.tail_bound < 1e-8 * abs(w)

    def test_paired_terms_decrease_beyond_first(self) -> None:
        theta, x0 = 100.0, 100.0
        diffs, sums = [], []
        for m in range(1, 13):
            w = complex(m * theta, -x0)
            ep = scaled_e1(w)
            em = scaled_e1(-w)
            diffs.append(abs(ep.im - em.im))
            sums.append(abs(ep.re + em.re))
        # beyond m = 1: the m = 1 real pair is accidentally tiny when
        # theta = x0 (w^2 is then purely imaginary)
        assert all(b < a for a, b in zip(diffs[1:], diffs[2:]))
        assert all(b < a for a, b in zip(sums[1:], sums[2:]))

    def test_high_eta_limit(self) -> None:
        jp, jm = j0_series(1e7, 1.0)
        assert abs(complex(jp)) < 1e-6
        assert abs(complex(jm)) < 1e-6

    def test_theta_gate(self) -> None:
        with pytest.raises(DomainError):
            thermal_series_terms(1.0, 5.0)

    def test_rejects_broken_composition(self) -> None:
        terms = thermal_series_terms(1.0, 50.0)
        with pytest.raises(DomainError):
            ThermalSeriesTerms(
                j0_plus=terms.j0_plus,
                j0_minus=terms.j0_minus,
                k0_val=terms.k0_val + 1e-3,
                k1_val=terms.k1_val,
                p_val=terms.p_val,
                terms_used=terms.terms_used,
                tail_bound=terms.tail_bound,
            )


class TestEnvironment:
    def test_for_atom_consistency(self) -> None:
        atom, _ = make_pair(100.0)
        env = ThermalEnvironment.for_atom(atom, 300.0)
        expect = CST.hbar_c_ev_um / (CST.k_B * 300.0)
        assert env.lambda_T == pytest.approx(expect, rel=1e-12)
        assert env.theta == pytest.approx(atom.k0 * expect, rel=1e-12)

    def test_room_temperature_wavelength(self) -> None:
        atom, _ = make_pair(100.0)
        env = ThermalEnvironment.for_atom(atom, 300.0)
        assert 7.55 < env.lambda_T < 7.70

    def test_theta_refusal(self) -> None:
        with pytest.raises(DomainError):
            ThermalEnvironment(temperature=300.0, lambda_T=7.6, theta=9.0)
        cold_atom = AtomParams(k0=1.0, alpha0=1e-9)
        with pytest.raises(DomainError):
            # k0 lambda_T ~ 7.6 < 10
            ThermalEnvironment.for_atom(cold_atom, 300.0)

    def test_mismatched_atom_rejected(self) -> None:
        atom, env = make_pair(100.0)
        other = AtomParams(k0=2.0 * atom.k0, alpha0=atom.alpha0)
        with pytest.raises(DomainError):
            thermal_potential_exact(other, env, 1.0)


class TestExpansions:
    def test_short_expansion_near_leading(self) -> None:
        atom, env = make_pair(100.0)
        z = 0.01 * LAMBDA_T
        se = thermal_short_expansion(atom, env, z)
        sl = thermal_short_leading(atom, env, z)
        assert abs(se / sl - 1.0) < 0.10

    @pytest.mark.parametrize("theta", [30.0, 100.0, 300.0])
    @pytest.mark.parametrize("zr", [0.01, 0.05, 0.1, 0.19])
    def test_short_expansion_accuracy(self, theta: float, zr: float) -> None:
        atom, env = make_pair(theta)
        z = zr * LAMBDA_T
        se = thermal_short_expansion(atom, env, z)
        ex = thermal_potential_exact(atom, env, z)
        assert abs(se / ex - 1.0) < 1e-8

    def test_short_leading_window(self) -> None:
        atom, env = make_pair(100.0)
        for zr in (0.005, 0.02, 0.05):
            z = zr * LAMBDA_T
            err = abs(
                thermal_short_leading(atom, env, z)
                / thermal_potential_exact(atom, env, z)
                - 1.0
            )
            assert err < 0.05
        z = 0.19 * LAMBDA_T
        err = abs(
            thermal_short_leading(atom, env, z)
            / thermal_potential_exact(atom, env, z)
            - 1.0
        )
        assert err > 0.10

    @pytest.mark.parametrize("theta", [30.0, 100.0, 300.0])
    @pytest.mark.parametrize("zr", [0.5, 1.0, 3.0])
    def test_long_expansion_accuracy(self, theta: float, zr: float) -> None:
        atom, env = make_pair(theta)
        z = zr * LAMBDA_T
        lo = thermal_long_expansion(atom, env, z)
        ex = thermal_potential_exact(atom, env, z)
        assert abs(lo / ex - 1.0) < 1e-7

    def test_long_matches_lifshitz_minus_vacuum_far_out(self) -> None:
        atom, env = make_pair(100.0)
        z = 3.0 * LAMBDA_T
        target = lifshitz_asymptote(atom, env, z) - vacuum_potential(atom, z)
        ex = thermal_potential_exact(atom, env, z)
        assert abs(ex / target - 1.0) < 1e-3

    def test_validity_windows(self) -> None:
        atom, env = make_pair(100.0)
        with pytest.raises(ValidityError):
            thermal_short_expansion(atom, env, 0.2 * LAMBDA_T)
        with pytest.raises(ValidityError):
            thermal_long_expansion(atom, env, 0.49 * LAMBDA_T)

    def test_short_leading_at_contact(self) -> None:
        atom, env = make_pair(100.0)
        c_t = thermal_short_leading(atom, env, 0.0)
        expect = 2.0 * math.pi**3 / 45.0 * CST.hbar_c_ev_um * atom.alpha0 / LAMBDA_T**4
        assert c_t == pytest.approx(expect, rel=1e-14)


class TestLifshitz:
    def test_total_within_one_percent_beyond_lambda(self) -> None:
        atom, env = make_pair(100.0)
        for zr in (1.0, 1.5, 2.0):
            z = zr * LAMBDA_T
            total = vacuum_potential(atom, z) + thermal_potential_exact(atom, env, z)
            lif = lifshitz_asymptote(atom, env, z)
            assert abs(lif / total - 1.0) < 0.01

    def test_linear_in_temperature(self) -> None:
        atom, _ = make_pair(100.0)
        env1 = ThermalEnvironment.for_atom(atom, 300.0)
        env2 = ThermalEnvironment.for_atom(atom, 600.0)
        z = 20.0
        assert lifshitz_asymptote(atom, env2, z) == pytest.approx(
            2.0 * lifshitz_asymptote(atom, env1, z), rel=1e-12
        )


class TestShape:
    def test_thermal_derivative_single_sign_change(self) -> None:
        atom, env = make_pair(100.0)
        zs = [(0.05 + 1.95 * i / 60) * LAMBDA_T for i in range(61)]
        vals = [thermal_potential_exact(atom, env, z) for z in zs]
        slopes = [b - a for a, b in zip(vals, vals[1:])]
        changes = sum(
            1 for a, b in zip(slopes, slopes[1:]) if (a < 0 <= b) or (a >= 0 > b)
        )
        assert changes == 1
        # the turning point sits near 0.52 lambda_T
        i_min = min(range(len(vals)), key=lambda i: vals[i])
        assert 0.45 < zs[i_min] / LAMBDA_T < 0.60

    def test_total_monotone_increasing(self) -> None:
        atom, env = make_pair(100.0)
        zs = [10.0 ** (-3 + 4 * i / 50) * LAMBDA_T for i in range(51)]
        vals = [
            vacuum_potential(atom, z) + thermal_potential_exact(atom, env, z)
            for z in zs
        ]
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_dispersion_insensitivity(self) -> None:
        results = {}
        for theta in (30.0, 100.0, 300.0):
            atom, env = make_pair(theta)
            v = thermal_potential_exact(atom, env, 1.0 * LAMBDA_T)
            results[theta] = v / (CST.hbar_c_ev_um * atom.alpha0 / LAMBDA_T**4)
        assert abs(results[30.0] / results[300.0] - 1.0) < 3e-3
        assert abs(results[100.0] / results[300.0] - 1.0) < 3e-4

    def test_zero_temperature_suppression(self) -> None:
        theta = 3e6
        atom = AtomParams(k0=13.101, alpha0=3.0e-8)
        lam = theta / atom.k0
        temp = CST.hbar_c_ev_um / (CST.k_B * lam)
        env = ThermalEnvironment(temperature=temp, lambda_T=lam, theta=theta)
        z = 0.5 / atom.k0  # x0 = 1
        v_t = thermal_potential_exact(atom, env, z)
        v_0 = vacuum_potential(atom, z)
        assert abs(v_t) < 1e-12 * abs(v_0)


class TestTotalPotential:
    def test_zero_temperature_breakdown(self) -> None:
        atom, _ = make_pair(100.0)
        bd = total_potential(atom, 1.0, env=None)
        assert bd.thermal == 0.0
        assert bd.total == bd.vacuum
        assert "zero-temperature" in bd.notes

    def test_breakdown_composition(self) -> None:
        atom, env = make_pair(100.0)
        bd = total_potential(atom, 2.0, env=env)
        assert bd.total == bd.vacuum + bd.thermal
        assert "z/lambda_T" in bd.notes

    def test_breakdown_rejects_bad_total(self) -> None:
        with pytest.raises(DomainError):
            PotentialBreakdown(vacuum=-1.0, thermal=0.5, total=-0.4, notes="")

    def test_recommended_windows(self) -> None:
        assert recommended_approximation(0.01) == "short_leading"
        assert recommended_approximation(0.5) == "exact_series"
        assert recommended_approximation(1.5) == "lifshitz"


@given(
    st.floats(min_value=0.02, max_value=2.0),
    st.floats(min_value=10.0, max_value=400.0),
)
def test_series_invariants(zr: float, theta: float) -> None:
    x0 = 2.0 * theta * zr
    terms = thermal_series_terms(1.0 / (2.0 * zr), x0)
    assert terms.k0_val == terms.j0_plus.im - terms.j0_minus.im
    assert terms.k1_val == -x0 * (terms.j0_plus.re + terms.j0_minus.re)
    assert terms.p_val > 0.0
    assert terms.tail_bound >= 0.0
    assert math.isfinite(_w_bracket(terms, x0))


@given(st.floats(min_value=0.3, max_value=3.0))
def test_thermal_negative_beyond_crossing(zr: float) -> None:
    # V_T < 0 for z above the sign change at ~0.307 lambda_T
    if zr < 0.32:
        zr = 0.32
    atom, env = make_pair(100.0)
    assert thermal_potential_exact(atom, env, zr * LAMBDA_T) < 0.0
