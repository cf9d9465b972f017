"""Hydrogen eigenstates: energies, radial functions, peaks, orthonormality."""

import math
from fractions import Fraction

import numpy as np
import pytest

from hydrobohm import (
    PhysicalConstants,
    atomic_units,
    energy_level,
    make_radial_grid,
    node_mask,
    overlap,
    psi,
    radial_R,
    radial_R_derivatives,
    radial_distribution,
    radial_peaks,
    radial_profile,
    schrodinger_residual,
    state,
    spherical_harmonic,
)

import oracles

AU = atomic_units()


class TestEnergyLevels:
    def test_ground_state_energy(self):
        assert energy_level(1, AU) == -0.5

    def test_rydberg_ratio_is_exact_with_rational_constants(self):
        exact = PhysicalConstants(hbar=Fraction(1), mass=Fraction(1), coulomb=Fraction(1))
        ground = energy_level(1, exact)
        assert ground == Fraction(-1, 2)
        for n in range(1, 21):
            assert energy_level(n, exact) == Fraction(-1, 2 * n * n)
            assert energy_level(n, exact) / ground == Fraction(1, n * n)

    def test_float_ratio_within_rounding(self):
        for n in range(1, 21):
            ratio = energy_level(n, AU) / energy_level(1, AU)
            assert abs(ratio - 1.0 / n**2) < 1e-12

    def test_scaling_with_constants(self):
        # E_1 = -hartree / 2 in any unit system.
        constants = PhysicalConstants(hbar=1.0, mass=1.0, coulomb=2.0)
        assert energy_level(1, constants) == pytest.approx(-2.0)
        assert energy_level(2, constants) == pytest.approx(-0.5)

    def test_rejects_invalid_n(self):
        with pytest.raises(ValueError):
            energy_level(0, AU)


class TestRadialFunctions:
    def test_ground_state_closed_form(self):
        r = np.linspace(0.1, 10.0, 40)
        np.testing.assert_allclose(radial_R(state(1, 0), r), 2.0 * np.exp(-r), rtol=1e-14)

    def test_two_p_value_at_two_bohr(self):
        # R_21(2a) = (1/sqrt(6)) * e^{-1} exactly.
        expected = math.exp(-1.0) / math.sqrt(6.0)
        assert expected == pytest.approx(0.15018615295504262, rel=1e-15)
        assert float(radial_R(state(2, 1), 2.0)) == pytest.approx(expected, rel=1e-13)

    def test_two_s_closed_form(self):
        r = np.linspace(0.1, 12.0, 30)
        expected = (1.0 / math.sqrt(2.0)) * (1.0 - r / 2.0) * np.exp(-r / 2.0)
        np.testing.assert_allclose(radial_R(state(2, 0), r), expected, rtol=1e-13, atol=1e-16)

    def test_normalization_by_quadrature(self):
        for n, l in [(1, 0), (2, 1), (3, 0), (4, 2), (5, 4)]:
            spec = state(n, l)
            norm = oracles.gauss_legendre_integral(
                lambda r: r**2 * np.asarray(radial_R(spec, r)) ** 2,
                0.0,
                40.0 + 10.0 * n**2,
                points=400,
            )
            assert norm == pytest.approx(1.0, rel=1e-10)

    def test_node_count_matches_degree(self):
        r = np.linspace(0.05, 120.0, 20001)
        for n, l in [(1, 0), (2, 0), (3, 1), (5, 0), (6, 3)]:
            values = np.asarray(radial_R(state(n, l), r))
            signs = np.sign(values)
            crossings = np.count_nonzero(signs[1:] != signs[:-1])
            assert crossings == n - l - 1

    def test_derivatives_match_central_differences(self):
        r = np.linspace(0.5, 25.0, 50)
        h1, h2 = 1e-5, 1e-4
        for n, l in [(1, 0), (3, 1), (5, 2)]:
            spec = state(n, l)
            value, d1, d2 = radial_R_derivatives(spec, r)
            np.testing.assert_allclose(value, radial_R(spec, r), rtol=1e-14)
            fd1 = (radial_R(spec, r + h1) - radial_R(spec, r - h1)) / (2.0 * h1)
            fd2 = (radial_R(spec, r + h2) - 2.0 * value + radial_R(spec, r - h2)) / h2**2
            np.testing.assert_allclose(d1, fd1, rtol=1e-8, atol=1e-10)
            np.testing.assert_allclose(d2, fd2, rtol=1e-6, atol=3e-7)

    def test_scale_invariance_under_unit_change(self):
        # With a = 1/2 every radial feature contracts by 2 and R rescales
        # by a^{-3/2}; check pointwise against the atomic-units curve.
        constants = PhysicalConstants(hbar=1.0, mass=1.0, coulomb=2.0)
        a = constants.bohr_radius
        r = np.linspace(0.1, 8.0, 25)
        scaled = radial_R(state(3, 1, constants=constants), r * a)
        reference = np.asarray(radial_R(state(3, 1), r)) * a ** (-1.5)
        np.testing.assert_allclose(scaled, reference, rtol=1e-13)


class TestFullWavefunction:
    def test_factorizes_into_radial_and_angular_parts(self):
        spec = state(3, 2, -1)
        r, theta, phi = 2.5, 0.9, 0.4
        expected = float(radial_R(spec, r)) * spherical_harmonic(2, -1, theta, phi)
        assert psi(spec, r, theta, phi) == pytest.approx(expected, rel=1e-13)

    def test_full_normalization(self):
        spec = state(2, 1, 1)
        nodes, weights = np.polynomial.legendre.leggauss(64)
        theta = np.arccos(nodes)
        total = 0.0
        for ct_weight, th in zip(weights, theta):
            radial = oracles.gauss_legendre_integral(
                lambda r, th=th: r**2 * np.abs(psi(spec, r, th, 0.0)) ** 2, 0.0, 60.0, points=300
            )
            total += ct_weight * radial
        assert total * 2.0 * math.pi == pytest.approx(1.0, rel=1e-9)


class TestSchrodingerResidual:
    def test_small_for_eigenpairs(self):
        grid = make_radial_grid(0.05, 240.0, 4000, law="logarithmic")
        for n, l in [(1, 0), (2, 1), (4, 0), (7, 3), (10, 9)]:
            assert schrodinger_residual(state(n, l), grid) < 1e-9

    def test_detects_wrong_energy(self):
        grid = make_radial_grid(0.05, 60.0, 2000, law="logarithmic")
        spec = state(2, 1)
        wrong = energy_level(2, AU) * (1.0 + 1e-3)
        assert schrodinger_residual(spec, grid, energy=wrong) > 1e-4


class TestRadialDistribution:
    def test_distribution_is_r2_R2(self):
        grid = make_radial_grid(0.1, 30.0, 200)
        spec = state(3, 2)
        profile = radial_distribution(spec, grid)
        expected = grid.points**2 * np.asarray(radial_R(spec, grid.points)) ** 2
        np.testing.assert_allclose(profile.values, expected, rtol=1e-14)
        assert profile.meaning == "P"

    def test_dP_dr_matches_difference_quotient(self):
        grid = make_radial_grid(0.5, 20.0, 100)
        spec = state(3, 1)
        slope = radial_profile(spec, grid, quantity="dP_dr").values
        h = 1e-6
        plus = (grid.points + h) ** 2 * np.asarray(radial_R(spec, grid.points + h)) ** 2
        minus = (grid.points - h) ** 2 * np.asarray(radial_R(spec, grid.points - h)) ** 2
        np.testing.assert_allclose(slope, (plus - minus) / (2.0 * h), rtol=1e-7, atol=1e-9)

    def test_unknown_quantity_rejected(self):
        with pytest.raises(ValueError):
            radial_profile(state(1, 0), make_radial_grid(0.1, 5.0, 10), quantity="Q")


class TestRadialPeaks:
    def test_circular_states_peak_at_n_squared(self):
        for n in range(1, 11):
            peaks = radial_peaks(state(n, n - 1))
            assert peaks.size == 1
            assert abs(peaks[0] - n**2) / n**2 < 1e-8

    def test_multi_peak_state_against_dense_scan(self):
        spec = state(3, 0)
        peaks = radial_peaks(spec)
        r = np.linspace(0.05, 40.0, 400001)
        dense = oracles.local_maxima(r, r**2 * np.asarray(radial_R(spec, r)) ** 2)
        assert len(dense) == len(peaks) == 3
        for found, scanned in zip(peaks, dense):
            assert abs(found - scanned) < 2.0 * (r[1] - r[0])

    def test_three_s_peak_positions(self):
        np.testing.assert_allclose(
            radial_peaks(state(3, 0)), [0.740037, 4.18593, 13.074033], rtol=1e-5
        )

    def test_peaks_scale_with_bohr_radius(self):
        constants = PhysicalConstants(hbar=1.0, mass=1.0, coulomb=2.0)
        scaled = radial_peaks(state(4, 3, constants=constants))
        assert scaled[0] == pytest.approx(16.0 * constants.bohr_radius, rel=1e-8)


class TestNodeMask:
    def test_masks_node_neighborhood_and_tail(self):
        r = np.linspace(0.1, 40.0, 2001)
        spec = state(2, 0)
        mask = node_mask(spec, r, floor=1e-3)
        node_zone = np.abs(r - 2.0) < 1e-3
        assert mask[node_zone].all()
        assert not mask[np.abs(r - 1.0) < 0.05].any()
        assert mask[-1]

    def test_nodeless_state_keeps_core_points(self):
        r = np.linspace(0.1, 10.0, 101)
        assert not node_mask(state(1, 0), r).any()


class TestOverlap:
    def test_orthonormality_for_low_states(self):
        states = [
            state(n, l, m)
            for n in range(1, 4)
            for l in range(n)
            for m in range(-l, l + 1)
        ]
        for i, left in enumerate(states):
            for right in states[i:]:
                value = overlap(left, right)
                expected = 1.0 if left is right else 0.0
                assert abs(value - expected) < 1e-6

    def test_overlap_is_conjugate_symmetric(self):
        a, b = state(3, 1, 1), state(4, 1, 1)
        assert overlap(a, b) == pytest.approx(np.conj(overlap(b, a)), abs=1e-12)
