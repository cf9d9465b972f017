"""Recurrence/series evaluators checked against independent constructions."""

import math
from fractions import Fraction

import numpy as np
import pytest

from hydrobohm import airy_ai, laguerre, laguerre_derivative, spherical_harmonic
from hydrobohm.specfun import LaguerreSpec, ln_factorial

import oracles


class TestLnFactorial:
    def test_matches_exact_log_of_factorial(self):
        for k in range(0, 40):
            assert ln_factorial(k) == pytest.approx(
                math.log(math.factorial(k)), rel=1e-14, abs=1e-14
            )

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            ln_factorial(-1)


class TestLaguerre:
    @pytest.mark.parametrize("k", [0, 1, 2, 3, 5, 9, 14])
    @pytest.mark.parametrize("alpha", [0, 1, 3, 7])
    def test_matches_exact_coefficient_series(self, k, alpha):
        for x in (Fraction(0), Fraction(1, 3), Fraction(7, 2), Fraction(25, 2), Fraction(-2)):
            exact = oracles.laguerre_series(k, alpha, x)
            computed = laguerre(k, alpha, float(x))
            assert computed == pytest.approx(float(exact), rel=1e-12, abs=1e-12)

    def test_vectorized_evaluation(self):
        x = np.linspace(0.0, 30.0, 101)
        values = laguerre(4, 2, x)
        assert values.shape == x.shape
        for xi, vi in zip(x[::20], values[::20]):
            exact = oracles.laguerre_series(4, 2, Fraction(xi).limit_denominator(10**12))
            assert vi == pytest.approx(float(exact), rel=1e-10)

    @pytest.mark.parametrize("order", [1, 2])
    def test_derivative_reduction_identity(self, order):
        # d^j/dx^j L_k^a = (-1)^j L_{k-j}^{a+j}
        x = np.linspace(0.0, 18.0, 37)
        for k in (2, 4, 7):
            for alpha in (0, 3):
                lhs = laguerre_derivative(k, alpha, x, order=order)
                rhs = (-1.0) ** order * laguerre(k - order, alpha + order, x)
                np.testing.assert_allclose(lhs, rhs, rtol=1e-13, atol=1e-13)

    def test_derivative_beyond_degree_is_zero(self):
        np.testing.assert_array_equal(laguerre_derivative(1, 2, np.array([0.5, 2.0]), order=2), 0.0)

    def test_derivative_matches_central_difference(self):
        x = np.linspace(0.5, 12.0, 24)
        h = 1e-6
        fd = (laguerre(6, 1, x + h) - laguerre(6, 1, x - h)) / (2.0 * h)
        np.testing.assert_allclose(laguerre_derivative(6, 1, x), fd, rtol=1e-7, atol=1e-7)

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            LaguerreSpec(-1, 0)
        with pytest.raises(ValueError):
            LaguerreSpec(2, -1)


class TestSphericalHarmonic:
    def test_explicit_low_order_values(self):
        # Textbook closed forms, including the Condon-Shortley sign.
        theta, phi = 0.7, 1.1
        ct, st = math.cos(theta), math.sin(theta)
        table = {
            (0, 0): 0.5 / math.sqrt(math.pi),
            (1, 0): math.sqrt(3.0 / (4.0 * math.pi)) * ct,
            (1, 1): -math.sqrt(3.0 / (8.0 * math.pi)) * st * np.exp(1j * phi),
            (2, 0): math.sqrt(5.0 / (16.0 * math.pi)) * (3.0 * ct**2 - 1.0),
            (2, 1): -math.sqrt(15.0 / (8.0 * math.pi)) * st * ct * np.exp(1j * phi),
            (2, 2): math.sqrt(15.0 / (32.0 * math.pi)) * st**2 * np.exp(2j * phi),
            (3, 0): math.sqrt(7.0 / (16.0 * math.pi)) * (5.0 * ct**3 - 3.0 * ct),
            (3, 3): -math.sqrt(35.0 / (64.0 * math.pi)) * st**3 * np.exp(3j * phi),
        }
        for (l, m), expected in table.items():
            computed = spherical_harmonic(l, m, theta, phi)
            assert computed == pytest.approx(expected, rel=1e-13, abs=1e-15)

    @pytest.mark.parametrize("l, m", [(1, 1), (3, 2), (5, 4), (8, 5), (10, 10)])
    def test_negative_m_conjugation(self, l, m):
        theta, phi = 1.234, 0.456
        plus = spherical_harmonic(l, m, theta, phi)
        minus = spherical_harmonic(l, -m, theta, phi)
        assert minus == pytest.approx((-1.0) ** m * np.conj(plus), rel=1e-12)

    @pytest.mark.parametrize("l, m", [(4, 1), (6, 3), (9, 7), (12, 0)])
    def test_polar_part_matches_exact_legendre_oracle(self, l, m):
        norm = math.sqrt(
            (2 * l + 1)
            / (4.0 * math.pi)
            * math.factorial(l - m)
            / math.factorial(l + m)
        )
        for x in (Fraction(1, 3), Fraction(-3, 5), Fraction(9, 10)):
            theta = math.acos(float(x))
            expected = norm * oracles.associated_legendre(l, m, x)
            computed = spherical_harmonic(l, m, theta, 0.0)
            assert computed.real == pytest.approx(expected, rel=1e-11, abs=1e-13)
            assert computed.imag == pytest.approx(0.0, abs=1e-15)

    def test_orthonormality_by_quadrature(self):
        nodes, weights = np.polynomial.legendre.leggauss(48)
        theta = np.arccos(nodes)
        phi = np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False)
        th, ph = np.meshgrid(theta, phi, indexing="ij")
        pairs = [((2, 1), (2, 1)), ((5, -3), (5, -3)), ((4, 2), (6, 2)), ((7, 0), (7, 0)), ((3, 1), (3, -1))]
        for (la, ma), (lb, mb) in pairs:
            ya = spherical_harmonic(la, ma, th, ph)
            yb = spherical_harmonic(lb, mb, th, ph)
            inner = np.sum(weights[None, :].T * np.conj(ya) * yb) * (2.0 * math.pi / phi.size)
            expected = 1.0 if (la, ma) == (lb, mb) else 0.0
            assert abs(inner - expected) < 1e-12

    def test_rejects_invalid_orders(self):
        with pytest.raises(ValueError):
            spherical_harmonic(-1, 0, 0.5, 0.0)
        with pytest.raises(ValueError):
            spherical_harmonic(2, 3, 0.5, 0.0)


class TestAiryAi:
    def test_value_at_zero_from_gamma_quadrature(self):
        # Ai(0) = 3^{-2/3} / Gamma(2/3), Ai'(0) = -3^{-1/3} / Gamma(1/3).
        expected = 3.0 ** (-2.0 / 3.0) / oracles.gamma_two_thirds()
        assert airy_ai(0.0) == pytest.approx(expected, rel=1e-12)

    def test_derivative_at_zero_from_gamma_quadrature(self):
        expected = -(3.0 ** (-1.0 / 3.0)) / oracles.gamma_one_third()
        h = np.longdouble(1e-5)
        zero = np.longdouble(0.0)
        fd = float((airy_ai(zero + h) - airy_ai(zero - h)) / (2.0 * h))
        assert fd == pytest.approx(expected, rel=1e-9)

    def test_satisfies_defining_ode_over_full_range(self):
        # y'' = x y, checked with second differences on a dense grid that
        # spans the series, stepped and asymptotic evaluation regimes.
        x = np.linspace(-10.0, 8.0, 18001).astype(np.longdouble)
        y = airy_ai(x)
        h = x[1] - x[0]
        second = (y[2:] - 2.0 * y[1:-1] + y[:-2]) / h**2
        residual = second - x[1:-1] * y[1:-1]
        envelope = np.maximum.accumulate(np.abs(y[::-1]))[::-1][1:-1]
        assert float(np.max(np.abs(residual) / envelope)) < 2e-5

    def test_monotone_decay_for_large_positive_argument(self):
        x = np.linspace(1.0, 20.0, 96)
        y = airy_ai(x)
        assert np.all(y > 0.0)
        assert np.all(np.diff(y) < 0.0)
        # Leading-order decay rate: Ai ~ exp(-2/3 x^{3/2}) / (2 sqrt(pi) x^{1/4}).
        zeta = 2.0 / 3.0 * 20.0**1.5
        leading = math.exp(-zeta) / (2.0 * math.sqrt(math.pi) * 20.0**0.25)
        assert airy_ai(20.0) == pytest.approx(leading, rel=1e-2)

    def test_oscillation_and_first_zero_location(self):
        # The first zero sits between -2.4 and -2.3; bracket it by sign change.
        assert airy_ai(-2.3) > 0.0
        assert airy_ai(-2.4) < 0.0
        x = np.linspace(-10.0, -2.0, 4001)
        signs = np.sign(airy_ai(x))
        assert np.count_nonzero(signs[1:] != signs[:-1]) == 6

    def test_scalar_and_array_round_trip(self):
        scalar = airy_ai(0.5)
        assert isinstance(scalar, np.float64)
        arr = airy_ai(np.array([0.5, -3.0]))
        assert arr.dtype == np.float64
        assert arr[0] == scalar
        long_arr = airy_ai(np.longdouble([0.5, -3.0]))
        assert long_arr.dtype == np.longdouble
        np.testing.assert_allclose(long_arr.astype(float), arr, rtol=1e-14)

    def test_rejects_arguments_outside_supported_range(self):
        for bad in (20.5, -20.5):
            with pytest.raises(ValueError, match="20"):
                airy_ai(bad)

    def test_station_regime_boundaries_are_continuous(self):
        # Values straddling the series/stepped and stepped/asymptotic edges
        # must agree up to the function's own slope over the tiny interval;
        # |Ai'| < 1 everywhere on these edges, so the residual bound is tight.
        eps = 1e-13
        for edge in (1.8, 9.0, -1.8, -9.0):
            lo, hi = airy_ai(edge - eps), airy_ai(edge + eps)
            assert abs(hi - lo) < 1e-11
