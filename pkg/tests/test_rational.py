"""Rational-function core: arithmetic, involution, splitting, pairing."""

import numpy as np
import pytest

from mst.rational import (
    fourier_block,
    CirclePoleError,
    ComplexPoly,
    RationalFn,
    circle_conjugate,
    equality_residual,
    fourier_coefficient,
    inner_product,
    norm2,
    rat_arith,
    riesz_project,
    unit_circle_samples,
)
from mst.sampling import random_rational


def rat(num, den=(1.0,)):
    return RationalFn(ComplexPoly(num), ComplexPoly(den))


Z = RationalFn.monomial(1)
ONE = RationalFn.one()


class TestArithmetic:
    def test_inverse_pair(self):
        f = rat([1.0], [1.0, -0.5])  # 1/(1 - z/2)
        g = rat([1.0, -0.5])
        assert rat_arith(f, g, "mul").isclose(ONE)

    def test_z_plus_zbar(self):
        f = Z + RationalFn.monomial(-1)
        assert f.isclose(rat([1.0, 0.0, 1.0], [0.0, 1.0]))

    def test_div_structure(self):
        f = rat_arith(ONE, rat([-2.0, 1.0]), "div")  # 1 / (z - 2)
        assert np.allclose(f.num.coeffs, [1.0])
        assert np.allclose(f.den.coeffs, [-2.0, 1.0])

    def test_div_by_zero_function(self):
        with pytest.raises(ZeroDivisionError):
            rat_arith(ONE, RationalFn.zero(), "div")

    def test_reduction_cancels_common_roots(self):
        num = ComplexPoly.from_roots([0.5, 2.0])
        den = ComplexPoly.from_roots([0.5, 3.0])
        f = RationalFn(num, den)
        assert f.isclose(rat([-2.0, 1.0], [-3.0, 1.0]), tol=1e-10)

    def test_circle_pole_rejected(self):
        with pytest.raises(CirclePoleError):
            rat([1.0], [-1.0, 1.0])  # pole at z = 1

    def test_monic_denominator(self):
        f = rat([1.0], [2.0, 4.0])
        assert abs(f.den.lead - 1.0) < 1e-15


class TestCircleConjugate:
    def test_z_maps_to_reciprocal(self):
        assert circle_conjugate(Z).isclose(RationalFn.monomial(-1))

    def test_constant(self):
        c = RationalFn(ComplexPoly([2.0 + 3.0j]))
        assert circle_conjugate(c).isclose(RationalFn(ComplexPoly([2.0 - 3.0j])))

    def test_cayley_like_example(self):
        # oracle: on 16 circle samples the involution is the pointwise conjugate
        f = rat([1.0], [1.0, -0.5])
        g = circle_conjugate(f)
        zs = unit_circle_samples(16)
        assert np.max(np.abs(g(zs) - np.conj(f(zs)))) < 1e-12
        assert g.isclose(rat([0.0, 2.0], [-1.0, 2.0]))  # 2z / (2z - 1)

    def test_involution_on_random(self):
        rng = np.random.default_rng(7)
        for _ in range(25):
            f = random_rational(rng)
            assert equality_residual(circle_conjugate(circle_conjugate(f)), f) < 1e-12


class TestRieszProjection:
    def test_laurent_polynomial(self):
        f = RationalFn.monomial(-1) + 2.0 + 3.0 * Z
        split = riesz_project(f)
        assert split.analytic.isclose(rat([2.0, 3.0]))
        assert split.antianalytic.isclose(RationalFn.monomial(-1))

    def test_pole_outside_is_analytic(self):
        f = rat([1.0], [-2.0, 1.0])
        split = riesz_project(f)
        assert split.analytic.isclose(f)
        assert split.antianalytic.is_zero

    def test_pole_inside_is_antianalytic(self):
        f = rat([1.0], [-0.5, 1.0])
        split = riesz_project(f)
        assert split.analytic.is_zero
        assert split.antianalytic.isclose(f)
        # oracle: FFT of boundary samples sees only negative frequencies
        m = 128
        coeffs = np.fft.fft(f(unit_circle_samples(m))) / m
        assert np.max(np.abs(coeffs[1 : m // 2])) < 1e-10
        assert abs(coeffs[0]) < 1e-10

    def test_reconstruction_and_idempotence(self):
        rng = np.random.default_rng(11)
        zs = unit_circle_samples(32)
        for _ in range(100):
            f = random_rational(rng)
            split = riesz_project(f)
            total = split.reconstruct()
            assert np.max(np.abs(total(zs) - f(zs))) < 1e-10
            again = riesz_project(split.analytic)
            assert equality_residual(again.analytic, split.analytic) < 1e-12
            assert again.antianalytic.is_zero

    def test_selfadjoint(self):
        rng = np.random.default_rng(13)
        for _ in range(40):
            f = random_rational(rng)
            g = random_rational(rng)
            lhs = inner_product(riesz_project(f).analytic, g)
            rhs = inner_product(f, riesz_project(g).analytic)
            assert abs(lhs - rhs) < 1e-10


class TestInnerProduct:
    def test_orthonormal_monomials(self):
        f = ONE + Z
        assert abs(inner_product(f, f) - 2.0) < 1e-14
        assert abs(inner_product(Z, ONE)) < 1e-14

    def test_szego_kernel_pairing(self):
        # oracle: geometric Fourier series sum((1/2)^k (1/3)^k)
        f = rat([1.0], [1.0, -0.5])
        g = rat([1.0], [1.0, -1.0 / 3.0])
        expected = sum((0.5 / 3.0) ** k for k in range(80))
        val = inner_product(f, g)
        assert abs(val - expected) < 1e-13
        assert abs(val - 1.2) < 1e-12

    def test_conjugate_symmetry_and_positivity(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            f = random_rational(rng)
            g = random_rational(rng)
            assert abs(inner_product(f, g) - np.conj(inner_product(g, f))) < 1e-10
            if not f.is_zero:
                assert inner_product(f, f).real > 0.0

    def test_parseval_cross_check(self):
        rng = np.random.default_rng(19)
        # poles at distance >= 0.2 from the circle: coefficient products decay
        # like 0.64^|n|, so |n| <= 80 leaves a tail far below 1e-12
        n_max = 80
        for _ in range(20):
            f = random_rational(rng)
            g = random_rational(rng)
            fb = fourier_block(f, n_max)
            gb = fourier_block(g, n_max)
            # independent oracle for single coefficients: the raw monomial pairing
            for n in range(-6, 7):
                direct = inner_product(f, RationalFn.monomial(n))
                assert abs(fb[n_max + n] - direct) < 1e-12
                assert abs(fourier_coefficient(f, n) - direct) < 1e-12
            total = np.sum(fb * np.conj(gb))
            assert abs(total - inner_product(f, g)) < 1e-10


class TestFourierCoefficients:
    def test_monomial(self):
        f = 3.0 * RationalFn.monomial(2)
        assert abs(fourier_coefficient(f, 2) - 3.0) < 1e-14

    def test_geometric(self):
        f = rat([1.0], [1.0, -0.5])
        assert abs(fourier_coefficient(f, 3) - 0.125) < 1e-14

    def test_negative_power(self):
        f = RationalFn.monomial(-1)
        assert abs(fourier_coefficient(f, 0)) < 1e-14
        assert abs(fourier_coefficient(f, -1) - 1.0) < 1e-14

    def test_norm(self):
        assert abs(norm2(ONE + Z) - np.sqrt(2.0)) < 1e-12
