# Rational calculus on the unit circle: the atoms everything else is built on.
#
# Every object in the library is a quotient of complex polynomials with no
# poles on the circle.  This script walks through the four primitive
# operations: field arithmetic, the circle involution, the analytic /
# anti-analytic splitting, and the L^2 pairing.

import numpy as np

from mst import (
    ComplexPoly,
    RationalFn,
    circle_conjugate,
    fourier_coefficient,
    inner_product,
    riesz_project,
    unit_circle_samples,
)

# --- arithmetic is exact field arithmetic on reduced fractions --------------
f = RationalFn(ComplexPoly([1.0]), ComplexPoly([1.0, -0.5]))  # 1 / (1 - z/2)
g = RationalFn(ComplexPoly([1.0, -0.5]))                       # 1 - z/2
print("f * g reduces to the constant 1:", (f * g).num.coeffs, "/", (f * g).den.coeffs)

# --- the involution g(z) = conj(f(1/conj(z))) -------------------------------
# On |z| = 1 this is the pointwise complex conjugate; as a rational identity
# it reverses the coefficient lists.
fbar = circle_conjugate(f)
zs = unit_circle_samples(16)
print("max |fbar(z) - conj(f(z))| on the circle:",
      np.max(np.abs(fbar(zs) - np.conj(f(zs)))))

# --- the splitting into nonnegative and negative frequencies ----------------
# A pole inside the disk contributes only negative frequencies; a pole
# outside (and any polynomial part) only nonnegative ones.
h = RationalFn(ComplexPoly([1.0]), ComplexPoly([-0.5, 1.0]))   # 1 / (z - 1/2)
split = riesz_project(h)
print("analytic part of 1/(z - 1/2):", "zero" if split.analytic.is_zero else "nonzero")
print("anti-analytic part equals the input:",
      np.max(np.abs(split.antianalytic(zs) - h(zs))))

mixed = RationalFn.monomial(-1) + 2.0 + 3.0 * RationalFn.monomial(1)
split = riesz_project(mixed)
print("split of 1/z + 2 + 3z:",
      "analytic:", split.analytic.num.coeffs,
      "anti num/den:", split.antianalytic.num.coeffs, split.antianalytic.den.coeffs)

# --- the pairing against normalized Lebesgue measure -------------------------
# Geometric-series oracle: <1/(1 - z/2), 1/(1 - z/3)> = sum (1/6)^k = 6/5.
k_half = RationalFn(ComplexPoly([1.0]), ComplexPoly([1.0, -0.5]))
k_third = RationalFn(ComplexPoly([1.0]), ComplexPoly([1.0, -1.0 / 3.0]))
print("szego pairing:", inner_product(k_half, k_third), "(expected 1.2)")

# Fourier coefficients come from the same machinery.
print("coefficient 3 of 1/(1 - z/2):", fourier_coefficient(k_half, 3), "(expected 1/8)")
