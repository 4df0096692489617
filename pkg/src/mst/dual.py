"""Dual compressions on the complement of a model space.

The complement of a finite-dimensional model space inside ``L^2`` splits as
``B H^2`` plus the anti-analytic half; it is infinite dimensional, so no
matrix represents an operator on it faithfully.  Everything here therefore
works with explicit rational representatives carrying a verified split, and
identities are checked pointwise on documented probe families.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blaschke import (
    BlaschkeProduct,
    blaschke_gcd,
    blaschke_quotient,
    monomial_factorization,
    to_rational,
)
from .modelspace import ModelSpace, multiplier_between
from .rational import (
    ComplexPoly,
    RationalFn,
    circle_conjugate,
    fourier_coefficient,
    norm2,
    riesz_project,
    unit_circle_samples,
)

__all__ = [
    "ComplementElement",
    "DualKernel",
    "FormulaMismatch",
    "dual_apply",
    "dual_kernel",
    "dual_equivalence",
    "hankel_rank",
]

SPLIT_TOL = 1e-10
MEMBER_TOL = 1e-9


class FormulaMismatch(ArithmeticError):
    """A constructed kernel element failed its membership verification."""

    def __init__(self, message, element=None):
        super().__init__(message)
        self.element = element


@dataclass(frozen=True)
class ComplementElement:
    """Element of the complement of a model space, as a verified split.

    ``analytic`` must lie in ``B H^2`` (analytic, orthogonal to the model
    space) and ``antianalytic`` in the strictly negative-frequency half.
    """

    theta: BlaschkeProduct
    analytic: RationalFn
    antianalytic: RationalFn

    def __post_init__(self):
        space = ModelSpace(self.theta)
        anti_split = riesz_project(self.antianalytic)
        if norm2(anti_split.analytic) > SPLIT_TOL * (1.0 + norm2(self.antianalytic)):
            raise ValueError("antianalytic part has nonnegative frequencies")
        ana_split = riesz_project(self.analytic)
        if norm2(ana_split.antianalytic) > SPLIT_TOL * (1.0 + norm2(self.analytic)):
            raise ValueError("analytic part has negative frequencies")
        if norm2(space.project(self.analytic)) > MEMBER_TOL * (1.0 + norm2(self.analytic)):
            raise ValueError("analytic part is not orthogonal to the model space")

    def total(self) -> RationalFn:
        return self.analytic + self.antianalytic

    def __call__(self, z):
        return self.total()(z)


def dual_apply(
    theta: BlaschkeProduct,
    alpha: BlaschkeProduct,
    symbol: RationalFn,
    f: ComplementElement,
) -> ComplementElement:
    """Apply the complement compression of ``symbol`` to ``f``.

    Multiplies, removes the model-space component of the target, and splits
    the remainder back into its analytic and anti-analytic halves.
    """
    if not f.theta.same_space(theta):
        raise ValueError("element does not live on the stated complement")
    target = ModelSpace(alpha)
    g = symbol * f.total()
    remainder = g - target.project(g)
    split = riesz_project(remainder)
    return ComplementElement(alpha, split.analytic, split.antianalytic)


@dataclass(frozen=True)
class DualKernel:
    """Verified kernel data for the complement compression of
    ``alpha * (z - 1)`` on the complement of the theta-space."""

    basis: tuple
    dim: int
    k: int
    gamma: BlaschkeProduct


def dual_kernel(theta: BlaschkeProduct, alpha: BlaschkeProduct) -> DualKernel:
    """Kernel of the complement compression of ``alpha(z) (z - 1)``.

    With ``gamma`` the common inner factor of ``theta`` and ``z * alpha``
    and ``k`` the leftover degree, the kernel has dimension
    ``max(0, n - 1 - k)`` and is spanned by explicit anti-analytic
    functions.  Each candidate is verified (it must lie in the complement
    and be mapped into the model space); verification is authoritative, so
    a failing candidate raises :class:`FormulaMismatch` instead of being
    returned.
    """
    n = theta.degree
    if n < 1:
        raise ValueError("theta must have degree >= 1")
    z_alpha = BlaschkeProduct((0.0,) + alpha.zeros, alpha.constant)
    gamma = blaschke_gcd(theta, z_alpha)
    k = theta.degree - gamma.degree
    if n <= k + 1:
        return DualKernel((), 0, k, gamma)
    theta_over_gamma = blaschke_quotient(theta, gamma)
    plus = monomial_factorization(theta).plus
    conj_plus = circle_conjugate(plus)
    theta_rat = to_rational(theta)
    # conj of the leftover numerator: prod (z - w_j) reversed on the circle
    p_leftover = RationalFn(ComplexPoly.from_roots(np.array(theta_over_gamma.zeros)))
    conj_p = circle_conjugate(p_leftover)
    alpha_bar = circle_conjugate(to_rational(alpha))
    seed = conj_plus * theta_rat * conj_p * alpha_bar * RationalFn.monomial(-2)
    space = ModelSpace(theta)
    symbol = to_rational(alpha) * RationalFn(ComplexPoly([-1.0, 1.0]))
    basis = []
    for j in range(n - 1 - k):
        candidate = seed * RationalFn.monomial(-j)
        try:
            element = ComplementElement(theta, RationalFn.zero(), candidate)
        except ValueError as exc:
            raise FormulaMismatch(
                f"kernel candidate {j} is not a valid complement element: {exc}",
                candidate,
            ) from exc
        image = symbol * candidate
        if norm2(image - space.project(image)) > MEMBER_TOL * (1.0 + norm2(image)):
            raise FormulaMismatch(
                f"kernel candidate {j} is not annihilated by the compression",
                element,
            )
        basis.append(element)
    return DualKernel(tuple(basis), len(basis), k, gamma)


def _random_probe(theta: BlaschkeProduct, rng) -> ComplementElement:
    """Random normalized element of the complement: an analytic multiple of
    the inner function plus a short anti-analytic tail."""
    theta_rat = to_rational(theta)
    ana_coeffs = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    analytic = theta_rat * RationalFn(ComplexPoly(ana_coeffs))
    anti_coeffs = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    antianalytic = RationalFn(ComplexPoly(anti_coeffs), ComplexPoly.monomial(3))
    scale = 1.0 / max(norm2(analytic) + norm2(antianalytic), 1e-12)
    return ComplementElement(theta, scale * analytic, scale * antianalytic)


def dual_equivalence(
    theta: BlaschkeProduct,
    alpha: BlaschkeProduct,
    eta: BlaschkeProduct,
    gamma: BlaschkeProduct,
    symbol: RationalFn,
    probes: int = 10,
    seed: int = 0,
    _tilde_override: RationalFn = None,
) -> float:
    """Residual of the three-factor transport identity on the complements.

    The conjugate-analytic multipliers are built by conjugating the
    analytic ones: with ``a1`` carrying the eta-space onto the theta-space
    and ``a2`` the gamma-space onto the alpha-space, the chain

    ``compression(symbol) = compression(conj(a2)^-1) o
    compression(tilde) o compression(conj(a1))``

    with ``tilde = a2^-1 * symbol * conj(a1)^-1`` maps the theta-complement
    through the eta- and gamma-complements to the alpha-complement.  The
    returned value is the worst pointwise circle-sample residual over the
    probe family.  ``_tilde_override`` exists for negative controls.
    """
    a1 = multiplier_between(ModelSpace(eta), ModelSpace(theta))
    a2 = multiplier_between(ModelSpace(gamma), ModelSpace(alpha))
    a1_bar = circle_conjugate(a1)
    tilde = a2.inverse() * symbol * a1_bar.inverse()
    if _tilde_override is not None:
        tilde = _tilde_override
    rng = np.random.default_rng(seed)
    zs = unit_circle_samples(32)
    worst = 0.0
    for _ in range(probes):
        probe = _random_probe(theta, rng)
        lhs = dual_apply(theta, alpha, symbol, probe)
        step1 = dual_apply(theta, eta, a1_bar, probe)
        step2 = dual_apply(eta, gamma, tilde, step1)
        step3 = dual_apply(gamma, alpha, a2, step2)
        residual = float(np.max(np.abs(lhs(zs) - step3(zs))))
        worst = max(worst, residual)
    return worst


def hankel_rank(symbol: RationalFn, max_n: int) -> int:
    """Numerical rank of the finite Hankel section of the symbol.

    Entry ``(i, j)`` holds the Fourier coefficient at ``-i - j - 1``; the
    rank stabilizes at the number of poles inside the disk (with
    multiplicity) once the section is large enough.
    """
    if max_n < 1:
        return 0
    coeffs = np.array(
        [fourier_coefficient(symbol, -m) for m in range(1, 2 * max_n)]
    )
    h = np.empty((max_n, max_n), dtype=complex)
    for i in range(max_n):
        h[i, :] = coeffs[i : i + max_n]
    s = np.linalg.svd(h, compute_uv=False)
    if s.size == 0 or s[0] <= 0.0:
        return 0
    return int(np.sum(s > 1e-10 * s[0]))
