"""Finite-dimensional model spaces, their bases, kernels, and multipliers.

The model space attached to a finite Blaschke product ``B`` is the
orthogonal complement of ``B * H^2`` inside the Hardy space; its dimension
equals the degree of ``B``.  The cached orthonormal basis is the
Takenaka-Malmquist family built from partial products over the zeros in
constructor order, so every basis element is an explicit rational function
and all projections reduce to exact pairings.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blaschke import BlaschkeProduct, frostman_shift, to_rational
from .rational import (
    ComplexPoly,
    RationalFn,
    _pair_with_conjugate,
    circle_conjugate,
    norm2,
    sup_on_circle,
)

__all__ = [
    "ModelSpace",
    "KernelPair",
    "NoMultiplierError",
    "build_space",
    "reproducing_kernels",
    "project",
    "complement_project",
    "multiplier_between",
    "crofoot_multiplier",
    "crofoot_isometry_check",
]

MEMBERSHIP_TOL = 1e-9


class NoMultiplierError(ValueError):
    """No bounded invertible multiplier exists between the two spaces."""


class ModelSpace:
    """Model space of a finite Blaschke product with its cached basis.

    Attributes
    ----------
    inner : BlaschkeProduct
        The defining inner function.
    basis : tuple of RationalFn
        Orthonormal Takenaka-Malmquist functions, one per zero.
    dim : int
        Degree of the inner function (0 gives the zero space).
    """

    def __init__(self, inner: BlaschkeProduct):
        self.inner = inner
        self.rational = to_rational(inner)
        n = inner.degree
        factors = [ComplexPoly([1.0, -np.conj(a)]) for a in inner.zeros]
        basis = []
        tm_nums = []
        tail_num = ComplexPoly([1.0])  # prod_{j<k} (z - a_j)
        tail_den = ComplexPoly([1.0])  # prod_{j<=k} (1 - conj(a_j) z)
        for k, a in enumerate(inner.zeros):
            weight = float(np.sqrt(1.0 - abs(a) ** 2))
            tail_den = tail_den * factors[k]
            tm_nums.append(tail_num.scaled(weight))
            basis.append(RationalFn(tm_nums[-1], tail_den))
            tail_num = tail_num * ComplexPoly([-a, 1.0])
        self.basis = tuple(basis)
        self.dim = n
        self._conj_basis = tuple(circle_conjugate(e) for e in self.basis)
        # Every element of the space is a polynomial of degree < n over the
        # full denominator; cofactors lift each basis numerator to it.  This
        # keeps linear combinations in a single reduced fraction instead of
        # stacking near-identical factors that no longer cancel numerically.
        self._den_full = tail_den
        cofactors = []
        tail = ComplexPoly([1.0])
        for k in range(n - 1, -1, -1):
            cofactors.append(tail)
            tail = tail * factors[k]
        cofactors.reverse()
        self._lifted_nums = tuple(
            tm_nums[k] * cofactors[k] for k in range(n)
        )

    def coordinates(self, f: RationalFn) -> np.ndarray:
        """Pairings of ``f`` against the basis (the coordinates of ``P f``)."""
        return np.array([_pair_with_conjugate(f, eb) for eb in self._conj_basis])

    def from_coordinates(self, coords) -> RationalFn:
        num = ComplexPoly()
        for c, lifted in zip(coords, self._lifted_nums):
            if c != 0:
                num = num + lifted.scaled(complex(c))
        if num.is_zero:
            return RationalFn.zero()
        return RationalFn(num, self._den_full)

    def project(self, f: RationalFn) -> RationalFn:
        return self.from_coordinates(self.coordinates(f))

    def complement_project(self, f: RationalFn) -> RationalFn:
        return f - self.project(f)

    def membership_residual(self, f: RationalFn) -> float:
        """Relative distance from ``f`` to the space."""
        return norm2(f - self.project(f)) / (1.0 + norm2(f))

    def contains(self, f: RationalFn, tol: float = MEMBERSHIP_TOL) -> bool:
        return self.membership_residual(f) < tol

    def gram(self) -> np.ndarray:
        n = self.dim
        g = np.zeros((n, n), dtype=complex)
        for j, e in enumerate(self.basis):
            g[:, j] = self.coordinates(e)
        return g

    def same_space(self, other: "ModelSpace") -> bool:
        return self.inner.same_space(other.inner)

    def __repr__(self):
        return f"ModelSpace(degree={self.dim}, zeros={self.inner.zeros!r})"


def build_space(b: BlaschkeProduct) -> ModelSpace:
    return ModelSpace(b)


def project(space: ModelSpace, f: RationalFn) -> RationalFn:
    return space.project(f)


def complement_project(space: ModelSpace, f: RationalFn) -> RationalFn:
    return space.complement_project(f)


@dataclass(frozen=True)
class KernelPair:
    """Reproducing kernel and its conjugate companion at one point."""

    k: RationalFn
    k_tilde: RationalFn
    point: complex


def reproducing_kernels(space: ModelSpace, point: complex) -> KernelPair:
    """Kernel pair at ``point``:

    ``k = (1 - conj(B(point)) B(z)) / (1 - conj(point) z)`` and
    ``k_tilde = (B(z) - B(point)) / (z - point)``.

    Boundary points are allowed: the numerators vanish where the
    denominators do and the reduction cancels the factor.
    """
    point = complex(point)
    if abs(point) > 1.0 + 1e-12:
        raise ValueError("kernel point must lie in the closed unit disk")
    theta = space.rational
    value = complex(theta(point)) if space.dim > 0 else complex(space.inner.constant)
    k = (RationalFn.one() - np.conj(value) * theta) / RationalFn(
        ComplexPoly([1.0, -np.conj(point)])
    )
    k_tilde = (theta - value) / RationalFn(ComplexPoly([-point, 1.0]))
    return KernelPair(k, k_tilde, point)


def multiplier_between(source: ModelSpace, target: ModelSpace, verify: bool = True) -> RationalFn:
    """Canonical invertible multiplier carrying ``source`` onto ``target``.

    Built from the outer denominators: ``a = prod(1 - conj(s_j) z) /
    prod(1 - conj(t_j) z)`` over the source and target zeros, so ``a`` and
    ``1/a`` are analytic on the closed disk and ``a(0) = 1`` pins the
    constant (multipliers are unique up to one).  Spaces of different
    dimensions admit no multiplier at all.
    """
    if source.dim != target.dim or source.dim == 0:
        raise NoMultiplierError(
            f"no multiplier between spaces of dimensions {source.dim} and {target.dim}"
        )
    num = ComplexPoly([1.0])
    for s in source.inner.zeros:
        num = num * ComplexPoly([1.0, -np.conj(s)])
    den = ComplexPoly([1.0])
    for t in target.inner.zeros:
        den = den * ComplexPoly([1.0, -np.conj(t)])
    a = RationalFn(num, den)
    if verify:
        for e in source.basis:
            if not target.contains(a * e):
                raise NoMultiplierError("constructed multiplier failed the range check")
    return a


def crofoot_multiplier(space: ModelSpace, w: complex):
    """Isometric multiplier ``sqrt(1 - |w|^2) / (1 - conj(w) B)`` onto the
    model space of the shifted product.  Returns ``(J, target_space)``."""
    w = complex(w)
    if abs(w) >= 1.0:
        raise ValueError("shift parameter must lie in the open unit disk")
    factor = float(np.sqrt(1.0 - abs(w) ** 2))
    j = factor * (RationalFn.one() - np.conj(w) * space.rational).inverse()
    target = ModelSpace(frostman_shift(space.inner, w))
    return j, target


def crofoot_isometry_check(
    b: BlaschkeProduct, h: RationalFn, k: complex, tol: float = 1e-10
) -> bool:
    """Whether the generalized Crofoot multiplier ``k / (1 - h B)`` maps the
    model space isometrically onto its image.

    The criterion is that the compression of ``1 - |J|^2`` to the model
    space vanishes; the symbol is formed as an exact rational function and
    tested entrywise.  Constant ``h`` with ``|k|^2 = 1 - |h|^2`` always
    passes; whether any non-constant ``h`` admits a valid ``k`` is checked
    per instance only, never answered in general.
    """
    from .operators import is_zero_symbol  # deferred: avoids a module cycle

    k = complex(k)
    if k == 0:
        raise ValueError("the constant k must be nonzero")
    for p in h.poles():
        if abs(p) < 1.0:
            raise ValueError("h must be analytic on the closed disk")
    if sup_on_circle(h) >= 1.0:
        raise ValueError("h must have sup norm < 1 (sampled estimate)")
    space = ModelSpace(b)
    theta = space.rational
    j = k * (RationalFn.one() - h * theta).inverse()
    symbol = RationalFn.one() - j * circle_conjugate(j)
    return is_zero_symbol(space, space, symbol, tol=tol)
