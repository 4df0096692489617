"""Matrix realizations of truncated Toeplitz operators and their
equivalences, conjugations, and rank-based normal forms.

Operators are stored as dense matrices in the orthonormal bases of their
domain and codomain model spaces, so operator identities become matrix
identities with quantified residuals.  Entry ``(i, j)`` is always the
pairing of the operator applied to the ``j``-th domain basis element
against the ``i``-th codomain basis element.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blaschke import BlaschkeProduct
from .modelspace import ModelSpace, multiplier_between
from .rational import RationalFn, _pair_with_conjugate, circle_conjugate, sup_on_circle

__all__ = [
    "OperatorMatrix",
    "ConjugationMatrix",
    "MultiplierRangeViolation",
    "NotEquivalentError",
    "EquivalenceTransform",
    "BrownHalmosCheck",
    "tto_matrix",
    "multiplication_matrix",
    "is_zero_symbol",
    "equivalence_transform",
    "brown_halmos_product",
    "conjugation_matrix",
    "is_complex_selfadjoint",
    "conjugation_pullback",
    "rank_equivalence",
    "kernel_and_range",
    "subspace_angle",
]

RANK_TOL = 1e-10


class MultiplierRangeViolation(ValueError):
    """The multiplier pushes some domain basis element outside the codomain."""


class NotEquivalentError(ValueError):
    """The two matrices have different ranks, so no equivalence exists."""


@dataclass
class OperatorMatrix:
    """Dense matrix tagged with its domain and codomain model spaces."""

    entries: np.ndarray
    domain: ModelSpace
    codomain: ModelSpace

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=complex)

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        if not self.domain.same_space(other.codomain):
            raise ValueError("composition mismatch: inner spaces differ")
        return OperatorMatrix(self.entries @ other.entries, other.domain, self.codomain)

    def apply(self, f: RationalFn) -> RationalFn:
        coords = self.entries @ self.domain.coordinates(f)
        return self.codomain.from_coordinates(coords)

    def frobenius(self) -> float:
        return float(np.linalg.norm(self.entries))

    def cond(self) -> float:
        if self.entries.size == 0:
            return 1.0
        return float(np.linalg.cond(self.entries))

    def inv(self) -> "OperatorMatrix":
        return OperatorMatrix(np.linalg.inv(self.entries), self.codomain, self.domain)


def tto_matrix(domain: ModelSpace, codomain: ModelSpace, symbol: RationalFn) -> OperatorMatrix:
    """Compression of multiplication by ``symbol`` between the two spaces."""
    entries = np.zeros((codomain.dim, domain.dim), dtype=complex)
    for j, e in enumerate(domain.basis):
        g = symbol * e
        for i, eb in enumerate(codomain._conj_basis):
            entries[i, j] = _pair_with_conjugate(g, eb)
    return OperatorMatrix(entries, domain, codomain)


def multiplication_matrix(
    domain: ModelSpace, codomain: ModelSpace, a: RationalFn, tol: float = 1e-9
) -> OperatorMatrix:
    """Exact matrix of ``f -> a f`` when ``a`` maps the domain into the
    codomain; rejects symbols that leak outside."""
    entries = np.zeros((codomain.dim, domain.dim), dtype=complex)
    for j, e in enumerate(domain.basis):
        g = a * e
        if codomain.membership_residual(g) >= tol:
            raise MultiplierRangeViolation(
                f"a * (basis element {j}) leaves the codomain "
                f"(residual {codomain.membership_residual(g):.3e})"
            )
        entries[:, j] = codomain.coordinates(g)
    return OperatorMatrix(entries, domain, codomain)


def is_zero_symbol(
    domain: ModelSpace, codomain: ModelSpace, symbol: RationalFn, tol: float = 1e-10
) -> bool:
    """Whether the compressed operator vanishes.

    For rational symbols this decides membership in the sum of the
    conjugate-shifted Hardy spaces attached to the two inner functions.
    """
    matrix = tto_matrix(domain, codomain, symbol)
    if matrix.entries.size == 0:
        return True
    bound = tol * (1.0 + sup_on_circle(symbol, 32))
    return float(np.max(np.abs(matrix.entries))) < bound


@dataclass
class EquivalenceTransform:
    """Factors realizing ``A = E @ B @ F`` across model spaces.

    ``tilde_symbol`` is the transported symbol; ``residual`` is the relative
    Frobenius defect of the identity on the given data.
    """

    E: OperatorMatrix
    F: OperatorMatrix
    tilde_symbol: RationalFn
    residual: float
    cond_E: float
    cond_F: float


def equivalence_transform(
    theta: BlaschkeProduct,
    alpha: BlaschkeProduct,
    eta: BlaschkeProduct,
    gamma: BlaschkeProduct,
    symbol: RationalFn,
) -> EquivalenceTransform:
    """Transport a compressed multiplication across multiplier pairs.

    Multiplier orientation (fixed here once and for all): ``a1`` multiplies
    the eta-space onto the theta-space and ``a2`` the gamma-space onto the
    alpha-space.  Then with ``tilde = conj(a2) * symbol * a1``,

    ``A(theta->alpha, symbol) = E @ A(eta->gamma, tilde) @ F``,

    where ``F`` is multiplication by ``1/a1`` from the theta-space to the
    eta-space and ``E`` is the compression of ``1/conj(a2)`` from the
    gamma-space to the alpha-space.  Both factors are invertible; their
    condition numbers are reported.
    """
    k_theta, k_alpha = ModelSpace(theta), ModelSpace(alpha)
    k_eta, k_gamma = ModelSpace(eta), ModelSpace(gamma)
    a1 = multiplier_between(k_eta, k_theta)
    a2 = multiplier_between(k_gamma, k_alpha)
    a2_bar = circle_conjugate(a2)
    tilde = a2_bar * symbol * a1
    e_mat = tto_matrix(k_gamma, k_alpha, a2_bar.inverse())
    f_mat = multiplication_matrix(k_theta, k_eta, a1.inverse())
    lhs = tto_matrix(k_theta, k_alpha, symbol)
    mid = tto_matrix(k_eta, k_gamma, tilde)
    rhs = e_mat @ mid @ f_mat
    residual = float(
        np.linalg.norm(lhs.entries - rhs.entries) / (1.0 + np.linalg.norm(lhs.entries))
    )
    return EquivalenceTransform(
        e_mat, f_mat, tilde, residual, e_mat.cond(), f_mat.cond()
    )


@dataclass
class BrownHalmosCheck:
    """Residual of the product-splitting identity plus the hypothesis flag.

    When ``hypothesis_ok`` is false the residual is still reported but the
    identity carries no guarantee.
    """

    residual: float
    hypothesis_ok: bool


def brown_halmos_product(
    k1: ModelSpace, mid: ModelSpace, k2: ModelSpace, psi: RationalFn, phi: RationalFn
) -> BrownHalmosCheck:
    """Check that the compression of ``psi * phi`` factors through ``mid``.

    The checkable hypothesis is ``phi * k1 rest mid`` (tested per basis
    element); under it the product of the two compressions reproduces the
    compression of the product.
    """
    hypothesis_ok = all(mid.contains(phi * e) for e in k1.basis)
    product = tto_matrix(k1, k2, psi * phi)
    left = tto_matrix(mid, k2, psi)
    right = tto_matrix(k1, mid, phi)
    diff = product.entries - (left @ right).entries
    residual = float(np.linalg.norm(diff) / (1.0 + np.linalg.norm(product.entries)))
    return BrownHalmosCheck(residual, hypothesis_ok)


@dataclass
class ConjugationMatrix:
    """Antilinear map ``v -> J conj(v)`` on one model space."""

    J: np.ndarray
    space: ModelSpace

    def __post_init__(self):
        self.J = np.asarray(self.J, dtype=complex)

    def unitarity_defect(self) -> float:
        n = self.J.shape[0]
        return float(np.linalg.norm(self.J.conj().T @ self.J - np.eye(n)))

    def involution_defect(self) -> float:
        n = self.J.shape[0]
        return float(np.linalg.norm(self.J @ np.conj(self.J) - np.eye(n)))


def conjugation_matrix(space: ModelSpace) -> ConjugationMatrix:
    """The canonical conjugation of the space: ``f -> B * conj(z f)`` on the
    circle, expanded exactly in the basis."""
    if space.dim < 1:
        raise ValueError("conjugation needs a space of dimension >= 1")
    theta = space.rational
    zbar = RationalFn.monomial(-1)
    n = space.dim
    j = np.zeros((n, n), dtype=complex)
    for col, e in enumerate(space.basis):
        image = theta * zbar * circle_conjugate(e)
        j[:, col] = space.coordinates(image)
    return ConjugationMatrix(j, space)


def is_complex_selfadjoint(
    a: OperatorMatrix, c: ConjugationMatrix, tol: float = 1e-9
) -> bool:
    """Whether conjugating ``a`` by the antilinear map gives its adjoint."""
    if a.entries.shape[0] != a.entries.shape[1]:
        raise ValueError("operator must be square")
    if not a.domain.same_space(c.space):
        raise ValueError("operator and conjugation live on different spaces")
    j = c.J
    lhs = j @ np.conj(a.entries) @ np.linalg.inv(j)
    rhs = a.entries.conj().T
    return float(np.linalg.norm(lhs - rhs)) < tol * (1.0 + float(np.linalg.norm(a.entries)))


def conjugation_pullback(
    c: ConjugationMatrix, f: OperatorMatrix, mode: str = "via_F"
) -> ConjugationMatrix:
    """Transport a conjugation along an invertible intertwiner ``f``.

    ``via_F`` conjugates by the inverse (``J' = F^-1 J conj(F)``);
    ``via_EF`` uses the adjoint instead (``J' = F^H J conj(F)``).  The
    result lives on the domain of ``f``.  It is only antilinear-unitary
    when ``J conj(F F^H) = F F^H J``; the caller is expected to test the
    returned candidate.
    """
    if not c.space.same_space(f.codomain):
        raise ValueError("conjugation must live on the codomain of the intertwiner")
    mat = f.entries
    if mat.shape[0] != mat.shape[1]:
        raise ValueError("intertwiner must be square")
    if np.linalg.cond(mat) > 1e12:
        raise np.linalg.LinAlgError("intertwiner is numerically singular")
    if mode == "via_F":
        j_new = np.linalg.inv(mat) @ c.J @ np.conj(mat)
    elif mode == "via_EF":
        j_new = mat.conj().T @ c.J @ np.conj(mat)
    else:
        raise ValueError(f"unknown pullback mode {mode!r}")
    return ConjugationMatrix(j_new, f.domain)


def pullback_compatibility_defect(c: ConjugationMatrix, f: OperatorMatrix) -> float:
    """Size of ``J conj(F F^H) - F F^H J``; zero exactly when the pullback
    candidates are antilinear-unitary."""
    frame = f.entries @ f.entries.conj().T
    return float(np.linalg.norm(c.J @ np.conj(frame) - frame @ c.J))


def _numeric_rank(s: np.ndarray, tol: float) -> int:
    if s.size == 0 or s[0] <= 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def rank_equivalence(a, b, rank_tol: float = RANK_TOL):
    """Invertible factors ``(E, F)`` with ``A = E B F`` when the ranks agree.

    Built from the two singular value decompositions: the nonzero singular
    values of ``B`` are rescaled onto those of ``A`` and the unitary frames
    are swapped.  Raises :class:`NotEquivalentError` on a rank mismatch.
    """
    a_mat = np.asarray(a.entries if isinstance(a, OperatorMatrix) else a, dtype=complex)
    b_mat = np.asarray(b.entries if isinstance(b, OperatorMatrix) else b, dtype=complex)
    if a_mat.shape != b_mat.shape or a_mat.shape[0] != a_mat.shape[1]:
        raise ValueError("matrices must be square and of equal size")
    n = a_mat.shape[0]
    ua, sa, vha = np.linalg.svd(a_mat)
    ub, sb, vhb = np.linalg.svd(b_mat)
    ra = _numeric_rank(sa, rank_tol)
    rb = _numeric_rank(sb, rank_tol)
    if ra != rb:
        raise NotEquivalentError(f"rank {ra} != rank {rb}")
    d = np.ones(n)
    d[:ra] = sa[:ra] / sb[:ra]
    e_mat = ua @ np.diag(d) @ ub.conj().T
    f_mat = vhb.conj().T @ vha
    return e_mat, f_mat


def kernel_and_range(a, rank_tol: float = RANK_TOL):
    """Null-space basis (right singular vectors) and numerical rank."""
    a_mat = np.asarray(a.entries if isinstance(a, OperatorMatrix) else a, dtype=complex)
    if a_mat.size == 0:
        return [], 0
    _, s, vh = np.linalg.svd(a_mat)
    rank = _numeric_rank(s, rank_tol)
    kernel = [vh[i].conj() for i in range(rank, vh.shape[0])]
    return kernel, rank


def subspace_angle(vectors_a, vectors_b) -> float:
    """Largest principal angle (radians) between the spans of two vector lists."""
    u = np.column_stack([np.asarray(v, dtype=complex) for v in vectors_a])
    v = np.column_stack([np.asarray(w, dtype=complex) for w in vectors_b])
    qu, _ = np.linalg.qr(u)
    qv, _ = np.linalg.qr(v)
    s = np.linalg.svd(qu.conj().T @ qv, compute_uv=False)
    s = np.clip(s, -1.0, 1.0)
    return float(np.arccos(np.min(s))) if s.size else 0.0
