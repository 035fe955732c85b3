"""Quadratic cocycles (alpha, gamma) and the admissibility test.

A quadratic cocycle on a Lie algebra ``l`` with values in an orthogonal
module ``a`` is a pair of a module valued 2-form ``alpha`` and a scalar
3-form ``gamma`` with

    d alpha = 0   and   d gamma = 1/2 <alpha ^ alpha>.

Pairs (tau, sigma) of a module valued 1-form and a scalar 2-form act on
cocycles from the right; the cochain pairs form a group under

    (tau1, sigma1) * (tau2, sigma2)
        = (tau1 + tau2, sigma1 + sigma2 + 1/2 <tau1 ^ tau2>).

The admissibility test decides whether a cocycle gives rise to an
indecomposable metric double; it checks, for every stage k of the central
filtration, a linear condition (A_k) ruling out central directions that
alpha and gamma cannot see, and a nondegeneracy condition (B_k) on the
alpha-image of the kernel of the bracket pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cochain_complex import (
    Cochain,
    OrthogonalModule,
    differential,
    rho_kernel_space,
    validate_module,
    wedge_pair,
)
from .exact_linalg import (
    Matrix,
    Vector,
    echelon_basis,
    is_nondegenerate_on_span,
    kernel_basis,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vector,
)
from .lie_core import LieAlgebra, Subspace, filtration_spaces, is_nilpotent, lower_central_series

_HALF = Fraction(1, 2)


class CocycleError(ValueError):
    """Raised when (alpha, gamma) fails the quadratic cocycle conditions."""


class AdmissibilityPreconditionError(ValueError):
    """Raised when the admissibility test is applied outside its domain."""


def half_wedge_square(module: OrthogonalModule, alpha: Cochain) -> Cochain:
    return wedge_pair(module, alpha, alpha).scale(_HALF)


def cocycle_defect(
    l: LieAlgebra, module: OrthogonalModule, alpha: Cochain, gamma: Cochain
) -> tuple[str, tuple[int, ...]] | None:
    """The first failing cocycle condition, or None when both hold.

    Returns ``("d_alpha", key)`` for a nonzero component of d alpha and
    ``("gamma_equation", key)`` for a 4-tuple where d gamma and the half
    wedge square disagree.
    """
    d_alpha = differential(l, module, alpha)
    if not d_alpha.is_zero():
        return ("d_alpha", min(d_alpha.values))
    residual = differential(l, None, gamma) - half_wedge_square(module, alpha)
    if not residual.is_zero():
        return ("gamma_equation", min(residual.values))
    return None


@dataclass
class QuadraticCochain:
    """A pair (tau, sigma): module valued 1-form and scalar 2-form."""

    algebra: LieAlgebra
    module: OrthogonalModule
    tau: Cochain
    sigma: Cochain

    def __post_init__(self) -> None:
        n, m = self.algebra.dim, self.module.dim
        if (self.tau.n, self.tau.degree, self.tau.value_dim, self.tau.scalar) != (n, 1, m, False):
            raise ValueError("tau must be a module valued 1-form on the algebra")
        if (self.sigma.n, self.sigma.degree, self.sigma.scalar) != (n, 2, True):
            raise ValueError("sigma must be a scalar 2-form on the algebra")


@dataclass
class QuadraticCocycle:
    """A validated quadratic cocycle (alpha, gamma)."""

    algebra: LieAlgebra
    module: OrthogonalModule
    alpha: Cochain
    gamma: Cochain

    def __post_init__(self) -> None:
        n, m = self.algebra.dim, self.module.dim
        if (self.alpha.n, self.alpha.degree, self.alpha.value_dim, self.alpha.scalar) != (
            n,
            2,
            m,
            False,
        ):
            raise ValueError("alpha must be a module valued 2-form on the algebra")
        if (self.gamma.n, self.gamma.degree, self.gamma.scalar) != (n, 3, True):
            raise ValueError("gamma must be a scalar 3-form on the algebra")
        validate_module(self.algebra, self.module)
        defect = cocycle_defect(self.algebra, self.module, self.alpha, self.gamma)
        if defect is not None:
            kind, key = defect
            raise CocycleError("%s fails at basis tuple %s" % (kind, key))


def zero_cocycle(l: LieAlgebra, module: OrthogonalModule) -> QuadraticCocycle:
    return QuadraticCocycle(
        l,
        module,
        Cochain.zero(l.dim, 2, module.dim),
        Cochain.zero(l.dim, 3, 1, scalar=True),
    )


def cq_identity(l: LieAlgebra, module: OrthogonalModule) -> QuadraticCochain:
    return QuadraticCochain(
        l,
        module,
        Cochain.zero(l.dim, 1, module.dim),
        Cochain.zero(l.dim, 2, 1, scalar=True),
    )


def cq_compose(c1: QuadraticCochain, c2: QuadraticCochain) -> QuadraticCochain:
    if c1.algebra != c2.algebra or c1.module != c2.module:
        raise ValueError("cochains live over different data")
    cross = wedge_pair(c1.module, c1.tau, c2.tau).scale(_HALF)
    return QuadraticCochain(
        c1.algebra, c1.module, c1.tau + c2.tau, c1.sigma + c2.sigma + cross
    )


def cq_inverse(c: QuadraticCochain) -> QuadraticCochain:
    square = wedge_pair(c.module, c.tau, c.tau).scale(_HALF)
    return QuadraticCochain(c.algebra, c.module, c.tau.scale(-1), c.sigma.scale(-1) + square)


def act(z: QuadraticCocycle, c: QuadraticCochain) -> QuadraticCocycle:
    """Right action of a quadratic cochain on a quadratic cocycle.

    The result is validated on construction; a validation failure here would
    indicate an internal sign inconsistency, not bad input.
    """
    if z.algebra != c.algebra or z.module != c.module:
        raise ValueError("cocycle and cochain live over different data")
    d_tau = differential(z.algebra, z.module, c.tau)
    alpha = z.alpha + d_tau
    mixed = wedge_pair(z.module, z.alpha + d_tau.scale(_HALF), c.tau)
    gamma = z.gamma + differential(z.algebra, None, c.sigma) + mixed
    return QuadraticCocycle(z.algebra, z.module, alpha, gamma)


def verify_equivalence_witness(
    z1: QuadraticCocycle, z2: QuadraticCocycle, c: QuadraticCochain
) -> bool:
    """Whether acting on z1 by c lands exactly on z2."""
    moved = act(z1, c)
    return moved.alpha == z2.alpha and moved.gamma == z2.gamma


def check_invariant_valued(l: LieAlgebra, module: OrthogonalModule, alpha: Cochain) -> bool:
    """Whether every value of alpha is fixed by the module action."""
    if module.action is None:
        return True
    if len(module.action) != l.dim:
        raise ValueError("module action does not match the algebra dimension")
    for value in alpha.values.values():
        for rho in module.action:
            if not vec_is_zero(rho.apply(value)):
                return False
    return True


@dataclass(frozen=True)
class ConditionKReport:
    """Verdicts for one filtration stage k.

    ``a_witness`` carries (L0, A0, Z0) for a failing (A_k): a nonzero central
    direction L0 together with compatible module and functional parts (Z0 is
    given by its values on the echelon basis of the (k+1)-st series term).
    ``b_witness`` lists kernel tensors (as coefficient matrices over the
    tensor basis) whose alpha-image spans a degenerate subspace.
    """

    k: int
    a_passed: bool
    b_passed: bool
    b_image_dim: int
    a_witness: tuple[Vector, Vector, Vector] | None = None
    b_witness: tuple[tuple[Vector, ...], ...] | None = None


@dataclass(frozen=True)
class AdmissibilityReport:
    overall: bool
    conditions: tuple[ConditionKReport, ...]

    def condition(self, k: int) -> ConditionKReport:
        return self.conditions[k]


def _alpha_on_basis_and_vector(alpha: Cochain, i: int, w: Vector) -> Vector:
    """alpha(e_i, w) for a basis index and an arbitrary vector."""
    out = zero_vector(alpha.value_dim)
    for k, coeff in enumerate(w):
        if coeff == 0:
            continue
        term = alpha.value_at((i, k))
        if not vec_is_zero(term):
            out = vec_add(out, vec_scale(coeff, term))
    return out


def _gamma_on_basis_and_vectors(gamma: Cochain, i: int, u: Vector, w: Vector) -> Fraction:
    """gamma(e_i, u, w) for a basis index and two arbitrary vectors."""
    total = Fraction(0)
    for a, ca in enumerate(u):
        if ca == 0:
            continue
        for b, cb in enumerate(w):
            if cb == 0:
                continue
            v = gamma.value_at((i, a, b))
            if not vec_is_zero(v):
                total += ca * cb * v[0]
    return total


def _condition_a(
    z: QuadraticCocycle, stage: Subspace, series_term: Subspace, k: int
) -> tuple[bool, tuple[Vector, Vector, Vector] | None]:
    """(A_k): any L0 in the stage admitting compatible (A0, Z0) must be zero.

    The constraints are linear in (L0, A0, Z0) jointly, so the condition
    amounts to the kernel of one big system projecting to zero on the L0
    block.
    """
    l, module = z.algebra, z.module
    n, m = l.dim, module.dim
    d0 = stage.dim
    d1 = series_term.dim
    if d0 == 0:
        return True, None
    unknowns = d0 + m + d1
    rows: list[list[Fraction]] = []
    for i in range(n):
        # alpha(e_i, L0) = 0, one scalar row per module coordinate
        alpha_cols = [_alpha_on_basis_and_vector(z.alpha, i, b) for b in stage.basis]
        for t in range(m):
            row = [alpha_cols[u][t] for u in range(d0)] + [Fraction(0)] * (m + d1)
            rows.append(row)
        # gamma(e_i, L0, w) + <A0, alpha(e_i, w)> - Z0([e_i, w]) = 0
        for j, w in enumerate(series_term.basis):
            row = [_gamma_on_basis_and_vectors(z.gamma, i, b, w) for b in stage.basis]
            alpha_iw = _alpha_on_basis_and_vector(z.alpha, i, w)
            paired = module.gram.apply(alpha_iw)
            row += list(paired)
            bw = _bracket_with_basis(l, i, w)
            coords = series_term.coords(bw)
            if coords is None:
                raise AssertionError("bracket left the series term, series data corrupt")
            row += [-coords[t] for t in range(d1)]
            rows.append(row)
    system = Matrix.from_rows(rows, cols=unknowns)
    for vec in kernel_basis(system):
        head = vec[:d0]
        if not vec_is_zero(head):
            l0 = zero_vector(n)
            for u in range(d0):
                l0 = vec_add(l0, vec_scale(vec[u], stage.basis[u]))
            a0 = vec[d0 : d0 + m]
            z0 = vec[d0 + m :]
            return False, (l0, a0, z0)
    return True, None


def _bracket_with_basis(l: LieAlgebra, i: int, w: Vector) -> Vector:
    out = zero_vector(l.dim)
    for k, coeff in enumerate(w):
        if coeff == 0:
            continue
        v = l.basis_bracket(i, k)
        if not vec_is_zero(v):
            out = vec_add(out, vec_scale(coeff, v))
    return out


def _condition_b(
    z: QuadraticCocycle, series_term: Subspace, k: int
) -> tuple[bool, int, tuple[tuple[Vector, ...], ...] | None]:
    """(B_k): alpha maps the kernel of the bracket pairing l (x) l^(k+1) -> l
    onto a nondegenerate subspace of the module."""
    l, module = z.algebra, z.module
    n = l.dim
    d1 = series_term.dim
    tensor_basis = [(i, j) for i in range(n) for j in range(d1)]
    if tensor_basis:
        bracket_matrix = Matrix.from_rows(
            [list(_bracket_with_basis(l, i, series_term.basis[j])) for (i, j) in tensor_basis],
            cols=n,
        ).transpose()
        kernel = kernel_basis(bracket_matrix)
    else:
        kernel = []
    alpha_on_tensor = [
        _alpha_on_basis_and_vector(z.alpha, i, series_term.basis[j]) for (i, j) in tensor_basis
    ]
    images: list[Vector] = []
    for vec in kernel:
        img = zero_vector(module.dim)
        for t, coeff in enumerate(vec):
            if coeff != 0:
                img = vec_add(img, vec_scale(coeff, alpha_on_tensor[t]))
        images.append(img)
    image_dim = len(echelon_basis(images, module.dim))
    if is_nondegenerate_on_span(module.gram, images):
        return True, image_dim, None
    witness = tuple(
        tuple(vec[i * d1 : (i + 1) * d1] for i in range(n)) for vec in kernel
    )
    return False, image_dim, witness


def check_admissible(z: QuadraticCocycle) -> AdmissibilityReport:
    """Run (A_k) and (B_k) for every stage k = 0..m of the central filtration.

    Preconditions: the algebra is nilpotent and alpha takes values in the
    invariants of the module action.
    """
    l, module = z.algebra, z.module
    if not is_nilpotent(l):
        raise AdmissibilityPreconditionError("admissibility is defined for nilpotent algebras")
    if not check_invariant_valued(l, module, z.alpha):
        raise AdmissibilityPreconditionError("alpha must take invariant values")
    series, _ = lower_central_series(l)
    stages = filtration_spaces(l, rho_kernel_space(l, module))
    conditions: list[ConditionKReport] = []
    overall = True
    for k, stage in enumerate(stages):
        series_term = series[k]  # l^(k+1)
        a_passed, a_witness = _condition_a(z, stage, series_term, k)
        b_passed, image_dim, b_witness = _condition_b(z, series_term, k)
        overall = overall and a_passed and b_passed
        conditions.append(
            ConditionKReport(
                k=k,
                a_passed=a_passed,
                b_passed=b_passed,
                b_image_dim=image_dim,
                a_witness=a_witness,
                b_witness=b_witness,
            )
        )
    return AdmissibilityReport(overall=overall, conditions=tuple(conditions))


def indecomposability_proxy(z: QuadraticCocycle) -> bool:
    """Necessary condition for indecomposability: the values of alpha span
    the whole module."""
    span = echelon_basis(list(z.alpha.values.values()), z.module.dim)
    return len(span) == z.module.dim
