"""Finite dimensional Lie algebras over the rationals.

A Lie algebra is stored through its antisymmetric structure constants: a
sparse map from index pairs ``(i, j)`` with ``i < j`` to the coordinate
vector of ``[e_i, e_j]``.  The Jacobi identity is checked eagerly on
construction; a constructor flag disables the check so that tests can build
deliberately broken tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exact_linalg import (
    Matrix,
    Vector,
    echelon_basis,
    kernel_basis,
    stack_rows,
    unit_vector,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    vector,
    zero_vector,
)


class JacobiError(ValueError):
    """Raised when a structure constant table violates the Jacobi identity."""


class NotNilpotentError(ValueError):
    """Raised by operations that are only defined for nilpotent algebras."""


@dataclass(frozen=True)
class JacobiReport:
    """Outcome of a Jacobi check: either a pass or the first failing triple."""

    ok: bool
    triple: tuple[int, int, int] | None = None
    defect: Vector | None = None


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n, canonicalized to a reduced echelon basis."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    @staticmethod
    def span(ambient_dim: int, vectors: Iterable[Vector]) -> "Subspace":
        return Subspace(ambient_dim, echelon_basis(vectors, ambient_dim))

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace.span(ambient_dim, [unit_vector(ambient_dim, i) for i in range(ambient_dim)])

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, v: Vector) -> Vector | None:
        """Coordinates of ``v`` in the echelon basis, or None if outside."""
        if len(v) != self.ambient_dim:
            raise ValueError("vector does not live in the ambient space")
        pivots = [next(j for j, x in enumerate(row) if x != 0) for row in self.basis]
        coeffs = tuple(v[p] for p in pivots)
        residual = v
        for c, row in zip(coeffs, self.basis):
            residual = vec_sub(residual, vec_scale(c, row))
        if not vec_is_zero(residual):
            return None
        return coeffs

    def contains(self, v: Vector) -> bool:
        return self.coords(v) is not None

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        # Solve B^T u = C^T w: kernel of the block matrix [B^T | -C^T].
        n = self.ambient_dim
        cols = self.dim + other.dim
        entries = []
        for i in range(n):
            row = [self.basis[u][i] for u in range(self.dim)]
            row += [-other.basis[w][i] for w in range(other.dim)]
            entries.append(row)
        ker = kernel_basis(Matrix.from_rows(entries, cols=cols))
        vectors = []
        for k in ker:
            v = zero_vector(n)
            for u in range(self.dim):
                v = vec_add(v, vec_scale(k[u], self.basis[u]))
            vectors.append(v)
        return Subspace.span(n, vectors)


@dataclass(frozen=True)
class SeriesProfile:
    """Dimensions along the lower central series, ending at 0 for nilpotent
    algebras and at a repeated value when the series stabilizes instead."""

    dims: tuple[int, ...]


class LieAlgebra:
    """A Lie algebra given by sparse antisymmetric structure constants."""

    def __init__(
        self,
        dim: int,
        brackets: Mapping[tuple[int, int], Sequence[int | str | Fraction]],
        labels: Sequence[str] | None = None,
        validate: bool = True,
    ) -> None:
        if dim < 0:
            raise ValueError("negative dimension")
        if labels is None:
            labels = tuple("X%d" % (i + 1) for i in range(dim))
        else:
            labels = tuple(labels)
            if len(labels) != dim:
                raise ValueError("expected %d labels, got %d" % (dim, len(labels)))
        table: dict[tuple[int, int], Vector] = {}
        for (i, j), value in brackets.items():
            if not (0 <= i < j < dim):
                raise ValueError("bracket key (%d, %d) must satisfy 0 <= i < j < dim" % (i, j))
            v = vector(value)
            if len(v) != dim:
                raise ValueError("bracket value for (%d, %d) has wrong length" % (i, j))
            if not vec_is_zero(v):
                table[(i, j)] = v
        self.dim = dim
        self.labels = labels
        self.brackets = table
        if validate:
            report = validate_jacobi(self)
            if not report.ok:
                raise JacobiError(
                    "Jacobi identity fails on basis triple %s with defect %s"
                    % (report.triple, report.defect)
                )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.labels == other.labels
            and self.brackets == other.brackets
        )

    def __repr__(self) -> str:
        return "LieAlgebra(dim=%d, brackets=%d)" % (self.dim, len(self.brackets))

    def basis_bracket(self, i: int, j: int) -> Vector:
        """[e_i, e_j] for arbitrary basis indices."""
        if i == j:
            return zero_vector(self.dim)
        if i < j:
            return self.brackets.get((i, j), zero_vector(self.dim))
        v = self.brackets.get((j, i))
        return zero_vector(self.dim) if v is None else vec_scale(-1, v)


def abelian(dim: int, labels: Sequence[str] | None = None) -> LieAlgebra:
    return LieAlgebra(dim, {}, labels=labels)


def bracket(l: LieAlgebra, x: Vector, y: Vector) -> Vector:
    """Bilinear extension of the structure constants."""
    if len(x) != l.dim or len(y) != l.dim:
        raise ValueError("argument does not live in the algebra")
    out = zero_vector(l.dim)
    for (i, j), v in l.brackets.items():
        c = x[i] * y[j] - x[j] * y[i]
        if c != 0:
            out = vec_add(out, vec_scale(c, v))
    return out


def ad_matrix(l: LieAlgebra, i: int) -> Matrix:
    """Matrix of ad(e_i): columns are [e_i, e_j]."""
    cols = [l.basis_bracket(i, j) for j in range(l.dim)]
    return Matrix.from_rows(cols, cols=l.dim).transpose()


def validate_jacobi(l: LieAlgebra) -> JacobiReport:
    """Check the Jacobi identity on all basis triples i < j < k."""
    for i in range(l.dim):
        for j in range(i + 1, l.dim):
            for k in range(j + 1, l.dim):
                defect = vec_add(
                    vec_add(
                        bracket(l, unit_vector(l.dim, i), l.basis_bracket(j, k)),
                        bracket(l, unit_vector(l.dim, j), l.basis_bracket(k, i)),
                    ),
                    bracket(l, unit_vector(l.dim, k), l.basis_bracket(i, j)),
                )
                if not vec_is_zero(defect):
                    return JacobiReport(ok=False, triple=(i, j, k), defect=defect)
    return JacobiReport(ok=True)


def lower_central_series(l: LieAlgebra) -> tuple[tuple[Subspace, ...], SeriesProfile]:
    """Terms of the lower central series, starting with the whole algebra.

    The list ends with the zero subspace for nilpotent algebras and with a
    repeated term when the series stabilizes at a nonzero ideal.
    """
    current = Subspace.full(l.dim)
    chain = [current]
    dims = [current.dim]
    while dims[-1] > 0:
        generators = [
            bracket(l, unit_vector(l.dim, i), w) for i in range(l.dim) for w in current.basis
        ]
        nxt = Subspace.span(l.dim, generators)
        chain.append(nxt)
        dims.append(nxt.dim)
        if nxt.dim == current.dim:
            break  # stabilized, not nilpotent
        current = nxt
    return tuple(chain), SeriesProfile(tuple(dims))


def is_nilpotent(l: LieAlgebra) -> bool:
    _, profile = lower_central_series(l)
    return profile.dims[-1] == 0


def center(l: LieAlgebra) -> Subspace:
    """Kernel of the adjoint action, canonicalized."""
    if l.dim == 0:
        return Subspace.zero(0)
    stacked = stack_rows([ad_matrix(l, i) for i in range(l.dim)])
    return Subspace.span(l.dim, kernel_basis(stacked))


def nilpotency_index(l: LieAlgebra) -> int:
    """The minimal m with l^(m+2) = 0 (so m = 0 for abelian algebras)."""
    _, profile = lower_central_series(l)
    if profile.dims[-1] != 0:
        raise NotNilpotentError("algebra is not nilpotent")
    first_zero = profile.dims.index(0)  # dims[k] = dim l^(k+1)
    return first_zero - 1


def filtration_spaces(l: LieAlgebra, rho_kernel: Subspace | None = None) -> list[Subspace]:
    """Central filtration used by the admissibility test.

    Returns ``[l_(0), ..., l_(m)]`` where ``l_(0)`` is the intersection of the
    center with ``rho_kernel`` (the whole algebra for a trivial action) and
    ``l_(k)`` is the intersection of the center with the (k+1)-st lower
    central series term, with m minimal such that l^(m+2) = 0.
    """
    series, profile = lower_central_series(l)
    if profile.dims[-1] != 0:
        raise NotNilpotentError("filtration spaces require a nilpotent algebra")
    m = profile.dims.index(0) - 1
    z = center(l)
    if rho_kernel is None:
        rho_kernel = Subspace.full(l.dim)
    spaces = [z.intersect(rho_kernel)]
    for k in range(1, m + 1):
        spaces.append(z.intersect(series[k]))  # series[k] = l^(k+1)
    return spaces


def direct_sum(l1: LieAlgebra, l2: LieAlgebra) -> LieAlgebra:
    """Direct sum of Lie algebras; labels are prefixed to stay unique."""
    n1, n2 = l1.dim, l2.dim
    table: dict[tuple[int, int], Vector] = {}
    for (i, j), v in l1.brackets.items():
        table[(i, j)] = tuple(v) + zero_vector(n2)
    for (i, j), v in l2.brackets.items():
        table[(i + n1, j + n1)] = zero_vector(n1) + tuple(v)
    labels = tuple("1.%s" % s for s in l1.labels) + tuple("2.%s" % s for s in l2.labels)
    return LieAlgebra(n1 + n2, table, labels=labels, validate=False)
