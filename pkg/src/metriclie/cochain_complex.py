"""Alternating cochains on a Lie algebra with values in an orthogonal module.

Cochains are sparse: only strictly increasing index tuples are stored, and
only with nonzero values.  The differential follows the convention

    (d w)(x_0, ..., x_p) = sum_{i<j} (-1)^(i+j) w([x_i, x_j], ..., ^i, ..., ^j, ...)
                         + sum_i (-1)^i rho(x_i) . w(..., ^i, ...),

and the scalar pairing of two module valued cochains is the plain shuffle sum

    <c1 ^ c2>(x_1, ..., x_{p+q}) = sum_{(p,q)-shuffles s} sgn(s)
        <c1(x_{s(1)}, ..., x_{s(p)}), c2(x_{s(p+1)}, ..., x_{s(p+q)})>

with no factorial normalization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exact_linalg import (
    Matrix,
    Vector,
    det,
    kernel_basis,
    rank,
    vec_add,
    vec_is_zero,
    vec_scale,
    vector,
    zero_vector,
)
from .lie_core import LieAlgebra, Subspace, bracket

_ZERO = Fraction(0)


@dataclass(frozen=True)
class OrthogonalModule:
    """A vector space with a nondegenerate symmetric form and a skew action.

    ``action`` holds one matrix per basis vector of the acting Lie algebra;
    ``None`` means the trivial action (the common case here).  Compatibility
    of a nontrivial action with the Lie bracket is checked against a concrete
    algebra by :func:`validate_module`.
    """

    gram: Matrix
    action: tuple[Matrix, ...] | None = None

    def __post_init__(self) -> None:
        if not self.gram.is_symmetric():
            raise ValueError("module form must be symmetric")
        if rank(self.gram) != self.gram.rows:
            raise ValueError("module form must be nondegenerate")
        if self.action is not None:
            for k, rho in enumerate(self.action):
                if rho.rows != self.dim or rho.cols != self.dim:
                    raise ValueError("action matrix %d has wrong shape" % k)
                skew = self.gram @ rho + rho.transpose() @ self.gram
                if not skew.is_zero():
                    raise ValueError("action matrix %d is not skew for the form" % k)

    @property
    def dim(self) -> int:
        return self.gram.rows

    def is_trivial(self) -> bool:
        return self.action is None or all(m.is_zero() for m in self.action)


SCALAR_MODULE = OrthogonalModule(gram=Matrix.identity(1))


def validate_module(l: LieAlgebra, module: OrthogonalModule) -> None:
    """Check that a nontrivial action represents the Lie bracket."""
    if module.action is None:
        return
    if len(module.action) != l.dim:
        raise ValueError("expected %d action matrices, got %d" % (l.dim, len(module.action)))
    for i in range(l.dim):
        for j in range(i + 1, l.dim):
            rho_bracket = Matrix.zero(module.dim, module.dim)
            for k, c in enumerate(l.basis_bracket(i, j)):
                if c != 0:
                    rho_bracket = rho_bracket + module.action[k].scale(c)
            commutator = module.action[i] @ module.action[j] - module.action[j] @ module.action[i]
            if not (rho_bracket - commutator).is_zero():
                raise ValueError("action does not represent the bracket at (%d, %d)" % (i, j))


def rho_kernel_space(l: LieAlgebra, module: OrthogonalModule) -> Subspace:
    """The subspace of the algebra acting by zero on the module."""
    if module.action is None or module.dim == 0:
        return Subspace.full(l.dim)
    rows = []
    for r in range(module.dim):
        for c in range(module.dim):
            rows.append([module.action[i].at(r, c) for i in range(l.dim)])
    return Subspace.span(l.dim, kernel_basis(Matrix.from_rows(rows, cols=l.dim)))


def sort_with_sign(indices: Sequence[int]) -> tuple[tuple[int, ...], int] | None:
    """Sort an index tuple, returning the permutation sign, or None on a repeat."""
    idx = list(indices)
    sign = 1
    # insertion sort; tuples here have length <= 6
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return None
    return tuple(idx), sign


@dataclass
class Cochain:
    """A sparse alternating form with vector values.

    ``n`` is the dimension of the underlying algebra, ``value_dim`` the length
    of each stored value, and ``scalar`` marks forms with values in the ground
    field rather than in a module (relevant for serialization and pullbacks).
    Keys are strictly increasing tuples; zero values are never stored.
    """

    n: int
    degree: int
    value_dim: int
    scalar: bool = False
    values: dict[tuple[int, ...], Vector] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("negative degree")
        if self.scalar and self.value_dim != 1:
            raise ValueError("scalar cochains carry single component values")
        clean: dict[tuple[int, ...], Vector] = {}
        for key, value in self.values.items():
            if len(key) != self.degree:
                raise ValueError("key %s has wrong length for degree %d" % (key, self.degree))
            if any(not (0 <= i < self.n) for i in key):
                raise ValueError("key %s out of range" % (key,))
            if any(a >= b for a, b in zip(key, key[1:])):
                raise ValueError("key %s is not strictly increasing" % (key,))
            v = vector(value)
            if len(v) != self.value_dim:
                raise ValueError("value for %s has wrong length" % (key,))
            if not vec_is_zero(v):
                clean[key] = v
        self.values = clean

    @staticmethod
    def zero(n: int, degree: int, value_dim: int, scalar: bool = False) -> "Cochain":
        return Cochain(n, degree, value_dim, scalar, {})

    def _compat(self, other: "Cochain") -> None:
        if (self.n, self.degree, self.value_dim, self.scalar) != (
            other.n,
            other.degree,
            other.value_dim,
            other.scalar,
        ):
            raise ValueError("cochain shape mismatch")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._compat(other)
        values = dict(self.values)
        for key, v in other.values.items():
            values[key] = vec_add(values[key], v) if key in values else v
        return Cochain(self.n, self.degree, self.value_dim, self.scalar, values)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + other.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            (self.n, self.degree, self.value_dim, self.scalar)
            == (other.n, other.degree, other.value_dim, other.scalar)
            and self.values == other.values
        )

    def scale(self, c: Fraction | int) -> "Cochain":
        c = Fraction(c)
        if c == 0:
            return Cochain.zero(self.n, self.degree, self.value_dim, self.scalar)
        return Cochain(
            self.n,
            self.degree,
            self.value_dim,
            self.scalar,
            {k: vec_scale(c, v) for k, v in self.values.items()},
        )

    def is_zero(self) -> bool:
        return not self.values

    def get(self, key: tuple[int, ...]) -> Vector:
        return self.values.get(key, zero_vector(self.value_dim))

    def value_at(self, indices: Sequence[int]) -> Vector:
        """Value on basis vectors in any order (alternating lookup)."""
        sorted_sign = sort_with_sign(indices)
        if sorted_sign is None:
            return zero_vector(self.value_dim)
        key, sign = sorted_sign
        v = self.values.get(key)
        if v is None:
            return zero_vector(self.value_dim)
        return v if sign == 1 else vec_scale(-1, v)

    def evaluate(self, args: Sequence[Vector]) -> Vector:
        """Multilinear evaluation on arbitrary coordinate vectors."""
        if len(args) != self.degree:
            raise ValueError("expected %d arguments" % self.degree)
        for a in args:
            if len(a) != self.n:
                raise ValueError("argument does not live in the algebra")
        out = zero_vector(self.value_dim)
        for key, value in self.values.items():
            minor = Matrix.from_rows([[args[c][r] for c in range(self.degree)] for r in key],
                                     cols=self.degree)
            coeff = det(minor) if self.degree else Fraction(1)
            if coeff != 0:
                out = vec_add(out, vec_scale(coeff, value))
        return out


def cochain_from_terms(
    n: int,
    degree: int,
    value_dim: int,
    terms: Iterable[tuple[Sequence[int], Sequence[int | str | Fraction]]],
    scalar: bool = False,
) -> Cochain:
    """Build a cochain from (indices, value) terms; indices may be unsorted."""
    values: dict[tuple[int, ...], Vector] = {}
    for indices, value in terms:
        sorted_sign = sort_with_sign(indices)
        if sorted_sign is None:
            continue
        key, sign = sorted_sign
        v = vector(value)
        if sign == -1:
            v = vec_scale(-1, v)
        values[key] = vec_add(values[key], v) if key in values else v
    return Cochain(n, degree, value_dim, scalar, values)


def scalar_cochain(
    n: int, degree: int, terms: Iterable[tuple[Sequence[int], int | str | Fraction]]
) -> Cochain:
    return cochain_from_terms(n, degree, 1, [(idx, [c]) for idx, c in terms], scalar=True)


def eval_vector_first(c: Cochain, v: Vector, rest: tuple[int, ...]) -> Vector:
    """Evaluate ``c(v, e_rest...)`` where only the first slot is a vector."""
    out = zero_vector(c.value_dim)
    for k, coeff in enumerate(v):
        if coeff == 0:
            continue
        term = c.value_at((k,) + rest)
        if not vec_is_zero(term):
            out = vec_add(out, vec_scale(coeff, term))
    return out


def differential(l: LieAlgebra, module: OrthogonalModule | None, c: Cochain) -> Cochain:
    """Chevalley-Eilenberg differential; pass ``module=None`` for scalar forms."""
    if c.n != l.dim:
        raise ValueError("cochain does not live on this algebra")
    p = c.degree
    out_degree = p + 1
    use_action = (
        module is not None and not c.scalar and module.action is not None
    )
    if use_action and len(module.action) != l.dim:
        raise ValueError("module action does not match the algebra dimension")
    values: dict[tuple[int, ...], Vector] = {}
    if out_degree > l.dim:
        return Cochain.zero(l.dim, out_degree, c.value_dim, c.scalar)
    for key in combinations(range(l.dim), out_degree):
        total = zero_vector(c.value_dim)
        for a in range(out_degree):
            for b in range(a + 1, out_degree):
                w = l.basis_bracket(key[a], key[b])
                if vec_is_zero(w):
                    continue
                rest = key[:a] + key[a + 1 : b] + key[b + 1 :]
                term = eval_vector_first(c, w, rest)
                if vec_is_zero(term):
                    continue
                if (a + b) % 2:
                    term = vec_scale(-1, term)
                total = vec_add(total, term)
        if use_action:
            for a in range(out_degree):
                rest = key[:a] + key[a + 1 :]
                v = c.values.get(rest)
                if v is None:
                    continue
                term = module.action[key[a]].apply(v)
                if vec_is_zero(term):
                    continue
                if a % 2:
                    term = vec_scale(-1, term)
                total = vec_add(total, term)
        if not vec_is_zero(total):
            values[key] = total
    return Cochain(l.dim, out_degree, c.value_dim, c.scalar, values)


def pair_values(gram: Matrix, u: Vector, v: Vector) -> Fraction:
    """The symmetric pairing <u, v> of two module values."""
    return sum((u[i] * gram.at(i, j) * v[j] for i in range(len(u)) for j in range(len(v))), _ZERO)


def wedge_pair(module: OrthogonalModule, c1: Cochain, c2: Cochain) -> Cochain:
    """Scalar valued wedge of two module valued cochains via the module form."""
    if c1.n != c2.n:
        raise ValueError("cochains live on different algebras")
    if c1.value_dim != module.dim or c2.value_dim != module.dim:
        raise ValueError("cochain values do not match the module")
    p, q = c1.degree, c2.degree
    n = c1.n
    out_degree = p + q
    values: dict[tuple[int, ...], Vector] = {}
    if out_degree > n or not c1.values or not c2.values:
        return Cochain.zero(n, out_degree, 1, scalar=True)
    for key in combinations(range(n), out_degree):
        total = _ZERO
        for positions in combinations(range(out_degree), p):
            left = tuple(key[s] for s in positions)
            u = c1.values.get(left)
            if u is None:
                continue
            complement = [s for s in range(out_degree) if s not in positions]
            right = tuple(key[s] for s in complement)
            v = c2.values.get(right)
            if v is None:
                continue
            sign = -1 if sum(positions) % 2 != (p * (p - 1) // 2) % 2 else 1
            contribution = pair_values(module.gram, u, v)
            total += sign * contribution
        if total != 0:
            values[key] = (total,)
    return Cochain(n, out_degree, 1, True, values)


def _basis_enumeration(n: int, degree: int, value_dim: int) -> list[tuple[tuple[int, ...], int]]:
    return [(key, t) for key in combinations(range(n), degree) for t in range(value_dim)]


def differential_matrix(l: LieAlgebra, module: OrthogonalModule | None, p: int) -> Matrix:
    """Matrix of d: C^p -> C^(p+1) over the standard sparse bases."""
    value_dim = 1 if module is None else module.dim
    is_scalar = module is None
    domain = _basis_enumeration(l.dim, p, value_dim)
    codomain = _basis_enumeration(l.dim, p + 1, value_dim)
    index = {bk: r for r, bk in enumerate(codomain)}
    cols: list[list[Fraction]] = []
    for key, t in domain:
        unit = Cochain(
            l.dim,
            p,
            value_dim,
            is_scalar,
            {key: tuple(Fraction(1) if s == t else _ZERO for s in range(value_dim))},
        )
        image = differential(l, module, unit)
        col = [_ZERO] * len(codomain)
        for out_key, value in image.values.items():
            for s, entry in enumerate(value):
                if entry != 0:
                    col[index[(out_key, s)]] = entry
        cols.append(col)
    if not domain:
        return Matrix.zero(len(codomain), 0)
    return Matrix.from_rows(cols, cols=len(codomain)).transpose()


def cohomology_dim(l: LieAlgebra, module: OrthogonalModule | None, p: int) -> int:
    """dim H^p(l, module) = dim ker d_p - rank d_(p-1)."""
    if p < 0:
        raise ValueError("negative degree")
    value_dim = 1 if module is None else module.dim
    dim_cp = len(_basis_enumeration(l.dim, p, value_dim))
    rank_dp = rank(differential_matrix(l, module, p))
    rank_prev = rank(differential_matrix(l, module, p - 1)) if p > 0 else 0
    return dim_cp - rank_dp - rank_prev


@dataclass(frozen=True)
class Isomap:
    """A pair (S, U): S maps the source algebra into the target algebra and U
    maps target module values back to source module values."""

    s: Matrix
    u: Matrix | None = None


def is_lie_homomorphism(s: Matrix, source: LieAlgebra, target: LieAlgebra) -> bool:
    """Whether S [x, y]_source = [S x, S y]_target on all basis pairs."""
    if s.rows != target.dim or s.cols != source.dim:
        raise ValueError("homomorphism matrix has wrong shape")
    for i in range(source.dim):
        for j in range(i + 1, source.dim):
            lhs = s.apply(source.basis_bracket(i, j))
            rhs = bracket(target, s.column(i), s.column(j))
            if lhs != rhs:
                return False
    return True


def is_isometry(u: Matrix, source_gram: Matrix, target_gram: Matrix) -> bool:
    """Whether U^T G_source U = G_target (U maps target values to source)."""
    if u.rows != source_gram.rows or u.cols != target_gram.rows:
        raise ValueError("isometry matrix has wrong shape")
    return (u.transpose() @ source_gram @ u) == target_gram


def pullback(iso: Isomap, c: Cochain) -> Cochain:
    """((S, U)* c)(x_1, ..., x_p) = U(c(S x_1, ..., S x_p)).

    For scalar cochains U is ignored; for module valued cochains it is
    required.
    """
    if c.n != iso.s.rows:
        raise ValueError("cochain does not live on the target algebra")
    n1 = iso.s.cols
    if c.scalar:
        out_dim = 1
    else:
        if iso.u is None:
            raise ValueError("module valued pullback needs a value map")
        if iso.u.cols != c.value_dim:
            raise ValueError("value map does not match the cochain values")
        out_dim = iso.u.rows
    values: dict[tuple[int, ...], Vector] = {}
    if c.degree > n1:
        return Cochain.zero(n1, c.degree, out_dim, c.scalar)
    columns = [iso.s.column(j) for j in range(n1)]
    for key in combinations(range(n1), c.degree):
        v = c.evaluate([columns[t] for t in key])
        if not c.scalar:
            v = iso.u.apply(v)
        if not vec_is_zero(v):
            values[key] = v
    return Cochain(n1, c.degree, out_dim, c.scalar, values)
