"""Exact rational linear algebra primitives.

Vectors are tuples of :class:`fractions.Fraction` and matrices are immutable
row-major grids of the same.  Every elimination uses deterministic pivoting
(first nonzero column, smallest row index), so ranks, kernels, solution sets
and signatures are reproducible bit for bit.  No floating point appears
anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def scalar(value: int | str | Fraction) -> Fraction:
    """Coerce an int, a ``p/q`` string or a Fraction to an exact scalar."""
    return Fraction(value)


def vector(values: Iterable[int | str | Fraction]) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (_ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(_ONE if k == i else _ZERO for k in range(n))


def vec_add(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise ValueError("vector length mismatch: %d vs %d" % (len(u), len(v)))
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise ValueError("vector length mismatch: %d vs %d" % (len(u), len(v)))
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction | int, v: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def vec_is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix with exact rational entries (row major)."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                "expected %d entries, got %d" % (self.rows * self.cols, len(self.entries))
            )

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int | str | Fraction]], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
        else:
            width = cols if cols is not None else 0
        if cols is not None and cols != width and rows:
            raise ValueError("row width %d does not match cols=%d" % (width, cols))
        flat: list[Fraction] = []
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged rows in matrix literal")
            flat.extend(Fraction(x) for x in r)
        return Matrix(len(rows), width, tuple(flat))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, (_ZERO,) * (rows * cols))

    @staticmethod
    def diagonal(values: Sequence[int | str | Fraction]) -> "Matrix":
        vals = [Fraction(v) for v in values]
        n = len(vals)
        return Matrix(n, n, tuple(vals[i] if i == j else _ZERO for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("matrix product shape mismatch")
        out: list[Fraction] = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum((r[k] * other.at(k, j) for k in range(self.cols)), _ZERO))
        return Matrix(self.rows, other.cols, tuple(out))

    def scale(self, c: Fraction | int) -> "Matrix":
        c = Fraction(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError("vector length %d does not match cols=%d" % (len(v), self.cols))
        return tuple(
            sum((self.at(i, k) * v[k] for k in range(self.cols)), _ZERO) for i in range(self.rows)
        )

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.at(i, j) == self.at(j, i) for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def _shape_check(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("matrix shape mismatch")


def stack_rows(matrices: Sequence[Matrix]) -> Matrix:
    """Stack matrices vertically; they must share a column count."""
    if not matrices:
        raise ValueError("nothing to stack")
    cols = matrices[0].cols
    flat: list[Fraction] = []
    total = 0
    for m in matrices:
        if m.cols != cols:
            raise ValueError("column mismatch while stacking")
        flat.extend(m.entries)
        total += m.rows
    return Matrix(total, cols, tuple(flat))


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and the tuple of pivot columns.

    Pivot selection is deterministic: scan columns left to right, take the
    first row (top to bottom) with a nonzero entry.
    """
    rows = m.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pivot_row = None
        for i in range(r, m.rows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix.from_rows(rows, cols=m.cols), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> list[Vector]:
    """Deterministic basis of the right kernel of ``m``.

    One vector per free column of the reduced echelon form: the free
    coordinate is set to 1, pivot coordinates are filled by back substitution,
    remaining free coordinates are 0.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis: list[Vector] = []
    for f in free_cols:
        v = [_ZERO] * m.cols
        v[f] = _ONE
        for r, p in enumerate(pivots):
            v[p] = -reduced.at(r, f)
        basis.append(tuple(v))
    return basis


def solve_affine(a: Matrix, b: Vector) -> tuple[Vector, list[Vector]] | None:
    """Solve ``a x = b`` exactly.

    Returns ``(particular, kernel)`` where the particular solution sets all
    free variables to zero, or ``None`` when the system is inconsistent.
    """
    if len(b) != a.rows:
        raise ValueError("right hand side length mismatch")
    augmented = Matrix(a.rows, a.cols + 1, tuple(
        a.at(i, j) if j < a.cols else b[i] for i in range(a.rows) for j in range(a.cols + 1)
    ))
    reduced, pivots = rref(augmented)
    if a.cols in pivots:
        return None
    particular = [_ZERO] * a.cols
    for r, p in enumerate(pivots):
        particular[p] = reduced.at(r, a.cols)
    return tuple(particular), kernel_basis(a)


def det(m: Matrix) -> Fraction:
    """Exact determinant by Gaussian elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    rows = m.to_rows()
    n = m.rows
    sign = _ONE
    result = _ONE
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return _ZERO
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            sign = -sign
        pv = rows[c][c]
        result *= pv
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return sign * result


@dataclass(frozen=True)
class Signature:
    """Inertia of a symmetric bilinear form: (negative, positive, null)."""

    neg: int
    pos: int
    null: int

    @property
    def dim(self) -> int:
        return self.neg + self.pos + self.null

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.neg, self.pos, self.null)


def signature_of(gram: Matrix) -> Signature:
    """Signature of a symmetric matrix via exact congruence diagonalization.

    When a diagonal pivot vanishes we first try to swap in a later index with
    a nonzero diagonal entry; if every remaining diagonal entry is zero we add
    the partner row and column of some nonzero off-diagonal entry, which then
    produces a nonzero pivot.  The count is invariant under congruence.
    """
    if not gram.is_symmetric():
        raise ValueError("signature_of requires a symmetric matrix")
    n = gram.rows
    rows = gram.to_rows()

    def add_row_col(dst: int, src: int) -> None:
        rows[dst] = [a + b for a, b in zip(rows[dst], rows[src])]
        for i in range(n):
            rows[i][dst] += rows[i][src]

    def swap_row_col(i: int, j: int) -> None:
        rows[i], rows[j] = rows[j], rows[i]
        for r in rows:
            r[i], r[j] = r[j], r[i]

    neg = pos = 0
    for k in range(n):
        if rows[k][k] == 0:
            partner = None
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    partner = i
                    break
            if partner is None:
                continue  # null direction
            swapped = False
            for i in range(k + 1, n):
                if rows[i][i] != 0 and rows[i][k] != 0:
                    swap_row_col(k, i)
                    swapped = True
                    break
            if not swapped:
                # both diagonal entries vanish, so the sum picks up 2 * rows[partner][k]
                add_row_col(k, partner)
        pv = rows[k][k]
        if pv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if rows[i][k] != 0:
                f = rows[i][k] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[k])]
                for j in range(n):
                    rows[j][i] -= f * rows[j][k]
    return Signature(neg=neg, pos=pos, null=n - neg - pos)


def echelon_basis(vectors: Iterable[Vector], ambient_dim: int) -> tuple[Vector, ...]:
    """Canonical (reduced echelon) basis of the span of ``vectors``."""
    vecs = [v for v in vectors if not vec_is_zero(v)]
    for v in vecs:
        if len(v) != ambient_dim:
            raise ValueError("vector length %d does not match ambient %d" % (len(v), ambient_dim))
    if not vecs:
        return ()
    reduced, pivots = rref(Matrix.from_rows(vecs, cols=ambient_dim))
    return tuple(reduced.row(i) for i in range(len(pivots)))


def gram_on_span(gram: Matrix, basis: Sequence[Vector]) -> Matrix:
    """Restrict a symmetric form to the span of ``basis`` (as B G B^T)."""
    b = Matrix.from_rows(basis, cols=gram.cols) if basis else Matrix.zero(0, gram.cols)
    return b @ gram @ b.transpose()


def is_nondegenerate_on_span(gram: Matrix, vectors: Iterable[Vector]) -> bool:
    """Whether the restriction of ``gram`` to span(vectors) is nondegenerate.

    The zero subspace counts as nondegenerate.  The answer only depends on
    the span, not on the spanning set, because the vectors are first reduced
    to a canonical basis.
    """
    basis = echelon_basis(vectors, gram.cols)
    if not basis:
        return True
    return rank(gram_on_span(gram, basis)) == len(basis)
