"""The metric double of a nilpotent Lie algebra along a quadratic cocycle.

Given a nilpotent algebra ``l`` with trivial orthogonal module ``a`` and a
quadratic cocycle (alpha, gamma), the double lives on ``l* + a + l`` with
basis ordered as (dual basis, module basis, original basis) and brackets

    [L1, L2] = gamma(L1, L2, .) + alpha(L1, L2) + [L1, L2]_l
    [L, Z]   = ad*(L)(Z)          with (ad*(L) Z)(L') = -Z([L, L'])
    [A, L]   = <A, alpha(L, .)>   (an element of l*)

and all brackets inside ``l* + a`` zero.  The inner product pairs ``l*``
with ``l`` dually and restricts to the module form on ``a``:

    <Z1 + A1 + L1, Z2 + A2 + L2> = <A1, A2>_a + Z1(L2) + Z2(L1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cochain_complex import Cochain, OrthogonalModule, pair_values
from .exact_linalg import (
    Matrix,
    Signature,
    Vector,
    gram_on_span,
    rank,
    signature_of,
    vec_is_zero,
    zero_vector,
)
from .lie_core import (
    LieAlgebra,
    center,
    is_nilpotent,
    lower_central_series,
    validate_jacobi,
)
from .quadratic_cohomology import QuadraticCocycle

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Provenance:
    """The construction data a metric algebra was built from."""

    algebra: LieAlgebra
    module: OrthogonalModule
    alpha: Cochain
    gamma: Cochain


@dataclass
class MetricLieAlgebra:
    """A Lie algebra with an invariant nondegenerate symmetric form."""

    algebra: LieAlgebra
    gram: Matrix
    provenance: Provenance | None = None


@dataclass(frozen=True)
class MetricCheck:
    axiom: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class MetricReport:
    ok: bool
    checks: tuple[MetricCheck, ...]

    def failures(self) -> tuple[MetricCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def coadjoint_matrix(l: LieAlgebra, i: int) -> Matrix:
    """Matrix of ad*(e_i) on the dual basis: minus the transpose of ad(e_i)."""
    n = l.dim
    entries = []
    for k in range(n):
        row = []
        for j in range(n):
            # coefficient of sigma^k in ad*(e_i) sigma^j, namely -([e_i, e_k])_j
            row.append(-l.basis_bracket(i, k)[j])
        entries.append(row)
    return Matrix.from_rows(entries, cols=n)


def build_double(z: QuadraticCocycle) -> MetricLieAlgebra:
    """Assemble and fully validate the metric double of a quadratic cocycle.

    Only trivial module actions are supported; a nontrivial action raises.
    """
    l, module = z.algebra, z.module
    if not module.is_trivial():
        raise ValueError("the double construction here requires a trivial module action")
    if not is_nilpotent(l):
        raise ValueError("the double construction here requires a nilpotent algebra")
    n, m = l.dim, module.dim
    total = 2 * n + m
    a_off = n
    x_off = n + m

    def embed(sigma_part: Vector, a_part: Vector, x_part: Vector) -> Vector:
        return tuple(sigma_part) + tuple(a_part) + tuple(x_part)

    table: dict[tuple[int, int], Vector] = {}
    # [X_i, X_j]: dual part gamma(X_i, X_j, .), module part alpha, original bracket
    for i in range(n):
        for j in range(i + 1, n):
            sigma_part = tuple(z.gamma.value_at((i, j, k))[0] for k in range(n))
            a_part = z.alpha.value_at((i, j))
            x_part = l.basis_bracket(i, j)
            value = embed(sigma_part, a_part, x_part)
            if not vec_is_zero(value):
                table[(x_off + i, x_off + j)] = value
    # [sigma^j, X_i] = -ad*(X_i) sigma^j
    for i in range(n):
        coad = coadjoint_matrix(l, i)
        for j in range(n):
            col = coad.column(j)
            if not vec_is_zero(col):
                value = embed(tuple(-c for c in col), zero_vector(m), zero_vector(n))
                table[(j, x_off + i)] = value
    # [A_t, X_i] = <A_t, alpha(X_i, .)> in l*
    for t in range(m):
        for i in range(n):
            sigma_part = tuple(
                pair_values(module.gram, unit_a(m, t), z.alpha.value_at((i, k)))
                for k in range(n)
            )
            if any(c != 0 for c in sigma_part):
                value = embed(sigma_part, zero_vector(m), zero_vector(n))
                table[(a_off + t, x_off + i)] = value

    labels = (
        tuple("%s*" % s for s in l.labels)
        + tuple("A%d" % (t + 1) for t in range(m))
        + tuple(l.labels)
    )
    algebra = LieAlgebra(total, table, labels=labels, validate=False)

    gram_rows = []
    for r in range(total):
        row = [_ZERO] * total
        gram_rows.append(row)
    for i in range(n):
        gram_rows[i][x_off + i] = Fraction(1)
        gram_rows[x_off + i][i] = Fraction(1)
    for s in range(m):
        for t in range(m):
            gram_rows[a_off + s][a_off + t] = module.gram.at(s, t)
    gram = Matrix.from_rows(gram_rows, cols=total)

    result = MetricLieAlgebra(
        algebra=algebra,
        gram=gram,
        provenance=Provenance(algebra=l, module=module, alpha=z.alpha, gamma=z.gamma),
    )
    report = verify_metric(result)
    if not report.ok:
        first = report.failures()[0]
        raise AssertionError("double construction failed %s: %s" % (first.axiom, first.detail))
    if not is_nilpotent(algebra):
        raise AssertionError("double of a nilpotent algebra must be nilpotent")
    return result


def unit_a(m: int, t: int) -> Vector:
    return tuple(Fraction(1) if s == t else _ZERO for s in range(m))


def verify_metric(g: MetricLieAlgebra) -> MetricReport:
    """Re-check every metric Lie algebra axiom from scratch.

    Covers symmetry and nondegeneracy of the form, the Jacobi identity, and
    invariance <[x, y], z> + <y, [x, z]> = 0 on basis triples.
    """
    checks: list[MetricCheck] = []
    n = g.algebra.dim
    sym_ok = g.gram.rows == n and g.gram.cols == n and g.gram.is_symmetric()
    checks.append(MetricCheck("symmetric", sym_ok, "" if sym_ok else "form is not symmetric"))
    nondeg_ok = sym_ok and rank(g.gram) == n
    checks.append(
        MetricCheck("nondegenerate", nondeg_ok, "" if nondeg_ok else "form has a radical")
    )
    jac = validate_jacobi(g.algebra)
    checks.append(
        MetricCheck(
            "jacobi",
            jac.ok,
            "" if jac.ok else "fails at triple %s with defect %s" % (jac.triple, jac.defect),
        )
    )
    inv_ok = True
    inv_detail = ""
    if sym_ok:
        for i in range(n):
            for j in range(n):
                bij = g.algebra.basis_bracket(i, j)
                for k in range(j, n):
                    # <[e_i, e_j], e_k> + <e_j, [e_i, e_k]>; symmetric in (j, k)
                    first = sum(
                        (bij[t] * g.gram.at(t, k) for t in range(n) if bij[t] != 0), _ZERO
                    )
                    bik = g.algebra.basis_bracket(i, k)
                    second = sum(
                        (g.gram.at(j, t) * bik[t] for t in range(n) if bik[t] != 0), _ZERO
                    )
                    if first + second != 0:
                        inv_ok = False
                        inv_detail = "fails at triple (%d, %d, %d)" % (i, j, k)
                        break
                if not inv_ok:
                    break
            if not inv_ok:
                break
    checks.append(MetricCheck("invariance", inv_ok, inv_detail))
    ok = all(c.ok for c in checks)
    return MetricReport(ok=ok, checks=tuple(checks))


@dataclass(frozen=True)
class Fingerprint:
    """Cheap isometry invariants used to separate catalog output."""

    dim: int
    signature: Signature
    series_dims: tuple[int, ...]
    center_dim: int
    center_signature: Signature
    derived_signature: Signature

    def as_tuple(self) -> tuple:
        return (
            self.dim,
            self.signature.as_tuple(),
            self.series_dims,
            self.center_dim,
            self.center_signature.as_tuple(),
            self.derived_signature.as_tuple(),
        )


def fingerprint(g: MetricLieAlgebra) -> Fingerprint:
    series, profile = lower_central_series(g.algebra)
    z = center(g.algebra)
    derived = series[1] if len(series) > 1 else z  # l^2; fallback unused for dim > 0
    return Fingerprint(
        dim=g.algebra.dim,
        signature=signature_of(g.gram),
        series_dims=profile.dims,
        center_dim=z.dim,
        center_signature=signature_of(gram_on_span(g.gram, z.basis)),
        derived_signature=signature_of(gram_on_span(g.gram, derived.basis)),
    )
