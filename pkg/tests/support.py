"""Shared fixtures and randomized helpers for the test suite.

The three `*_dim_*_step` algebras are small nilpotent algebras whose
differentials were expanded by hand, and `pinned_expansion_failures`
replays all of those identities on seeded random cochains.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from metriclie.catalog import (
    ENTRIES,
    base_algebra,
    module_for_tag,
)
from metriclie.cochain_complex import (
    Cochain,
    OrthogonalModule,
    differential,
    differential_matrix,
    pair_values,
    wedge_pair,
)
from metriclie.exact_linalg import (
    Matrix,
    kernel_basis,
    solve_affine,
    unit_vector,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vector,
)
from metriclie.lie_core import LieAlgebra
from metriclie.quadratic_cohomology import QuadraticCochain, QuadraticCocycle


def rng(seed: int) -> random.Random:
    return random.Random(seed)


def rational(rg: random.Random, spread: int = 4, den: int = 3) -> Fraction:
    return Fraction(rg.randint(-spread, spread), rg.randint(1, den))


# ---------------------------------------------------------------------------
# fixed algebras with hand-expanded differentials
# ---------------------------------------------------------------------------


def five_dim_three_step() -> LieAlgebra:
    """[X1,X2]=Z, [X1,Z]=Y, [X2,X3]=Y on the basis (X1,X2,X3,Z,Y)."""
    return LieAlgebra(
        5,
        {
            (0, 1): unit_vector(5, 3),
            (0, 3): unit_vector(5, 4),
            (1, 2): unit_vector(5, 4),
        },
        labels=("X1", "X2", "X3", "Z", "Y"),
    )


def six_dim_two_step() -> LieAlgebra:
    """[X1,X2]=Y, [X1,X3]=Z, [X3,X4]=Z on the basis (X1..X4,Y,Z)."""
    return LieAlgebra(
        6,
        {
            (0, 1): unit_vector(6, 4),
            (0, 2): unit_vector(6, 5),
            (2, 3): unit_vector(6, 5),
        },
        labels=("X1", "X2", "X3", "X4", "Y", "Z"),
    )


def seven_dim_two_step() -> LieAlgebra:
    """[X1,X2]=Y, [X1,X3]=Z, [X3,X4]=Y, [X3,X5]=Z on (X1..X5,Y,Z)."""
    return LieAlgebra(
        7,
        {
            (0, 1): unit_vector(7, 5),
            (0, 2): unit_vector(7, 6),
            (2, 3): unit_vector(7, 5),
            (2, 4): unit_vector(7, 6),
        },
        labels=("X1", "X2", "X3", "X4", "X5", "Y", "Z"),
    )


# ---------------------------------------------------------------------------
# random cochains and cocycles
# ---------------------------------------------------------------------------


def random_cochain(
    rg: random.Random,
    n: int,
    degree: int,
    value_dim: int,
    scalar: bool = False,
    density: float = 0.6,
) -> Cochain:
    values = {}
    for key in combinations(range(n), degree):
        if rg.random() > density:
            continue
        value = tuple(rational(rg) for _ in range(value_dim))
        if not vec_is_zero(value):
            values[key] = value
    return Cochain(n, degree, value_dim, scalar, values)


def random_quadratic_cochain(
    rg: random.Random, algebra: LieAlgebra, module: OrthogonalModule
) -> QuadraticCochain:
    tau = random_cochain(rg, algebra.dim, 1, module.dim)
    sigma = random_cochain(rg, algebra.dim, 2, 1, scalar=True)
    return QuadraticCochain(algebra, module, tau, sigma)


def _vectorize(c: Cochain) -> tuple[Fraction, ...]:
    out = []
    for key in combinations(range(c.n), c.degree):
        value = c.values.get(key)
        for t in range(c.value_dim):
            out.append(value[t] if value is not None else Fraction(0))
    return tuple(out)


def _cochain_from_vector(
    vec, n: int, degree: int, value_dim: int, scalar: bool
) -> Cochain:
    values = {}
    pos = 0
    for key in combinations(range(n), degree):
        value = tuple(vec[pos : pos + value_dim])
        pos += value_dim
        if not vec_is_zero(value):
            values[key] = value
    return Cochain(n, degree, value_dim, scalar, values)


def _random_span_element(rg: random.Random, basis, length: int):
    total = zero_vector(length)
    for vec in basis:
        coeff = rational(rg)
        if coeff:
            total = vec_add(total, vec_scale(coeff, vec))
    return total


def random_closed_alpha(
    rg: random.Random, algebra: LieAlgebra, module: OrthogonalModule
) -> Cochain:
    """Random element of the kernel of d on module valued 2-cochains."""
    d2 = differential_matrix(algebra, module, 2)
    total = _random_span_element(rg, kernel_basis(d2), d2.cols)
    return _cochain_from_vector(total, algebra.dim, 2, module.dim, False)


def random_valid_cocycle(
    rg: random.Random,
    algebra: LieAlgebra,
    module: OrthogonalModule,
    tries: int = 60,
) -> QuadraticCocycle | None:
    """Sample (alpha, gamma) satisfying both cocycle conditions, or None."""
    from metriclie.quadratic_cohomology import half_wedge_square

    d2 = differential_matrix(algebra, module, 2)
    closed = kernel_basis(d2)
    d3 = differential_matrix(algebra, None, 3)
    for _ in range(tries):
        total = _random_span_element(rg, closed, d2.cols)
        alpha = _cochain_from_vector(total, algebra.dim, 2, module.dim, False)
        rhs = _vectorize(half_wedge_square(module, alpha))
        solution = solve_affine(d3, rhs)
        if solution is None:
            continue
        particular, _ = solution
        gamma = _cochain_from_vector(particular, algebra.dim, 3, 1, True)
        return QuadraticCocycle(algebra, module, alpha, gamma)
    return None


def catalog_pairs() -> list[tuple[str, LieAlgebra, OrthogonalModule | None]]:
    """Distinct (base algebra, coefficient module) pairs from the catalog."""
    seen = []
    out = []
    for entry in ENTRIES:
        key = (entry.base, entry.module_tag)
        if key in seen:
            continue
        seen.append(key)
        module = None if entry.module_tag == "none" else module_for_tag(entry.module_tag)
        out.append((f"{entry.base}/{entry.module_tag}", base_algebra(entry.base), module))
    return out


# ---------------------------------------------------------------------------
# pinned differential expansions
# ---------------------------------------------------------------------------


def _dv(l, module, c, args):
    return differential(l, module, c).evaluate(args)


def _neg(v):
    return tuple(-x for x in v)


def pinned_expansion_failures(seed: int = 2024, rounds: int = 12) -> list[str]:
    """Replay every hand-expanded differential identity on random cochains.

    Returns the names of the identities that fail; an empty list means the
    differential matches all of the hand expansions.
    """
    rg = rng(seed)
    failures: list[str] = []

    def check(name: str, ok: bool) -> None:
        if not ok:
            failures.append(name)

    module = OrthogonalModule(Matrix.identity(2))

    l5 = five_dim_three_step()
    x1, x2, x3, zz, yy = (unit_vector(5, k) for k in range(5))
    for _ in range(rounds):
        a = random_cochain(rg, 5, 2, 2)
        da = differential(l5, module, a)
        check("dim5.a1", da.evaluate((x2, x3, zz)) == _neg(a.evaluate((yy, zz))))
        check(
            "dim5.a2",
            da.evaluate((x1, x2, x3))
            == _neg(vec_add(a.evaluate((zz, x3)), a.evaluate((yy, x1)))),
        )
        check("dim5.a3", da.evaluate((x1, zz, x2)) == _neg(a.evaluate((yy, x2))))
        check("dim5.a4", da.evaluate((x1, zz, x3)) == _neg(a.evaluate((yy, x3))))
        half = wedge_pair(module, a, a).evaluate((x1, x3, yy, zz))[0] / 2
        expected = (
            pair_values(module.gram, a.evaluate((x1, x3)), a.evaluate((yy, zz)))
            + pair_values(module.gram, a.evaluate((x3, yy)), a.evaluate((x1, zz)))
            + pair_values(module.gram, a.evaluate((yy, x1)), a.evaluate((x3, zz)))
        )
        check("dim5.half_wedge", half == expected)
        g = random_cochain(rg, 5, 3, 1, scalar=True)
        dg = differential(l5, None, g)
        check("dim5.dgamma_vanishes", dg.evaluate((x1, x3, yy, zz)) == (Fraction(0),))

    l7 = seven_dim_two_step()
    x1, x2, x3, x4, x5, yy, zz = (unit_vector(7, k) for k in range(7))
    for _ in range(rounds):
        a = random_cochain(rg, 7, 2, 2)
        da = differential(l7, module, a)
        check(
            "dim7.a1",
            da.evaluate((x1, x2, x3))
            == tuple(
                p + q
                for p, q in zip(_neg(a.evaluate((yy, x3))), a.evaluate((zz, x2)))
            ),
        )
        check("dim7.a2", da.evaluate((x2, x3, x4)) == _neg(a.evaluate((yy, x2))))
        check("dim7.a3", da.evaluate((x2, x3, x5)) == _neg(a.evaluate((zz, x2))))
        check(
            "dim7.a4",
            da.evaluate((x1, x3, x5))
            == _neg(vec_add(a.evaluate((zz, x5)), a.evaluate((zz, x1)))),
        )
        check(
            "dim7.a5",
            da.evaluate((x1, x3, x4))
            == _neg(vec_add(a.evaluate((zz, x4)), a.evaluate((yy, x1)))),
        )

    l6 = six_dim_two_step()
    x1, x2, x3, x4, yy, zz = (unit_vector(6, k) for k in range(6))
    for _ in range(rounds):
        a = random_cochain(rg, 6, 2, 2)
        da = differential(l6, module, a)
        check(
            "dim6.a1",
            da.evaluate((x1, x2, x3))
            == tuple(
                p + q
                for p, q in zip(_neg(a.evaluate((yy, x3))), a.evaluate((zz, x2)))
            ),
        )
        check("dim6.a2", da.evaluate((x1, x2, x4)) == _neg(a.evaluate((yy, x4))))
        check(
            "dim6.a3",
            da.evaluate((x1, x3, x4))
            == _neg(vec_add(a.evaluate((zz, x4)), a.evaluate((zz, x1)))),
        )
        check("dim6.a4", da.evaluate((x2, x3, x4)) == _neg(a.evaluate((zz, x2))))
        g = random_cochain(rg, 6, 3, 1, scalar=True)
        dg = differential(l6, None, g)
        check(
            "dim6.g1",
            dg.evaluate((zz, x1, x2, x3)) == _neg(g.evaluate((yy, zz, x3))),
        )
        check(
            "dim6.g2",
            dg.evaluate((zz, x1, x2, x4)) == _neg(g.evaluate((yy, zz, x4))),
        )
        check(
            "dim6.g3",
            dg.evaluate((yy, x1, x3, x4))
            == vec_add(g.evaluate((yy, zz, x4)), g.evaluate((yy, zz, x1))),
        )
        check(
            "dim6.g4",
            dg.evaluate((yy, x2, x3, x4)) == g.evaluate((yy, zz, x2)),
        )

    return failures
