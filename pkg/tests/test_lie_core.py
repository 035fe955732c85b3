from fractions import Fraction

import pytest

from metriclie.catalog import g41, g52, g64, heisenberg
from metriclie.exact_linalg import unit_vector, vector
from metriclie.lie_core import (
    JacobiError,
    LieAlgebra,
    NotNilpotentError,
    Subspace,
    abelian,
    ad_matrix,
    bracket,
    center,
    direct_sum,
    filtration_spaces,
    is_nilpotent,
    lower_central_series,
    nilpotency_index,
    validate_jacobi,
)

from support import five_dim_three_step, rational, rng


def test_construction_validates_jacobi_eagerly():
    bad = {(0, 1): unit_vector(3, 2), (0, 2): unit_vector(3, 0)}
    with pytest.raises(JacobiError):
        LieAlgebra(3, bad)
    unchecked = LieAlgebra(3, bad, validate=False)
    report = validate_jacobi(unchecked)
    assert not report.ok
    assert report.triple == (0, 1, 2)
    assert report.defect == unit_vector(3, 2)


def test_bracket_normalization_and_lookup():
    l = g41()
    assert l.basis_bracket(0, 1) == unit_vector(4, 2)
    assert l.basis_bracket(1, 0) == tuple(-c for c in unit_vector(4, 2))
    assert l.basis_bracket(1, 2) == (0, 0, 0, 0)
    with pytest.raises(ValueError):
        LieAlgebra(3, {(1, 1): unit_vector(3, 0)})
    with pytest.raises(ValueError):
        LieAlgebra(3, {(0, 1): (1, 0)})


def test_bracket_is_bilinear_and_antisymmetric():
    l = g52()
    rg = rng(11)
    for _ in range(25):
        x = tuple(rational(rg) for _ in range(5))
        y = tuple(rational(rg) for _ in range(5))
        z = tuple(rational(rg) for _ in range(5))
        assert bracket(l, x, y) == tuple(-c for c in bracket(l, y, x))
        left = bracket(l, tuple(a + b for a, b in zip(x, z)), y)
        split = tuple(p + q for p, q in zip(bracket(l, x, y), bracket(l, z, y)))
        assert left == split


def test_ad_matrix_columns_are_brackets():
    h = heisenberg()
    ad1 = ad_matrix(h, 0)
    assert ad1.column(1) == unit_vector(3, 2)
    assert ad1.column(0) == (0, 0, 0)
    assert ad1.column(2) == (0, 0, 0)


def test_lower_central_series_profiles():
    assert lower_central_series(g41())[1].dims == (4, 2, 1, 0)
    assert lower_central_series(g52())[1].dims == (5, 2, 0)
    assert lower_central_series(heisenberg())[1].dims == (3, 1, 0)
    assert lower_central_series(abelian(4))[1].dims == (4, 0)


def test_non_nilpotent_series_stabilizes():
    solvable = LieAlgebra(2, {(0, 1): unit_vector(2, 1)})
    _, profile = lower_central_series(solvable)
    assert profile.dims == (2, 1, 1)
    assert not is_nilpotent(solvable)
    with pytest.raises(NotNilpotentError):
        nilpotency_index(solvable)


def test_nilpotency_index_counts_filtration_stages():
    assert nilpotency_index(g41()) == 2
    assert nilpotency_index(g52()) == 1
    assert nilpotency_index(abelian(3)) == 0


def test_center_of_known_algebras():
    assert center(g52()).basis == (unit_vector(5, 3), unit_vector(5, 4))
    assert center(g41()).basis == (unit_vector(4, 3),)
    assert center(abelian(2)).dim == 2


def test_filtration_spaces_known_values():
    spaces = filtration_spaces(g41())
    assert [s.basis for s in spaces] == [(unit_vector(4, 3),)] * 3
    spaces = filtration_spaces(g64())
    expected = (unit_vector(6, 4), unit_vector(6, 5))
    assert [s.basis for s in spaces] == [expected, expected]


def test_filtration_respects_action_kernel():
    l = five_dim_three_step()
    restricted = Subspace.span(5, [unit_vector(5, 4)])
    spaces = filtration_spaces(l, rho_kernel=restricted)
    assert spaces[0].basis == (unit_vector(5, 4),)


def test_direct_sum_combines_structure():
    two = direct_sum(heisenberg(), heisenberg())
    assert two.dim == 6
    assert is_nilpotent(two)
    assert lower_central_series(two)[1].dims == (6, 2, 0)
    assert center(two).dim == 2
    assert two.labels[0] == "1.X1" and two.labels[3] == "2.X1"
    x1 = unit_vector(6, 0)
    x2 = unit_vector(6, 1)
    assert bracket(two, x1, x2) == unit_vector(6, 2)
    assert bracket(two, x1, unit_vector(6, 4)) == (0,) * 6


def test_subspace_coords_and_intersection():
    s = Subspace.span(3, [vector([1, 1, 0]), vector([0, 0, 2])])
    assert s.dim == 2
    assert s.contains(vector([2, 2, 3]))
    assert not s.contains(vector([1, 0, 0]))
    assert s.coords(vector([3, 3, 1])) is not None
    assert s.coords(vector([0, 1, 0])) is None
    inside = Subspace.span(3, [vector([1, 1, 1])])
    assert s.intersect(inside).dim == 1
    disjoint = Subspace.span(3, [vector([1, 0, 1])])
    assert s.intersect(disjoint).dim == 0
    assert Subspace.full(3).intersect(s).basis == s.basis


def test_derived_subalgebra_codimension_at_least_two():
    # non-abelian nilpotent algebras never have a one dimensional quotient
    for build in (heisenberg, g41, g52, g64):
        l = build()
        series, _ = lower_central_series(l)
        assert l.dim - series[1].dim >= 2


def test_structural_equality_includes_labels():
    assert g41() == g41()
    assert g41() != g52()
    relabeled = LieAlgebra(
        4,
        {(0, 1): unit_vector(4, 2), (0, 2): unit_vector(4, 3)},
        labels=("a", "b", "c", "d"),
    )
    assert relabeled != g41()
    assert relabeled.brackets == g41().brackets


def test_jacobi_holds_for_random_vectors():
    l = g64()
    rg = rng(5)
    for _ in range(10):
        x = tuple(rational(rg) for _ in range(6))
        y = tuple(rational(rg) for _ in range(6))
        z = tuple(rational(rg) for _ in range(6))
        cyclic = [
            bracket(l, x, bracket(l, y, z)),
            bracket(l, y, bracket(l, z, x)),
            bracket(l, z, bracket(l, x, y)),
        ]
        total = tuple(a + b + c for a, b, c in zip(*cyclic))
        assert total == (Fraction(0),) * 6
