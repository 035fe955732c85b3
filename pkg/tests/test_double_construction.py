from fractions import Fraction

import pytest

from metriclie.catalog import (
    entry_by_id,
    g41,
    g64_admissible_cocycle,
    heisenberg,
    instantiate,
    module_for_tag,
)
from metriclie.cochain_complex import OrthogonalModule
from metriclie.double_construction import (
    MetricLieAlgebra,
    build_double,
    coadjoint_matrix,
    fingerprint,
    verify_metric,
)
from metriclie.exact_linalg import Matrix, Signature, signature_of
from metriclie.lie_core import LieAlgebra, abelian
from metriclie.quadratic_cohomology import zero_cocycle

from support import rng


def entry_double(entry_id: str, **params):
    entry = entry_by_id(entry_id)
    return build_double(instantiate(entry, {k: Fraction(v) for k, v in params.items()}))


def test_coadjoint_matrix_on_g41():
    # ad*(X1) sends sigma^Z to -sigma^X2 and sigma^Y to -sigma^Z
    expected = Matrix.from_rows(
        [
            [0, 0, 0, 0],
            [0, 0, -1, 0],
            [0, 0, 0, -1],
            [0, 0, 0, 0],
        ]
    )
    assert coadjoint_matrix(g41(), 0) == expected
    for i in range(3):
        assert coadjoint_matrix(heisenberg(), i).transpose() == -(
            Matrix.from_rows([ad_row(heisenberg(), i, k) for k in range(3)])
        )


def ad_row(l, i, k):
    return [l.basis_bracket(i, j)[k] for j in range(l.dim)]


def test_item_eight_doubles():
    plus = entry_double("T1.8.r01")
    minus = entry_double("T1.8.r10")
    assert fingerprint(plus) == fingerprint(plus)
    fp = fingerprint(plus)
    assert fp.dim == 5
    assert fp.signature == Signature(neg=2, pos=3, null=0)
    assert fp.series_dims == (5, 3, 2, 0)
    assert fp.center_dim == 2
    assert fp.center_signature == Signature(neg=0, pos=0, null=2)
    assert fingerprint(minus).signature == Signature(neg=3, pos=2, null=0)
    assert fingerprint(minus).series_dims == (5, 3, 2, 0)
    assert plus.algebra.labels == ("X1*", "X2*", "A1", "X1", "X2")


def test_item_one_double_fingerprint():
    g = entry_double("T1.1")
    assert fingerprint(g) == Fingerprint_expected()


def Fingerprint_expected():
    from metriclie.double_construction import Fingerprint

    return Fingerprint(
        dim=10,
        signature=Signature(neg=5, pos=5, null=0),
        series_dims=(10, 5, 0),
        center_dim=5,
        center_signature=Signature(neg=0, pos=0, null=5),
        derived_signature=Signature(neg=0, pos=0, null=5),
    )


def test_double_of_zero_cocycle_is_flat():
    z = zero_cocycle(abelian(3), module_for_tag("r01"))
    g = build_double(z)
    fp = fingerprint(g)
    assert fp.dim == 7
    assert fp.signature == Signature(neg=3, pos=4, null=0)
    assert fp.series_dims == (7, 0)
    assert fp.center_dim == 7


def test_signature_additivity_on_sample_entries():
    for entry_id, params in (
        ("T1.2.a", {}),
        ("T1.3b.r02.s", {"s": 1}),
        ("T1.3c.r11.a12.r", {"r": "1/2"}),
        ("T1.4b.r11w.f1", {}),
        ("T1.7a", {}),
    ):
        entry = entry_by_id(entry_id)
        z = instantiate(entry, {k: Fraction(v) for k, v in params.items()})
        g = build_double(z)
        base = signature_of(z.module.gram)
        n = z.algebra.dim
        assert signature_of(g.gram) == Signature(
            neg=base.neg + n, pos=base.pos + n, null=0
        )


def test_dual_block_is_isotropic_abelian_ideal():
    g = entry_double("T1.3a.r01.g1")
    n = g.provenance.algebra.dim
    m = g.provenance.module.dim
    for i in range(n):
        for j in range(n):
            assert g.gram.at(i, j) == 0
    for i in range(n + m):
        for j in range(i + 1, n + m):
            assert g.algebra.basis_bracket(i, j) == tuple([Fraction(0)] * g.algebra.dim)
    # pairing blocks: identity against the original basis, module gram inside
    for i in range(n):
        assert g.gram.at(i, n + m + i) == 1
    for s in range(m):
        for t in range(m):
            assert g.gram.at(n + s, n + t) == g.provenance.module.gram.at(s, t)


def test_double_matches_hand_built_heisenberg_extension():
    z = zero_cocycle(heisenberg(), module_for_tag("r01"))
    g = build_double(z)
    # layout: three duals, one module vector, then X1 X2 Y at 4, 5, 6
    # [X1, X2] = Y survives, and [sigma^Y, X1] = -ad*(X1) sigma^Y = sigma^X2
    assert g.algebra.basis_bracket(4, 5)[6] == 1
    assert g.algebra.basis_bracket(2, 4) == (
        Fraction(0),
        Fraction(1),
        Fraction(0),
        Fraction(0),
        Fraction(0),
        Fraction(0),
        Fraction(0),
    )


def test_verify_metric_catches_flipped_coefficient():
    g = entry_double("T1.1")
    key, value = sorted(g.algebra.brackets.items())[0]
    slot = next(t for t, c in enumerate(value) if c != 0)
    mutated_value = tuple(-c if t == slot else c for t, c in enumerate(value))
    table = dict(g.algebra.brackets)
    table[key] = mutated_value
    mutated = MetricLieAlgebra(
        algebra=LieAlgebra(g.algebra.dim, table, labels=g.algebra.labels, validate=False),
        gram=g.gram,
    )
    report = verify_metric(mutated)
    assert not report.ok
    assert {c.axiom for c in report.failures()} <= {"jacobi", "invariance"}
    assert report.failures()


def test_verify_metric_catches_degenerate_form():
    g = entry_double("T1.8.r01")
    report = verify_metric(MetricLieAlgebra(algebra=g.algebra, gram=Matrix.zero(5, 5)))
    assert not report.ok


def test_build_double_rejects_nontrivial_action():
    gram = Matrix.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    action = (Matrix.from_rows([[0, 1, 0], [0, 0, -1], [0, 0, 0]]), Matrix.zero(3, 3))
    z = zero_cocycle(abelian(2), OrthogonalModule(gram, action=action))
    with pytest.raises(ValueError):
        build_double(z)


def test_build_double_rejects_non_nilpotent_base():
    solvable = LieAlgebra(2, {(0, 1): (Fraction(1), Fraction(0))}, validate=False)
    z = zero_cocycle(solvable, module_for_tag("r01"))
    with pytest.raises(ValueError):
        build_double(z)


def test_prop_fixture_double_is_self_consistent():
    g = build_double(g64_admissible_cocycle())
    assert verify_metric(g).ok
    fp = fingerprint(g)
    assert fp.dim == 16
    assert fp.signature == Signature(neg=8, pos=8, null=0)
