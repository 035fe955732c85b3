"""Exact tools for quadratic extensions of nilpotent Lie algebras.

The package builds metric Lie algebras from a nilpotent algebra, an
orthogonal coefficient module and a quadratic cocycle, tests the cocycle
for admissibility, and ships a classified catalog of such data in low
dimensions together with a JSON command line front end.  All arithmetic
is exact over the rationals.
"""

from .cochain_complex import (
    Cochain,
    Isomap,
    OrthogonalModule,
    cochain_from_terms,
    cohomology_dim,
    differential,
    differential_matrix,
    pullback,
    scalar_cochain,
    wedge_pair,
)
from .double_construction import (
    Fingerprint,
    MetricLieAlgebra,
    MetricReport,
    build_double,
    fingerprint,
    verify_metric,
)
from .exact_linalg import Matrix, Signature, scalar, signature_of
from .lie_core import (
    JacobiError,
    LieAlgebra,
    Subspace,
    abelian,
    bracket,
    center,
    direct_sum,
    is_nilpotent,
    lower_central_series,
    nilpotency_index,
    validate_jacobi,
)
from .quadratic_cohomology import (
    AdmissibilityReport,
    CocycleError,
    QuadraticCochain,
    QuadraticCocycle,
    act,
    check_admissible,
    cq_compose,
    cq_identity,
    cq_inverse,
    indecomposability_proxy,
    zero_cocycle,
)
from .catalog import (
    ENTRIES,
    CatalogEntry,
    CatalogReport,
    default_samples,
    entry_by_id,
    instantiate,
    run_catalog,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport",
    "CatalogEntry",
    "CatalogReport",
    "Cochain",
    "CocycleError",
    "ENTRIES",
    "Fingerprint",
    "Isomap",
    "JacobiError",
    "LieAlgebra",
    "Matrix",
    "MetricLieAlgebra",
    "MetricReport",
    "OrthogonalModule",
    "QuadraticCochain",
    "QuadraticCocycle",
    "Signature",
    "Subspace",
    "abelian",
    "act",
    "bracket",
    "build_double",
    "center",
    "check_admissible",
    "cochain_from_terms",
    "cohomology_dim",
    "cq_compose",
    "cq_identity",
    "cq_inverse",
    "default_samples",
    "differential",
    "differential_matrix",
    "direct_sum",
    "entry_by_id",
    "fingerprint",
    "indecomposability_proxy",
    "instantiate",
    "is_nilpotent",
    "lower_central_series",
    "nilpotency_index",
    "pullback",
    "run_catalog",
    "scalar",
    "scalar_cochain",
    "signature_of",
    "validate_jacobi",
    "verify_metric",
    "wedge_pair",
    "zero_cocycle",
]
