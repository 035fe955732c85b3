"""Command line front end over JSON documents.

Exit codes: 0 when the command succeeds and any verdict is positive,
1 when the mathematics fails (invalid bracket, broken cocycle identity,
inadmissible cocycle, metric axiom violation), 2 when a document or an
argument does not parse.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import catalog as cat
from . import schema
from .cochain_complex import OrthogonalModule, cohomology_dim, validate_module
from .double_construction import (
    MetricLieAlgebra,
    Provenance,
    build_double,
    fingerprint,
    verify_metric,
)
from .exact_linalg import signature_of
from .lie_core import (
    LieAlgebra,
    is_nilpotent,
    lower_central_series,
    validate_jacobi,
)
from .quadratic_cohomology import (
    AdmissibilityPreconditionError,
    AdmissibilityReport,
    QuadraticCocycle,
    check_admissible,
    cocycle_defect,
    indecomposability_proxy,
)
from .schema import SchemaError

DATA_ENV = "METRICLIE_DATA"

EXIT_OK = 0
EXIT_MATH = 1
EXIT_SCHEMA = 2


class MathFailure(Exception):
    """Well-formed input that fails a mathematical check."""


# ---------------------------------------------------------------------------
# input and output helpers
# ---------------------------------------------------------------------------


def resolve_path(name: str) -> Path:
    """Find a document: literal path, then $METRICLIE_DATA, then bundled data."""
    direct = Path(name)
    if direct.is_file():
        return direct
    override = os.environ.get(DATA_ENV)
    if override:
        candidate = Path(override) / name
        if candidate.is_file():
            return candidate
    bundled = resources.files("metriclie") / "data" / name
    if bundled.is_file():
        return Path(str(bundled))
    raise SchemaError(f"cannot find document {name!r}")


def load_document(name: str):
    path = resolve_path(name)
    return schema.loads_document(path.read_text())


def load_kind(name: str, kind: str):
    got, parsed = load_document(name)
    if got != kind:
        raise SchemaError(f"{name}: expected a {kind} document, got {got}")
    return parsed


def emit(doc: dict, out: str | None = None) -> None:
    text = schema.dumps_document(doc)
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def report(command: str, **fields) -> dict:
    payload = {"command": command}
    payload.update(fields)
    return schema.wrap("report", payload)


# ---------------------------------------------------------------------------
# shared assembly steps
# ---------------------------------------------------------------------------


def checked_algebra(algebra: LieAlgebra) -> LieAlgebra:
    outcome = validate_jacobi(algebra)
    if not outcome.ok:
        i, j, k = outcome.triple
        labels = algebra.labels
        raise MathFailure(
            f"Jacobi identity fails on ({labels[i]}, {labels[j]}, {labels[k]})"
        )
    return algebra


def checked_module(parsed: schema.ParsedModule) -> OrthogonalModule:
    try:
        return parsed.build()
    except ValueError as exc:
        raise MathFailure(str(exc)) from None


def assemble_cocycle(
    parsed: schema.ParsedCocycle,
    algebra_doc: str | None,
    module_doc: str | None,
) -> QuadraticCocycle:
    if algebra_doc is not None:
        algebra = load_kind(algebra_doc, "lie_algebra")
    elif parsed.algebra is not None:
        algebra = parsed.algebra
    else:
        raise SchemaError(
            "cocycle document has no algebra context; pass --algebra or embed one"
        )
    if module_doc is not None:
        parsed_module = load_kind(module_doc, "module")
    elif parsed.module is not None:
        parsed_module = parsed.module
    else:
        raise SchemaError(
            "cocycle document has no module context; pass --module or embed one"
        )
    algebra = checked_algebra(algebra)
    module = checked_module(parsed_module)
    if module.action is not None and len(module.action) != algebra.dim:
        raise SchemaError("module action length does not match the algebra dimension")
    alpha, gamma = schema.assemble_cochains(parsed, algebra, module)
    try:
        validate_module(algebra, module)
        return QuadraticCocycle(algebra, module, alpha, gamma)
    except ValueError as exc:
        raise MathFailure(str(exc)) from None


def admissibility_payload(rep: AdmissibilityReport) -> dict:
    conditions = []
    for cond in rep.conditions:
        entry: dict = {
            "k": cond.k,
            "a_passed": cond.a_passed,
            "b_passed": cond.b_passed,
            "b_image_dim": cond.b_image_dim,
        }
        if cond.a_witness is not None:
            l0, a0, z0 = cond.a_witness
            entry["a_witness"] = {
                "l0": schema.format_vector(l0),
                "a0": schema.format_vector(a0),
                "z0": schema.format_vector(z0),
            }
        conditions.append(entry)
    return {"admissible": rep.overall, "conditions": conditions}


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    kind, parsed = load_document(args.document)
    if kind == "lie_algebra":
        algebra = checked_algebra(parsed)
        _, profile = lower_central_series(algebra)
        emit(
            report(
                "verify",
                kind=kind,
                ok=True,
                nilpotent=is_nilpotent(algebra),
                series_dims=list(profile.dims),
            )
        )
        return EXIT_OK
    if kind == "module":
        module = checked_module(parsed)
        emit(
            report(
                "verify",
                kind=kind,
                ok=True,
                dim=module.dim,
                signature=list(signature_of(module.gram).as_tuple()),
            )
        )
        return EXIT_OK
    if kind == "cocycle":
        cocycle = assemble_cocycle(parsed, args.algebra, args.module)
        emit(
            report(
                "verify",
                kind=kind,
                ok=True,
                algebra_dim=cocycle.algebra.dim,
                module_dim=cocycle.module.dim,
            )
        )
        return EXIT_OK
    if kind == "metric_lie_algebra":
        gram = parsed.gram
        provenance = None
        if parsed.provenance is not None:
            source = assemble_cocycle(parsed.provenance, None, None)
            provenance = Provenance(
                source.algebra, source.module, source.alpha, source.gamma
            )
        metric = MetricLieAlgebra(parsed.algebra, gram, provenance)
        outcome = verify_metric(metric)
        if not outcome.ok:
            failed = outcome.failures()[0]
            raise MathFailure(f"{failed.axiom}: {failed.detail}")
        fp = fingerprint(metric)
        emit(
            report(
                "verify",
                kind=kind,
                ok=True,
                nilpotent=is_nilpotent(metric.algebra),
                fingerprint=_fingerprint_payload(fp),
            )
        )
        return EXIT_OK
    raise SchemaError(f"verify does not accept {kind} documents")


def _fingerprint_payload(fp) -> dict:
    return {
        "dim": fp.dim,
        "signature": list(fp.signature.as_tuple()),
        "series_dims": list(fp.series_dims),
        "center_dim": fp.center_dim,
        "center_signature": list(fp.center_signature.as_tuple()),
        "derived_signature": list(fp.derived_signature.as_tuple()),
    }


def cmd_admissible(args: argparse.Namespace) -> int:
    parsed = load_kind(args.document, "cocycle")
    cocycle = assemble_cocycle(parsed, args.algebra, args.module)
    try:
        rep = check_admissible(cocycle)
    except AdmissibilityPreconditionError as exc:
        raise MathFailure(str(exc)) from None
    payload = admissibility_payload(rep)
    payload["proxy_indecomposable"] = indecomposability_proxy(cocycle)
    emit(report("admissible", ok=rep.overall, **payload))
    return EXIT_OK if rep.overall else EXIT_MATH


def cmd_double(args: argparse.Namespace) -> int:
    parsed = load_kind(args.document, "cocycle")
    cocycle = assemble_cocycle(parsed, args.algebra, args.module)
    try:
        metric = build_double(cocycle)
    except (ValueError, AssertionError) as exc:
        raise MathFailure(str(exc)) from None
    emit(schema.wrap("metric_lie_algebra", schema.metric_to_payload(metric)), args.out)
    if args.out is not None:
        emit(
            report(
                "double",
                ok=True,
                out=args.out,
                fingerprint=_fingerprint_payload(fingerprint(metric)),
            )
        )
    return EXIT_OK


def cmd_cohomology(args: argparse.Namespace) -> int:
    algebra = checked_algebra(load_kind(args.document, "lie_algebra"))
    module = None
    if args.module is not None:
        module = checked_module(load_kind(args.module, "module"))
        try:
            validate_module(algebra, module)
        except ValueError as exc:
            raise MathFailure(str(exc)) from None
    if args.degree < 0:
        raise SchemaError("--degree must be nonnegative")
    dim = cohomology_dim(algebra, module, args.degree)
    emit(
        report(
            "cohomology",
            ok=True,
            degree=args.degree,
            dim=dim,
            coefficients="module" if module is not None else "trivial",
        )
    )
    return EXIT_OK


def parse_samples(text: str) -> dict[str, tuple[Fraction, ...]]:
    samples = dict(cat.default_samples())
    if not text:
        return samples
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, _, rest = chunk.partition("=")
        name = name.strip()
        if name not in cat.PARAM_DOMAINS:
            raise SchemaError(f"unknown parameter {name!r} in --samples")
        values = []
        for piece in rest.split(","):
            piece = piece.strip()
            value = schema.parse_scalar(piece, f"--samples {name}")
            if cat.PARAM_DOMAINS[name] == "positive" and value <= 0:
                raise SchemaError(f"--samples {name}: values must be positive")
            values.append(value)
        if not values:
            raise SchemaError(f"--samples {name}: empty value list")
        samples[name] = tuple(values)
    return samples


def _row_payload(row: cat.CatalogRow) -> dict:
    payload: dict = {
        "entry": row.entry_id,
        "params": {k: schema.format_scalar(v) for k, v in row.params},
        "cocycle_valid": row.cocycle_valid,
        "admissible": row.admissible,
        "proxy_indecomposable": row.proxy_indecomposable,
        "double_built": row.double_built,
    }
    if row.fingerprint is not None:
        payload["fingerprint"] = _fingerprint_payload(row.fingerprint)
    if row.error is not None:
        payload["error"] = row.error
    return payload


def _row_filename(row: cat.CatalogRow) -> str:
    stem = row.entry_id.replace(".", "_")
    for name, value in row.params:
        stem += f"__{name}_{schema.format_scalar(value).replace('/', 'over').replace('-', 'm')}"
    return stem + ".json"


def cmd_catalog(args: argparse.Namespace) -> int:
    samples = parse_samples(args.samples or "")
    entries = cat.ENTRIES
    if args.entries:
        entries = tuple(e for e in cat.ENTRIES if e.id.startswith(args.entries))
        if not entries:
            raise SchemaError(f"no catalog entries match prefix {args.entries!r}")
    rep = cat.run_catalog(samples, entries)
    if args.out is not None:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        for row in rep.rows:
            if not row.ok:
                continue
            entry = cat.entry_by_id(row.entry_id)
            cocycle = cat.instantiate(entry, dict(row.params))
            metric = build_double(cocycle)
            doc = schema.wrap("metric_lie_algebra", schema.metric_to_payload(metric))
            (out_dir / _row_filename(row)).write_text(schema.dumps_document(doc))
    if args.table:
        sys.stdout.write(cat.report_table(rep) + "\n")
    else:
        payload = {
            "ok": rep.all_ok,
            "rows": [_row_payload(row) for row in rep.rows],
            "collisions": [
                {"fingerprint": repr(key), "entries": list(ids)}
                for key, ids in rep.collisions
            ],
            "family_splits": [
                {"entry": entry_id, "fingerprints": count}
                for entry_id, count in rep.family_splits
            ],
        }
        emit(report("catalog", **payload))
    return EXIT_OK if rep.all_ok else EXIT_MATH


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metriclie",
        description="Exact metric doubles of nilpotent Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="validate a JSON document")
    p_verify.add_argument("document")
    p_verify.add_argument("--algebra", help="algebra context for cocycle documents")
    p_verify.add_argument("--module", help="module context for cocycle documents")
    p_verify.set_defaults(func=cmd_verify)

    p_adm = sub.add_parser("admissible", help="run the admissibility test")
    p_adm.add_argument("document")
    p_adm.add_argument("--algebra")
    p_adm.add_argument("--module")
    p_adm.set_defaults(func=cmd_admissible)

    p_double = sub.add_parser("double", help="build the metric double of a cocycle")
    p_double.add_argument("document")
    p_double.add_argument("--algebra")
    p_double.add_argument("--module")
    p_double.add_argument("--out", help="write the result here instead of stdout")
    p_double.set_defaults(func=cmd_double)

    p_coh = sub.add_parser("cohomology", help="dimension of a cohomology space")
    p_coh.add_argument("document")
    p_coh.add_argument("--degree", type=int, required=True)
    p_coh.add_argument("--module")
    p_coh.set_defaults(func=cmd_cohomology)

    p_catalog = sub.add_parser("catalog", help="process the classified catalog")
    p_catalog.add_argument("--samples", help="override parameter samples, e.g. 's=1,2;r=1/2'")
    p_catalog.add_argument("--entries", help="only entries whose id starts with this prefix")
    p_catalog.add_argument("--out", help="write double documents into this directory")
    p_catalog.add_argument("--table", action="store_true", help="print a plain text table")
    p_catalog.set_defaults(func=cmd_catalog)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        emit(report(args.command, ok=False, error=str(exc)))
        return EXIT_SCHEMA
    except MathFailure as exc:
        emit(report(args.command, ok=False, error=str(exc)))
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
