import json
from fractions import Fraction

from metriclie import cli, schema
from metriclie.catalog import g41, g64, module_for_tag
from metriclie.schema import algebra_to_payload, module_to_payload


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    doc = json.loads(out) if out else None
    return code, doc


def write_doc(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(schema.dumps_document(doc))
    return str(path)


def test_verify_bundled_algebra(capsys):
    code, doc = run(capsys, "verify", "algebras/g64.json")
    assert code == 0
    assert doc["kind"] == "report"
    assert doc["payload"]["ok"] is True
    assert doc["payload"]["nilpotent"] is True
    assert doc["payload"]["series_dims"] == [6, 2, 0]


def test_verify_bundled_module(capsys):
    code, doc = run(capsys, "verify", "modules/r22w.json")
    assert code == 0
    assert doc["payload"]["signature"] == [2, 2, 0]


def test_verify_bundled_cocycle_and_double(capsys):
    code, doc = run(capsys, "verify", "cocycles/g64_quad.json")
    assert code == 0
    assert doc["payload"]["algebra_dim"] == 6
    code, doc = run(capsys, "verify", "doubles/r2_plane_double.json")
    assert code == 0
    assert doc["payload"]["fingerprint"]["dim"] == 5


def test_verify_flags_jacobi_failure(tmp_path, capsys):
    doc = schema.wrap(
        "lie_algebra",
        {
            "dim": 3,
            "labels": ["X1", "X2", "X3"],
            "brackets": [
                {"i": 1, "j": 2, "value": ["0", "0", "1"]},
                {"i": 1, "j": 3, "value": ["1", "0", "0"]},
            ],
        },
    )
    code, out = run(capsys, "verify", write_doc(tmp_path, "bad.json", doc))
    assert code == 1
    assert out["payload"]["ok"] is False
    assert "Jacobi" in out["payload"]["error"]


def test_verify_rejects_decimal_scalar(tmp_path, capsys):
    doc = schema.wrap(
        "lie_algebra",
        {
            "dim": 2,
            "labels": ["X1", "X2"],
            "brackets": [{"i": 1, "j": 2, "value": ["0.5", "0"]}],
        },
    )
    code, out = run(capsys, "verify", write_doc(tmp_path, "dec.json", doc))
    assert code == 2
    assert "rational" in out["payload"]["error"]


def test_verify_rejects_conflicting_bracket_orders(tmp_path, capsys):
    doc = schema.wrap(
        "lie_algebra",
        {
            "dim": 3,
            "labels": ["X1", "X2", "Y"],
            "brackets": [
                {"i": 1, "j": 2, "value": ["0", "0", "1"]},
                {"i": 2, "j": 1, "value": ["0", "0", "-1"]},
            ],
        },
    )
    code, _ = run(capsys, "verify", write_doc(tmp_path, "dup.json", doc))
    assert code == 2


def test_verify_missing_document(capsys):
    code, doc = run(capsys, "verify", "no/such/file.json")
    assert code == 2
    assert "cannot find document" in doc["payload"]["error"]


def test_verify_flags_broken_cocycle(tmp_path, capsys):
    from metriclie.cochain_complex import cochain_from_terms, differential
    from itertools import combinations

    base = json.loads(
        (cli.resolve_path("cocycles/g64_quad.json")).read_text()
    )
    algebra = g64()
    offender = next(
        key
        for key in combinations(range(6), 3)
        if not differential(
            algebra,
            None,
            cochain_from_terms(6, 3, 1, [(key, (Fraction(1),))], scalar=True),
        ).is_zero()
    )
    base["payload"]["gamma"].append(
        {"i": offender[0] + 1, "j": offender[1] + 1, "k": offender[2] + 1, "value": "1"}
    )
    code, out = run(capsys, "verify", write_doc(tmp_path, "broken.json", base))
    assert code == 1
    assert "gamma_equation" in out["payload"]["error"]


def test_admissible_prop_fixture(capsys):
    code, doc = run(capsys, "admissible", "cocycles/g64_quad.json")
    assert code == 0
    payload = doc["payload"]
    assert payload["ok"] is True and payload["admissible"] is True
    assert [c["b_image_dim"] for c in payload["conditions"]] == [4, 4]
    assert payload["proxy_indecomposable"] is True


def test_admissible_reports_witness_for_zero_cocycle(tmp_path, capsys):
    doc = schema.wrap(
        "cocycle",
        {
            "alpha": [],
            "gamma": [],
            "algebra": algebra_to_payload(g41()),
            "module": module_to_payload(module_for_tag("r01")),
        },
    )
    code, out = run(capsys, "admissible", write_doc(tmp_path, "zero.json", doc))
    assert code == 1
    payload = out["payload"]
    assert payload["admissible"] is False
    failing = [c for c in payload["conditions"] if not c["a_passed"]]
    assert failing and failing[-1]["k"] == 2
    assert failing[-1]["a_witness"]["l0"] == ["0", "0", "0", "1"]


def test_admissible_with_context_overrides(capsys):
    code, doc = run(
        capsys,
        "admissible",
        "forms/f1.json",
        "--algebra",
        "algebras/h1r.json",
        "--module",
        "modules/r11w.json",
    )
    assert code == 0
    assert doc["payload"]["admissible"] is True


def test_cocycle_without_context_is_schema_error(capsys):
    code, doc = run(capsys, "admissible", "forms/f1.json")
    assert code == 2
    assert "context" in doc["payload"]["error"]


def test_double_writes_document(tmp_path, capsys):
    out_file = tmp_path / "double.json"
    code, doc = run(capsys, "double", "cocycles/g64_quad.json", "--out", str(out_file))
    assert code == 0
    assert doc["payload"]["fingerprint"]["dim"] == 16
    kind, parsed = schema.loads_document(out_file.read_text())
    assert kind == "metric_lie_algebra"
    assert parsed.algebra.dim == 16
    code, doc = run(capsys, "verify", str(out_file))
    assert code == 0
    assert doc["payload"]["fingerprint"]["signature"] == [8, 8, 0]


def test_double_prints_document_without_out(capsys):
    code, doc = run(capsys, "double", "cocycles/r2_plane.json")
    assert code == 0
    assert doc["kind"] == "metric_lie_algebra"
    assert doc["payload"]["provenance"]["algebra"]["dim"] == 2


def test_cohomology_dimensions(capsys):
    code, doc = run(capsys, "cohomology", "algebras/r5.json", "--degree", "3")
    assert code == 0 and doc["payload"]["dim"] == 10
    code, doc = run(capsys, "cohomology", "algebras/g52.json", "--degree", "3")
    assert code == 0 and doc["payload"]["dim"] == 6
    code, doc = run(
        capsys,
        "cohomology",
        "algebras/h1r.json",
        "--degree",
        "2",
        "--module",
        "modules/r01.json",
    )
    assert code == 0 and doc["payload"]["dim"] == 4
    assert doc["payload"]["coefficients"] == "module"
    code, doc = run(capsys, "cohomology", "algebras/r5.json", "--degree", "-1")
    assert code == 2


def test_catalog_subset(capsys):
    code, doc = run(capsys, "catalog", "--entries", "T1.8")
    assert code == 0
    payload = doc["payload"]
    assert payload["ok"] is True
    assert len(payload["rows"]) == 2
    assert all(row["double_built"] for row in payload["rows"])


def test_catalog_unknown_prefix(capsys):
    code, doc = run(capsys, "catalog", "--entries", "T9")
    assert code == 2


def test_catalog_sample_overrides(capsys):
    code, doc = run(
        capsys, "catalog", "--entries", "T1.3b", "--samples", "s=1;r=2"
    )
    assert code == 0
    assert len(doc["payload"]["rows"]) == 4
    for bad in ("r=0", "r=-1", "s=abc", "q=1", "s="):
        code, doc = run(capsys, "catalog", "--entries", "T1.8", "--samples", bad)
        assert code == 2, bad


def test_catalog_table_output(capsys):
    code = cli.main(["catalog", "--entries", "T1.8", "--table"])
    out = capsys.readouterr().out
    assert code == 0
    assert "T1.8.r01" in out and "T1.8.r10" in out


def test_catalog_out_directory(tmp_path, capsys):
    out_dir = tmp_path / "doubles"
    code, _ = run(capsys, "catalog", "--entries", "T1.8", "--out", str(out_dir))
    assert code == 0
    files = sorted(out_dir.glob("*.json"))
    assert len(files) == 2
    for path in files:
        kind, parsed = schema.loads_document(path.read_text())
        assert kind == "metric_lie_algebra"
        assert parsed.provenance is not None


def test_data_dir_override(tmp_path, monkeypatch, capsys):
    source = cli.resolve_path("algebras/g41.json").read_text()
    (tmp_path / "myalg.json").write_text(source)
    monkeypatch.setenv(cli.DATA_ENV, str(tmp_path))
    code, doc = run(capsys, "verify", "myalg.json")
    assert code == 0
    assert doc["payload"]["series_dims"] == [4, 2, 1, 0]
