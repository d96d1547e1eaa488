"""Smoke tests for the pydrmat bindings: every exposed operation runs and the
identities the library guarantees hold exactly on small instances."""

import json

import pytest

import pydrmat


def test_simplify_is_canonical():
    assert pydrmat.simplify("(l1-l2)^2/(l1-l2)") == pydrmat.simplify("l1 - l2")
    with pytest.raises(pydrmat.ExprParseError):
        pydrmat.simplify("((l1 - )")


def test_construct_and_verify_classical():
    doc = pydrmat.construct("r-rat", m=2, n=1, partition="1-3")
    op = json.loads(doc)
    assert op["kind"] == "classical_r"
    assert op["parities"] == [0, 0, 1]

    for check in ("cdybe", "unitarity", "zero-weight"):
        report = json.loads(pydrmat.verify(check, doc))
        assert report["all_pass"], report


def test_construct_and_verify_quantum():
    doc = pydrmat.construct("R-X", m=1, n=2, partition="1-2", mu=["0", "3", "g"])
    for check in ("qdybe", "coeff-suite", "hecke", "beta-recursion", "zero-weight"):
        report = json.loads(pydrmat.verify(check, doc))
        assert report["all_pass"], (check, report)
    weak = json.loads(pydrmat.verify("hecke", doc, mode="weak"))
    assert weak["all_pass"]


def test_failing_check_reports_witnesses():
    doc = pydrmat.construct("r-rat", m=1, n=1, partition="1-2")
    report = json.loads(pydrmat.verify("qdybe", doc))
    assert not report["all_pass"]
    assert report["checks"][0]["status"] == "fail"
    assert report["checks"][0]["witnesses"]


def test_gauge_roundtrip():
    doc = pydrmat.construct("R-X", m=2, n=1, partition="1-3")
    permuted = pydrmat.apply_gauge(doc, "quantum-permute", tau=[2, 3, 1])
    back = pydrmat.apply_gauge(permuted, "quantum-permute", tau=[3, 1, 2])
    a, b = json.loads(doc), json.loads(back)
    assert a["alpha"] == b["alpha"]
    assert a["beta"] == b["beta"]
    assert json.loads(pydrmat.verify("qdybe", permuted))["all_pass"]


def test_classify_recovers_partition():
    doc = pydrmat.construct("R-X", m=2, n=2, partition="1-2,3-4", mu=["1", "1", "0", "5"])
    permuted = pydrmat.apply_gauge(doc, "quantum-permute", tau=[3, 1, 4, 2])
    res = json.loads(pydrmat.classify(permuted))
    sizes = sorted(len(c) for c in res["classes"])
    assert sizes == [2, 2]
    assert json.loads(pydrmat.verify("qdybe", json.dumps(res["canonical"])))["all_pass"]


def test_quantize_pipeline():
    doc = pydrmat.construct("r-canonical", m=1, n=1, partition="1-2", nu=["0", "0"])
    res = json.loads(pydrmat.quantize(doc))
    assert res["quantization_found"]
    assert res["all_pass"], res
    assert json.loads(pydrmat.verify("qdybe", json.dumps(res["operator"])))["all_pass"]


def test_expand_semiclassical_shape():
    doc = pydrmat.construct("R-rat-gamma", m=1, n=1, partition="1-2")
    series = json.loads(pydrmat.expand(doc, order=1))
    # order-zero part of the diagonal is the identity
    assert series["coefficients"][0]["alpha"][0][0] == "1"
    assert series["coefficients"][0]["alpha"][1][1] == "1"


def test_document_errors():
    with pytest.raises(pydrmat.DocumentError):
        pydrmat.verify("qdybe", '{"schema_version": 1, "kind": "quantum_R"}')
    with pytest.raises(ValueError):
        pydrmat.construct("no-such-kind", m=1, n=1)
