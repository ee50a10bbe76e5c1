"""Smoke tests for the qring python package. Skipped when the extension is
not installed; the documents themselves are exercised in depth by the C++
suite and the CLI tests, so these only pin the binding surface."""

import pytest

qring = pytest.importorskip("qring")

SMALL_POLY = "poly:2:-1,1"


def test_builtin_names():
    names = qring.builtin_names()
    assert names[0] == "z_standard"
    assert "sec3" in names


def test_check_returns_the_cli_document():
    doc = qring.check(builtin="z_standard")
    assert doc["ok"] is True
    assert doc["command"] == "check"
    assert doc["axioms"]["items"][0]["name"] == "reflexive"
    assert doc["support"]["members"] == [0]


def test_check_accepts_structure_dicts_and_text():
    structure = {
        "ring": {"kind": "modular", "n": 6},
        "relation": {"kind": "trivial_at_prime", "generators": [2]},
    }
    doc = qring.check(structure=structure)
    assert doc["support"]["members"] == [0, 2, 4]

    import json

    again = qring.check(structure=json.dumps(structure))
    assert again["support"]["members"] == [0, 2, 4]


def test_classify_both_branches():
    ordered = qring.classify(builtin="z_standard")
    assert ordered["classification"]["branch"] == "ordered"

    valued = qring.classify(builtin="z_padic_2", window="int:-16:16")
    assert valued["classification"]["branch"] == "valued"
    assert valued["classification"]["group"]["kind"] == "free_rank_one"
    assert valued["roundtrip"]["relation_match"] is True


def test_input_errors_raise_value_error():
    with pytest.raises(ValueError):
        qring.check(builtin="no_such_builtin")
    with pytest.raises(ValueError):
        qring.check(builtin="z_standard", window="bogus")
    with pytest.raises(ValueError):
        qring.check(builtin="z_standard", file="also_a_file.json")
    with pytest.raises(ValueError):
        qring.check(structure="{not json")


def test_domain_errors_raise_runtime_error():
    with pytest.raises(RuntimeError, match="QR5"):
        qring.classify(builtin="sec3", window=SMALL_POLY)
    with pytest.raises(RuntimeError):
        qring.quotfield(builtin="zmod_trivial_12_3")


def test_counterexample_document():
    doc = qring.counterexample(window=SMALL_POLY)
    assert doc["ok"] is False
    assert doc["counterexample_confirmed"] is True
    statuses = {i["name"]: i["status"] for i in doc["counterexample"]["items"]}
    assert statuses["QR5"] == "fail"


def test_enumerate_zmod():
    doc = qring.enumerate_zmod(6)
    assert doc["exhaustive"] is True
    assert doc["count"] == 2
    supports = sorted(q["support"]["members"] for q in doc["quasi_orders"])
    assert supports == [[0, 2, 4], [0, 3]]


def test_quotfield_document():
    doc = qring.quotfield(builtin="z_padic_2", window="int:-6:6")
    assert doc["ok"] is True
    assert doc["fraction_count"] == 156


def test_raw_documents_are_deterministic():
    a = qring._qring.check_json(builtin="z_padic_2", window="int:-8:8")
    b = qring._qring.check_json(builtin="z_padic_2", window="int:-8:8")
    assert a == b
