from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from gl3cg import __version__
from gl3cg.service import app

client = TestClient(app)

THREEJ_BODY = {
    "v": [1, 0, 0],
    "w": [1, 0, 0],
    "u": [2, 0, 0],
    "pv": {"mid": [1, 0], "bot": 1},
    "pw": {"mid": [1, 0], "bot": 1},
    "pu": {"mid": [2, 0], "bot": 2},
}


def test_health():
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok", "version": __version__}


def test_threej_formula():
    resp = client.post("/api/v1/threej", json=THREEJ_BODY)
    assert resp.status_code == 200
    body = resp.json()
    assert body["value"] == "2"
    assert body["label"] == [1, 1, 0, 0, 0, 0, 0, 0]
    assert body["method"] == "formula"
    assert body["oracle_value"] is None
    assert body["timings"] is None


def test_threej_both_agree():
    resp = client.post("/api/v1/threej",
                       json={**THREEJ_BODY, "method": "both", "timings": True})
    assert resp.status_code == 200
    body = resp.json()
    assert body["agree"] is True
    assert body["formula_value"] == body["oracle_value"] == "2"
    assert set(body["timings"]) == {"formula", "oracle"}


def test_threej_fractional_value():
    body = {
        "v": [1, 1, 0],
        "w": [1, 0, 0],
        "u": [2, 1, 0],
        "pv": {"mid": [1, 1], "bot": 1},
        "pw": {"mid": [1, 0], "bot": 1},
        "pu": {"mid": [2, 1], "bot": 2},
    }
    resp = client.post("/api/v1/threej", json=body)
    assert resp.status_code == 200
    value = resp.json()["value"]
    assert "/" in value or value.lstrip("-").isdigit()


def test_threej_bad_constituent():
    resp = client.post("/api/v1/threej", json={**THREEJ_BODY, "u": [3, 0, 0]})
    assert resp.status_code == 422
    assert "does not occur" in resp.json()["detail"]


def test_threej_bad_label():
    resp = client.post("/api/v1/threej",
                       json={**THREEJ_BODY,
                             "label": [0, 0, 0, 0, 1, 0, 0, 0]})
    assert resp.status_code == 422
    assert "not in the multiplicity basis" in resp.json()["detail"]


def test_threej_bad_pattern():
    resp = client.post("/api/v1/threej",
                       json={**THREEJ_BODY,
                             "pv": {"mid": [2, 0], "bot": 1}})
    assert resp.status_code == 422
    assert "invalid pv pattern" in resp.json()["detail"]


def test_threej_label_needed_when_ambiguous():
    body = {
        "v": [2, 1, 0],
        "w": [2, 1, 0],
        "u": [3, 2, 1],
        "pv": {"mid": [2, 1], "bot": 2},
        "pw": {"mid": [2, 1], "bot": 2},
        "pu": {"mid": [3, 1], "bot": 3},
    }
    resp = client.post("/api/v1/threej", json=body)
    assert resp.status_code == 422
    assert "pass label or label_index" in resp.json()["detail"]
    resp = client.post("/api/v1/threej", json={**body, "label_index": 0})
    assert resp.status_code == 200
    resp = client.post("/api/v1/threej", json={**body, "label_index": 5})
    assert resp.status_code == 422


def test_table_rows():
    resp = client.post("/api/v1/table",
                       json={"v": [1, 0, 0], "w": [1, 0, 0], "u": [2, 0, 0],
                             "method": "both"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["agree"] is True
    assert len(body["rows"]) == 54
    nonzero = [r for r in body["rows"] if r["value"] != "0"]
    assert all(r["value"] == r["oracle_value"] for r in body["rows"])
    assert len(nonzero) == 9


def test_table_nonzero_only():
    resp = client.post("/api/v1/table",
                       json={"v": [1, 0, 0], "w": [1, 0, 0], "u": [2, 0, 0],
                             "nonzero_only": True})
    body = resp.json()
    assert len(body["rows"]) == 9
    assert all(r["value"] != "0" for r in body["rows"])


def test_table_decomposition_summary():
    resp = client.post("/api/v1/table", json={"v": [1, 0, 0], "w": [1, 0, 0]})
    assert resp.status_code == 200
    body = resp.json()
    assert body["rows"] is None
    assert [c["u"] for c in body["constituents"]] == [[2, 0, 0], [1, 1, 0]]
    assert all(c["multiplicity"] == 1 for c in body["constituents"])


def test_table_bad_constituent():
    resp = client.post("/api/v1/table",
                       json={"v": [1, 0, 0], "w": [1, 0, 0], "u": [5, 0, 0]})
    assert resp.status_code == 422


def test_verify_micro():
    resp = client.post("/api/v1/verify",
                       json={"suites": ["micro"], "max_weight": 1})
    assert resp.status_code == 200
    body = resp.json()
    assert body["passed"] is True
    assert body["report"].startswith("verification report")
    assert all(c["ok"] for c in body["checks"])


def test_verify_unknown_suite():
    resp = client.post("/api/v1/verify", json={"suites": ["nope"]})
    assert resp.status_code == 422


def test_verify_rejects_out_of_range():
    resp = client.post("/api/v1/verify", json={"max_weight": 9})
    assert resp.status_code == 422
    resp = client.post("/api/v1/verify", json={"jobs": 0})
    assert resp.status_code == 422
