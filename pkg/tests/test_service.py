"""The HTTP service: endpoint payloads and error mapping."""

import pytest
from fastapi.testclient import TestClient

from expected import FIB_0_24

import basephi
from basephi.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok", "version": basephi.__version__}


def test_expand(client):
    r = client.post("/expand", json={"n": 4})
    assert r.status_code == 200
    assert r.json() == {"n": 4, "method": "greedy", "word": "101.01", "L": 2, "R": -2}


def test_expand_methods_agree(client):
    for method in ("greedy", "recursive", "both"):
        r = client.post("/expand", json={"n": 50, "method": method})
        assert r.status_code == 200
        assert r.json()["word"] == str(basephi.bergman_greedy(50))


def test_expand_rejects_negative(client):
    assert client.post("/expand", json={"n": -1}).status_code == 422


def test_enumerate(client):
    r = client.post("/enumerate", json={"n": 2})
    assert r.status_code == 200
    assert r.json() == {
        "n": 2,
        "mode": "knott",
        "expansions": [
            {"word": "10.01", "L": 1, "R": -2},
            {"word": "1.11", "L": 0, "R": -2},
        ],
    }


def test_enumerate_natural(client):
    r = client.post("/enumerate", json={"n": 4, "mode": "natural"})
    assert r.status_code == 200
    assert r.json()["expansions"] == [{"word": "101.01", "L": 2, "R": -2}]


def test_enumerate_rejects_zero(client):
    assert client.post("/enumerate", json={"n": 0}).status_code == 422


def test_count(client):
    r = client.post("/count", json={"n": 14, "what": "nu"})
    assert r.status_code == 200
    assert r.json() == {"n": 14, "what": "nu", "value": 12}


def test_sequence_uses_from_to_keys(client):
    r = client.post("/sequence", json={"what": "fib", "from": 0, "to": 24})
    assert r.status_code == 200
    payload = r.json()
    assert payload["from"] == 0 and payload["to"] == 24
    assert payload["values"] == FIB_0_24


def test_sequence_empty_range_is_domain_error(client):
    r = client.post("/sequence", json={"what": "nu", "from": 5, "to": 3})
    assert r.status_code == 400
    assert "empty range" in r.json()["detail"]


def test_classify(client):
    r = client.post("/classify", json={"n": 14})
    assert r.status_code == 200
    assert r.json() == {
        "n": 14,
        "index": 5,
        "parity": "odd",
        "bounds": [12, 17],
        "subinterval": {"kind": "J", "bounds": [14, 15]},
        "L": 5,
        "R": -6,
        "s1": 2,
        "s1_parity": "even",
    }


def test_classify_without_subinterval(client):
    r = client.post("/classify", json={"n": 2})
    assert r.status_code == 200
    assert r.json()["subinterval"] is None


def test_classify_rejects_small(client):
    assert client.post("/classify", json={"n": 1}).status_code == 422


def test_verify_single_suite(client):
    r = client.post("/verify", json={"suite": "fib-totkap", "bound": 8})
    assert r.status_code == 200
    payload = r.json()
    assert payload["passed"] is True
    assert len(payload["suites"]) == 1
    report = payload["suites"][0]
    assert report["suite"] == "fib-totkap"
    assert report["checks"] == 8
    assert report["failures"] == []


def test_verify_all_quick(client):
    r = client.post("/verify", json={"suite": "all", "bound": 4})
    assert r.status_code == 200
    payload = r.json()
    assert payload["passed"] is True
    assert len(payload["suites"]) == 12


def test_verify_unknown_suite_is_domain_error(client):
    r = client.post("/verify", json={"suite": "nope"})
    assert r.status_code == 400
    assert "known suites" in r.json()["detail"]


def test_verify_rejects_bad_bound(client):
    assert client.post("/verify", json={"suite": "all", "bound": 0}).status_code == 422
