import pytest
from fastapi.testclient import TestClient

from main import app

PREFIX = "/api/v1"


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    assert client.get("/health").json() == {"status": "healthy"}
    assert client.get("/").json()["status"] == "operational"


def test_verify_route(client):
    response = client.post(f"{PREFIX}/verify", json={"beta": "1"})
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "SUCCESS"
    assert body["data"]["passed"] is True
    assert len(body["data"]["checks"]) == 26


def test_verify_route_beta_zero(client):
    body = client.post(f"{PREFIX}/verify", json={"beta": "0"}).json()
    statuses = {c["name"]: c["status"] for c in body["data"]["checks"]}
    assert statuses["jacobi-pibeta"] == "skipped"
    assert statuses["jacobi-pi1"] == "pass"


def test_verify_route_bad_beta(client):
    response = client.post(f"{PREFIX}/verify", json={"beta": "abc"})
    assert response.status_code == 400
    body = response.json()
    assert body["error"] == "VALIDATION_ERROR"
    assert "beta" in body["errors"]


def test_check_catalog(client):
    names = client.get(f"{PREFIX}/verify/checks").json()["data"]["checks"]
    assert names[0] == "bihamiltonian"
    assert len(names) == 26
    extended = client.get(f"{PREFIX}/verify/checks", params={"extended": True}).json()
    assert len(extended["data"]["checks"]) > 26


def test_simulate_route(client):
    response = client.post(
        f"{PREFIX}/simulate", json={"system": "r3", "beta": "0", "x0": [1, 2, 3], "steps": 2}
    )
    assert response.status_code == 200
    data = response.json()["data"]
    assert data["header"] == ["t", "x", "y", "z", "H1", "H2"]
    assert len(data["rows"]) == 3


def test_simulate_route_parameter_domain(client):
    response = client.post(f"{PREFIX}/simulate", json={"system": "r4", "beta": "0", "steps": 2})
    assert response.status_code == 400
    body = response.json()
    assert body["error"] == "PARAMETER_DOMAIN"
    assert body["errors"] == {"beta": [body["message"]]}


def test_simulate_route_arity(client):
    response = client.post(f"{PREFIX}/simulate", json={"system": "r3", "x0": [1, 2], "steps": 2})
    assert response.status_code == 400
    assert response.json()["error"] == "ARITY_MISMATCH"


def test_analyze_route(client):
    response = client.post(
        f"{PREFIX}/analyze", json={"mode": "newton-residual", "beta": "1", "steps": 100}
    )
    assert response.status_code == 200
    data = response.json()["data"]
    assert data["pass"] is True
    assert data["mode"] == "newton-residual"


def test_unknown_route(client):
    response = client.get(f"{PREFIX}/nothing")
    assert response.status_code == 404
    assert response.json()["error"] == "NOT_FOUND"
