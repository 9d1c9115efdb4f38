"""
Test the HTTP endpoints
"""
import pytest
from fastapi.testclient import TestClient

from qgain import __version__
from qgain.config import Config
from qgain.index import app
from qgain.services.families import example_c4
from qgain.utils.graph_io import graph_to_document

client = TestClient(app)
PREFIX = Config.API_PREFIX


def test_health():
    """Test the health check"""
    response = client.get(f"{PREFIX}/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok"
    assert body["version"] == __version__


def test_only_graph_endpoints_are_served():
    """Test the app serves health, rank, classify and generate and nothing else"""
    paths = sorted(route.path for route in app.routes if route.path.startswith(PREFIX))
    assert paths == [f"{PREFIX}/{name}" for name in ("classify", "generate", "health", "rank")]
    assert client.get(f"{PREFIX}/debug/routes").status_code == 404


def test_rank_endpoint():
    """Test ranking a posted graph document"""
    response = client.post(f"{PREFIX}/rank", json=graph_to_document(example_c4()))
    assert response.status_code == 200
    body = response.json()
    assert body["success"] is True
    assert body["data"]["rank"] == 2


def test_classify_endpoint():
    """Test classification of a posted graph document"""
    response = client.post(f"{PREFIX}/classify", json=graph_to_document(example_c4()))
    assert response.status_code == 200
    assert response.json()["data"]["verdicts"][0]["agree"] is True


def test_generate_endpoint():
    """Test generating a family instance"""
    response = client.post(f"{PREFIX}/generate", json={"family": "theta", "params": {"p": 1, "l": 1, "q": 1}})
    assert response.status_code == 200
    doc = response.json()["data"]
    assert doc["metadata"]["rank"] == 2
    assert len(doc["edges"]) == 6


def test_invalid_gain_is_unprocessable():
    """Test a non-unit gain is reported with its location"""
    document = {"vertices": [0, 1], "edges": [{"u": 0, "v": 1, "gain": "1,1,0,0"}]}
    response = client.post(f"{PREFIX}/rank", json=document)
    assert response.status_code == 422
    body = response.json()
    assert body["success"] is False
    assert body["details"] == {"location": "edges.0.gain"}


def test_schema_errors_are_unprocessable():
    """Test a document missing its vertices"""
    response = client.post(f"{PREFIX}/rank", json={"edges": []})
    assert response.status_code == 422
    assert response.json()["success"] is False


def test_domain_errors_are_bad_requests():
    """Test impossible family parameters"""
    response = client.post(f"{PREFIX}/generate", json={"family": "flower", "params": {"preset": "none"}})
    assert response.status_code == 400
    assert "preset" in response.json()["error"]


if __name__ == "__main__":
    pytest.main([__file__])
