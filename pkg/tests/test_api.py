from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

from verseflow.api import create_app
from verseflow.session import PlanService, PlanStore

from .conftest import make_corpus


@pytest.fixture
def client(tmp_path):
    service = PlanService(make_corpus(16, words_per_line=8),
                          PlanStore(tmp_path / "plans"))
    return TestClient(create_app(service))


def create_session(client, overrides=None):
    response = client.post("/sessions", json=overrides or {})
    assert response.status_code == 200, response.text
    return response.json()


def parse_sse(body: str) -> list[dict]:
    return [json.loads(line[len("data: "):])
            for line in body.splitlines() if line.startswith("data: ")]


class TestSessions:
    def test_create_defaults(self, client):
        doc = create_session(client)
        assert doc["mode"] == "gibbs_single"
        assert doc["armed"] is False
        assert doc["params"]["rho"] == 0.99
        assert doc["plan_id"] is None

    def test_create_with_bad_override(self, client):
        response = client.post("/sessions", json={"lines": 11})
        assert response.status_code == 400
        doc = response.json()
        assert doc["error"] == "invalid_config"
        assert doc["field"] == "number_of_lines"

    def test_get_roundtrip(self, client):
        doc = create_session(client, {"x": 12.0})
        echoed = client.get(f"/sessions/{doc['id']}").json()
        assert echoed == doc

    def test_get_unknown_is_404(self, client):
        assert client.get("/sessions/missing").status_code == 404


class TestParamsPatch:
    def test_arming_patch_generates(self, client):
        doc = create_session(client, {"start": 0, "lines": 2})
        patched = client.patch(f"/sessions/{doc['id']}/params", json={"z": 0.8}).json()
        assert patched["armed"] is True
        assert patched["plan_id"] is not None
        assert patched["plan_version"] == 1

    def test_invalid_patch_is_400(self, client):
        doc = create_session(client)
        response = client.patch(f"/sessions/{doc['id']}/params", json={"rho": -0.5})
        assert response.status_code == 400
        assert response.json()["field"] == "rho"

    def test_zero_keeps_unarmed(self, client):
        doc = create_session(client, {"start": 0})
        patched = client.patch(f"/sessions/{doc['id']}/params", json={"z": 0}).json()
        assert patched["armed"] is False
        assert patched["plan_id"] is None


class TestGenerate:
    def test_not_armed_is_409(self, client):
        doc = create_session(client, {"start": 0})
        response = client.post(f"/sessions/{doc['id']}/generate")
        assert response.status_code == 409
        assert response.json()["error"] == "not_armed"

    def test_generate_returns_canonical_plan(self, client):
        doc = create_session(client, {"start": 0, "lines": 3, "z": 1.0, "seed": 4})
        response = client.post(f"/sessions/{doc['id']}/generate")
        assert response.status_code == 200
        plan = json.loads(response.content)
        assert len(plan["events"]) == 3
        assert plan["seed"] == 4

    def test_plan_endpoint_bytes_match_generate(self, client):
        doc = create_session(client, {"start": 0, "lines": 2, "z": 0.7})
        generated = client.post(f"/sessions/{doc['id']}/generate")
        plan_id = client.get(f"/sessions/{doc['id']}").json()["plan_id"]
        fetched = client.get(f"/plans/{plan_id}")
        assert fetched.content == generated.content

    def test_unknown_plan_is_404(self, client):
        assert client.get("/plans/ffffffffffffffff").status_code == 404

    def test_out_of_range_is_400(self, client):
        doc = create_session(client, {"start": 15, "lines": 5, "z": 1.0})
        response = client.post(f"/sessions/{doc['id']}/generate")
        assert response.status_code == 400
        assert response.json()["error"] == "range"


class TestStream:
    def test_stream_messages(self, client):
        doc = create_session(client, {"start": 0, "lines": 3, "z": 1.0})
        client.post(f"/sessions/{doc['id']}/generate")
        response = client.get(f"/sessions/{doc['id']}/stream")
        assert response.status_code == 200
        assert response.headers["content-type"].startswith("text/event-stream")
        messages = parse_sse(response.text)
        assert [m["type"] for m in messages] == ["header", "event", "event", "event", "end"]
        assert messages[0]["mode"] == "gibbs_single"

    def test_stream_without_plan_is_409(self, client):
        doc = create_session(client, {"start": 0})
        response = client.get(f"/sessions/{doc['id']}/stream")
        assert response.status_code == 409
        assert response.json()["error"] == "no_plan"

    def test_stream_events_match_plan(self, client):
        doc = create_session(client, {"start": 0, "lines": 2, "z": 0.9})
        plan = json.loads(client.post(f"/sessions/{doc['id']}/generate").content)
        messages = parse_sse(client.get(f"/sessions/{doc['id']}/stream").text)
        events = [m["event"] for m in messages if m["type"] == "event"]
        assert events == plan["events"]


class TestCorpusEndpoint:
    def test_window(self, client):
        doc = client.get("/corpus/lines", params={"start": 1, "count": 2}).json()
        assert doc["total"] == 16
        assert [ln["index"] for ln in doc["lines"]] == [1, 2]

    def test_full_listing(self, client):
        doc = client.get("/corpus/lines").json()
        assert len(doc["lines"]) == 16
        assert doc["source_id"] == "synthetic"
