import json

import pytest
from fastapi.testclient import TestClient

from chainsel.elicitation import BIGBOX_REQUIREMENTS_DOC
from chainsel.kb import builtin_knowledge_base, load_knowledge_base, serialize_knowledge_base
from chainsel.service import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


def _rank(client, doc=BIGBOX_REQUIREMENTS_DOC, **kwargs):
    return client.post("/api/rank", json={"requirements": doc}, **kwargs)


def test_get_criteria(client, kb):
    r = client.get("/api/criteria")
    assert r.status_code == 200
    body = r.json()
    assert body["kb_version"] == kb.version
    assert len(body["criteria"]) == 14
    assert len({c["iso_category"] for c in body["criteria"]}) == 5
    ordinal = next(c for c in body["criteria"] if c["id"] == "learning_curve")
    assert [lv["label"] for lv in ordinal["ordinal_scale"]][0] == "Faible"


def test_get_alternatives(client):
    r = client.get("/api/alternatives")
    assert r.status_code == 200
    alts = r.json()["alternatives"]
    assert [a["id"] for a in alts] == [
        "bitcoin",
        "ethereum_pow",
        "ethereum_poa",
        "hyperledger_fabric",
        "corda",
    ]
    bitcoin = alts[0]
    assert bitcoin["values"]["smart_contracts"] == {"bool": False}


def test_rank_golden(client):
    r = _rank(client)
    assert r.status_code == 200
    body = r.json()
    assert body["ordering"] == ["ethereum_poa", "corda", "ethereum_pow"]
    assert body["scores"]["ethereum_poa"] == pytest.approx(0.83124114, abs=1e-6)
    assert body["scores"]["corda"] == pytest.approx(0.71016139, abs=1e-6)
    assert body["scores"]["ethereum_pow"] == pytest.approx(0.28983861, abs=1e-6)
    assert {d["alternative"] for d in body["disqualified"]} == {
        "bitcoin",
        "hyperledger_fabric",
    }
    assert "trace" not in body


def test_rank_is_byte_identical(client):
    first = _rank(client)
    second = _rank(client)
    assert first.content == second.content


def test_rank_trace_param(client):
    r = client.post("/api/rank?trace=1", json={"requirements": BIGBOX_REQUIREMENTS_DOC})
    trace = r.json()["trace"]
    assert trace["alternatives"] == ["ethereum_pow", "ethereum_poa", "corda"]
    assert trace["matrix"][0] == [180.0, 0.0, 0.5, 0.4]


def test_rank_unknown_criterion_is_400_naming_it(client):
    r = _rank(client, {"preferences": {"nope": "desirable"}})
    assert r.status_code == 400
    detail = r.json()["detail"]
    assert detail["type"] == "RequirementsError"
    assert "nope" in detail["message"]


def test_rank_all_indifferent_is_400(client):
    r = _rank(client, {"preferences": {}})
    assert r.status_code == 400
    assert "no active criteria" in r.json()["detail"]["message"]


def test_rank_malformed_body_is_400(client):
    r = client.post("/api/rank", json={"requirements": {"preferences": 7}})
    assert r.status_code == 400
    assert r.json()["detail"]["type"] == "RequestValidationError"


def test_sensitivity_endpoint(client):
    r = client.post(
        "/api/sensitivity",
        json={
            "requirements": BIGBOX_REQUIREMENTS_DOC,
            "criterion": "energy_efficient",
            "resolution": 0.05,
        },
    )
    assert r.status_code == 200
    body = r.json()
    assert body["winner"] == "ethereum_poa"
    assert body["p_low"] <= 3.0 <= body["p_high"]


def test_sensitivity_unknown_criterion_is_404(client):
    r = client.post(
        "/api/sensitivity",
        json={"requirements": BIGBOX_REQUIREMENTS_DOC, "criterion": "nope"},
    )
    assert r.status_code == 404


def test_sensitivity_bad_resolution_is_400(client):
    r = client.post(
        "/api/sensitivity",
        json={
            "requirements": BIGBOX_REQUIREMENTS_DOC,
            "criterion": "energy_efficient",
            "resolution": 0,
        },
    )
    assert r.status_code == 400


def test_whatif_endpoint(client):
    r = client.post(
        "/api/whatif",
        json={
            "requirements": BIGBOX_REQUIREMENTS_DOC,
            "edits": [{"criterion": "bft_tolerance", "constraint": None}],
        },
    )
    assert r.status_code == 200
    assert "hyperledger_fabric" in r.json()["ordering"]


def test_whatif_empty_edits_matches_rank(client):
    r1 = _rank(client)
    r2 = client.post(
        "/api/whatif", json={"requirements": BIGBOX_REQUIREMENTS_DOC, "edits": []}
    )
    assert r1.content == r2.content


def test_whatif_bad_edit_is_400(client):
    r = client.post(
        "/api/whatif",
        json={
            "requirements": BIGBOX_REQUIREMENTS_DOC,
            "edits": [{"criterion": "nope", "preference": 1}],
        },
    )
    assert r.status_code == 400
    assert "nope" in r.json()["detail"]["message"]


def test_override_round_trip(client):
    before = client.get("/api/criteria").json()["kb_version"]
    r = client.put(
        "/api/kb/overrides",
        json={"alternative": "ethereum_poa", "criterion": "throughput", "value": 380},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["kb_version"] != before
    # subsequent reads observe the new snapshot
    alts = client.get("/api/alternatives").json()
    assert alts["kb_version"] == body["kb_version"]
    poa = next(a for a in alts["alternatives"] if a["id"] == "ethereum_poa")
    assert poa["values"]["throughput"] == {
        "exact": 380.0,
        "provenance": "benchmark-override",
    }
    ranked = _rank(client)
    assert ranked.json()["kb_version"] == body["kb_version"]


def test_override_conflict_is_409(client):
    r = client.put(
        "/api/kb/overrides",
        json={"alternative": "bitcoin", "criterion": "smart_contracts", "value": 1},
    )
    assert r.status_code == 409
    assert r.json()["detail"]["type"] == "OverrideError"


def test_override_unknown_ids_are_404(client):
    r = client.put(
        "/api/kb/overrides",
        json={"alternative": "nope", "criterion": "throughput", "value": 1},
    )
    assert r.status_code == 404
    r = client.put(
        "/api/kb/overrides",
        json={"alternative": "corda", "criterion": "nope", "value": 1},
    )
    assert r.status_code == 404


def test_override_invalid_value_is_400(client):
    r = client.put(
        "/api/kb/overrides",
        json={"alternative": "ethereum_poa", "criterion": "throughput", "value": -3},
    )
    assert r.status_code == 400


def test_create_app_from_file(tmp_path):
    path = tmp_path / "kb.json"
    path.write_text(
        json.dumps(serialize_knowledge_base(builtin_knowledge_base())), encoding="utf-8"
    )
    client = TestClient(create_app(kb_path=str(path)))
    assert len(client.get("/api/criteria").json()["criteria"]) == 14


def test_override_persists_with_kb_write(tmp_path):
    path = tmp_path / "kb.json"
    path.write_text(
        json.dumps(serialize_knowledge_base(builtin_knowledge_base())), encoding="utf-8"
    )
    client = TestClient(create_app(kb_path=str(path), kb_write=True))
    r = client.put(
        "/api/kb/overrides",
        json={"alternative": "ethereum_poa", "criterion": "throughput", "value": 380},
    )
    on_disk = load_knowledge_base(path.read_text(encoding="utf-8"))
    assert on_disk.version == r.json()["kb_version"]
    assert on_disk.alternative("ethereum_poa").values["throughput"].value == 380.0


def test_override_stays_in_memory_without_kb_write(tmp_path):
    path = tmp_path / "kb.json"
    original = serialize_knowledge_base(builtin_knowledge_base())
    path.write_text(json.dumps(original), encoding="utf-8")
    client = TestClient(create_app(kb_path=str(path)))
    client.put(
        "/api/kb/overrides",
        json={"alternative": "ethereum_poa", "criterion": "throughput", "value": 380},
    )
    assert json.loads(path.read_text(encoding="utf-8")) == original
