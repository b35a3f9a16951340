import pytest
from fastapi.testclient import TestClient

from lusztig_series.service import handlers
from lusztig_series.service.app import app
from lusztig_series.service.models import ShapeModel, TableResponse
from lusztig_series.shapes import MINUS, PLUS, CentralizerShape, EigenPart, GenericFactor


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"


@pytest.mark.parametrize(
    "fn,n,expected",
    [("beta", 26, "34375"), ("tau", 29, "24264720"), ("p2", 3, "10"),
     ("alpha_minus", 38, "4567030"), ("f", 18, "20100")],
)
def test_value_endpoint(client, fn, n, expected):
    body = client.get(f"/value/{fn}/{n}").json()
    assert body == {"fn": fn, "n": n, "value": expected}


def test_value_endpoint_usage_errors(client):
    assert client.get("/value/beta_prime/7").status_code == 422
    assert client.get("/value/zeta/3").status_code == 422
    assert "valid range" in client.get("/value/beta_prime/7").json()["detail"]


def test_table_json_round_trips_to_regeneration(client):
    for which in (1, 2, 3, 4):
        response = client.get(f"/table/{which}")
        assert response.status_code == 200
        parsed = TableResponse.model_validate(response.json())
        assert parsed == handlers.table_response(which)


def test_table_range(client):
    body = client.get("/table/2", params={"lo": 43, "hi": 43}).json()
    assert body["rows"] == [
        {"n": 43, "beta": "30078125", "alpha": "35931532",
         "alpha_plus": "16861595", "alpha_minus": "16861595"}
    ]
    assert client.get("/table/2", params={"lo": 5, "hi": 4}).status_code == 422
    assert client.get("/table/9").status_code == 422
    assert client.get("/table/3", params={"lo": 1}).status_code == 422


def test_table3_cell_display(client):
    body = client.get("/table/3", params={"lo": 33, "hi": 33}).json()
    row = body["rows"][0]
    assert row["aa"]["display"] == "α(15)α(14)β(4)=121323600"
    assert row["aa"]["pairs"] == [[15, 14]]


def test_max_endpoint_with_witnesses(client):
    body = client.get(
        "/max", params={"family": "D-", "parity": "odd", "n": 6, "witnesses": True}
    ).json()
    assert body["value"] == "40"
    texts = [w["text"] for w in body["witnesses"]]
    assert texts[0] == "[1:4(-)] [-1:2(+)]"
    assert "[1:2(+)] [-1:4(-)]" in texts
    full = [t for t in body["thresholds"] if t["shape_class"] == "full_theorem"]
    assert full[0]["inequality"] == "q > -21"


def test_max_endpoint_without_witnesses(client):
    body = client.get("/max", params={"family": "C", "parity": "odd", "n": 30}).json()
    assert body["value"] == "36433296"
    assert "witnesses" not in body


def test_max_endpoint_family_aliases(client):
    plus = client.get("/max", params={"family": "D+", "parity": "even", "n": 20}).json()
    alias = client.get("/max", params={"family": "Dplus", "parity": "even", "n": 20}).json()
    assert plus["value"] == alias["value"]
    assert plus["family"] == "Dplus"


def test_max_endpoint_usage_errors(client):
    assert client.get("/max", params={"family": "X", "parity": "odd", "n": 3}).status_code == 422
    assert client.get("/max", params={"family": "C", "parity": "any", "n": 3}).status_code == 422
    assert client.get("/max", params={"family": "C", "parity": "odd", "n": 0}).status_code == 422
    assert client.get("/max", params={"family": "C", "parity": "odd", "n": 99}).status_code == 422


def test_gl_parity_is_any(client):
    body = client.get("/max", params={"family": "GL", "parity": "any", "n": 12,
                                      "witnesses": True}).json()
    assert body["parity"] == "any"
    assert body["value"] == "125"
    assert body["witnesses"][0]["text"] == "{linear:4^3}"


def test_verify_endpoint_schema(client):
    body = client.get("/verify", params={"suite": "constants"}).json()
    assert isinstance(body, list) and len(body) == 6
    for entry in body:
        assert set(entry) == {"claim_id", "status", "expected", "actual", "location"}
    flagged = [e for e in body if e["status"] == "flagged"]
    assert [e["claim_id"] for e in flagged] == ["theorem_un5.D_even"]
    assert client.get("/verify", params={"suite": "nope"}).status_code == 422


def test_threshold_endpoint(client):
    body = client.get("/threshold", params={"family": "C", "parity": "even", "n": 40}).json()
    classes = {t["shape_class"]: t for t in body["thresholds"]}
    assert classes["full_theorem"]["inequality"] == "q > 31"
    assert classes["generic_only"]["inequality"] == "q >= 45"
    assert classes["full_theorem"]["side_condition"] is None
    odd = client.get("/threshold", params={"family": "D+", "parity": "odd", "n": 40}).json()
    odd_classes = {t["shape_class"]: t for t in odd["thresholds"]}
    assert odd_classes["full_theorem"]["inequality"] == "q > 13"
    assert "b(q-1)/2" in odd_classes["full_theorem"]["side_condition"]


def test_shape_model_round_trip():
    shape = CentralizerShape(
        EigenPart(4, MINUS), EigenPart(2, PLUS),
        (GenericFactor("linear", 4), GenericFactor("linear", 4), GenericFactor("unitary", 3)),
    )
    model = ShapeModel.from_shape(shape)
    assert model.to_shape() == shape
    assert model.generic[0].count == 2
