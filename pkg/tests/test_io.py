import json

import numpy as np
import pytest

from covertop.errors import ConfigurationError, ParseError, SchemaError
from covertop.io import config_from_dict, config_to_dict, load_csv, load_json, save_json
from tests.conftest import random_config


def test_load_csv_two_rows():
    config = load_csv("x,y\n0,0\n10,0\n")
    assert config.n == 2
    assert (config.nodes[0].anchor.x, config.nodes[0].anchor.y) == (0, 0)
    assert (config.nodes[1].anchor.x, config.nodes[1].anchor.y) == (10, 0)
    assert config.rc_max == 5.0
    assert config.rc == 2.5


def test_load_csv_bad_row_reports_line():
    with pytest.raises(ParseError) as exc:
        load_csv("x,y\na,b\n")
    assert exc.value.line == 2


def test_load_csv_requires_header():
    with pytest.raises(ParseError):
        load_csv("0,0\n1,1\n")


def test_load_csv_extra_columns_warn():
    with pytest.warns(UserWarning):
        config = load_csv("x,y,label\n1,2,foo\n3,4,bar\n")
    assert config.n == 2


def test_load_csv_empty_warns_not_errors():
    with pytest.warns(UserWarning):
        config = load_csv("x,y\n")
    assert config.n == 0


def test_load_csv_crlf():
    config = load_csv("x,y\r\n0,0\r\n30,0\r\n")
    assert config.n == 2


def test_csv_then_json_round_trip():
    rows = "\n".join(f"{i * 3.7},{(i * i) % 40}" for i in range(30))
    config = load_csv(f"x,y\n{rows}\n", k=4, eps=2.0, seed=5)
    assert config.n == 30
    assert load_json(save_json(config)) == config


@pytest.mark.parametrize("seed", range(5))
def test_json_round_trip_random(seed):
    rng = np.random.default_rng(seed)
    config = random_config(rng, int(rng.integers(0, 20)), int(rng.integers(1, 9)), rc=9.0, eps=3.0)
    assert load_json(save_json(config)) == config


def test_json_missing_field_names_it():
    rng = np.random.default_rng(1)
    doc = config_to_dict(random_config(rng, 3, 2, rc=5.0, eps=1.0))
    del doc["rc"]
    with pytest.raises(SchemaError) as exc:
        config_from_dict(doc)
    assert exc.value.field == "rc"


def test_json_wrong_type_names_field():
    rng = np.random.default_rng(2)
    doc = config_to_dict(random_config(rng, 2, 2, rc=5.0, eps=1.0))
    doc["k"] = "eight"
    with pytest.raises(SchemaError) as exc:
        config_from_dict(doc)
    assert exc.value.field == "k"


def test_json_eps_above_rc_is_configuration_error():
    rng = np.random.default_rng(3)
    doc = config_to_dict(random_config(rng, 2, 2, rc=5.0, eps=1.0))
    doc["eps"] = 6.0
    with pytest.raises(ConfigurationError):
        config_from_dict(doc)


def test_json_invalid_document():
    with pytest.raises(SchemaError):
        load_json("not json")
    with pytest.raises(SchemaError):
        load_json("[1,2,3]")


def test_hand_built_k8_document():
    rng = np.random.default_rng(4)
    base = random_config(rng, 4, 8, rc=20.0, eps=5.0)
    doc = json.loads(save_json(base))
    assert doc["version"] == "1"
    assert doc["k"] == 8
    assert len(doc["nodes"]) == 4
    assert all(len(node["locations"]) == 8 for node in doc["nodes"])
    loaded = config_from_dict(doc)
    assert loaded.n == 4 and loaded.k == 8
