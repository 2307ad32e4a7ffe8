import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arthurlab import Family, ParseError, parse_ems, parse_parameter
from arthurlab.codec import (
    dumps,
    ems_from_json,
    ems_to_json,
    label_from_json,
    label_to_json,
    ldata_from_json,
    ldata_to_json,
    loads,
    parameter_from_json,
    parameter_to_json,
)
from arthurlab.dsl import parse_label
from arthurlab.sampling import random_ems, random_ldata, random_parameter

SEEDED_OBJECTS = 1000


@pytest.mark.parametrize(
    "text, data",
    [
        ("tr(1,O)", {"name": "tr", "dim": 1, "type": "O"}),
        ("chi(1,~chib)", {"name": "chi", "dim": 1, "dual": "chib"}),
    ],
)
def test_label_json(text, data):
    rho = parse_label(text)

    assert label_to_json(rho) == data
    assert label_from_json(data) == rho


def test_parameter_json():
    psi = parse_parameter("2*tr(1,O).S2.S1", "SO:5")

    data = parameter_to_json(psi)

    assert data["group"] == "SO:5"
    assert [(item["a"], item["b"]) for item in data["summands"]] == [
        (2, 1),
        (2, 1),
    ]
    assert parameter_from_json(loads(dumps(data))) == psi


def test_ems_json_keeps_half_integers_as_text():
    E = parse_ems("tr(1,O): ([3/2,-1/2],1,-1)", Family.SO)

    data = ems_to_json(E)

    assert data["blocks"][0]["rows"] == [
        {"A": "3/2", "B": "-1/2", "l": 1, "eta": -1}
    ]
    assert ems_from_json(data) == E


def test_ems_row_eta_defaults_to_plus():
    data = {
        "group": "Sp:0",
        "blocks": [
            {
                "rho": {"name": "tr", "dim": 1, "type": "O"},
                "rows": [{"A": "0", "B": "0", "l": 0}],
            }
        ],
    }

    assert str(ems_from_json(data)) == "tr(1,O): ([0,0],0,+1)"


def test_ldata_family_fallback():
    rho = {"name": "tr", "dim": 1, "type": "O"}
    data = {"tempered": [{"rho": rho, "a": 1}]}

    pi = ldata_from_json(data, Family.SP)

    assert str(pi) == "L(; pi(tr(1,O)[0]+))"
    assert pi.family is Family.SP


def test_missing_field():
    with pytest.raises(ParseError) as error:
        parameter_from_json({"summands": []})

    assert error.value.expected == ("group",)


def test_loads_rejects_bad_json():
    with pytest.raises(ParseError) as error:
        loads("{")

    assert error.value.position == 1


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_parameter_json_round_trip(rng):
    psi = random_parameter(rng)

    assert parameter_from_json(loads(dumps(parameter_to_json(psi)))) == psi


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_ldata_json_round_trip(rng):
    pi = random_ldata(rng)

    assert ldata_from_json(loads(dumps(ldata_to_json(pi)))) == pi


@pytest.mark.parametrize(
    "sample, to_json, from_json",
    [
        (random_parameter, parameter_to_json, parameter_from_json),
        (random_ldata, ldata_to_json, ldata_from_json),
        (random_ems, ems_to_json, ems_from_json),
    ],
    ids=["parameter", "ldata", "ems"],
)
def test_seeded_json_reprints_byte_for_byte(sample, to_json, from_json):
    rng = random.Random(0)

    for _ in range(SEEDED_OBJECTS):
        item = sample(rng)
        text = dumps(to_json(item))
        decoded = from_json(loads(text))

        assert decoded == item
        assert dumps(to_json(decoded)) == text
