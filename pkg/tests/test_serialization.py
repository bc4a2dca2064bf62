import json
from fractions import Fraction as F
from random import Random

import pytest
from hypothesis import given, strategies as st

from ratsep import Certificate, GridSpec, Surd, Vector, VPolyhedron, separate
from ratsep import serialization as ser
from helpers import exterior_point, random_pointed_polyhedron

SQ2 = Surd.root(2)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=30)


def test_fraction_round_trip_examples():
    assert ser.fraction_to_str(F(-3, 4)) == "-3/4"
    assert ser.fraction_to_str(F(2)) == "2/1"
    assert ser.parse_fraction("-3/4") == F(-3, 4)
    assert ser.parse_fraction("7") == F(7)
    assert ser.parse_fraction(5) == F(5)


@pytest.mark.parametrize("bad", ["", "a/b", "1/0", "1.5", None, True, [1]])
def test_parse_fraction_rejects(bad):
    with pytest.raises(ValueError):
        ser.parse_fraction(bad)


@given(rationals)
def test_fraction_round_trip(f):
    assert ser.parse_fraction(ser.fraction_to_str(f)) == f


def test_coord_encoding_shape():
    assert ser.coord_to_json(Surd(F(1, 2))) == "1/2"
    assert ser.coord_to_json(Surd(F(1, 2), F(-1, 3), 2)) == {
        "r": "1/2",
        "s": "-1/3",
        "k": 2,
    }
    assert ser.parse_coord("1/2") == Surd(F(1, 2))
    assert ser.parse_coord({"r": "0/1", "s": "1/1", "k": 2}) == SQ2


@given(rationals, rationals, st.sampled_from([1, 2, 3, 5]))
def test_coord_round_trip(r, s, k):
    c = Surd(r, s, k)
    assert ser.parse_coord(ser.coord_to_json(c)) == c


def test_parse_coord_rejects_junk():
    with pytest.raises(ValueError):
        ser.parse_coord({"r": "1/2", "s": "0/1", "k": 2, "zz": 1})
    with pytest.raises(ValueError):
        ser.parse_coord({"r": "1/2", "k": "two"})


def test_vector_round_trip_mixed():
    v = Vector([F(1, 3), SQ2, Surd(F(1, 2), F(2, 7), 2)])
    assert ser.parse_vector(ser.vector_to_json(v)) == v
    with pytest.raises(ValueError):
        ser.parse_vector([])


def test_polyhedron_round_trip():
    P = VPolyhedron(
        (Vector([0, 0]), Vector([SQ2, 0]), Vector([0, 1])),
        (Vector([1, 1]),),
    )
    obj = ser.polyhedron_to_json(P)
    assert obj["dim"] == 2 and obj["k"] == 2
    assert ser.parse_polyhedron(obj) == P


def test_polyhedron_declaration_mismatches():
    P = VPolyhedron((Vector([0, 0]),))
    obj = ser.polyhedron_to_json(P)
    obj["dim"] = 3
    with pytest.raises(ValueError):
        ser.parse_polyhedron(obj)
    obj2 = ser.polyhedron_to_json(VPolyhedron((Vector([SQ2]),)))
    obj2["k"] = 3
    with pytest.raises(ValueError):
        ser.parse_polyhedron(obj2)


def test_certificate_round_trip():
    cert = Certificate(Vector([F(1, 2), F(-2, 3)]), F(7, 5))
    obj = ser.certificate_to_json(cert)
    assert obj == {"a": ["1/2", "-2/3"], "beta": "7/5"}
    assert ser.parse_certificate(obj) == cert


def test_grid_round_trip():
    grid = GridSpec((F(-1), F(-1)), (F(2), F(2)), F(1, 20))
    assert ser.parse_grid(ser.grid_to_json(grid)) == grid


def test_trace_round_trip():
    tri = VPolyhedron((Vector([0, 0]), Vector([SQ2, 0]), Vector([0, 1])))
    _, trace = separate(tri, Vector([1, 1]))
    obj = ser.trace_to_json(trace)
    assert set(obj) == {
        "z_tilde", "y_bar", "d", "eps", "M", "alpha", "d_bar", "eps_bar",
        "delta_hat", "lambda", "ball_center", "ball_radius", "a", "beta",
    }
    assert ser.parse_trace(obj) == trace


def test_instance_round_trip():
    rng = Random(73)
    for _ in range(5):
        P = random_pointed_polyhedron(rng, 2, rng.choice([1, 2]), 3, rng.randint(0, 2))
        point = exterior_point(rng, P)
        inst = ser.Instance(
            polyhedron=P,
            point=point,
            probes=(Vector([5, 5]), Vector([-5, 0])),
            certificate=Certificate(Vector([0, -1]), F(100)),
            options=ser.InstanceOptions(
                budget=3,
                max_den=8,
                grid=GridSpec((F(-1), F(-1)), (F(2), F(2)), F(1, 4)),
            ),
        )
        again = ser.parse_instance(json.loads(ser.dumps(ser.instance_to_json(inst))))
        assert again == inst


def test_instance_validation():
    with pytest.raises(ValueError):
        ser.parse_instance({"point": ["1", "1"]})
    with pytest.raises(ValueError):
        ser.parse_instance({"set": {"vertices": [["0", "0"]]}, "options": {"budget": 0}})
    with pytest.raises(ValueError):
        ser.parse_instance({"set": {"vertices": [["0", "0"]]}, "options": {"max_den": True}})


def test_dumps_is_canonical():
    payload = {"b": "2/1", "a": "1/1"}
    text = ser.dumps(payload)
    assert text == '{"a":"1/1","b":"2/1"}\n'
    assert ser.dumps(dict(reversed(list(payload.items())))) == text
