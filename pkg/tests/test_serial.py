"""JSON round-trips for the documented wire formats."""

import json

import pytest

from rightangles import (
    agreement_matrix,
    angle_indicator_tensor,
    branch_and_bound_max,
    coefficient_vector,
    decompose_angle_tensor,
    default_field,
    errors,
    check_decomposition,
    find_right_angle,
    point_set_from_ints,
)
from rightangles import serial


F3 = default_field(3)
F9 = default_field(9)


def test_element_roundtrip_prime_field():
    assert serial.element_to_json((2,), F3) == 2
    assert serial.element_from_json(2, F3) == (2,)


def test_element_roundtrip_extension_field():
    assert serial.element_to_json((1, 2), F9) == [1, 2]
    assert serial.element_from_json([1, 2], F9) == (1, 2)
    with pytest.raises(ValueError):
        serial.element_from_json(5, F9)  # bare ints only for k = 1
    with pytest.raises(ValueError):
        serial.element_from_json([3, 0], F9)  # coefficient out of range


def test_field_roundtrip_revalidates():
    d = serial.field_to_json(F9)
    assert d == {"p": 3, "k": 2, "modulus": [1, 0, 1]}
    assert serial.field_from_json(d) == F9
    with pytest.raises(errors.Reducible):
        serial.field_from_json({"p": 3, "k": 2, "modulus": [2, 0, 1]})


def test_point_set_roundtrip():
    A = point_set_from_ints(F3, 2, [[0, 0], [1, 2], [2, 1]])
    d = serial.point_set_to_json(A)
    assert d["points"] == [[0, 0], [1, 2], [2, 1]]
    assert serial.point_set_from_json(d) == A


def test_point_set_roundtrip_extension_field():
    A = point_set_from_ints(F9, 1, [[0], [3], [8]])
    d = serial.point_set_to_json(A)
    back = serial.point_set_from_json(json.loads(json.dumps(d)))
    assert back == A


def test_point_set_parse_errors():
    with pytest.raises(ValueError):
        serial.point_set_from_json({"n": 2, "points": []})
    with pytest.raises(ValueError):
        serial.point_set_from_json(
            {"field": {"p": 3, "k": 1, "modulus": [0, 1]}, "n": 1, "points": [[7]]})


def test_witness_inlines_points():
    A = point_set_from_ints(F3, 2, [[0, 0], [1, 0], [0, 1]])
    w = find_right_angle(A)
    d = serial.witness_to_json(w, A)
    assert d["vertex_index"] == 0 and d["value"] == 0
    assert d["vertex"] == [0, 0] and d["arm1"] == [1, 0] and d["arm2"] == [0, 1]


def test_matrix_shape():
    C = coefficient_vector([(1,), (2,)], F3)
    d = serial.matrix_to_json(agreement_matrix(C, F3))
    assert d["rows"] == d["cols"] == 2
    assert len(d["entries"]) == 4


def test_tensor_rowmajor_values():
    A = point_set_from_ints(F3, 1, [[0], [1]])
    T = angle_indicator_tensor(A)
    d = serial.tensor_to_json(T)
    assert len(d["values"]) == 8
    assert d["values"][0] == 1  # cell (0,0,0)


def test_decomposition_roundtrip_recheckable():
    A = point_set_from_ints(F3, 1, [[0], [1], [2]])
    D = decompose_angle_tensor(A)
    d = json.loads(json.dumps(serial.decomposition_to_json(D, F3)))
    back = serial.decomposition_from_json(d, F3)
    assert check_decomposition(back, angle_indicator_tensor(A)) is None


def test_search_result_and_checkpoint_json():
    r = branch_and_bound_max(2, 3)
    d = serial.search_result_to_json(r)
    assert d["size"] == 3 and d["status"] == "exact"
    assert d["checkpoint"]["version"] == 1
    back = serial.checkpoint_from_json(d["checkpoint"])
    assert back == r.checkpoint
    with pytest.raises(ValueError):
        serial.checkpoint_from_json({"version": 99})
