import json
import random

import pytest

from toricmather import (
    EulerSpec,
    PointConfiguration,
    build_face_poset,
    euler_from_input,
    validate,
)

# The double-line cubic: projection of a rational normal surface of type (1,2).
EX1_POINTS = ((0, 0), (0, 1), (1, 1), (2, 0))
EX1_TABLE = {
    "0-1-2-3": {
        "0-3": 2, "0-1": 1, "1-2": 1, "2-3": 1,
        "0": 1, "1": 1, "2": 1, "3": 1,
    }
}

# Projection of the weighted projective plane with weights 1, 2, 3.
EX2_POINTS = ((0, 0), (1, 1), (0, 2), (3, 0))
EX2_TABLE = {
    "0-1-2-3": {
        "0-2": 2, "0-3": 3, "2-3": 1,
        "0": 0, "2": 0, "3": 0,
    }
}

SQUARE_POINTS = ((0, 0), (1, 0), (0, 1), (1, 1))


def make_fixture(points, table):
    config = validate(PointConfiguration(tuple(points)))
    poset = build_face_poset(config)
    data = euler_from_input(poset, EulerSpec("table", table))
    return config, poset, data


@pytest.fixture(scope="session")
def ex1():
    return make_fixture(EX1_POINTS, EX1_TABLE)


@pytest.fixture(scope="session")
def ex2():
    return make_fixture(EX2_POINTS, EX2_TABLE)


@pytest.fixture(scope="session")
def square():
    return make_fixture(SQUARE_POINTS, {})


@pytest.fixture(scope="session")
def random_cases():
    """200 seeded (config, poset, euler) cases shared by the property tests."""
    from oracles import random_case

    rng = random.Random(20160308)
    return [random_case(rng) for _ in range(200)]


@pytest.fixture()
def ex1_file(tmp_path):
    path = tmp_path / "example1.json"
    path.write_text(json.dumps({
        "name": "double-line cubic",
        "points": [list(p) for p in EX1_POINTS],
        "euler": {"strategy": "table", "tables": EX1_TABLE},
    }))
    return path


@pytest.fixture()
def ex2_file(tmp_path):
    path = tmp_path / "example2.json"
    path.write_text(json.dumps({
        "name": "projected weighted plane",
        "points": [list(p) for p in EX2_POINTS],
        "euler": {"strategy": "table", "tables": EX2_TABLE},
    }))
    return path


@pytest.fixture()
def square_file(tmp_path):
    path = tmp_path / "square.json"
    path.write_text(json.dumps({
        "name": "unit square",
        "points": [list(p) for p in SQUARE_POINTS],
    }))
    return path
