"""Wire-format round trips and error reporting."""

import pytest

from gencluster import make_lp_seed, make_seed
from gencluster.jsonio import (
    SeedJSONError,
    any_seed_from_dict,
    dumps,
    lp_seed_from_dict,
    lp_seed_to_dict,
    seed_from_dict,
    seed_to_dict,
)


def test_generalized_round_trip():
    seed = make_seed([[0, -2], [1, 0], [2, -4]], d=[1, 2],
                     rho=[[1, 1], [1, 2, 1]], ring="Q")
    doc = seed_to_dict(seed)
    assert seed_from_dict(doc) == seed
    assert seed_to_dict(seed_from_dict(doc)) == doc


def test_frozen_monomial_strings_round_trip():
    from gencluster.exactmath.laurent import parse_polynomial
    names = ["x1", "x2", "x3"]
    rho = [["1", "3*x3^2", "1"]]
    doc = {"ring": "Q", "n": 1, "m": 2, "names": names,
           "B": [[0], [2], [4]], "d": [2], "rho": rho}
    seed = seed_from_dict(doc)
    assert seed.rho[0][1] == parse_polynomial("3*x3^2", names)
    assert seed_to_dict(seed)["rho"] == rho


def test_lp_round_trip():
    seed = make_lp_seed(["x2 + 1", "x1 + x3", "x2 + 1"])
    doc = lp_seed_to_dict(seed)
    assert lp_seed_from_dict(doc) == seed
    assert lp_seed_to_dict(lp_seed_from_dict(doc)) == doc


def test_kind_detection():
    lp = any_seed_from_dict({"n": 2, "names": ["x1", "x2"],
                             "F": ["x2 + 1", "x1 + 1"]})
    assert lp.__class__.__name__ == "LPSeed"
    with pytest.raises(SeedJSONError):
        any_seed_from_dict({"n": 2})


def test_bad_rho_string_names_location():
    doc = {"ring": "Q", "n": 1, "m": 0, "names": ["x1"],
           "B": [[0]], "d": [1], "rho": [["1", "x9^^"]]}
    with pytest.raises(SeedJSONError) as err:
        seed_from_dict(doc)
    assert "rho[0][1]" in str(err.value)


def test_shape_errors_are_named():
    with pytest.raises(SeedJSONError) as err:
        seed_from_dict({"n": 2, "m": 0, "B": [[0, 1]], "d": [1, 1],
                        "rho": [["1", "1"], ["1", "1"]]})
    assert "B" in str(err.value)


def test_dumps_deterministic():
    doc = {"b": 1, "a": [2, 3]}
    assert dumps(doc) == '{"a":[2,3],"b":1}'
    assert dumps(doc, pretty=True).startswith("{\n")
