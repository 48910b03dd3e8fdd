import json

import pytest

import dimaps


def test_octahedron_family_map():
    doc = dimaps.build_family("M4", 3)
    assert doc["cycle"] == ["a^2", "a^1", "b", "a^2 b"]
    assert doc["reflection"]["kind"] == "partial"
    m = dimaps.family_map("M4", 3)
    assert dimaps.is_regular(m) and dimaps.is_reflexible(m)
    assert dimaps.genus(m) == 0
    assert dimaps.reflection_index(m) == 1
    assert dimaps.classify(m) == "M4"


def test_json_round_trip():
    m = dimaps.CayleyMap(6, ["b", "a^1", "a^2 b", "a^3", "a^4 b", "a^5"])
    again = dimaps.CayleyMap.from_json(m.to_json())
    assert again == m
    assert json.loads(m.to_json())["n"] == 6


def test_not_regular_and_errors():
    m = dimaps.CayleyMap(5, ["b", "a^1", "a^4"])
    assert not dimaps.is_regular(m)
    assert dimaps.skew_morphism(m) is None
    with pytest.raises(dimaps.InvalidMapError):
        dimaps.CayleyMap(4, ["b", "a^1"])
    with pytest.raises(dimaps.BadParametersError):
        dimaps.build_family("M3", 6)
    with pytest.raises(dimaps.BoundExceededError):
        dimaps.enumerate_regular(30)


def test_census_matches_for_small_n():
    for n in (2, 3, 4, 6):
        report = dimaps.cross_check(n)
        assert report["verdict"] == "Match", report["mismatches"]
    assert len(dimaps.isomorphism_classes(dimaps.enumerate_regular(2))) == 2


def test_quotient_laws():
    m = dimaps.family_map("M1(1)", 4)
    assert 2 in dimaps.block_subgroup_sizes(m)
    doc = dimaps.quotient(m, 2)
    assert doc["quotient"]["n"] == 2
    assert all(doc["laws"].values())
