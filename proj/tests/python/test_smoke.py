import os

import pytest

import envelope_kit as ek

DATA = os.environ.get("ENVKIT_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def load(name):
    return ek.load(os.path.join(DATA, name + ".json"))


def test_v3_envelope():
    s = ek.Sus.validate(load("v3"))
    e = ek.FilterLattice.build(s)
    assert len(e) == 4
    assert e.label(e.bottom) == "{a,b,1}"
    r = ek.ValuationRing.build(s)
    assert r.rank == 3
    assert r.format(ek.meet_in_v(r, [0, 1])) == "a + b - 1"


def test_b2_ring():
    s = ek.Sus.validate(load("b2"))
    r = ek.ValuationRing.build(s)
    assert r.snf_invariants == [1]
    assert r.iota(0) == [0, 1, 1, -1]
    assert r.canonical([1, -1, -1, 1]) == [0, 0, 0, 0]
    assert r.multiply([1, -1, -1, 1], r.iota(1)) == [0, 0, 0, 0]


def test_rejections():
    with pytest.raises(ek.EnvelopeKitError, match=r"IntervalNotDistributive\(0,1\)"):
        ek.Sus.validate(load("m3"))
    with pytest.raises(ek.EnvelopeKitError, match="CycleDetected"):
        load("cyclic")
    with pytest.raises(ek.EnvelopeKitError, match="ParseError"):
        load("malformed")


def test_suite_and_sweep():
    report = ek.run_suite(ek.Sus.validate(load("k4")))
    assert report["passed"]
    assert report == ek.run_suite(ek.Sus.validate(load("k4")))
    summary = ek.sweep(4, jobs=2)
    assert summary["failures"] == 0
    assert [s["instances"] for s in summary["sizes"]] == [1, 1, 2, 5]
    assert ek.count_posets(5) == 63


def test_round_trip_and_dot():
    p = load("b2")
    assert ek.parse_instance(ek.serialize_instance(p)) == p
    assert ek.dot_poset(p).count("->") == 4
    e = ek.FilterLattice.build(ek.Sus.validate(load("v3")))
    assert ek.dot_envelope(e).count("->") == 4
