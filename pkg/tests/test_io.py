"""Canonical file formats: round trips and malformed-input rejection."""

import json

import numpy as np
import pytest

import coopcolor as cc
from coopcolor.files import MalformedFile
from conftest import random_system


def _random_annotated(rng, flavor):
    n = int(rng.integers(0, 10))
    m = int(rng.integers(0, 4))
    if flavor == "forest":
        if n == 0 or m == 0:
            return cc.build_system(n, [[] for _ in range(m)])
        return cc.random_forest_system(n, m, 3, seed=int(rng.integers(10**6)))
    if flavor == "bipartite":
        if n == 0 or m == 0:
            return cc.build_system(n, [[] for _ in range(m)])
        return cc.random_bipartite_system(n, m, 2, seed=int(rng.integers(10**6)))
    return random_system(rng, n, m)


def test_instance_round_trip_many():
    rng = np.random.default_rng(424242)
    flavors = ("plain", "forest", "bipartite")
    for trial in range(1000):
        s = _random_annotated(rng, flavors[trial % 3])
        meta = {"trial": trial, "note": "round-trip"}
        text = cc.emit_instance(s, metadata=meta)
        back, got_meta = cc.parse_instance(text)
        assert back == s, trial
        assert got_meta == meta
        assert cc.emit_instance(back, metadata=got_meta) == text


def test_emit_is_canonical_json():
    s = cc.two_path_system()
    text = cc.emit_instance(s)
    assert text.endswith("\n")
    doc = json.loads(text)
    assert doc["version"] == 1
    assert doc["n"] == 4
    assert [g["id"] for g in doc["graphs"]] == [0, 1]
    assert doc["graphs"][0]["edges"] == [[0, 1], [1, 2], [2, 3]]
    # key order is fixed by the emitter
    assert text == json.dumps(doc, indent=2, sort_keys=True) + "\n"


def test_annotations_survive_round_trip():
    s = cc.random_forest_system(8, 2, 3, seed=1)
    back, _ = cc.parse_instance(cc.emit_instance(s))
    assert back.roots == s.roots
    b = cc.hypercube_counterexample(2)
    back2, _ = cc.parse_instance(cc.emit_instance(b))
    assert back2.lefts == b.lefts


def test_coloring_round_trip():
    coloring = cc.CooperativeColoring((0, 2, 1, 0))
    text = cc.emit_coloring(coloring)
    assert cc.parse_coloring(text) == coloring
    assert cc.emit_coloring(cc.parse_coloring(text)) == text
    assert cc.parse_coloring(cc.emit_coloring(cc.CooperativeColoring(()))) == cc.CooperativeColoring(())


@pytest.mark.parametrize(
    "text",
    [
        "not json at all {",
        '{"version": 2, "n": 1, "graphs": [], "metadata": {}}',
        '{"n": 1, "graphs": [], "metadata": {}}',
        '{"version": 1, "n": "three", "graphs": [], "metadata": {}}',
        '{"version": 1, "n": 2, "graphs": {}, "metadata": {}}',
        '{"version": 1, "n": 2, "graphs": [{"id": 1, "edges": []}], "metadata": {}}',
        '{"version": 1, "n": 2, "graphs": [{"id": 0, "edges": [[0, 1, 2]]}], "metadata": {}}',
        '{"version": 1, "n": 2, "graphs": [{"id": 0, "edges": [[0, true]]}], "metadata": {}}',
        '{"version": 1, "n": 2, "graphs": [{"id": 0, "edges": [[0, 5]]}], "metadata": {}}',
        '{"version": 1, "n": 2, "graphs": [{"id": 0, "edges": [[0, 0]]}], "metadata": {}}',
        '{"version": 1, "n": 2, "graphs": [{"id": 0, "edges": [[0, 1], [1, 0]]}], "metadata": {}}',
        '{"version": 1, "n": 2, "graphs": [{"id": 0, "edges": [], "roots": [7]}], "metadata": {}}',
        '{"version": 1, "n": 2, "graphs": [{"id": 0, "edges": [], "left": 3}], "metadata": {}}',
        '{"version": 1, "n": 2, "graphs": [{"id": 0, "edges": [[0, 1]], "left": [0, 1]}], "metadata": {}}',
        '{"version": 1, "n": 2, "graphs": [], "metadata": 5}',
        "[1, 2, 3]",
    ],
)
def test_malformed_instances_rejected(text):
    with pytest.raises(MalformedFile):
        cc.parse_instance(text)


@pytest.mark.parametrize(
    "text",
    [
        "{",
        '{"version": 1}',
        '{"version": 7, "assignment": [0]}',
        '{"version": 1, "assignment": 3}',
        '{"version": 1, "assignment": [0, -1]}',
        '{"version": 1, "assignment": [0, 1.5]}',
        '{"version": 1, "assignment": [true]}',
        "[]",
    ],
)
def test_malformed_colorings_rejected(text):
    with pytest.raises(MalformedFile):
        cc.parse_coloring(text)


def test_out_of_range_coloring_caught_at_verify_time():
    # the file itself is fine; range and length checks belong to verify
    coloring = cc.parse_coloring('{"version": 1, "assignment": [5, 5]}')
    s = cc.build_system(2, [[], []])
    with pytest.raises(cc.IndexOutOfRange):
        cc.verify_coloring(s, coloring)
    short = cc.parse_coloring('{"version": 1, "assignment": [0]}')
    with pytest.raises(cc.LengthMismatch):
        cc.verify_coloring(s, short)
