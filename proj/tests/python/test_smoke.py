"""Smoke tests for the python extension module."""

import json

import pytest

try:
    import wcgraph as wc
except ImportError:
    import _wcgraph as wc


def test_graph_construction_and_graph6():
    g = wc.Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
    assert g.n == 5
    assert g.edge_count == 5
    assert wc.Graph.from_graph6(g.graph6()) == g
    assert g == wc.cycle_graph(5)


def test_graph6_agrees_with_networkx_when_available():
    nx = pytest.importorskip("networkx")
    g = wc.Graph.from_graph6("DQc")
    h = nx.from_graph6_bytes(b"DQc")
    assert sorted(g.edges()) == sorted((u + 1, v + 1) for u, v in h.edges())


def test_structure_predicates():
    c5 = wc.cycle_graph(5)
    flag, labeling = wc.is_weakly_closed(c5)
    assert not flag and labeling is None
    assert not wc.is_perfect(c5)

    claw = wc.claw_graph()
    flag, labeling = wc.is_weakly_closed(claw)
    assert flag and sorted(labeling) == [1, 2, 3, 4]
    assert not wc.is_closed(claw)[0]
    assert wc.is_caterpillar(claw)

    assert not wc.is_weakly_closed(wc.bigclaw_graph())[0]
    assert wc.is_weakly_closed(wc.complement(wc.cycle_graph(6)))[0]


def test_interchange_certificates():
    g = wc.Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert wc.is_adjacentable(g, 1, 4)
    cert = wc.adjacentability_certificate(g, 1, 4)
    assert cert is not None
    assert len(cert["swaps"]) == 2

    # replay by hand
    seq = list(cert["start"])
    for step in cert["swaps"]:
        pos = step["pos"] - 1
        assert tuple(seq[pos : pos + 2]) == step["pair"]
        seq[pos], seq[pos + 1] = seq[pos + 1], seq[pos]
    assert seq == list(cert["final"])
    assert any(abs(seq.index(1) - seq.index(4)) == 1 for _ in [0])

    assert wc.constructive_certificate(g, 1, 4)["swaps"]


def test_enumeration_counts():
    assert len(wc.enumerate_connected(5)) == 21
    assert len(wc.enumerate_connected(6)) == 112
    assert len(wc.enumerate_trees(9)) == 47


def test_classification_records():
    records = wc.classify(4)
    assert len(records) == 6
    assert all(r["flags"]["weakly_closed"] for r in records)
    assert all(r["schema_version"] == "1" for r in records)
    json.dumps(records)  # records are plain JSON data


def test_fpurity():
    fpure, witness = wc.is_fpure(wc.Graph.from_edges(2, [(1, 2)]), p=2)
    assert fpure
    assert witness == "X1*Y2 + X2*Y1"

    fpure, witness = wc.is_fpure(wc.cycle_graph(5), p=2)
    assert not fpure and witness is None

    assert wc.check_witness_fast_path(wc.path_graph(3), p=2)


def test_error_mapping():
    with pytest.raises(Exception):
        wc.Graph.from_edges(3, [(1, 1)])
    with pytest.raises(Exception):
        wc.is_fpure(wc.cycle_graph(5), p=3)  # envelope without slow=True
