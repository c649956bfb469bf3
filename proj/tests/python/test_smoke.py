"""End-to-end smoke tests for the python bindings (0-based vertex API)."""

import json

import pytest

import stellate as st


def test_graph_roundtrip():
    g = st.Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert g.n == 5
    assert g.edge_count() == 5
    assert g.adjacent(0, 1)
    assert not g.adjacent(0, 2)
    assert st.encode_graph6(g) == "Dhc"
    assert st.parse_graph6("Dhc") == g

    again = st.graph_from_json(st.graph_to_json(g))
    assert again == g

    with pytest.raises(st.InputError):
        st.parse_graph6("D!c")


def test_canonical_key_identifies_isomorphs():
    prism = st.odd_stretcher(1, 1, 1)
    assert st.canonical_key(prism) == st.canonical_key(st.antihole(6))
    assert st.canonical_key(prism) != st.canonical_key(st.hole(6))


def test_recognizers():
    c5 = st.hole(5)
    assert st.find_hole(c5, "odd", 5) is not None
    assert len(st.find_hole(c5, "odd", 5)) == 5
    assert st.find_hole(st.hole(6), "odd", 5) is None
    assert not st.is_perfect(c5)
    assert st.is_perfect(st.hole(6))
    assert not st.is_meyniel(c5)
    assert st.is_meyniel(st.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))

    stretcher = st.find_odd_stretcher(st.odd_stretcher(1, 1, 2))
    assert stretcher is not None
    assert (stretcher["s"], stretcher["t"], stretcher["u"]) == (1, 1, 2)

    p4 = st.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    order = st.find_perfect_ordering(p4)
    assert order is not None
    assert st.verify_perfect_ordering(p4, order) is None
    assert st.verify_perfect_ordering(p4, [0, 1, 3, 2]) is not None
    assert st.find_perfect_ordering(c5) is None


def test_quadratic_generation():
    ok, witness = st.is_quadratically_generated(st.antihole(7))
    assert ok and witness is None

    bad, witness = st.is_quadratically_generated(st.odd_stretcher(1, 1, 1))
    assert not bad
    lead, tail = witness
    assert len(lead) == len(tail) == 3
    expected = st.stretcher_witness_sets(1, 1, 1)
    assert sorted(map(tuple, lead + tail)) == sorted(map(tuple, expected))

    assert not st.quadratic_generation_oracle(st.antihole(6), 4)


def test_toric_gb():
    p4 = st.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    gb = st.toric_gb(p4)
    assert len(gb["elements"]) == 5
    assert gb["max_degree"] == 2 and gb["all_quadratic"] and gb["all_squarefree"]

    gb32 = st.toric_gb(p4, order="theorem32")
    assert gb32["all_quadratic"] and gb32["all_squarefree"]
    assert sorted(gb32["vertex_map"]) == [0, 1, 2, 3]

    with pytest.raises(st.InputError):
        st.toric_gb(st.hole(5), order="theorem32")  # C5 has no perfect ordering

    with pytest.raises(st.BudgetError):
        st.stable_sets(st.Graph(15), 100)


def test_hertz_and_contraction():
    bull = st.parse_graph6("DyG")
    assert st.is_meyniel(bull)
    hz = st.hertz_color(bull, seed=0)
    assert hz["colors_used"] == 3  # omega of the bull
    coloring = hz["coloring"]
    for u, v in bull.edges():
        assert coloring[u] != coloring[v]
    assert 0 in hz["stable_set"] or not hz["s_found"]

    assert st.is_even_contractile(st.hole(4)) is not None
    assert st.is_even_contractile(st.hole(5)) is None
    ok, failing = st.is_perfectly_contractile(st.odd_stretcher(1, 1, 1))
    assert not ok and len(failing) == 6


def test_analyze_and_sweep_json():
    report = json.loads(st.analyze_json(st.hole(5)))
    assert report["schema"] == 1
    assert report["graph"]["graph6"] == "Dhc"
    assert report["toric"]["quadratically_generated"] is True
    assert report["classes"]["perfect"] is False
    assert report["counterexample_flags"] == []

    state = json.loads(st.sweep_json(max_n=4))
    assert state["finished"] is True
    assert state["cursor"] == 10  # connected graphs on up to 4 vertices
    assert state["tallies"]["both_true"] == 10
    assert state["counterexamples"] == []
