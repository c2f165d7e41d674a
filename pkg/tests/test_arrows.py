import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramsey_lab.arrows import SearchConfig, arrows, ramsey_number, seeded_lower_witness
from ramsey_lab.colorings import find_blue_tKm, find_red_subgraph
from ramsey_lab.graph_core import SimpleGraph

from oracles import naive_arrows
from test_graph_core import graphs

P4 = SimpleGraph.path(4)
K3 = SimpleGraph.complete(3)
K13 = SimpleGraph.star(3)

# values found by exhaustive search; the classical ones agree with the literature
FROZEN = [
    (K3, 1, 3, 6),
    (P4, 1, 3, 7),
    (SimpleGraph.cycle(4), 1, 3, 7),
    (SimpleGraph.from_edges(6, [(0, 1), (2, 3), (4, 5)]), 1, 3, 7),
    (SimpleGraph.from_edges(4, [(0, 1), (2, 3)]), 1, 3, 5),
    (K13, 2, 2, 5),
    (SimpleGraph.star(4), 2, 2, 6),
    (P4, 2, 2, 5),
    (K3, 2, 2, 5),
    (SimpleGraph.path(3), 1, 3, 5),
]


@pytest.mark.parametrize("g,t,m,value", FROZEN)
def test_frozen_ramsey_values(g, t, m, value):
    cert = ramsey_number(g, t, m)
    assert cert.value == value
    assert cert.bracket == (value, value)
    if cert.lower_witness is not None:
        w = cert.lower_witness
        assert w.N == value - 1
        assert find_red_subgraph(w, g) is None and find_blue_tKm(w, t, m) is None


@pytest.mark.parametrize("sym", ["none", "first_vertex", "full"])
def test_symmetry_levels_agree(sym):
    cfg = SearchConfig(symmetry=sym)
    assert arrows(6, K3, 1, 3, cfg).arrows is True
    assert arrows(5, K3, 1, 3, cfg).arrows is False
    assert arrows(6, P4, 1, 3, cfg).arrows is False


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), graphs(min_n=1, max_n=3), st.integers(1, 2), st.integers(1, 3))
def test_matches_naive_enumeration(N, g, t, m):
    expected = naive_arrows(N, g.n, g.edges(), t, m)
    for sym in ("none", "full"):
        res = arrows(N, g, t, m, SearchConfig(symmetry=sym))
        assert res.arrows is expected
        if not expected:
            c = res.counterexample
            assert find_red_subgraph(c, g) is None and find_blue_tKm(c, t, m) is None


def test_budget_gives_unknown():
    res = arrows(8, K13, 2, 3, SearchConfig(node_budget=1024))
    assert res.arrows is None and res.status == "unknown"
    cert = ramsey_number(K13, 2, 3, SearchConfig(node_budget=1024))
    assert cert.value is None and not cert.complete


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(symmetry="all")
    with pytest.raises(ValueError):
        SearchConfig(edge_order="degree")
    with pytest.raises(ValueError):
        SearchConfig(node_budget=0)
    with pytest.raises(ValueError):
        arrows(17, K3, 1, 3)


def test_result_json():
    doc = arrows(5, K3, 1, 3).to_json()
    assert doc["status"] == "good-coloring" and doc["counterexample"]["N"] == 5
    assert doc["stats"]["nodes"] > 0


def test_seeded_witness_only_for_connected():
    assert seeded_lower_witness(SimpleGraph.from_edges(4, [(0, 1), (2, 3)]), 1, 3) is None
    w = seeded_lower_witness(P4, 2, 3)
    assert w is not None and w.N == 3 * 2 + 2 - 1
