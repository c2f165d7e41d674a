from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ramsey_lab.arrows import SearchConfig, ramsey_number
from ramsey_lab.bounds import (
    bounds_table,
    chvatal_harary_value,
    chvatal_tree_value,
    goodness_value,
    main_budget,
    mequals2_budget,
    suspended_path_threshold,
    triangle_bound,
    turan_bound,
    upper_Km,
    upper_tKm,
)
from ramsey_lab.generate import gen_connected
from ramsey_lab.graph_core import SimpleGraph


def test_goodness_examples():
    assert goodness_value(4, 2, 2) == 5
    assert goodness_value(9, 1, 4) == 4
    assert goodness_value(4, 3, 2) == 8


def test_upper_examples():
    assert upper_Km(3, 3) == 7
    assert upper_Km(4, 5) == 81
    assert upper_tKm(3, 3, 2) == 10
    assert upper_tKm(3, 3, 1) == 7
    assert upper_tKm(1, 3, 3) == 9
    with pytest.raises(ValueError):
        upper_Km(3, 2)
    with pytest.raises(ValueError):
        upper_tKm(3, 2, 1)


@given(st.integers(1, 40), st.integers(3, 12))
def test_upper_km_is_exact_floor(ell, m):
    b = upper_Km(ell, m)
    base = 2 * ell + 1
    # b <= base^((m-1)/2) < b+1, compared after squaring
    assert b * b <= base ** (m - 1) < (b + 1) ** 2
    assert upper_tKm(ell, m, 1) == b


@pytest.mark.parametrize("m", range(3, 12))
def test_single_edge_bound_dominates(m):
    # r(K_2, K_m) = m
    assert upper_Km(1, m) >= m


def test_triangle_and_turan():
    assert [triangle_bound(x) for x in (1, 3, 6)] == [3, 7, 13]
    assert turan_bound(6, 2) == 9
    assert turan_bound(5, 2) == Fraction(25, 4)
    assert turan_bound(7, 1) == 0


def test_turan_matches_triangle_free_extremal_number():
    pairs = list(combinations(range(5), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        es = {p for i, p in enumerate(pairs) if mask >> i & 1}
        if any({(a, b), (a, c), (b, c)} <= es for a, b, c in combinations(range(5), 3)):
            continue
        best = max(best, len(es))
    assert best == 6 <= turan_bound(5, 2)


def test_chvatal_harary():
    assert chvatal_harary_value(SimpleGraph.complete(3)) == 5
    assert chvatal_harary_value(SimpleGraph.path(4)) == 5
    assert chvatal_harary_value(SimpleGraph.complete(2)) == 4
    with pytest.raises(ValueError):
        chvatal_harary_value(SimpleGraph.empty(3))


def test_mequals2_budget():
    assert mequals2_budget(3) == (Fraction(1, 7), 63)
    assert mequals2_budget(1) == (Fraction(1, 3), 9)
    assert mequals2_budget(2) == (Fraction(1, 4), 18)


def test_main_budget():
    c, q = main_budget(3, 2, Fraction(1))
    assert q == 24
    # min{1/2, 1/8, 1/(3*(2*24-3))} = 1/135
    assert c == Fraction(1, 135)
    assert main_budget(2, 1, Fraction(1))[1] == 3
    with pytest.raises(ValueError):
        main_budget(3, 2, Fraction(0))


@pytest.mark.parametrize("m", range(2, 7))
def test_main_budget_decreases_in_t(m):
    for eps in (Fraction(1), Fraction(1, 10), Fraction(1, 1000)):
        cs = [main_budget(m, t, eps)[0] for t in range(1, 8)]
        assert all(a > b for a, b in zip(cs, cs[1:]))


def test_consistency():
    for n in range(1, 12):
        for m in range(1, 6):
            assert goodness_value(n, m, 1) == chvatal_tree_value(n, m)
    assert chvatal_tree_value(4, 3) == 7
    assert chvatal_tree_value(2, 5) == 5
    assert chvatal_tree_value(6, 2) == 6
    assert suspended_path_threshold(2, 1) == 3


def test_bounds_table_is_recomputable():
    g = SimpleGraph.path(4)
    rows = bounds_table(g, 3, 2, Fraction(1, 3))
    names = [r.name for r in rows]
    assert "goodness_value" in names and "upper_tKm" in names and "main_budget" in names
    assert [r.to_json() for r in rows] == [r.to_json() for r in bounds_table(g, 3, 2, Fraction(1, 3))]
    assert all(not isinstance(r.value, float) for r in rows)
    assert "main_budget" not in [r.name for r in bounds_table(g, 3, 2)]


DOMINANCE_NODES = 60_000


@pytest.mark.slow
def test_desk_scale_dominance():
    closed = 0
    for n in range(2, 6):
        for g in gen_connected(n):
            e = g.edge_count()
            cert = ramsey_number(g, 1, 3, SearchConfig(node_budget=DOMINANCE_NODES))
            lo, hi = cert.bracket
            assert lo <= triangle_bound(e) and lo <= upper_Km(e, 3)
            if cert.complete:
                assert cert.value <= triangle_bound(e) and cert.value <= upper_Km(e, 3)
                closed += 1
            elif e <= 4:
                pytest.fail(f"search did not close for a graph with {e} edges")
    # all trees close under this budget, plus most unicyclic graphs; K_4 and denser need minutes
    assert closed >= 15
