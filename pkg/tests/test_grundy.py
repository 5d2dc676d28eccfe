import pytest
from conftest import brute_grundy, small_graphs
from hypothesis import given, settings
from hypothesis import strategies as st

from grundyb.coloring import Coloring, is_grundy_valid
from grundyb.errors import NotAPermutation, NotGrundyValid, SearchLimitExceeded
from grundyb.families import atom_coloring, atom_tree, gmn, gt, planted_cactus, random_graph, random_tree
from grundyb.graph import build_graph
from grundyb.grundy import (
    TREE_LIMIT, first_fit, grundy_at_least, grundy_number, grundy_upper_bound, sibling_violations,
    m_value, vertex_color_bounds, witness_decomposition,
)


def test_first_fit_follows_order():
    P4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert first_fit(P4, [0, 3, 1, 2]).colors == (1, 2, 3, 1)
    assert first_fit(P4, [1, 2, 0, 3]).colors == (2, 1, 2, 1)
    with pytest.raises(NotAPermutation):
        first_fit(P4, [0, 1, 2])


def test_small_known_values():
    assert grundy_number(build_graph(0, []))[0] == 0
    assert grundy_number(build_graph(3, []))[0] == 1
    assert grundy_number(build_graph(4, [(0, 1), (1, 2), (2, 3)]))[0] == 3
    K5 = build_graph(5, [(a, b) for a in range(5) for b in range(a + 1, 5)])
    assert grundy_number(K5)[0] == 5
    # C4 has Grundy number 2, C5 and longer cycles 3
    assert grundy_number(build_graph(4, [(i, (i + 1) % 4) for i in range(4)]))[0] == 2
    assert grundy_number(build_graph(6, [(i, (i + 1) % 6) for i in range(6)]))[0] == 3


@pytest.mark.parametrize("k", range(1, 7))
def test_atom_is_tight(k):
    T = atom_tree(k)
    g, order = grundy_number(T, TREE_LIMIT)
    assert g == k and first_fit(T, order).k == k


def test_m_value():
    assert m_value((3, 3, 2, 2)) == 3
    assert m_value((5, 1, 1, 1, 1, 1)) == 2
    assert m_value(()) == 0


def test_upper_bounds_dominate():
    for seed in range(30):
        G = random_graph(9, seed, 40)
        g = grundy_number(G)[0]
        assert g <= grundy_upper_bound(G)
        C = first_fit(G, grundy_number(G)[1])
        ub = vertex_color_bounds(G)
        assert all(C[v] <= ub[v] for v in range(G.n))


def test_limit_enforced():
    with pytest.raises(SearchLimitExceeded):
        grundy_number(random_tree(30, 1), limit=20)
    with pytest.raises(SearchLimitExceeded):
        grundy_number(random_graph(25, 1, 30))


def test_grundy_at_least():
    G = gmn(3, 2)
    found, order = grundy_at_least(G, 4)
    assert found and first_fit(G, order).k >= 4
    assert grundy_at_least(G, G.max_degree() + 2) == (False, None)
    assert grundy_at_least(random_tree(30, 2), 2)[0]


def test_witness_search_above_subset_limit():
    # trees above the subset cutoff go through the witness search
    for seed in range(8):
        T = random_tree(30, seed)
        g, order = grundy_number(T)
        assert first_fit(T, order).k == g
        assert not grundy_at_least(T, g + 1)[0]


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=6))
def test_matches_all_orders(G):
    g, order = grundy_number(G)
    assert g == brute_grundy(G)
    assert first_fit(G, order).k == g


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=7, min_n=1), st.integers(1, 8))
def test_at_least_consistent(G, g):
    found, order = grundy_at_least(G, g)
    assert found == (grundy_number(G)[0] >= g)
    if found:
        assert first_fit(G, order).k >= g


def test_decomposition_of_atom():
    T = atom_tree(4)
    dec = witness_decomposition(T, atom_coloring(4))
    assert dec.root == 0 and dec.levels[0] == (0,)
    assert sorted(dec.base_coloring[v] for v in dec.levels[1]) == [1, 2, 3]
    assert dec.t == 4 and len(dec.vertices()) == T.n
    assert set(dec.second_level_by_color()) == {1, 2, 3}
    for u, kids in dec.children.items():
        assert all(T.has_edge(u, w) and dec.base_coloring[w] < dec.base_coloring[u] for w in kids)
    assert sibling_violations(T, dec) == []


def test_decomposition_rejects_non_grundy():
    with pytest.raises(NotGrundyValid):
        witness_decomposition(build_graph(2, [(0, 1)]), Coloring((1, 1)))


def test_decomposition_covers_every_demand():
    G = gt(3)
    C = first_fit(G, grundy_number(G)[1])
    dec = witness_decomposition(G, C)
    where = dec.vertices()
    for v in where:
        seen = {C[u] for u in G.adj[v] if u in where}
        assert set(range(1, C[v])) <= seen


def test_sibling_property_on_planted_cacti():
    for seed in range(40):
        G, C = planted_cactus(6 + seed % 6, seed)
        dec = witness_decomposition(G, C, check_siblings=True)
        assert sibling_violations(G, dec) == []
