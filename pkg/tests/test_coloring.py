import pytest
from hypothesis import given, settings

from oddsum.coloring import (
    NodeBudgetExceeded,
    brute_force_chromatic,
    chromatic_number,
    chromatic_number_induced,
    dsatur_greedy,
    greedy_clique,
)
from oddsum.domination import solve_odd_domination
from oddsum.families import build_J, build_theorem4_graph, theorem4_core
from oddsum.graph import VertexSet, build_graph, complete_graph, cycle_graph, is_bipartite, petersen_graph

from .strategies import graphs


def test_examples():
    assert chromatic_number(complete_graph(4))[0] == 4
    assert chromatic_number(cycle_graph(5))[0] == 3
    assert chromatic_number(build_graph(0, []))[0] == 0
    assert chromatic_number(build_graph(3, []))[0] == 1


def test_theorem1_core_needs_three():
    g = build_J(4, 1)
    d = solve_odd_domination(g).particular
    assert chromatic_number_induced(g, d) == 3


def test_theorem4_sides_need_four():
    g = build_theorem4_graph()
    d = theorem4_core(g)
    assert chromatic_number_induced(g, d) == 4
    assert chromatic_number_induced(g, d.complement()) == 4
    assert chromatic_number_induced(g, VertexSet(g.n)) == 0


def test_brute_force_examples():
    assert brute_force_chromatic(complete_graph(3)) == 3
    assert brute_force_chromatic(petersen_graph()) == 3
    assert brute_force_chromatic(cycle_graph(6)) == 2
    with pytest.raises(ValueError):
        brute_force_chromatic(complete_graph(13))


def test_witness_uses_exact_colors():
    g = petersen_graph()
    k, witness = chromatic_number(g)
    assert k == 3 and witness.is_valid(g)


def test_node_budget():
    # Mycielski-style graph: clique 2, chi 4, so the search must branch
    grotzsch = build_graph(11, [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
        (5, 1), (5, 4), (6, 0), (6, 2), (7, 1), (7, 3), (8, 2), (8, 4), (9, 3), (9, 0),
        (10, 5), (10, 6), (10, 7), (10, 8), (10, 9),
    ])
    assert chromatic_number(grotzsch)[0] == 4
    with pytest.raises(NodeBudgetExceeded):
        chromatic_number(grotzsch, node_budget=1)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_exact_matches_brute_force(g):
    k, witness = chromatic_number(g)
    assert k == brute_force_chromatic(g)
    assert witness.is_valid(g)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_between_clique_and_greedy(g):
    k, _ = chromatic_number(g)
    if g.n:
        clique = greedy_clique(g)
        assert all(g.adj[u] >> v & 1 for u in clique for v in clique if u != v)
        assert len(clique) <= k <= max(dsatur_greedy(g, list(range(g.n))).values()) + 1
    if is_bipartite(g) is not None:
        assert k <= 2
    if g.num_edges == 0:
        assert k <= 1
