import pytest
from hypothesis import given, settings

from oddsum.chios import (
    coloring_from_partition,
    normalize_coloring,
    odd_sum_chromatic,
    oracle_odd_sum_chromatic,
    validate_odd_sum_coloring,
)
from oddsum.coloring import chromatic_number
from oddsum.domination import SolutionSpaceTooLarge, is_odd_dominating
from oddsum.families import build_J, build_theorem4_graph
from oddsum.graph import VertexSet, build_graph, complete_graph, cycle_graph, is_bipartite, path_graph

from .strategies import graphs

K1 = build_graph(1, [])
K2 = complete_graph(2)
P3 = path_graph(3)
C4 = cycle_graph(4)


def test_k1():
    cert = odd_sum_chromatic(K1)
    assert cert.chios == 1 and cert.coloring == (1,)


def test_empty_graph():
    cert = odd_sum_chromatic(build_graph(0, []))
    assert cert.chios == 0 and cert.coloring == ()


def test_theorem_instances():
    assert odd_sum_chromatic(build_J(4, 1)).chios == 6
    assert odd_sum_chromatic(build_theorem4_graph()).chios == 8


def test_cap_propagates():
    with pytest.raises(SolutionSpaceTooLarge):
        odd_sum_chromatic(K2, cap=1)


def test_validate_examples():
    # closed sums on C4 with (1,3,1,3): 1+3+3 = 7 and 3+1+1 = 5
    assert validate_odd_sum_coloring(C4, (1, 3, 1, 3)) == (True, [])
    ok, bad = validate_odd_sum_coloring(K2, (1, 3))
    assert not ok and [v.kind for v in bad] == ["parity", "parity"]
    assert validate_odd_sum_coloring(K2, (1, 2)) == (True, [])
    ok, bad = validate_odd_sum_coloring(K2, {0: 1, 1: 1})
    assert not ok and [v.kind for v in bad].count("proper") == 1


def test_validate_rejects_partial():
    with pytest.raises(ValueError):
        validate_odd_sum_coloring(K2, {0: 1})
    with pytest.raises(ValueError):
        validate_odd_sum_coloring(K2, (0, 1))


def test_coloring_from_partition():
    f = coloring_from_partition(C4, VertexSet.full(4))
    assert set(f) <= {1, 3} and len(set(f)) == 2
    assert coloring_from_partition(K1, VertexSet.of(1, [0])) == (1,)
    assert coloring_from_partition(P3, VertexSet.of(3, [1])) == (2, 1, 2)
    with pytest.raises(ValueError):
        coloring_from_partition(P3, VertexSet.of(3, [0]))


def test_oracle_examples():
    assert oracle_odd_sum_chromatic(K2) == 2
    assert oracle_odd_sum_chromatic(C4) == 2
    assert oracle_odd_sum_chromatic(P3) == 2
    assert oracle_odd_sum_chromatic(complete_graph(8)) == 8
    with pytest.raises(ValueError):
        oracle_odd_sum_chromatic(path_graph(9))


def test_normalize_examples():
    assert normalize_coloring((5, 2), K2) == (1, 2)
    # the relabel alone; (3, 8, 3) is not odd-sum on P3 (center sum 14)
    assert normalize_coloring((3, 8, 3)) == (1, 2, 1)
    with pytest.raises(ValueError):
        normalize_coloring((3, 8, 3), P3)
    assert normalize_coloring((8, 3, 8), P3) == (2, 1, 2)
    assert validate_odd_sum_coloring(P3, (2, 1, 2))[0]
    assert normalize_coloring((2, 1, 2), P3) == (2, 1, 2)
    with pytest.raises(ValueError):
        normalize_coloring((1, 3), K2)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=7))
def test_prop_a_equals_oracle(g):
    assert odd_sum_chromatic(g).chios == oracle_odd_sum_chromatic(g)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_certificate_invariants(g):
    cert = odd_sum_chromatic(g)
    assert validate_odd_sum_coloring(g, cert.coloring)[0]
    assert len(set(cert.coloring)) == cert.chios
    odd, even = cert.parity_partition
    assert odd == cert.dominating_set
    assert is_odd_dominating(g, odd)[0]
    chi = chromatic_number(g)[0]
    assert cert.chios <= 2 * chi
    if is_bipartite(g) is not None:
        assert cert.chios <= 4


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10))
def test_normalize_properties(g):
    f = odd_sum_chromatic(g).coloring
    # spread colors out to exercise the relabel
    spread = tuple(7 * c if c % 2 else 4 * c for c in f)
    assert validate_odd_sum_coloring(g, spread)[0]
    once = normalize_coloring(spread, g)
    assert validate_odd_sum_coloring(g, once)[0]
    assert len(set(once)) == len(set(spread))
    assert normalize_coloring(once, g) == once
    assert max(once, default=0) <= 2 * len(set(once))
