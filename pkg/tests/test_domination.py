import random

import pytest
from hypothesis import given, settings

from oddsum.corpus import random_graph
from oddsum.domination import (
    SolutionSpaceTooLarge,
    brute_force_odd_dominating_sets,
    count_odd_dominating_sets,
    enumerate_odd_dominating_sets,
    forced_excluded_vertices,
    is_odd_dominating,
    iter_solutions,
    solve_odd_domination,
)
from oddsum.families import extended_bowtie
from oddsum.graph import VertexSet, build_graph, complete_graph, cycle_graph, path_graph
from oddsum.verify import theorem4_H

from .strategies import graphs

K1 = build_graph(1, [])
K2 = complete_graph(2)
C4 = cycle_graph(4)


def bits(sets):
    return [s.bits for s in sets]


def test_solve_k1():
    s = solve_odd_domination(K1)
    assert s.particular.to_list() == [0] and s.nullity == 0


def test_solve_k2():
    s = solve_odd_domination(K2)
    assert s.nullity == 1
    assert s.particular.to_list() == [0]
    assert s.basis[0].to_list() == [0, 1]


def test_solve_c4_unique():
    s = solve_odd_domination(C4)
    assert s.nullity == 0
    assert s.particular.to_list() == [0, 1, 2, 3]


def test_brute_force_frozen():
    # exhaustive over 2, 4 and 16 subsets respectively
    assert bits(brute_force_odd_dominating_sets(K1)) == [0b1]
    assert bits(brute_force_odd_dominating_sets(K2)) == [0b01, 0b10]
    assert bits(brute_force_odd_dominating_sets(C4)) == [0b1111]
    assert bits(brute_force_odd_dominating_sets(build_graph(0, []))) == [0]


def test_brute_force_size_limit():
    with pytest.raises(ValueError):
        brute_force_odd_dominating_sets(path_graph(25))


def test_counts():
    assert count_odd_dominating_sets(K2) == 2
    assert count_odd_dominating_sets(C4) == 1


def test_enumerate_gray_order():
    assert [s.to_list() for s in enumerate_odd_dominating_sets(K2, cap=16)] == [[0], [1]]
    assert [s.to_list() for s in enumerate_odd_dominating_sets(C4, cap=16)] == [[0, 1, 2, 3]]


def test_enumerate_cap():
    with pytest.raises(SolutionSpaceTooLarge) as info:
        enumerate_odd_dominating_sets(K2, cap=1)
    assert info.value.nullity == 1


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("ODDSUM_CAP", "1")
    with pytest.raises(SolutionSpaceTooLarge):
        list(iter_solutions(solve_odd_domination(K2)))


def test_is_odd_dominating():
    assert is_odd_dominating(C4, VertexSet.full(4)) == (True, [])
    # {0}: vertices 0, 1, 3 see one member, vertex 2 sees none
    assert is_odd_dominating(C4, VertexSet.of(4, [0])) == (False, [2])


def test_theorem4_H_core():
    h = theorem4_H()
    core = VertexSet.of(8, (h.find(x) for x in ("v1", "v2", "v3", "v4", "w12", "w34")))
    assert is_odd_dominating(h, core)[0]


def test_forced_excluded():
    h = theorem4_H()
    assert {h.find("x1"), h.find("x3")} <= set(forced_excluded_vertices(h))
    assert forced_excluded_vertices(complete_graph(5)).bits == 0
    assert forced_excluded_vertices(path_graph(3)).to_list() == [0, 2]
    eb = extended_bowtie()
    assert set(eb.find_all("leaf")) <= set(forced_excluded_vertices(eb))


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_solver_matches_brute_force(g):
    system = solve_odd_domination(g)
    enumerated = enumerate_odd_dominating_sets(g)
    brute = brute_force_odd_dominating_sets(g)
    assert sorted(bits(enumerated)) == bits(brute)
    assert len(enumerated) == system.count == 2 ** system.nullity
    assert len(set(bits(enumerated))) == len(enumerated)
    assert all(is_odd_dominating(g, s)[0] for s in enumerated)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_system_invariants(g):
    system = solve_odd_domination(g)
    full = (1 << g.n) - 1
    assert system.apply(system.particular.bits) == full
    for b in system.basis:
        assert system.apply(b.bits) == 0
    # independence: rank of the basis equals its size
    rows, rank = [b.bits for b in system.basis], 0
    for col in range(g.n):
        pivot = next((r for r in rows if r >> col & 1), None)
        if pivot is None:
            continue
        rows = [r ^ pivot if r >> col & 1 else r for r in rows if r is not pivot]
        rank += 1
    assert rank == system.nullity


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_forced_exclusions_are_sound(g):
    forced = forced_excluded_vertices(g).bits
    assert all(not s.bits & forced for s in enumerate_odd_dominating_sets(g))


def test_ten_thousand_random_graphs_have_solutions():
    rng = random.Random(7)
    for _ in range(10_000):
        g = random_graph(rng, rng.randint(0, 30))
        system = solve_odd_domination(g)
        assert system.apply(system.particular.bits) == (1 << g.n) - 1


def test_large_sparse_graph_is_fast():
    import time

    g = cycle_graph(3000)
    start = time.perf_counter()
    system = solve_odd_domination(g)
    assert time.perf_counter() - start < 10
    # C_n has closed-neighborhood nullity 2 exactly when 3 divides n
    assert system.nullity == 2
