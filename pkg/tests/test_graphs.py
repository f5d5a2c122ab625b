"""Graph construction, Wiener indices, and the line-graph operator."""

from __future__ import annotations

import random

import pytest

from linewiener import (
    BudgetExceededError,
    DisconnectedGraphError,
    EmptyGraphError,
    Graph,
    GraphFormatError,
    degree_sequence,
    is_connected,
    is_tree,
    iterated_line_graph,
    line_graph,
    predicted_line_edge_count,
    wiener_index,
)

from oracles import naive_line_graph, naive_wiener, random_graph, random_tree


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n):
    return Graph(n, [(0, i) for i in range(1, n)])


def complete(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_construction_normalizes_edges():
    a = Graph(3, [(0, 1), (1, 2)])
    b = Graph(3, [(2, 1), (1, 0), (1, 2)])  # reversed and duplicated
    assert a == b
    assert hash(a) == hash(b)
    assert a.edge_count == 2
    assert a.adjacency == ((1,), (0, 2), (1,))


def test_construction_rejects_bad_edges():
    with pytest.raises(GraphFormatError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphFormatError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphFormatError):
        Graph(-1)


def test_graph_is_immutable():
    g = path(3)
    with pytest.raises(AttributeError):
        g.vertex_count = 5


def test_edges_are_lexicographic():
    g = Graph(4, [(2, 3), (0, 2), (0, 1), (1, 3)])
    assert list(g.edges()) == [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_degree_sequence_sorted():
    assert degree_sequence(star(5)) == [1, 1, 1, 1, 4]
    assert degree_sequence(Graph(3)) == [0, 0, 0]


def test_connectivity_and_tree_predicates():
    assert is_connected(path(1))
    assert not is_connected(Graph(0))
    assert not is_connected(Graph(2))
    assert is_tree(path(1))
    assert is_tree(star(7))
    assert not is_tree(cycle(4))
    assert not is_tree(Graph(3, [(0, 1)]))
    assert not is_tree(Graph(4, [(0, 1), (2, 3)]))


def test_wiener_known_values():
    # path: sum of i*(n-i); star: (n-1)^2; cycle: n^3/8 or n(n^2-1)/8; K_n: C(n,2)
    assert wiener_index(path(1)) == 0
    assert wiener_index(path(2)) == 1
    assert wiener_index(path(4)) == 10
    assert wiener_index(star(6)) == 25
    assert wiener_index(cycle(5)) == 15
    assert wiener_index(cycle(6)) == 27
    assert wiener_index(complete(7)) == 21


def test_wiener_undefined_cases():
    with pytest.raises(EmptyGraphError):
        wiener_index(Graph(0))
    with pytest.raises(DisconnectedGraphError):
        wiener_index(Graph(4, [(0, 1), (2, 3)]))


def test_wiener_matches_oracle_on_random_inputs():
    rng = random.Random(2024)
    for _ in range(40):
        t = random_tree(rng, rng.randrange(2, 24))
        assert wiener_index(t) == naive_wiener(t)
    for _ in range(60):
        g = random_graph(rng, rng.randrange(2, 14), rng.uniform(0.2, 0.9))
        expected = naive_wiener(g)
        if expected < 0:
            with pytest.raises(DisconnectedGraphError):
                wiener_index(g)
        else:
            assert wiener_index(g) == expected


def test_line_graph_small_cases():
    assert line_graph(path(4)) == path(3)
    assert line_graph(star(4)) == complete(3)
    assert line_graph(Graph(5)) == Graph(0)
    assert line_graph(path(2)) == Graph(1)
    # cycles are fixed points up to relabeling: connected and 2-regular
    lc = line_graph(cycle(6))
    assert degree_sequence(lc) == [2] * 6
    assert is_connected(lc)


def test_line_graph_matches_oracle_on_random_inputs():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng, rng.randrange(1, 12), rng.uniform(0.1, 0.9))
        assert line_graph(g) == naive_line_graph(g)


def test_predicted_line_edge_count():
    rng = random.Random(99)
    for _ in range(30):
        g = random_graph(rng, rng.randrange(1, 12), rng.uniform(0.1, 0.9))
        assert predicted_line_edge_count(g) == line_graph(g).edge_count


def test_iterated_line_graph_basics():
    g = path(6)
    assert iterated_line_graph(g, 0) == g
    assert iterated_line_graph(g, 2) == line_graph(line_graph(g))
    assert iterated_line_graph(g, 5) == path(1)
    with pytest.raises(ValueError):
        iterated_line_graph(g, -1)


def test_iterates_of_short_paths_vanish():
    # L(P_2) is a single vertex, one more application gives the empty graph
    assert iterated_line_graph(path(2), 2) == Graph(0)
    with pytest.raises(EmptyGraphError):
        wiener_index(iterated_line_graph(path(3), 3))


def test_budget_stops_runaway_growth():
    with pytest.raises(BudgetExceededError) as info:
        iterated_line_graph(complete(5), 3, budget=50)
    err = info.value
    # K_5 passes step 1 (10 vertices, 30 edges); L(K_5) is 6-regular on 10
    # vertices, so step 2 predicts 10*C(6,2) = 150 line edges
    assert (err.predicted, err.budget, err.step) == (150, 50, 2)


def test_budget_allows_exact_fit():
    g = complete(5)
    assert iterated_line_graph(g, 1, budget=30).vertex_count == 10
