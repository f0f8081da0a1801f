import itertools
import random

import pytest

from deckrecon import (
    Graph,
    Graph6Error,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_graph6,
    path_graph,
)


def random_graph(n, rng, p=0.5):
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def test_construction_validates_symmetry():
    with pytest.raises(ValueError):
        Graph(2, (2, 0))
    with pytest.raises(ValueError):
        Graph(2, (1, 2))  # loop at 0
    with pytest.raises(ValueError):
        Graph(1, (2,))  # neighbour out of range


def test_from_edges_and_accessors():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g == path_graph(4)
    assert g.degree(1) == 2
    assert g.edge_count() == 3
    assert g.neighbors(2) == (1, 3)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)


def test_from_edges_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_complement_involution():
    rng = random.Random(7)
    for n in range(0, 9):
        g = random_graph(n, rng)
        assert g.complement().complement() == g
    assert complete_graph(5).complement() == empty_graph(5)


def test_relabel_round_trip():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randrange(1, 9)
        g = random_graph(n, rng)
        perm = list(range(n))
        rng.shuffle(perm)
        inverse = [0] * n
        for v, p in enumerate(perm):
            inverse[p] = v
        assert g.relabel(perm).relabel(inverse) == g


def test_induced_subgraph_and_delete():
    g = cycle_graph(5)
    assert g.delete_vertex(0) == path_graph(4)
    sub = g.induced_subgraph([1, 2, 4])
    assert sub.edges() == [(0, 1)]
    with pytest.raises(ValueError):
        g.induced_subgraph([7])


def test_components_and_connectivity():
    g = disjoint_union([path_graph(3), complete_graph(2), empty_graph(1)])
    assert g.components() == [[0, 1, 2], [3, 4], [5]]
    assert not g.is_connected()
    assert cycle_graph(4).is_connected()
    assert empty_graph(0).is_connected()
    assert empty_graph(1).is_connected()


# -- graph6 --------------------------------------------------------------------


def test_graph6_known_values():
    # documented encoding: 5 vertices, edges 02 04 13 34 encode as DQc
    g = Graph.from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)])
    assert g.to_graph6() == "DQc"
    assert from_graph6("DQc") == g
    assert empty_graph(0).to_graph6() == "?"
    assert complete_graph(2).to_graph6() == "A_"
    assert empty_graph(2).to_graph6() == "A?"


def test_graph6_round_trip_random():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randrange(0, 16)
        g = random_graph(n, rng, rng.random())
        assert from_graph6(g.to_graph6()) == g


def test_graph6_header_accepted_on_input():
    assert from_graph6(">>graph6<<A_") == complete_graph(2)
    assert not complete_graph(2).to_graph6().startswith(">>")


def test_graph6_long_form_length():
    g = empty_graph(63)
    code = g.to_graph6()
    assert code.startswith("~") and from_graph6(code) == g
    g64 = complete_graph(64)
    assert from_graph6(g64.to_graph6()) == g64


def test_graph6_errors():
    with pytest.raises(Graph6Error):
        from_graph6("")
    with pytest.raises(Graph6Error):
        from_graph6("B")  # truncated body
    with pytest.raises(Graph6Error):
        from_graph6("A_X")  # trailing bytes
    with pytest.raises(Graph6Error):
        from_graph6("A" + chr(62))  # out-of-range body character
    with pytest.raises(Graph6Error):
        from_graph6("AO")  # nonzero padding bits
    with pytest.raises(Graph6Error):
        from_graph6("~~" + "?" * 10)  # 8-byte length form
    with pytest.raises(Graph6Error):
        from_graph6("~?")  # truncated long-form length field
    with pytest.raises(Graph6Error):
        from_graph6("~" + chr(63 + 1) + "??")  # n = 4096 > 64


def test_vertex_cap():
    with pytest.raises(ValueError):
        empty_graph(65)
