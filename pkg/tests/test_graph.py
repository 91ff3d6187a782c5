import itertools

import pytest

from antimagic.errors import DegreeTooSmall, DuplicateEdge, NotRegular, SelfLoop
from antimagic.gen import circulant_edges
from antimagic.graph import build_graph, classify_components, odd_count

K5 = list(itertools.combinations(range(5), 2))


def shifted(edges, base):
    return [(u + base, v + base) for u, v in edges]


def test_k5_is_4_regular():
    g = build_graph(K5)
    assert g.vertex_count == 5
    assert g.d == 2
    assert g.edge_count == 10


def test_path_is_not_regular():
    with pytest.raises(NotRegular):
        build_graph([(0, 1), (1, 2)])


def test_duplicate_edge():
    with pytest.raises(DuplicateEdge):
        build_graph(K5 + [(3, 1)])


def test_self_loop():
    with pytest.raises(SelfLoop):
        build_graph([(0, 0)])


def test_odd_degree_rejected():
    k4 = list(itertools.combinations(range(4), 2))
    with pytest.raises(NotRegular):
        build_graph(k4)


def test_cycle_needs_unit_test_mode():
    cycle = [(i, (i + 1) % 6) for i in range(6)]
    with pytest.raises(DegreeTooSmall):
        build_graph(cycle)
    assert build_graph(cycle, min_d=1).d == 1


def test_k5_plus_octahedron():
    octa = circulant_edges(6, 2)
    g = build_graph(shifted(octa, 0) + shifted(K5, 6))
    comps = classify_components(g)
    assert [(c.parity, c.order) for c in comps] == [("odd", 5), ("even", 6)]
    assert comps[0].vertices == tuple(range(6, 11))
    assert odd_count(comps) == 1 and len(comps) == 2


def test_octahedron_alone():
    comps = classify_components(build_graph(circulant_edges(6, 2)))
    assert odd_count(comps) == 0 and len(comps) == 1


def test_equal_odd_orders_tie_broken_by_vertex_id():
    # the K5 on vertices 5..9 is listed first but must come second
    g = build_graph(shifted(K5, 5) + shifted(K5, 0))
    comps = classify_components(g)
    assert [c.vertices[0] for c in comps] == [0, 5]
    assert [c.index for c in comps] == [1, 2]


def test_odd_sorted_by_order_even_keep_discovery_order():
    parts = [circulant_edges(8, 2), circulant_edges(9, 2), circulant_edges(6, 2), circulant_edges(5, 2)]
    edges, base = [], 0
    for p, n in zip(parts, (8, 9, 6, 5)):
        edges += shifted(p, base)
        base += n
    comps = classify_components(build_graph(edges))
    assert [c.order for c in comps] == [5, 9, 8, 6]
    seen = sorted(v for c in comps for v in c.vertices)
    assert seen == list(range(base))
    for c in comps:
        assert c.edge_count == 2 * c.order
