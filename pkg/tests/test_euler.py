from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antimagic.errors import NotEulerian
from antimagic.gen import circulant
from antimagic.graph import ComponentInfo, build_graph, classify_components
from antimagic.euler import euler_tour

from conftest import cycle_graph


def check_circuit(circuit, g, comp):
    L = circuit.length
    assert L == g.d * comp.order
    assert sorted(circuit.edge_ids) == sorted(
        e for e, (u, v) in enumerate(g.edges) if u in comp.vertices
    )
    for s in range(L):
        u, w = circuit.vertices[s], circuit.vertices[(s + 1) % L]
        assert set(g.edges[circuit.edge_ids[s]]) == {u, w}
        assert circuit.vertices[s - 1] != w or L <= 2
    assert set(Counter(circuit.vertices).values()) == {g.d}


def test_k5_tour():
    g = circulant(5, 2)
    comp = classify_components(g)[0]
    c = euler_tour(comp, g, seed=3)
    assert c.length == 10
    assert Counter(c.vertices) == {v: 2 for v in range(5)}
    check_circuit(c, g, comp)


def test_plain_cycle_tour_is_the_cycle():
    g = cycle_graph(6)
    comp = classify_components(g)[0]
    c = euler_tour(comp, g, seed=0)
    assert sorted(c.vertices) == list(range(6))
    steps = {(c.vertices[(s + 1) % 6] - c.vertices[s]) % 6 for s in range(6)}
    assert steps in ({1}, {5})


def test_same_seed_same_tour():
    g = circulant(11, 3)
    comp = classify_components(g)[0]
    assert euler_tour(comp, g, 7) == euler_tour(comp, g, 7)


def test_seeds_give_different_tours():
    g = circulant(11, 3)
    comp = classify_components(g)[0]
    tours = {euler_tour(comp, g, s).vertices for s in range(10)}
    assert len(tours) > 1


def test_disconnected_component_rejected():
    g = build_graph([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)], min_d=1)
    bogus = ComponentInfo(1, tuple(range(6)), 6, "even", 6)
    with pytest.raises(NotEulerian):
        euler_tour(bogus, g, 0)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(5, 30), d=st.integers(2, 4), seed=st.integers(0, 10**6))
def test_tour_invariants(n, d, seed):
    if n < 2 * d + 1:
        n = 2 * d + 1
    g = circulant(n, d)
    comp = classify_components(g)[0]
    check_circuit(euler_tour(comp, g, seed), g, comp)
