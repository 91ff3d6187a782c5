from collections import Counter

import pytest

from antimagic.euler import euler_tour
from antimagic.gen import assemble, circulant, ComponentSpec
from antimagic.graph import classify_components
from antimagic.layout import GapSpec, decompose, select_reals
from antimagic.orient import FLOW, SINK, SOURCE, orient_circuit, project
from antimagic.pipeline import construct

from conftest import cycle_graph


def oriented_cycle(n):
    g = cycle_graph(n)
    comp = classify_components(g)[0]
    dec = decompose(select_reals(euler_tour(comp, g, 0), GapSpec()))
    return g, orient_circuit(dec, comp.parity)


def slot_degrees(oc):
    L = len(oc.forward)
    outdeg, indeg = Counter(), Counter()
    for s in range(L):
        tail, head = oc.arc(s)
        outdeg[tail] += 1
        indeg[head] += 1
    return outdeg, indeg


def test_odd_five_directions():
    _, oc = oriented_cycle(5)
    assert oc.directions == {
        (1, 2): (1, 2),
        (2, 4): (4, 2),
        (4, 5): (4, 5),
        (3, 5): (3, 5),
        (1, 3): (3, 1),
    }


def test_even_four_directions():
    _, oc = oriented_cycle(4)
    assert oc.directions == {(1, 2): (1, 2), (2, 4): (4, 2), (3, 4): (4, 3), (1, 3): (1, 3)}
    assert oc.status == {1: SOURCE, 2: SINK, 4: SOURCE, 3: SINK}


def test_odd_seven_statuses():
    _, oc = oriented_cycle(7)
    assert oc.status == {1: FLOW, 2: SINK, 4: SOURCE, 6: SINK, 7: SOURCE, 5: SINK, 3: SOURCE}


@pytest.mark.parametrize("orders", [(9,), (10,), (11, 12), (7, 7, 9, 8)])
def test_circuit_degree_pattern(orders):
    g, _ = assemble(ComponentSpec(2, orders))
    c = construct(g, seed=3)
    for comp, oc in zip(c.components, c.oriented):
        lay = oc.decomposition.layout
        outdeg, indeg = slot_degrees(oc)
        real = set(lay.real_slots.values())
        for s in range(lay.circuit.length):
            if s not in real:
                assert (outdeg[s], indeg[s]) == (1, 1)
        statuses = Counter(oc.status.values())
        t = comp.order
        if comp.is_odd:
            assert statuses == {FLOW: 1, SINK: (t - 1) // 2, SOURCE: (t - 1) // 2}
        else:
            assert statuses == {SINK: t // 2, SOURCE: t // 2}
        for j, st in oc.status.items():
            s = lay.slot_of(j)
            assert outdeg[s] == {FLOW: 1, SINK: 0, SOURCE: 2}[st]


def test_project_cycle_is_directed_cycle_pattern():
    g, oc = oriented_cycle(6)
    dg = project([oc], g)
    assert len(dg.arcs) == 6
    assert {tuple(sorted(a)) for a in dg.arcs} == set(g.edges)


def test_project_k5_degree_conservation():
    g = circulant(5, 2)
    c = construct(g)
    outdeg, indeg = Counter(), Counter()
    for tail, head in c.d_star.arcs:
        outdeg[tail] += 1
        indeg[head] += 1
    assert all(outdeg[v] + indeg[v] == 4 for v in range(5))


def test_projection_preserves_slot_arcs():
    g, _ = assemble(ComponentSpec(3, (9, 11, 8)))
    c = construct(g, seed=1)
    from_slots = Counter()
    for oc in c.oriented:
        verts = oc.circuit.vertices
        for s in range(oc.circuit.length):
            tail, head = oc.arc(s)
            from_slots[(verts[tail], verts[head])] += 1
    assert from_slots == Counter(c.d_star.arcs)
