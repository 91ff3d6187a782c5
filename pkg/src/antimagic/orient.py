"""Orientation of decomposed circuits and its projection onto the graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph
from .layout import PathDecomposition, PathName

SOURCE, SINK, FLOW = "source", "sink", "flow"


@dataclass(frozen=True)
class OrientedCircuit:
    decomposition: PathDecomposition
    directions: dict[PathName, tuple[int, int]]  # path -> (tail name, head name)
    status: dict[int, str]  # name j -> source | sink | flow
    forward: tuple[bool, ...]  # slot arc s runs slot s -> s + 1 when True

    @property
    def circuit(self):
        return self.decomposition.layout.circuit

    def arc(self, s: int) -> tuple[int, int]:
        """``(tail slot, head slot)`` of slot arc ``s``."""
        nxt = (s + 1) % len(self.forward)
        return (s, nxt) if self.forward[s] else (nxt, s)


@dataclass(frozen=True)
class OrientedGraph:
    vertex_count: int
    arcs: tuple[tuple[int, int], ...]  # per edge id: (tail, head)


def _status_by_rank(t: int, odd: bool) -> list[str]:
    if odd:
        # v1 keeps one arc in and one out; the rest alternate from v2 as a sink
        return [FLOW] + [SINK if r % 2 else SOURCE for r in range(1, t)]
    return [SOURCE if r % 2 == 0 else SINK for r in range(t)]


def orient_circuit(dec: PathDecomposition, parity: str | None = None) -> OrientedCircuit:
    layout = dec.layout
    t = layout.t
    odd = (parity or layout.parity) == "odd"
    seq = layout.name_sequence
    by_rank = _status_by_rank(t, odd)
    status = {seq[r]: by_rank[r] for r in range(t)}

    L = layout.circuit.length
    forward = [True] * L
    directions: dict[PathName, tuple[int, int]] = {}
    for path in dec.paths:
        r = path.rank
        a, b = seq[r], seq[(r + 1) % t]
        clockwise = by_rank[r] in (SOURCE, FLOW)
        directions[path.name] = (a, b) if clockwise else (b, a)
        if not clockwise:
            for s in path.arc_slots(L):
                forward[s] = False
    return OrientedCircuit(dec, directions, status, tuple(forward))


def project(oriented: Sequence[OrientedCircuit], g: Graph) -> OrientedGraph:
    """Give every graph edge the direction of its slot on the circuits."""
    arcs: list[tuple[int, int] | None] = [None] * g.edge_count
    for oc in oriented:
        verts = oc.circuit.vertices
        for s, eid in enumerate(oc.circuit.edge_ids):
            tail, head = oc.arc(s)
            arcs[eid] = (verts[tail], verts[head])
    missing = [e for e, a in enumerate(arcs) if a is None]
    if missing:
        raise ValueError(f"{len(missing)} edges are not covered by any circuit")
    return OrientedGraph(g.vertex_count, tuple(arcs))
