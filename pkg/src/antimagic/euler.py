"""Seeded Hierholzer Euler tours, one per component."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import NotEulerian
from .graph import ComponentInfo, Graph


@dataclass(frozen=True)
class Circuit:
    """A closed Euler tour read as a cyclic sequence of slots.

    Slot ``s`` holds ``vertices[s]``; the edge ``edge_ids[s]`` joins it to the
    vertex in slot ``s + 1`` (mod length).  Each vertex of the component
    occupies ``d`` slots.
    """

    component_index: int
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def slots(self) -> list[tuple[int, int]]:
        return list(zip(self.vertices, self.edge_ids))

    def occurrences(self) -> dict[int, list[int]]:
        occ: dict[int, list[int]] = {}
        for s, v in enumerate(self.vertices):
            occ.setdefault(v, []).append(s)
        return occ


def euler_tour(component: ComponentInfo, g: Graph, seed: int | str = 0) -> Circuit:
    """Euler tour of ``component``; the tour is a deterministic function of ``seed``."""
    rng = random.Random(f"euler/{seed}")
    adj: dict[int, list[tuple[int, int]]] = {}
    for v in component.vertices:
        nbrs = list(g.adjacency[v])
        if len(nbrs) % 2:
            raise NotEulerian(f"vertex {v} has odd degree {len(nbrs)}")
        rng.shuffle(nbrs)
        adj[v] = nbrs

    start = component.vertices[0]
    used: set[int] = set()
    ptr = dict.fromkeys(adj, 0)
    stack: list[tuple[int, int]] = [(start, -1)]
    popped: list[tuple[int, int]] = []
    while stack:
        v, e_in = stack[-1]
        nbrs = adj[v]
        i = ptr[v]
        while i < len(nbrs) and nbrs[i][1] in used:
            i += 1
        ptr[v] = i
        if i == len(nbrs):
            popped.append(stack.pop())
        else:
            w, e = nbrs[i]
            used.add(e)
            stack.append((w, e))

    # popped[j] and popped[j+1] are joined by popped[j]'s entry edge
    expected = sum(len(a) for a in adj.values()) // 2
    if len(used) != expected or len(popped) != expected + 1:
        raise NotEulerian(f"component {component.index} is not connected")
    body = popped[:-1]
    return Circuit(
        component_index=component.index,
        vertices=tuple(v for v, _ in body),
        edge_ids=tuple(e for _, e in body),
    )
