"""Simple undirected 2d-regular graphs and their component decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DegreeTooSmall, DuplicateEdge, GraphError, NotRegular, SelfLoop

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A validated simple graph in which every vertex has degree ``2 * d``.

    Edge ids are positions in ``edges``; each pair is stored as ``(min, max)``.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    d: int

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(neighbour, edge id)`` pairs in edge-id order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return tuple(tuple(a) for a in adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class ComponentInfo:
    index: int  # 1-based, odd components first
    vertices: tuple[int, ...]
    order: int
    parity: str  # "odd" | "even"
    edge_count: int

    @property
    def is_odd(self) -> bool:
        return self.parity == "odd"


def build_graph(
    edge_list: Iterable[Sequence[int]],
    vertex_count: int | None = None,
    *,
    min_d: int = 2,
) -> Graph:
    """Validate ``edge_list`` and return a :class:`Graph`.

    ``vertex_count`` defaults to one more than the largest vertex id.
    ``min_d`` lowers the degree floor for unit tests on plain cycles (``min_d=1``).
    """
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge {key} listed twice")
        seen.add(key)
        edges.append(key)

    if vertex_count is None:
        vertex_count = max((v for e in edges for v in e), default=-1) + 1
    if vertex_count == 0:
        raise NotRegular("graph has no vertices")
    for u, v in edges:
        if u < 0 or v >= vertex_count:
            raise GraphError(f"edge {(u, v)} references a vertex outside [0, {vertex_count})")

    degree = [0] * vertex_count
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    degrees = set(degree)
    if len(degrees) != 1:
        raise NotRegular(f"degrees differ: {sorted(degrees)}")
    deg = degree[0]
    if deg % 2:
        raise NotRegular(f"degree {deg} is odd")
    if deg < 2 * min_d:
        raise DegreeTooSmall(f"degree {deg} < {2 * min_d}")
    return Graph(vertex_count, tuple(edges), deg // 2)


def classify_components(g: Graph) -> list[ComponentInfo]:
    """Connected components, odd ones first.

    Odd components are sorted by order, ties broken by smallest vertex id;
    even components keep discovery order (scan of vertex ids from 0).
    """
    seen = [False] * g.vertex_count
    found: list[list[int]] = []
    for root in range(g.vertex_count):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        members = []
        while stack:
            v = stack.pop()
            members.append(v)
            for w, _ in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        members.sort()
        found.append(members)

    odd = sorted((c for c in found if len(c) % 2), key=lambda c: (len(c), c[0]))
    even = [c for c in found if len(c) % 2 == 0]
    return [
        ComponentInfo(
            index=i,
            vertices=tuple(c),
            order=len(c),
            parity="odd" if len(c) % 2 else "even",
            edge_count=g.d * len(c),
        )
        for i, c in enumerate(odd + even, start=1)
    ]


def odd_count(components: Sequence[ComponentInfo]) -> int:
    return sum(1 for c in components if c.is_odd)
