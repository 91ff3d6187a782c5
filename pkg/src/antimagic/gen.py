"""Generators for 2d-regular test graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidParams
from .graph import Graph, build_graph
from .x0 import solve_x0


@dataclass(frozen=True)
class ComponentSpec:
    d: int
    orders: tuple[int, ...]


@dataclass(frozen=True)
class PreconditionReport:
    k: int
    q: int
    x0: int | None
    min_odd_order: int | None
    required_first_order: int | None
    satisfied: bool

    def describe(self) -> str:
        if self.x0 is None:
            return f"k={self.k} q={self.q}: k <= 5d+4, no order requirement"
        verdict = "satisfied" if self.satisfied else "VIOLATED"
        return (
            f"k={self.k} q={self.q} x0={self.x0}: smallest odd order "
            f"{self.min_odd_order} vs required {self.required_first_order} ({verdict})"
        )


def circulant_edges(n: int, d: int, base: int = 0) -> list[tuple[int, int]]:
    return [(base + i, base + (i + s) % n) for i in range(n) for s in range(1, d + 1)]


def circulant(n: int, d: int) -> Graph:
    """``C_n(1, ..., d)``: vertex ``i`` joined to ``i +- 1, ..., i +- d`` mod ``n``."""
    if d < 1 or n < 2 * d + 1:
        raise InvalidParams(f"circulant needs n >= 2d + 1, got n={n}, d={d}")
    return build_graph(circulant_edges(n, d), n, min_d=1)


def assemble(spec: ComponentSpec) -> tuple[Graph, PreconditionReport]:
    """Disjoint union of circulants, one per entry of ``spec.orders`` (in that order)."""
    d = spec.d
    edges: list[tuple[int, int]] = []
    base = 0
    for n in spec.orders:
        if n < 2 * d + 1:
            raise InvalidParams(f"component order {n} < 2d + 1 = {2 * d + 1}")
        edges.extend(circulant_edges(n, d, base))
        base += n
    g = build_graph(edges, base, min_d=min(d, 2))

    odd = sorted(n for n in spec.orders if n % 2)
    k = len(odd)
    res = solve_x0(k, d) if d >= 2 else None
    required = res.min_first_order if res else None
    smallest = odd[0] if odd else None
    report = PreconditionReport(
        k=k,
        q=len(spec.orders),
        x0=res.x0 if res else None,
        min_odd_order=smallest,
        required_first_order=required,
        satisfied=required is None or smallest >= required,
    )
    return g, report


def shuffled(g: Graph, seed: int) -> Graph:
    """Same graph with vertex ids and edge order randomly permuted."""
    rng = random.Random(seed)
    perm = list(range(g.vertex_count))
    rng.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in g.edges]
    rng.shuffle(edges)
    return build_graph(edges, g.vertex_count, min_d=min(g.d, 2))


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    edges: list[tuple[int, int]] = []
    base = 0
    for part in parts:
        edges.extend((u + base, v + base) for u, v in part.edges)
        base += part.vertex_count
    return build_graph(edges, base, min_d=min(p.d for p in parts))
