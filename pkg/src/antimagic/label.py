"""Bijective arc labels: circuit by circuit, path by path.

Circuit ``i`` receives the block ``[n_{i-1} + 1, n_i]``.  Inside a circuit the
paths are taken in a fixed order and each path gets a run of consecutive
labels increasing along its direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Sequence

from .layout import PathName
from .orient import OrientedCircuit


@dataclass(frozen=True)
class PathOrder:
    i: int
    names: tuple[PathName, ...]


def path_order(i: int, t: int, odd: bool = True) -> PathOrder:
    default = [(1, 2), (1, 3), *((j, j + 2) for j in range(2, t - 1)), (t - 1, t)]
    if not odd or i == 1 or i >= 10:
        return PathOrder(i, tuple(default))
    rest = default[2:]
    if i == 2:
        names = [(1, 3), (1, 2), *rest]
    elif i <= 8:
        # P1,2 moves behind P2,4
        names = [(1, 3), rest[0], (1, 2), *rest[1:]]
    else:
        # i == 9: P1,2 moves behind P3,5
        names = [(1, 3), rest[0], rest[1], (1, 2), *rest[2:]]
    return PathOrder(i, tuple(names))


def offsets(circuit_lengths: Sequence[int]) -> list[int]:
    return [0, *accumulate(circuit_lengths)]


@dataclass(frozen=True)
class LabeledOrientation:
    circuit_labels: tuple[tuple[int, ...], ...]  # per circuit: label of slot arc s
    offsets: tuple[int, ...]
    edge_labels: tuple[int, ...]  # per graph edge id

    @property
    def m(self) -> int:
        return self.offsets[-1]


def label_circuit(oc: OrientedCircuit, order: PathOrder, first: int) -> list[int]:
    L = oc.circuit.length
    labels = [0] * L
    by_name = oc.decomposition.by_name()
    nxt = first
    for name in order.names:
        path = by_name[name]
        arcs = path.arc_slots(L)
        if not oc.forward[arcs[0]]:
            arcs.reverse()
        for s in arcs:
            labels[s] = nxt
            nxt += 1
    return labels


def label_all(
    oriented: Sequence[OrientedCircuit],
    orders: Sequence[PathOrder],
    offs: Sequence[int],
) -> LabeledOrientation:
    """Label every circuit; ``oriented[i]`` uses ``[offs[i] + 1, offs[i + 1]]``."""
    per_circuit = []
    edge_labels = [0] * offs[-1]
    for idx, (oc, order) in enumerate(zip(oriented, orders)):
        labels = label_circuit(oc, order, offs[idx] + 1)
        per_circuit.append(tuple(labels))
        for s, eid in enumerate(oc.circuit.edge_ids):
            edge_labels[eid] = labels[s]
    return LabeledOrientation(tuple(per_circuit), tuple(offs), tuple(edge_labels))
