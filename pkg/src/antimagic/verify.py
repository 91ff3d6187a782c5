"""Vertex-sums, the antimagic check, and the structural invariants of a construction.

Sums are always recomputed from raw arcs and labels; nothing the construction
recorded about itself is trusted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import TYPE_CHECKING, Sequence

from .layout import Layout
from .orient import OrientedCircuit, OrientedGraph

if TYPE_CHECKING:
    from .pipeline import Construction

VertexSums = dict[int, int]


@dataclass
class VerificationReport:
    bijection_ok: bool
    antimagic_ok: bool
    collisions: list[tuple[int, int]]
    sums: VertexSums
    invariant_results: dict[str, bool] = field(default_factory=dict)
    problems: list[str] = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return self.antimagic_ok and all(self.invariant_results.values())


def _graph_sums(vertex_count: int, arcs: Sequence[tuple[int, int]], labels: Sequence[int]) -> VertexSums:
    entering: list[list[int]] = [[] for _ in range(vertex_count)]
    leaving: list[list[int]] = [[] for _ in range(vertex_count)]
    for (tail, head), lab in zip(arcs, labels):
        leaving[tail].append(lab)
        entering[head].append(lab)
    return {v: sum(entering[v]) - sum(leaving[v]) for v in range(vertex_count)}


def circuit_sums(oc: OrientedCircuit, labels: Sequence[int]) -> list[int]:
    """Sum at every slot of a labelled circuit (index = slot)."""
    L = len(labels)
    sums = [0] * L
    for s in range(L):
        tail, head = oc.arc(s)
        sums[head] += labels[s]
        sums[tail] -= labels[s]
    return sums


def vertex_sums(oriented: OrientedGraph | OrientedCircuit, labels: Sequence[int]) -> VertexSums:
    """Entering-minus-leaving label sums.

    For an :class:`OrientedGraph` keys are vertices and ``labels`` is indexed by
    edge id; for an :class:`OrientedCircuit` keys are slots.
    """
    if isinstance(oriented, OrientedCircuit):
        return dict(enumerate(circuit_sums(oriented, labels)))
    return _graph_sums(oriented.vertex_count, oriented.arcs, labels)


def check_bijection(labels: Sequence[int]) -> bool:
    m = len(labels)
    return sorted(labels) == list(range(1, m + 1))


def find_collisions(sums: VertexSums) -> list[tuple[int, int]]:
    groups: dict[int, list[int]] = {}
    for v, s in sums.items():
        groups.setdefault(s, []).append(v)
    pairs = []
    for members in groups.values():
        pairs.extend(combinations(sorted(members), 2))
    return sorted(pairs)


def check_antimagic(d_star: OrientedGraph, labels: Sequence[int]) -> VerificationReport:
    bijection_ok = len(labels) == len(d_star.arcs) and check_bijection(labels)
    sums = vertex_sums(d_star, labels)
    collisions = find_collisions(sums)
    return VerificationReport(
        bijection_ok=bijection_ok,
        antimagic_ok=bijection_ok and not collisions,
        collisions=collisions,
        sums=sums,
    )


def real_slot_sums(layout: Layout, slot_sums: Sequence[int]) -> VertexSums:
    return {v: slot_sums[s] for v, s in layout.real_slots.items()}


def check_imaginary(layout: Layout, slot_sums: Sequence[int]) -> bool:
    real = set(layout.real_slots.values())
    return all(x == -1 for s, x in enumerate(slot_sums) if s not in real)


def check_projection_identity(d_level: VertexSums, d_star: VertexSums, d: int) -> bool:
    """Graph-level sum of every vertex equals its real-slot sum minus ``d - 1``."""
    if d_level.keys() != d_star.keys():
        return False
    return all(d_star[v] == d_level[v] - (d - 1) for v in d_level)


def expected_first_sum(j: int, layout: Layout) -> int | None:
    """Prescribed sum at ``v_{j,1}`` of odd circuit ``j`` (``None`` if none is prescribed)."""
    if j == 1:
        return 1
    if 2 <= j <= 8:
        return -(j - 1)
    if j == 9:
        gaps = layout.gap_by_name()
        return -(gaps[(2, 4)] + gaps[(3, 5)] + 1)
    return j - 8


def check_x_formulas(
    layouts: Sequence[Layout], sums: Sequence[Sequence[int]], k: int
) -> dict[int, bool]:
    """Check the prescribed sum of ``v_{j,1}`` for every odd circuit ``j <= k``.

    ``layouts[j - 1]`` and ``sums[j - 1]`` (slot sums) belong to circuit ``j``.
    """
    out = {}
    for j in range(1, k + 1):
        layout = layouts[j - 1]
        got = sums[j - 1][layout.slot_of(1)]
        out[j] = got == expected_first_sum(j, layout)
    return out


def verify_construction(c: Construction) -> VerificationReport:
    """Antimagic check plus every structural invariant of the construction."""
    labels = c.labeling.edge_labels
    report = check_antimagic(c.d_star, labels)
    inv = report.invariant_results
    problems = report.problems

    slot_sums = [circuit_sums(oc, lab) for oc, lab in zip(c.oriented, c.labeling.circuit_labels)]

    inv["imaginary_minus_one"] = all(
        check_imaginary(lay, ss) for lay, ss in zip(c.layouts, slot_sums)
    )

    d_level: VertexSums = {}
    for lay, ss in zip(c.layouts, slot_sums):
        d_level.update(real_slot_sums(lay, ss))
    inv["projection_identity"] = check_projection_identity(d_level, report.sums, c.d)

    # D-level antimagic on real slots; equivalent to the graph-level check
    inv["real_slots_distinct"] = not find_collisions(d_level)

    n_k = c.labeling.offsets[c.k]
    split_ok = True
    for comp, lab in zip(c.components, c.labeling.circuit_labels):
        lo, hi = c.labeling.offsets[comp.index - 1] + 1, c.labeling.offsets[comp.index]
        if not all(lo <= x <= hi for x in lab):
            split_ok = False
        if comp.is_odd and max(lab) > n_k:
            split_ok = False
        if not comp.is_odd and min(lab) <= n_k:
            split_ok = False
    inv["range_split"] = split_ok

    gaps_ok = True
    for comp, spec, lay in zip(c.components, c.specs, c.layouts):
        bad = spec.violations(lay.gap_by_name())
        if bad or sum(lay.gaps) != lay.circuit.length:
            gaps_ok = False
            problems.extend(f"component {comp.index}: {b}" for b in bad)
    inv["gap_satisfaction"] = gaps_ok

    if c.k >= 1:
        xs = check_x_formulas(c.layouts, slot_sums, c.k)
        inv["first_vertex_sums"] = all(xs.values())
        problems.extend(f"s(v_{{{j},1}}) differs from its prescribed value" for j, ok in xs.items() if not ok)

    if report.collisions:
        problems.append(f"{len(report.collisions)} colliding vertex pairs")
    if not report.bijection_ok:
        problems.append("labels are not a bijection onto [1, m]")
    return report
