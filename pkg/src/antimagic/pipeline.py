"""End-to-end construction: tours, layouts, orientation, labels."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .euler import euler_tour
from .graph import ComponentInfo, Graph, classify_components, odd_count
from .label import LabeledOrientation, PathOrder, label_all, offsets, path_order
from .layout import (
    DEFAULT_RETRY_BUDGET,
    GapSpec,
    Layout,
    PathDecomposition,
    decompose,
    gap_spec,
    select_reals,
)
from .orient import OrientedCircuit, OrientedGraph, orient_circuit, project
from .x0 import X0Result, solve_x0

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Construction:
    graph: Graph
    components: tuple[ComponentInfo, ...]
    k: int
    x0: X0Result | None
    specs: tuple[GapSpec, ...]
    layouts: tuple[Layout, ...]
    decompositions: tuple[PathDecomposition, ...]
    oriented: tuple[OrientedCircuit, ...]
    orders: tuple[PathOrder, ...]
    labeling: LabeledOrientation
    d_star: OrientedGraph
    seed: int

    @property
    def q(self) -> int:
        return len(self.components)

    @property
    def d(self) -> int:
        return self.graph.d

    def arcs(self) -> list[tuple[int, int, int]]:
        """``(tail, head, label)`` for every edge, in edge-id order."""
        return [
            (tail, head, lab)
            for (tail, head), lab in zip(self.d_star.arcs, self.labeling.edge_labels)
        ]


def construct(g: Graph, seed: int = 0, retry_budget: int = DEFAULT_RETRY_BUDGET) -> Construction:
    """Build the oriented, labelled graph.

    Raises :class:`~antimagic.errors.LayoutError` when some circuit admits no
    real-vertex selection within the retry budget.
    """
    components = tuple(classify_components(g))
    k = odd_count(components)
    x0 = solve_x0(k, g.d) if g.d >= 2 else None

    specs, layouts = [], []
    for comp in components:
        spec = gap_spec(comp.index, k, g.d, x0, odd=comp.is_odd)
        circuit = euler_tour(comp, g, f"{seed}/{comp.index}")
        layout = select_reals(
            circuit,
            spec,
            seed=f"{seed}/{comp.index}",
            retry_budget=retry_budget,
            resample=lambda s, comp=comp: euler_tour(comp, g, s),
        )
        if layout.tour_seed is not None:
            log.debug("component %d laid out after resampling (%s)", comp.index, layout.tour_seed)
        specs.append(spec)
        layouts.append(layout)

    decs = [decompose(lay) for lay in layouts]
    oriented = [orient_circuit(dec, comp.parity) for dec, comp in zip(decs, components)]
    orders = [path_order(comp.index, comp.order, comp.is_odd) for comp in components]
    offs = offsets([lay.circuit.length for lay in layouts])
    labeling = label_all(oriented, orders, offs)
    d_star = project(oriented, g)
    return Construction(
        graph=g,
        components=components,
        k=k,
        x0=x0,
        specs=tuple(specs),
        layouts=tuple(layouts),
        decompositions=tuple(decs),
        oriented=tuple(oriented),
        orders=tuple(orders),
        labeling=labeling,
        d_star=d_star,
        seed=seed,
    )
