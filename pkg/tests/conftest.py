from __future__ import annotations

import pytest

from antimagic.euler import Circuit
from antimagic.graph import Graph, build_graph


def cycle_graph(n: int) -> Graph:
    return build_graph([(i, (i + 1) % n) for i in range(n)], n, min_d=1)


def circuit_from_tour(g: Graph, tour: list[int], index: int = 1) -> Circuit:
    """Circuit following the closed vertex walk ``tour`` (last vertex joins the first)."""
    eid = {frozenset(e): i for i, e in enumerate(g.edges)}
    edges = [eid[frozenset((tour[s], tour[(s + 1) % len(tour)]))] for s in range(len(tour))]
    assert sorted(edges) == list(range(len(edges))), "tour must use each edge once"
    return Circuit(index, tuple(tour), tuple(edges))


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def acceptance_report(request):
    lines = request.config._acceptance_lines

    def report(number: int, title: str, ok: bool, detail: str = "") -> None:
        lines.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))

    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
