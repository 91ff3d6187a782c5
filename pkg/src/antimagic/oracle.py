"""Brute-force cross-checks.

Nothing here imports from the construction modules; the point is to recompute
every quantity along an unrelated code path.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence


class BudgetExceeded(Exception):
    pass


class NonUnique(Exception):
    pass


@dataclass(frozen=True)
class OracleConfig:
    max_exhaustive_arcs: int = 8
    sample_count: int = 100

    def __post_init__(self):
        if self.max_exhaustive_arcs < 1 or self.sample_count < 1:
            raise ValueError("oracle caps must be positive")


def recount_sums(
    edge_list: Sequence[tuple[int, int]],
    directions: Sequence[bool],
    labels: Sequence[int],
) -> dict[int, int]:
    """Edge-major recount; ``directions[e]`` is True when edge ``(u, v)`` points ``u -> v``."""
    sums: dict[int, int] = defaultdict(int)
    for (u, v), fwd, lab in zip(edge_list, directions, labels):
        head, tail = (v, u) if fwd else (u, v)
        sums[head] += lab
        sums[tail] -= lab
    return dict(sums)


def antimagic_by_recount(
    vertex_count: int, arcs: Sequence[tuple[int, int, int]]
) -> tuple[bool, bool]:
    """``(labels form a bijection onto [1, m], all vertex sums distinct)`` for ``(tail, head, label)`` arcs."""
    m = len(arcs)
    bijective = {lab for _, _, lab in arcs} == set(range(1, m + 1)) and len(arcs) == m
    totals = [0] * vertex_count
    for tail, head, lab in arcs:
        totals[head] += lab
        totals[tail] -= lab
    return bijective, len(set(totals)) == vertex_count


def exhaustive_antimagic_exists(
    vertex_count: int,
    arcs: Sequence[tuple[int, int]],
    config: OracleConfig = OracleConfig(),
) -> bool:
    """True iff some bijection of ``[1, m]`` onto the arcs gives pairwise distinct sums."""
    m = len(arcs)
    if m > config.max_exhaustive_arcs:
        raise BudgetExceeded(f"{m} arcs exceed the exhaustive cap {config.max_exhaustive_arcs}")
    for perm in permutations(range(1, m + 1)):
        totals = [0] * vertex_count
        for (tail, head), lab in zip(arcs, perm):
            totals[head] += lab
            totals[tail] -= lab
        if len(set(totals)) == vertex_count:
            return True
    return False


def _solutions(k: int, d: int, first_family_from: int) -> list[int]:
    p = 2 * d - 2
    found = []
    for x in range(1, k + 1):
        hit = any(k == p * (x + 2) + r for r in range(first_family_from, d + 9))
        hit = hit or any(k == p * (x + 1) + r for r in range(d + 9, 2 * d - 2))
        if hit:
            found.append(x)
    return found


def x0_verbatim_solutions(k: int, d: int) -> list[int]:
    """Every ``x >= 1`` solving one of the listed equations, residues taken literally from 0."""
    return _solutions(k, d, 0)


def x0_brute(k: int, d: int) -> int | None:
    """Scan ``x = 1..k`` against the two equation families.

    The first family ``k = (2d-2)(x+2) + r`` starts at ``r = max(0, 11 - d)`` so
    that together the families cover exactly the offsets ``3d+7 .. 5d+4``.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    found = _solutions(k, d, max(0, 11 - d))
    if len(found) > 1:
        raise NonUnique(f"k={k}, d={d} solved by x in {found}")
    return found[0] if found else None
