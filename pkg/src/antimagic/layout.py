"""Real-vertex selection, zigzag naming and path decomposition of a circuit.

A circuit of length ``d * t`` carries ``t`` real slots, one per vertex.  Read
clockwise from the slot of ``v1`` the real slots are named by the zigzag
sequence, and the stretch between two consecutive real slots is the path
``P(j, k)``; its length is the gap between the two slots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .errors import BudgetExhausted, Infeasible, InvalidParams, MissingX0, TooFewReals
from .euler import Circuit
from .x0 import X0Result

PathName = tuple[int, int]

DEFAULT_RETRY_BUDGET = 64
# cap on gap-length combinations tried per circuit before resampling the tour
MAX_COMBOS = 2000


def path_name(a: int, b: int) -> PathName:
    return (a, b) if a < b else (b, a)


def format_path(name: PathName) -> str:
    return f"P{name[0]},{name[1]}"


@dataclass(frozen=True)
class GapSpec:
    exact: dict[PathName, int] = field(default_factory=dict)
    minimum: dict[PathName, int] = field(default_factory=dict)

    def is_empty(self) -> bool:
        return not self.exact and not self.minimum

    def violations(self, gaps: dict[PathName, int]) -> list[str]:
        out = []
        for name, want in self.exact.items():
            got = gaps.get(name)
            if got != want:
                out.append(f"|{format_path(name)}| = {got}, required {want}")
        for name, want in self.minimum.items():
            got = gaps.get(name)
            if got is None or got < want:
                out.append(f"|{format_path(name)}| = {got}, required >= {want}")
        return out

    def describe(self) -> str:
        parts = [f"{format_path(n)}={v}" for n, v in sorted(self.exact.items())]
        parts += [f"{format_path(n)}>={v}" for n, v in sorted(self.minimum.items())]
        return ";".join(parts) if parts else "-"


def gap_spec(i: int, k: int, d: int, x0: X0Result | None = None, *, odd: bool = True) -> GapSpec:
    """Path-length requirements for circuit ``i`` when the graph has ``k`` odd components.

    Even circuits (and any index beyond ``k``) are unconstrained.
    """
    if d < 1 or k < 0 or i < 1:
        raise InvalidParams(f"bad arguments i={i}, k={k}, d={d}")
    if k >= 5 * d + 5 and x0 is None:
        raise MissingX0(f"k={k} >= 5d+5 needs x0")
    if not odd or i > k:
        return GapSpec()

    exact: dict[PathName, int] = {}
    minimum: dict[PathName, int] = {}
    if i == 1:
        exact[(1, 2)] = 1
        exact[(1, 3)] = 1
        low = 0
        if k in (7, 8):
            low = 3
        elif k == 9:
            low = 4
        elif 10 <= k <= 5 * d + 4:
            low = 5 * d - 6
        elif k >= 5 * d + 5:
            low = (2 * d - 2) * x0.x0 + 5 * d - 6
        if k >= 9:
            # s(v_{9,1}) = -9, so s(v_{1,3}) = -(|P2,4| + 5) must stay below it
            low = max(low, 5)
        if low:
            minimum[(2, 4)] = low
    elif 3 <= i <= 9:
        exact[(2, 4)] = i - 2
        if i == 9:
            exact[(3, 5)] = 1
    elif i >= 10:
        exact[(1, 3)] = 1
        exact[(1, 2)] = i - 8
    return GapSpec(exact, minimum)


def zigzag_names(t: int, parity: str) -> list[int]:
    """Clockwise order of real-vertex names: 1, 2, 4, ..., apex, ..., 5, 3."""
    if parity not in ("odd", "even"):
        raise InvalidParams(f"parity must be 'odd' or 'even', got {parity!r}")
    if (t % 2 == 1) != (parity == "odd"):
        raise InvalidParams(f"t={t} does not have parity {parity}")
    if parity == "odd":
        if t < 3:
            raise TooFewReals(f"odd circuit needs t >= 3, got {t}")
        return [1, *range(2, t, 2), t, *range(t - 2, 2, -2)]
    if t < 4:
        raise TooFewReals(f"even circuit needs t >= 4, got {t}")
    return [1, *range(2, t + 1, 2), *range(t - 1, 2, -2)]


@dataclass(frozen=True)
class Layout:
    circuit: Circuit
    real_slots: dict[int, int]  # vertex -> slot
    names: dict[int, int]  # j -> vertex carrying the name v_j
    order: tuple[int, ...]  # real slots clockwise, starting at v1
    gaps: tuple[int, ...]  # gaps[r]: slots from order[r] to order[r + 1]
    name_sequence: tuple[int, ...]  # zigzag names by clockwise rank
    tour_seed: int | str | None = None

    @property
    def t(self) -> int:
        return len(self.order)

    @property
    def parity(self) -> str:
        return "odd" if self.t % 2 else "even"

    def rank_names(self) -> list[PathName]:
        seq = self.name_sequence
        return [path_name(seq[r], seq[(r + 1) % len(seq)]) for r in range(len(seq))]

    def gap_by_name(self) -> dict[PathName, int]:
        return dict(zip(self.rank_names(), self.gaps))

    def slot_of(self, j: int) -> int:
        return self.real_slots[self.names[j]]


@dataclass(frozen=True)
class Path:
    name: PathName
    rank: int  # clockwise position, 0 = the path leaving v1
    start: int  # slot of the clockwise-first endpoint
    length: int

    def arc_slots(self, circuit_length: int) -> list[int]:
        """Slot arcs covered, clockwise; arc ``s`` joins slot ``s`` to ``s + 1``."""
        return [(self.start + x) % circuit_length for x in range(self.length)]


@dataclass(frozen=True)
class PathDecomposition:
    layout: Layout
    paths: tuple[Path, ...]  # by clockwise rank

    def by_name(self) -> dict[PathName, Path]:
        return {p.name: p for p in self.paths}


def decompose(layout: Layout) -> PathDecomposition:
    paths = tuple(
        Path(name=name, rank=r, start=layout.order[r], length=layout.gaps[r])
        for r, name in enumerate(layout.rank_names())
    )
    return PathDecomposition(layout, paths)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def _build_layout(
    circuit: Circuit,
    seq: list[int],
    clockwise: list[int],
    first_rank: int,
    tour_seed: int | str | None,
) -> Layout:
    t = len(seq)
    L = circuit.length
    shift = (-first_rank) % t
    order = tuple(clockwise[shift:] + clockwise[:shift])
    gaps = tuple((order[(r + 1) % t] - order[r]) % L or L for r in range(t))
    names = {seq[r]: circuit.vertices[order[r]] for r in range(t)}
    real = {circuit.vertices[s]: s for s in order}
    return Layout(circuit, real, names, order, gaps, tuple(seq), tour_seed)


def _first_occurrence_layout(circuit: Circuit, seq: list[int], tour_seed) -> Layout:
    first: dict[int, int] = {}
    for s, v in enumerate(circuit.vertices):
        first.setdefault(v, s)
    return _build_layout(circuit, seq, sorted(first.values()), 0, tour_seed)


def _rank_constraints(spec: GapSpec, seq: list[int], L: int) -> list[tuple[int, int] | None]:
    """Per rank: ``(base length, is_exact)`` or ``None`` when unconstrained."""
    t = len(seq)
    rank_of = {path_name(seq[r], seq[(r + 1) % t]): r for r in range(t)}
    kinds: list[tuple[int, int] | None] = [None] * t
    for name, value in spec.exact.items():
        if name not in rank_of:
            raise Infeasible(f"{format_path(name)} does not exist on a circuit with {t} real vertices")
        if value < 1:
            raise Infeasible(f"{format_path(name)} must have length >= 1")
        kinds[rank_of[name]] = (value, True)
    for name, value in spec.minimum.items():
        if name not in rank_of:
            raise Infeasible(f"{format_path(name)} does not exist on a circuit with {t} real vertices")
        r = rank_of[name]
        if kinds[r] is not None:
            if kinds[r][0] < value:
                raise Infeasible(f"{format_path(name)} has contradictory requirements")
            continue
        kinds[r] = (max(value, 1), False)
    need = sum(k[0] if k else 1 for k in kinds)
    if need > L:
        raise Infeasible(f"path lengths need {need} slots, circuit has {L}")
    return kinds


def _window(kinds: list) -> list[int]:
    """Shortest cyclic run of ranks covering every constrained rank."""
    t = len(kinds)
    free = [k is None for k in kinds]
    if not any(free):
        return list(range(t))
    # longest cyclic run of unconstrained ranks; the window is its complement
    best_len, best_end = 0, 0
    run = 0
    for r in range(2 * t):
        if free[r % t]:
            run += 1
            if run > best_len:
                best_len, best_end = min(run, t), r % t
        else:
            run = 0
    start = (best_end + 1) % t
    return [(start + x) % t for x in range(t - best_len)]


def _try_circuit(circuit: Circuit, spec: GapSpec, tour_seed) -> Layout | None:
    occ = circuit.occurrences()
    t = len(occ)
    L = circuit.length
    seq = zigzag_names(t, "odd" if t % 2 else "even")
    if spec.is_empty():
        return _first_occurrence_layout(circuit, seq, tour_seed)

    kinds = _rank_constraints(spec, seq, L)
    window = _window(kinds)
    w = len(window)
    closed = w == t
    # each unconstrained rank outside the window still needs a gap of at least 1
    budget = L if closed else L - (t - w)

    base = [kinds[r][0] if kinds[r] else 1 for r in window]
    variable = [x for x, r in enumerate(window) if not (kinds[r] and kinds[r][1])]
    max_slack = budget - sum(base)
    if max_slack < 0:
        return None
    slacks = [max_slack] if closed else range(max_slack + 1)

    verts = circuit.vertices
    tried = 0
    for slack in slacks:
        for extra in _compositions(slack, len(variable)):
            tried += 1
            if tried > MAX_COMBOS:
                return None
            gaps = list(base)
            for x, e in zip(variable, extra):
                gaps[x] += e
            cum = [0]
            for g in gaps:
                cum.append(cum[-1] + g)
            span = cum[-1]
            skeleton_offsets = cum[:-1] if closed else cum
            for a in range(L):
                slots = [(a + off) % L for off in skeleton_offsets]
                skel = [verts[s] for s in slots]
                skel_set = set(skel)
                if len(skel_set) != len(skel):
                    continue
                if closed:
                    return _build_layout(circuit, seq, slots, window[0], tour_seed)
                # a vertex with every copy inside the window has no real slot left
                blocked: dict[int, int] = {}
                ok = True
                for off in range(span + 1):
                    v = verts[(a + off) % L]
                    if v in skel_set:
                        continue
                    c = blocked.get(v, 0) + 1
                    if c == len(occ[v]):
                        ok = False
                        break
                    blocked[v] = c
                if not ok:
                    continue
                chosen = list(slots)
                placed = set(skel_set)
                for off in range(span + 1, L):
                    s = (a + off) % L
                    v = verts[s]
                    if v not in placed:
                        placed.add(v)
                        chosen.append(s)
                return _build_layout(circuit, seq, chosen, window[0], tour_seed)
    return None


def select_reals(
    circuit: Circuit,
    spec: GapSpec,
    seed: int | str = 0,
    retry_budget: int = DEFAULT_RETRY_BUDGET,
    resample: Callable[[str], Circuit] | None = None,
) -> Layout:
    """Pick one real slot per vertex so the clockwise gaps satisfy ``spec``.

    When ``circuit`` admits no valid selection and ``resample`` is given, fresh
    tours ``resample(f"{seed}/{attempt}")`` are tried, ``retry_budget`` at most.
    """
    layout = _try_circuit(circuit, spec, None)
    if layout is not None:
        return layout
    if resample is not None:
        for attempt in range(1, retry_budget + 1):
            tour_seed = f"{seed}/{attempt}"
            layout = _try_circuit(resample(tour_seed), spec, tour_seed)
            if layout is not None:
                return layout
    raise BudgetExhausted(
        f"no real-vertex selection for circuit {circuit.component_index} "
        f"satisfies {spec.describe()} after {retry_budget} tour resamplings"
    )
