"""The x0 parameter governing the minimum first odd-component order."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParams


@dataclass(frozen=True)
class X0Result:
    x0: int
    low: int
    high: int
    min_first_order: int

    @property
    def interval(self) -> tuple[int, int]:
        return (self.low, self.high)


def solve_x0(k: int, d: int) -> X0Result | None:
    """Return the unique ``x0 >= 1`` with ``(2d-2)x0 + 3d + 7 <= k <= (2d-2)x0 + 5d + 4``.

    ``None`` when ``k <= 5d + 4``: that regime needs no lower bound on the
    first odd component.
    """
    if d < 2 or k < 0:
        raise InvalidParams(f"need d >= 2 and k >= 0, got d={d}, k={k}")
    if k <= 5 * d + 4:
        return None
    step = 2 * d - 2
    x0 = (k - 3 * d - 7) // step
    return X0Result(
        x0=x0,
        low=step * x0 + 3 * d + 7,
        high=step * x0 + 5 * d + 4,
        min_first_order=2 * x0 + 5,
    )
