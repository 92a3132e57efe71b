"""The level p: its color set, q-bound, and the vertex admissibility rule."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InvalidColor, InvalidLevel


@dataclass(frozen=True)
class LevelSpec:
    """Level ``p`` of the theory with its colors and q-bound.

    Odd ``p`` uses the even colors ``0, 2, ..., p-3`` and the bound
    ``2p-4``; even ``p`` uses ``0, 1, ..., (p-4)/2`` and the bound ``p-4``.
    Build instances with :func:`make_level`.
    """

    p: int
    colors: tuple[int, ...]
    q_bound: int
    _color_set: frozenset[int] = field(repr=False, compare=False)

    @property
    def parity(self) -> str:
        return "odd" if self.p % 2 else "even"

    @property
    def is_odd(self) -> bool:
        return self.p % 2 == 1

    @property
    def max_color(self) -> int:
        return self.colors[-1]

    def check_color(self, c: int) -> int:
        if c not in self._color_set:
            raise InvalidColor(f"color {c!r} is not in C_{self.p} = {list(self.colors)}")
        return c

    def check_colors(self, cs) -> tuple[int, ...]:
        return tuple(self.check_color(c) for c in cs)

    def __contains__(self, c) -> bool:
        return c in self._color_set


@lru_cache(maxsize=None)
def make_level(p: int) -> LevelSpec:
    if not isinstance(p, int) or isinstance(p, bool) or p < 3:
        raise InvalidLevel(f"level must be an integer >= 3, got {p!r}")
    if p % 2:
        colors = tuple(range(0, p - 2, 2))
        q = 2 * p - 4
    else:
        colors = tuple(range(0, (p - 4) // 2 + 1))
        q = p - 4
    return LevelSpec(p, colors, q, frozenset(colors))


def _admissible(q: int, a: int, b: int, c: int) -> bool:
    s = a + b + c
    return s % 2 == 0 and s <= q and a <= b + c and b <= a + c and c <= a + b


def admissible_triple(level: LevelSpec, a: int, b: int, c: int) -> bool:
    """Triangle, parity and q-bound conditions at one trivalent vertex."""
    level.check_colors((a, b, c))
    return _admissible(level.q_bound, a, b, c)


@lru_cache(maxsize=None)
def admissible_table(level: LevelSpec) -> dict[tuple[int, int], tuple[int, ...]]:
    """For each ordered pair of colors, the third colors completing an admissible vertex."""
    q = level.q_bound
    return {
        (a, b): tuple(c for c in level.colors if _admissible(q, a, b, c))
        for a in level.colors
        for b in level.colors
    }
