"""Conformal-block dimensions.

Two independent routes are provided. Enumeration lists every admissible
coloring of a trivalent graph (and ``dim_blocks`` counts them); the closed
forms give genus-0 nonvanishing, the counts delta and delta-one-handle, and
the genus-1 two-leg dimension. The ``*_by_enumeration`` functions evaluate
the same quantities directly from their definitions through ``dim_blocks``
and serve as oracles for the closed forms.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import InvalidColor, InvalidLevel
from .graph import TrivalentGraph, chain
from .level import LevelSpec, _admissible


@dataclass(frozen=True)
class Coloring:
    """Colors of the internal edges (by edge index) extending a boundary coloring."""

    edges: tuple[int, ...]
    boundary: tuple[int, ...]


def _check_boundary(level: LevelSpec, G: TrivalentGraph, boundary) -> tuple[int, ...]:
    boundary = tuple(boundary)
    if len(boundary) != G.n_legs:
        raise InvalidColor(f"{len(boundary)} boundary colors given for {G.n_legs} legs")
    return level.check_colors(boundary)


@lru_cache(maxsize=None)
def _schedule(G: TrivalentGraph):
    """Edge processing order and, per step, the vertices completed at that step.

    Vertices are visited breadth-first from vertex 0 and each edge is placed by
    its later endpoint, so vertices close as early as possible.
    """
    V = G.vertex_count
    adj = [[] for _ in range(V)]
    for u, v in G.edges:
        adj[u].append(v)
        adj[v].append(u)
    pos = [-1] * V
    pos[0] = 0
    dq, k = deque([0]), 1
    while dq:
        x = dq.popleft()
        for y in adj[x]:
            if pos[y] < 0:
                pos[y] = k
                k += 1
                dq.append(y)
    order = sorted(range(G.n_edges), key=lambda i: (max(pos[G.edges[i][0]], pos[G.edges[i][1]]),
                                                   min(pos[G.edges[i][0]], pos[G.edges[i][1]]), i))
    step_of = {e: t for t, e in enumerate(order)}
    done_at = [[] for _ in range(len(order) + 1)]  # index 0 = before any edge
    for v, slots in enumerate(G.incidence):
        t = max((step_of[i] + 1 for kind, i in slots if kind == "edge"), default=0)
        done_at[t].append(v)
    # edges still needed after step t (some endpoint not yet complete)
    finish = [0] * V
    for t, vs in enumerate(done_at):
        for v in vs:
            finish[v] = t
    open_after = []
    for t in range(len(order)):
        open_after.append(tuple(e for e in order[: t + 1] if max(finish[G.edges[e][0]], finish[G.edges[e][1]]) > t + 1))
    return tuple(order), tuple(tuple(vs) for vs in done_at), tuple(open_after)


def _vertex_ok(q: int, slots, edge_colors, boundary) -> bool:
    c = [edge_colors[i] if kind == "edge" else boundary[i] for kind, i in slots]
    return _admissible(q, c[0], c[1], c[2])


def iter_colorings(level: LevelSpec, G: TrivalentGraph, boundary) -> Iterator[tuple[int, ...]]:
    """Backtracking over the edge schedule, pruning at each completed vertex.

    Yields edge-color tuples in search order (not sorted).
    """
    boundary = _check_boundary(level, G, boundary)
    q = level.q_bound
    order, done_at, _ = _schedule(G)
    inc = G.incidence
    if not all(_vertex_ok(q, inc[v], None, boundary) for v in done_at[0]):
        return
    colors = level.colors
    current = [0] * G.n_edges
    E = len(order)

    def rec(t):
        if t == E:
            yield tuple(current)
            return
        e = order[t]
        closing = done_at[t + 1]
        for c in colors:
            current[e] = c
            if all(_vertex_ok(q, inc[v], current, boundary) for v in closing):
                yield from rec(t + 1)

    yield from rec(0)


def enumerate_colorings(level: LevelSpec, G: TrivalentGraph, boundary=()) -> list[Coloring]:
    """All admissible colorings extending ``boundary``, sorted lexicographically by edge index."""
    boundary = _check_boundary(level, G, boundary)
    return [Coloring(c, boundary) for c in sorted(iter_colorings(level, G, boundary))]


@lru_cache(maxsize=None)
def _admissible_set(level: LevelSpec) -> frozenset[tuple[int, int, int]]:
    q, cs = level.q_bound, level.colors
    return frozenset((a, b, c) for a in cs for b in cs for c in cs if _admissible(q, a, b, c))


@lru_cache(maxsize=200_000)
def _count(level: LevelSpec, G: TrivalentGraph, boundary: tuple[int, ...]) -> int:
    q = level.q_bound
    order, done_at, open_after = _schedule(G)
    inc = G.incidence
    if not all(_vertex_ok(q, inc[v], None, boundary) for v in done_at[0]):
        return 0
    adm = _admissible_set(level)
    # a slot is an edge index (looked up in the frontier) or a fixed leg color
    resolved = [tuple(i if kind == "edge" else -1 - boundary[i] for kind, i in slots) for slots in inc]
    states = {(): 1}
    prev_open: tuple[int, ...] = ()
    assign = {}
    for t, e in enumerate(order):
        closing = [resolved[v] for v in done_at[t + 1]]
        keep = open_after[t]
        nxt: dict[tuple[int, ...], int] = {}
        for state, cnt in states.items():
            assign.clear()
            assign.update(zip(prev_open, state))
            for c in level.colors:
                assign[e] = c
                ok = True
                for s in closing:
                    if tuple(assign[x] if x >= 0 else -1 - x for x in s) not in adm:
                        ok = False
                        break
                if ok:
                    key = tuple(assign[x] for x in keep)
                    nxt[key] = nxt.get(key, 0) + cnt
        states = nxt
        prev_open = keep
        if not states:
            return 0
    return sum(states.values())


def dim_blocks(level: LevelSpec, G: TrivalentGraph, boundary=()) -> int:
    """Dimension of the block space: the number of admissible colorings.

    Counted by a frontier dynamic program over the same edge schedule as the
    enumeration, so the count is exact without materializing colorings.
    """
    return _count(level, G, _check_boundary(level, G, boundary))


# ---------------------------------------------------------------------------
# oracles from the definitions


def genus0_dim(level: LevelSpec, colors) -> int:
    colors = level.check_colors(colors)
    if len(colors) < 3:
        raise ValueError("a holed sphere needs at least three boundary circles")
    return dim_blocks(level, chain(0, len(colors)), colors)


def delta_by_enumeration(level: LevelSpec, colors) -> int:
    """Number of colors j with W_{0,(i..., j)} nonzero, counted directly."""
    return len(delta_support(level, colors))


def delta_support(level: LevelSpec, colors) -> tuple[int, ...]:
    colors = tuple(colors)
    return tuple(j for j in level.colors if genus0_dim(level, colors + (j,)) > 0)


def delta_one_handle_by_enumeration(level: LevelSpec, colors) -> int:
    """Number of colors j with W_{0,(i..., j, j)} nonzero, counted directly."""
    return len(delta_one_handle_support(level, colors))


def delta_one_handle_support(level: LevelSpec, colors) -> tuple[int, ...]:
    colors = tuple(colors)
    return tuple(j for j in level.colors if genus0_dim(level, colors + (j, j)) > 0)


# ---------------------------------------------------------------------------
# closed forms


def _require_closed_form_level(level: LevelSpec):
    if (level.is_odd and level.p < 5) or (not level.is_odd and level.p < 6):
        raise InvalidLevel(f"closed forms need p >= 5 (odd) or p >= 6 (even), got p={level.p}")


def genus0_nonzero(level: LevelSpec, colors) -> bool:
    """Whether the genus-0 block space with these boundary colors is nonzero.

    Odd p: for every k <= (m-1)/2 and every (2k+1)-subset S,
    2 sum(S) <= 2k(p-2) + sum(all). Even p: the total is even and
    2 sum(S) <= k(p-4) + sum(all). The worst subset of each size is the
    largest colors, so only those are tested.
    """
    _require_closed_form_level(level)
    colors = sorted(level.check_colors(colors), reverse=True)
    m = len(colors)
    if m < 3:
        raise ValueError(f"need at least 3 colors, got {m}")
    p, total = level.p, sum(colors)
    if not level.is_odd and total % 2:
        return False
    slack = 2 * (p - 2) if level.is_odd else p - 4
    for k in range((m - 1) // 2 + 1):
        if 2 * sum(colors[: 2 * k + 1]) > k * slack + total:
            return False
    return True


@dataclass(frozen=True)
class DeltaReport:
    """Closed-form value of delta (``variant='plain'``) or delta-one-handle.

    ``j_min``/``j_max`` are the bounds that enter the formula. When the literal
    formula needs an index correction, ``typography_resolved`` is set and
    ``literal_value`` holds what the uncorrected formula gives.
    """

    value: int
    j_min: int | None
    j_max: int | None
    variant: str
    typography_resolved: bool = False
    literal_value: int | None = None


def _s(i, a, b):
    """Sum of i_a..i_b with 1-based inclusive indices; empty when b < a."""
    a = max(a, 1)
    return sum(i[a - 1 : b]) if b >= a else 0


def _upper(i, shift, slack_per_l, ls, cap):
    n = len(i)
    return min(min(cap, _s(i, 1, n - 2 * l + shift) - _s(i, n - 2 * l + 1 + shift, n) + l * slack_per_l) for l in ls)


def _lower(i, slack_per_k, ks, floor):
    n = len(i)
    return max(max(floor, _s(i, n - 2 * k, n) - _s(i, 1, n - 2 * k - 1) - k * slack_per_k) for k in ks)


def _eps(i) -> int:
    return sum(i) % 2


def j_bounds(level: LevelSpec, colors) -> tuple[int, int]:
    """(J_min, J_max) of the delta formula, colors sorted ascending first."""
    _require_closed_form_level(level)
    i = sorted(level.check_colors(colors))
    n, p = len(i), level.p
    if n < 1:
        raise ValueError("need at least one color")
    ls = range(0, n // 2 + 1)
    if level.is_odd:
        return _lower(i, 2 * (p - 2), ls, 0), _upper(i, 0, 2 * (p - 2), ls, p - 3)
    e = _eps(i)
    e_p = e if p % 4 == 0 else 1 - e
    return _lower(i, p - 4, ls, e), _upper(i, 0, p - 4, ls, (p - 4) // 2 - e_p)


def delta(level: LevelSpec, colors) -> DeltaReport:
    """Closed form of the number of j with W_{0,(i..., j)} nonzero (n >= 2)."""
    if len(colors) < 2:
        raise ValueError("delta needs at least two colors")
    jmin, jmax = j_bounds(level, colors)
    return DeltaReport(1 + (jmax - jmin) // 2, jmin, jmax, "plain")


def _j1_max(level: LevelSpec, i, shift: int) -> int:
    n, p = len(i), level.p
    ls = range(1, (n + 1) // 2 + 1)
    if level.is_odd:
        return _upper(i, 1, 2 * (p - 2), ls, 2 * (p - 3))
    return _upper(i, shift, p - 4, ls, p - 4)


def j1_bounds(level: LevelSpec, colors) -> tuple[int, int]:
    """(J1_min, J1_max): bounds on 2j for W_{0,(i..., j, j)} to be nonzero.

    Both parities use the sums over i_1..i_{n-2l+1} and i_{n-2l+2}..i_n in
    J1_max; the even-level display prints n-2l there, which miscounts.
    """
    _require_closed_form_level(level)
    i = sorted(level.check_colors(colors))
    n, p = len(i), level.p
    if level.is_odd:
        return _lower(i, 2 * (p - 2), range(0, (n - 1) // 2 + 1), 0), _j1_max(level, i, 1)
    return _lower(i, p - 4, range(0, (n + 1) // 2 + 1), 0), _j1_max(level, i, 1)


def delta_one_handle(level: LevelSpec, colors) -> DeltaReport:
    """Closed form of the number of j with W_{0,(i..., j, j)} nonzero (n >= 1)."""
    if len(colors) < 1:
        raise ValueError("delta_one_handle needs at least one color")
    i = sorted(level.check_colors(colors))
    if level.is_odd:
        jmin, _ = j_bounds(level, i)
        _, j1max = j1_bounds(level, i)
        return DeltaReport(1 + j1max // 4 - (-(-jmin // 4)), jmin, j1max, "one-handle")
    _require_closed_form_level(level)
    if _eps(i):
        return DeltaReport(0, None, None, "one-handle")
    j1min, j1max = j1_bounds(level, i)
    literal_max = _j1_max(level, i, 0)
    value = 1 + (j1max - j1min) // 2
    literal = 1 + (literal_max - j1min) // 2
    return DeltaReport(value, j1min, j1max, "one-handle", typography_resolved=True,
                       literal_value=literal)


def dim_genus1_pair(level: LevelSpec, i: int, j: int) -> int:
    """Dimension of the genus-1 block space with two legs colored i and j."""
    _require_closed_form_level(level)
    level.check_colors((i, j))
    lo, hi = min(i, j), max(i, j)
    p = level.p
    if level.is_odd:
        return (p - 1 - hi) * (lo + 1) // 2
    if (i - j) % 2:
        return 0
    return ((p - 2) // 2 - hi) * (1 + lo)
