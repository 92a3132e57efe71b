"""Trivalent dual graphs of pants decompositions.

A graph has ``vertex_count`` vertices, internal edges given as vertex pairs
(loops allowed, multi-edges allowed) and legs given by the vertex they hang
from. Edge and leg identity is positional. Every vertex has degree three,
with a loop counting twice and a leg once. The genus is the first Betti
number ``E - V + 1``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    DegenerateCut,
    DegreeViolation,
    DisconnectedGraph,
    GraphSyntaxError,
    NonHyperbolic,
)

BoundaryColoring = tuple  # leg index -> color, positional


@dataclass(frozen=True)
class TrivalentGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    legs: tuple[int, ...] = ()

    def __post_init__(self):
        edges = tuple(tuple(sorted((int(u), int(v)))) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "legs", tuple(int(v) for v in self.legs))
        self._validate()

    def _validate(self):
        V = self.vertex_count
        if V < 1:
            raise DegreeViolation("a graph needs at least one vertex")
        degree = [0] * V
        for u, v in self.edges:
            for w in (u, v):
                if not 0 <= w < V:
                    raise GraphSyntaxError(f"edge endpoint {w} out of range 0..{V - 1}")
            degree[u] += 1
            degree[v] += 1
        for w in self.legs:
            if not 0 <= w < V:
                raise GraphSyntaxError(f"leg vertex {w} out of range 0..{V - 1}")
            degree[w] += 1
        bad = [v for v, d in enumerate(degree) if d != 3]
        if bad:
            raise DegreeViolation(f"vertices {bad} do not have degree 3 (degrees {degree})")
        if len(_components(V, self.edges)) != 1:
            raise DisconnectedGraph("graph is not connected")
        if 2 - 2 * self.genus - self.n_legs >= 0:
            raise NonHyperbolic(f"Euler characteristic 2-2g-n >= 0 for g={self.genus}, n={self.n_legs}")

    @property
    def genus(self) -> int:
        return len(self.edges) - self.vertex_count + 1

    @property
    def n_legs(self) -> int:
        return len(self.legs)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[str, int], ...], ...]:
        """Per vertex, its three slots as ('edge', i) or ('leg', i); loops appear twice."""
        slots = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            slots[u].append(("edge", i))
            slots[v].append(("edge", i))
        for i, w in enumerate(self.legs):
            slots[w].append(("leg", i))
        return tuple(tuple(s) for s in slots)

    def to_json(self) -> str:
        return json.dumps(
            {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges], "legs": [[w] for w in self.legs]}
        )

    def relabel(self, vertex_perm, edge_perm=None, leg_perm=None) -> TrivalentGraph:
        """Isomorphic copy. ``vertex_perm[v]`` is the new name of v; ``edge_perm[i]``
        the new position of edge i; ``leg_perm`` likewise for legs."""
        E = len(self.edges)
        edge_perm = list(range(E)) if edge_perm is None else list(edge_perm)
        edges = [None] * E
        for i, (u, v) in enumerate(self.edges):
            edges[edge_perm[i]] = (vertex_perm[u], vertex_perm[v])
        legs = [vertex_perm[w] for w in self.legs]
        if leg_perm is not None:
            new = [None] * len(legs)
            for i, w in enumerate(legs):
                new[leg_perm[i]] = w
            legs = new
        return TrivalentGraph(self.vertex_count, tuple(edges), tuple(legs))


def _components(V: int, edges) -> list[set[int]]:
    adj = [[] for _ in range(V)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * V
    comps = []
    for s in range(V):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.add(y)
                    dq.append(y)
        comps.append(comp)
    return comps


# ---------------------------------------------------------------------------
# file format


_FIELDS = {"vertices", "edges", "legs"}


def parse_graph(text: str | bytes) -> TrivalentGraph:
    """Parse the JSON graph format ``{"vertices": V, "edges": [[u, v], ...], "legs": [[w], ...]}``."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphSyntaxError(f"graph file is not UTF-8: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphSyntaxError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise GraphSyntaxError("graph must be a JSON object")
    unknown = set(obj) - _FIELDS
    if unknown:
        raise GraphSyntaxError(f"unknown fields {sorted(unknown)}")
    if "vertices" not in obj or "edges" not in obj:
        raise GraphSyntaxError("fields 'vertices' and 'edges' are required")

    def is_int(x):
        return isinstance(x, int) and not isinstance(x, bool)

    V = obj["vertices"]
    if not is_int(V):
        raise GraphSyntaxError("'vertices' must be an integer")
    edges = obj["edges"]
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(is_int(x) for x in e) for e in edges
    ):
        raise GraphSyntaxError("'edges' must be a list of [u, v] integer pairs")
    legs = obj.get("legs", [])
    if not isinstance(legs, list) or not all(isinstance(l, list) and len(l) == 1 and is_int(l[0]) for l in legs):
        raise GraphSyntaxError("'legs' must be a list of one-element [vertex] lists")
    return TrivalentGraph(V, tuple(tuple(e) for e in edges), tuple(l[0] for l in legs))


# ---------------------------------------------------------------------------
# standard constructors


def chain(g: int, n: int) -> TrivalentGraph:
    """Caterpillar with ``g`` tadpoles followed by ``n`` legs hanging off a spine.

    Pendants (tadpoles first, then legs) are attached to a path of ``g+n-2``
    spine vertices, two at each end of the path and one at every interior spine
    vertex. Spine edges come first in the edge list, then tadpole stems, then
    tadpole loops. Two special shapes cover ``g + n = 2``: the dumbbell (2, 0)
    and the one-vertex loop with a leg (1, 1).
    """
    if g < 0 or n < 0:
        raise ValueError("genus and number of legs must be nonnegative")
    return caterpillar("T" * g + "L" * n)


def caterpillar(pattern: str) -> TrivalentGraph:
    """Caterpillar whose pendants follow ``pattern``: ``T`` a tadpole, ``L`` a leg.

    ``chain(g, n)`` is ``caterpillar("T"*g + "L"*n)``; other patterns move the
    legs between the handles, e.g. ``"TLTL"`` has a curve splitting the
    surface into two one-leg tori.
    """
    if set(pattern) - {"T", "L"}:
        raise ValueError(f"pattern may only contain T and L, got {pattern!r}")
    g, n = pattern.count("T"), pattern.count("L")
    m = g + n
    if pattern == "TT":
        return dumbbell()
    if pattern in ("TL", "LT"):
        return TrivalentGraph(1, ((0, 0),), (0,))
    if m < 3 or 2 - 2 * g - n >= 0:
        raise NonHyperbolic(f"no pants decomposition for g={g}, n={n}")
    spine = m - 2
    # pendant k attaches to spine vertex host[k]
    host = [0, 0] + list(range(1, spine - 1)) + [spine - 1, spine - 1]
    host = host[:m] if spine > 1 else [0] * m
    edges = [(s, s + 1) for s in range(spine - 1)]
    legs = []
    V = spine
    tadpoles = []
    for k, kind in enumerate(pattern):
        if kind == "T":
            t = V
            V += 1
            edges.append((host[k], t))
            tadpoles.append(t)
        else:
            legs.append(host[k])
    edges += [(t, t) for t in tadpoles]
    return TrivalentGraph(V, tuple(edges), tuple(legs))


def dumbbell() -> TrivalentGraph:
    """Genus 2: two loops joined by a bridge (edge 1)."""
    return TrivalentGraph(2, ((0, 0), (0, 1), (1, 1)), ())


def theta() -> TrivalentGraph:
    """Genus 2: two vertices joined by three parallel edges."""
    return TrivalentGraph(2, ((0, 1), (0, 1), (0, 1)), ())


def tetrahedron() -> TrivalentGraph:
    """Genus 3: the complete graph on four vertices."""
    return TrivalentGraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)), ())


def necklace(n: int) -> TrivalentGraph:
    """Genus 1: a cycle through ``n`` vertices, one leg at each vertex."""
    if n < 1:
        raise NonHyperbolic("a necklace needs at least one bead")
    if n == 1:
        return TrivalentGraph(1, ((0, 0),), (0,))
    return TrivalentGraph(n, tuple((i, (i + 1) % n) for i in range(n)), tuple(range(n)))


def subdivide_with_leg(G: TrivalentGraph, e: int) -> TrivalentGraph:
    """Insert a new vertex in the middle of edge ``e`` carrying a new last leg."""
    u, v = G.edges[e]
    w = G.vertex_count
    edges = list(G.edges)
    edges[e] = (u, w)
    edges.append((w, v))
    return TrivalentGraph(w + 1, tuple(edges), G.legs + (w,))


def builtin_graph(name: str) -> TrivalentGraph:
    """Resolve names such as ``theta``, ``tetrahedron``, ``chain:2,1``, ``necklace:2``, ``caterpillar:TLTL``."""
    head, _, args = name.partition(":")
    if head == "caterpillar":
        try:
            return caterpillar(args)
        except ValueError as exc:
            raise GraphSyntaxError(str(exc)) from None
    try:
        nums = [int(x) for x in args.split(",")] if args else []
    except ValueError:
        raise GraphSyntaxError(f"bad arguments in graph name {name!r}") from None
    table = {"theta": theta, "dumbbell": dumbbell, "tetrahedron": tetrahedron, "chain": chain, "necklace": necklace}
    if head not in table:
        raise GraphSyntaxError(f"unknown graph name {name!r}")
    try:
        return table[head](*nums)
    except TypeError:
        raise GraphSyntaxError(f"wrong arguments for graph {name!r}") from None


# ---------------------------------------------------------------------------
# curves


@dataclass(frozen=True, order=True)
class CurveType:
    """Mapping-class orbit of a decomposition curve.

    ``sides`` is empty for a non-separating curve; for a separating one it is
    the sorted pair of (genus, legs) for the two complementary pieces.
    """

    kind: str
    sides: tuple[tuple[int, tuple[int, ...]], ...] = ()

    @property
    def separating(self) -> bool:
        return self.kind == "separating"

    @property
    def curve_genus(self) -> int | None:
        """Smaller genus of the two sides of a separating curve."""
        return min(s[0] for s in self.sides) if self.separating else None

    def __str__(self):
        if not self.separating:
            return "nonsep"
        return "sep(" + "|".join(f"g{g}:{','.join(map(str, legs)) or '-'}" for g, legs in self.sides) + ")"


NONSEPARATING = CurveType("nonseparating")


def _sort_key(ct: CurveType):
    return (ct.separating, ct.sides)


def _split(G: TrivalentGraph, e: int):
    """Components of G minus edge e: list of (vertex set, internal edge ids, leg ids)."""
    rest = [edge for i, edge in enumerate(G.edges) if i != e]
    comps = _components(G.vertex_count, rest)
    out = []
    for comp in comps:
        eids = tuple(i for i, (u, v) in enumerate(G.edges) if i != e and u in comp)
        lids = tuple(i for i, w in enumerate(G.legs) if w in comp)
        out.append((comp, eids, lids))
    return out


def _check_edge(G: TrivalentGraph, e: int):
    if not isinstance(e, int) or not 0 <= e < G.n_edges:
        raise IndexError(f"edge index {e!r} out of range 0..{G.n_edges - 1}")


def classify_edge(G: TrivalentGraph, e: int) -> CurveType:
    _check_edge(G, e)
    parts = _split(G, e)
    if len(parts) == 1:
        return NONSEPARATING
    sides = []
    for comp, eids, lids in parts:
        sides.append((len(eids) - len(comp) + 1, lids))
    return CurveType("separating", tuple(sorted(sides)))


def curve_types(G: TrivalentGraph) -> dict[CurveType, tuple[int, ...]]:
    """Distinct curve types of the internal edges, each with its edges, in canonical order.

    Canonical order puts the non-separating type first, then separating types
    sorted by their sides.
    """
    found: dict[CurveType, list[int]] = {}
    for e in range(G.n_edges):
        found.setdefault(classify_edge(G, e), []).append(e)
    return {ct: tuple(found[ct]) for ct in sorted(found, key=_sort_key)}


def cut_edge(G: TrivalentGraph, e: int, j: int, boundary: BoundaryColoring = ()):
    """Cut internal edge ``e`` and cap both ends with new legs colored ``j``.

    Returns a list of ``(graph, boundary_coloring)`` pieces: one piece of genus
    g-1 for a non-separating edge, two pieces otherwise. In each piece the
    surviving legs keep their relative order and the new leg(s) come last.
    """
    _check_edge(G, e)
    boundary = tuple(boundary)
    if len(boundary) != G.n_legs:
        raise ValueError(f"boundary has {len(boundary)} colors for {G.n_legs} legs")
    u, v = G.edges[e]
    pieces = []
    for comp, eids, lids in _split(G, e):
        order = sorted(comp)
        name = {w: i for i, w in enumerate(order)}
        edges = tuple((name[G.edges[i][0]], name[G.edges[i][1]]) for i in eids)
        legs = [name[G.legs[i]] for i in lids]
        colors = [boundary[i] for i in lids]
        for end in (u, v):
            if end in comp:
                legs.append(name[end])
                colors.append(j)
        try:
            piece = TrivalentGraph(len(order), edges, tuple(legs))
        except (NonHyperbolic, DegreeViolation, DisconnectedGraph) as exc:
            raise DegenerateCut(str(exc)) from None
        pieces.append((piece, tuple(colors)))
    return pieces
