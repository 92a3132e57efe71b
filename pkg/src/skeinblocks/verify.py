"""Sweeps comparing closed forms and tables against direct computation.

Each suite returns a :class:`VerifyReport` whose records carry the inputs, the
computed value, the value it is checked against and a match flag. Suites run
sequentially in a fixed order, so reports are reproducible byte for byte.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Callable

from .blocks import (
    delta,
    delta_by_enumeration,
    delta_one_handle,
    delta_one_handle_by_enumeration,
    dim_blocks,
    dim_genus1_pair,
    enumerate_colorings,
    genus0_dim,
    genus0_nonzero,
)
from .cyclo import unitary_root
from .errors import EmptyBlockSpace
from .form import diagonal_weights, is_indefinite_some_embedding
from .graph import caterpillar, chain, classify_edge, curve_types, dumbbell, necklace, tetrahedron, theta
from .level import LevelSpec, make_level
from .twist import bracket_vector, check_factorization, order_report, twist_projective_order

SUITES = ("delta", "orders", "genus1", "verlinde", "factor", "stabilizer", "indef")


@dataclass
class Record:
    kind: str
    inputs: dict[str, Any]
    computed: Any
    expected: Any
    match: bool
    note: str = ""

    def fields(self) -> dict[str, Any]:
        out = {"kind": self.kind, **self.inputs, "computed": self.computed,
               "expected": self.expected, "match": self.match}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerifyReport:
    suite: str
    params: dict[str, Any]
    records: list[Record] = field(default_factory=list)

    def add(self, kind: str, inputs: dict[str, Any], computed, expected, note: str = "") -> Record:
        rec = Record(kind, inputs, computed, expected, computed == expected, note)
        self.records.append(rec)
        return rec

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def mismatches(self) -> list[Record]:
        return [r for r in self.records if not r.match]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> dict[str, Any]:
        return {"suite": self.suite, **self.params, "cases": self.total,
                "matched": self.total - len(self.mismatches), "mismatched": len(self.mismatches)}

    def by_kind(self, kind: str) -> list[Record]:
        return [r for r in self.records if r.kind == kind]


def odd_levels(lo: int, hi: int) -> list[int]:
    return [p for p in range(lo, hi + 1) if p % 2]


def even_levels(lo: int, hi: int) -> list[int]:
    return [p for p in range(lo, hi + 1) if p % 2 == 0]


def _levels(p_max: int, odd_from: int = 5, even_from: int = 6) -> list[LevelSpec]:
    ps = odd_levels(odd_from, p_max) + even_levels(even_from, p_max)
    return [make_level(p) for p in sorted(ps)]


def _fmt(colors) -> str:
    return ",".join(map(str, colors))


# ---------------------------------------------------------------------------
# suites


def verify_delta(p_max: int = 14, n_max: int = 4, m5_p_max: int = 9) -> VerifyReport:
    """Closed-form delta and delta-one-handle against counting, plus genus-0 nonvanishing."""
    rep = VerifyReport("delta", {"p_max": p_max, "n_max": n_max})
    for level in _levels(p_max):
        p = level.p
        for n in range(1, n_max + 1):
            for cs in itertools.product(level.colors, repeat=n):
                key = {"p": p, "colors": _fmt(cs)}
                if n >= 2:
                    d = delta(level, cs)
                    rep.add("delta", key, d.value, delta_by_enumeration(level, cs))
                d1 = delta_one_handle(level, cs)
                note = f"literal={d1.literal_value}" if d1.typography_resolved else ""
                rep.add("delta1", key, d1.value, delta_one_handle_by_enumeration(level, cs), note)
        for m in range(3, max(n_max, 5 if p <= m5_p_max else 0) + 1):
            for cs in itertools.product(level.colors, repeat=m):
                rep.add("nonzero", {"p": p, "colors": _fmt(cs)},
                        genus0_nonzero(level, cs), genus0_dim(level, cs) > 0)
    return rep


def sweep_graphs(g_max: int, n_max: int, g_min: int = 0):
    """Chain graphs for each (g, n), plus the pattern alternating handles and legs."""
    for g in range(g_min, g_max + 1):
        for n in range(0, n_max + 1):
            patterns = ["T" * g + "L" * n]
            if g >= 2 and n >= 2:
                k = min(g, n)
                patterns.append("TL" * k + "T" * (g - k) + "L" * (n - k))
            for pat in patterns:
                try:
                    yield g, n, pat, caterpillar(pat)
                except ValueError:
                    pass


def verify_orders(p_max: int = 16, g_max: int = 3, n_max: int = 3) -> VerifyReport:
    """Computed twist orders against the tables, and their divisibility by p or 2p."""
    rep = VerifyReport("orders", {"p_max": p_max, "g_max": g_max, "n_max": n_max})
    for level in _levels(p_max):
        p = level.p
        period = p if level.is_odd else 2 * p
        for g, n, pat, G in sweep_graphs(g_max, n_max):
            for b in itertools.product(level.colors, repeat=n):
                if dim_blocks(level, G, b) == 0:
                    continue
                for e in range(G.n_edges):
                    key = {"p": p, "graph": pat, "legs": _fmt(b), "edge": e}
                    if g >= 1 and 0 not in b:
                        r = order_report(level, G, e, b)
                        note = ""
                        if r.situation is not None:
                            note = f"case={r.situation.case}"
                            if r.typography_resolved:
                                note += " typography-resolved"
                            if r.literal_predicted is not None:
                                note += f" literal={r.literal_predicted}"
                        if r.predicted is not None:
                            rep.add("table", key, r.computed, r.predicted, note)
                        order = r.computed
                    else:
                        order = twist_projective_order(level, G, e, b)
                    rep.add("divides", key, period % order == 0, True, f"order={order}")
    return rep


def verify_genus1(p_max: int = 16) -> VerifyReport:
    """Genus-1 two-leg dimension formula against counting on two decompositions."""
    rep = VerifyReport("genus1", {"p_max": p_max})
    for level in _levels(p_max):
        p = level.p
        for i, j in itertools.product(level.colors, repeat=2):
            key = {"p": p, "legs": _fmt((i, j))}
            formula = dim_genus1_pair(level, i, j)
            rep.add("chain", key, formula, dim_blocks(level, chain(1, 2), (i, j)))
            rep.add("necklace", key, formula, dim_blocks(level, necklace(2), (i, j)))
        if not level.is_odd and p >= 8:
            rep.add("p-4", {"p": p, "legs": "1,1"}, dim_blocks(level, necklace(2), (1, 1)), p - 4)
    return rep


def verify_verlinde(p_max: int = 14) -> VerifyReport:
    """Closed-surface dimensions agree across decompositions; counts agree with enumeration."""
    rep = VerifyReport("verlinde", {"p_max": p_max})
    for p in range(3, p_max + 1):
        level = make_level(p)
        key = {"p": p}
        d_theta = dim_blocks(level, theta())
        rep.add("genus2", key, d_theta, dim_blocks(level, dumbbell()))
        rep.add("genus3", key, dim_blocks(level, tetrahedron()), dim_blocks(level, chain(3, 0)))
        rep.add("count", {**key, "graph": "theta"}, d_theta, len(enumerate_colorings(level, theta())))
    rep.add("value", {"p": 5, "graph": "theta"}, dim_blocks(make_level(5), theta()), 5)
    rep.add("value", {"p": 5, "graph": "dumbbell"}, dim_blocks(make_level(5), dumbbell()), 5)
    return rep


def _factor_vectors(level: LevelSpec, G):
    p = level.p
    if level.is_odd:
        good = bracket_vector(G, p, p)
        bad = bracket_vector(G, 2, p)
    else:
        good = bracket_vector(G, 2 * p, p // gcd(4, p))
        bad = bracket_vector(G, p, p // gcd(4, p))
    return good, bad


def verify_factor(p_max: int = 16, g_max: int = 3, n_max: int = 3) -> VerifyReport:
    """Twist orders divide the level vector; wrong vectors are caught; curve-type counts."""
    rep = VerifyReport("factor", {"p_max": p_max, "g_max": g_max, "n_max": n_max})
    for level in _levels(p_max):
        p = level.p
        colors = level.colors if level.is_odd else [c for c in level.colors if c % 2 == 0]
        for g, n, pat, G in sweep_graphs(g_max, n_max, g_min=1):
            good, bad = _factor_vectors(level, G)
            for b in itertools.product(colors, repeat=n):
                if dim_blocks(level, G, b) == 0:
                    continue
                key = {"p": p, "graph": pat, "legs": _fmt(b)}
                r = check_factorization(level, G, b, good)
                rep.add("level-vector", key, r.passed, True,
                        "" if r.passed else f"violations={len(r.violations)}")
                if n == 0:
                    r = check_factorization(level, G, b, bad)
                    rep.add("wrong-vector", key, r.passed, False)
    for g in range(2, 7):
        rep.add("curve-types", {"g": g, "n": 0}, len(curve_types(chain(g, 0))), g // 2 + 1)
    for g in range(2, 6):
        rep.add("curve-types", {"g": g, "n": 1}, len(curve_types(chain(g, 1))), g)
    return rep


def stabilizer_expected(level: LevelSpec, separating: bool) -> int:
    p = level.p
    if level.is_odd:
        return p
    return p // gcd(p, 4) if separating else 2 * p


def verify_stabilizer(p_max: int = 16, genera=(2, 3), n_max: int = 2, even_from: int = 8) -> VerifyReport:
    """All legs colored 2: separating and non-separating twist orders."""
    rep = VerifyReport("stabilizer", {"p_max": p_max, "n_max": n_max})
    for level in _levels(p_max, even_from=even_from):
        for g in genera:
            for n in range(0, n_max + 1):
                if (g, n) == (2, 0):
                    continue
                G = chain(g, n)
                b = (2,) * n
                for e in range(G.n_edges):
                    sep = classify_edge(G, e).separating
                    key = {"p": level.p, "g": g, "n": n, "edge": e,
                           "type": "sep" if sep else "nonsep"}
                    try:
                        order = twist_projective_order(level, G, e, b)
                    except EmptyBlockSpace:
                        order = 0
                    rep.add("order", key, order, stabilizer_expected(level, sep))
    return rep


def _unitary_spaces(level: LevelSpec):
    c = level.colors
    yield "theta", theta(), ()
    yield "dumbbell", dumbbell(), ()
    for b in itertools.product(c, repeat=1):
        yield "chain:1,1", chain(1, 1), b
    for b in itertools.product(c, repeat=2):
        yield "chain:1,2", chain(1, 2), b
    for b in itertools.product(c, repeat=3):
        yield "chain:0,3", chain(0, 3), b
    for b in itertools.combinations_with_replacement(c, 4):
        yield "chain:0,4", chain(0, 4), b
    for b in itertools.product(c, repeat=1):
        yield "chain:2,1", chain(2, 1), b


def verify_indef(p_max: int = 16, even_ps=(10, 12, 14, 16), odd_ps=(5, 7, 9, 11),
                 unitary_p_max: int = 13) -> VerifyReport:
    """Indefiniteness at some embedding, and definiteness at the unitary one."""
    rep = VerifyReport("indef", {"p_max": p_max})
    for p in sorted(even_ps + odd_ps):
        if p > p_max:
            continue
        level = make_level(p)
        legs = (1, 1) if p % 2 == 0 else (2, 2)
        found, ell = is_indefinite_some_embedding(level, necklace(2), legs)
        rep.add("indefinite", {"p": p, "graph": "necklace:2", "legs": _fmt(legs)}, found, True,
                f"witness_ell={ell}" if found else "definite at every embedding")
    for level in _levels(min(p_max, unitary_p_max)):
        root = unitary_root(level.p)
        for name, G, b in _unitary_spaces(level):
            if dim_blocks(level, G, b) == 0:
                continue
            signs = diagonal_weights(level, G, b).signs(root)
            rep.add("unitary-definite", {"p": level.p, "ell": root.ell, "graph": name, "legs": _fmt(b)},
                    len(set(signs)) == 1, True)
    return rep


RUNNERS: dict[str, Callable[..., VerifyReport]] = {
    "delta": verify_delta,
    "orders": verify_orders,
    "genus1": verify_genus1,
    "verlinde": verify_verlinde,
    "factor": verify_factor,
    "stabilizer": verify_stabilizer,
    "indef": verify_indef,
}


def run_suite(name: str, p_max: int | None = None, **kw) -> list[VerifyReport]:
    """Run one suite (or all of them for ``name='all'``), capping the level at ``p_max``."""
    names = SUITES if name == "all" else (name,)
    out = []
    for s in names:
        if s not in RUNNERS:
            raise ValueError(f"unknown suite {s!r}; choose from {', '.join(SUITES)} or all")
        args = dict(kw)
        if p_max is not None:
            args["p_max"] = p_max
        out.append(RUNNERS[s](**args))
    return out
