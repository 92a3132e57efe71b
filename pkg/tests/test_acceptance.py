"""Exit criteria of the package, one test per criterion.

Every test prints a ``PASS criterion N`` or ``FAIL criterion N`` line (also
collected in the terminal summary). Criteria 8 and 9 do not hold at one level
each; their tests assert the full claim and are marked strict xfail, while the
counterexamples and the parts that do hold are asserted separately.
"""

import time
from math import gcd

import pytest

from skeinblocks import (
    chain,
    curve_types,
    is_indefinite_some_embedding,
    make_level,
    necklace,
    twist_projective_order,
)
from skeinblocks.graph import classify_edge
from skeinblocks.verify import (
    verify_delta,
    verify_factor,
    verify_genus1,
    verify_indef,
    verify_orders,
    verify_stabilizer,
    verify_verlinde,
)

pytestmark = pytest.mark.acceptance


def _timed(fn, **kw):
    t0 = time.perf_counter()
    rep = fn(**kw)
    return rep, time.perf_counter() - t0


@pytest.fixture(scope="module")
def delta_report():
    return _timed(verify_delta, p_max=14, n_max=4, m5_p_max=9)


@pytest.fixture(scope="module")
def orders_report():
    return _timed(verify_orders, p_max=14, g_max=3, n_max=3)


@pytest.fixture(scope="module")
def factor_report():
    return verify_factor(p_max=14, g_max=3, n_max=3)


def _ratio(records):
    bad = [r for r in records if not r.match]
    return f"{len(records) - len(bad)}/{len(records)}", bad


def test_c1_delta_oracle(delta_report, criterion):
    rep, secs = delta_report
    recs = rep.by_kind("delta") + rep.by_kind("delta1")
    ps = sorted({r.inputs["p"] for r in recs})
    frac, bad = _ratio(recs)
    ok = criterion(1, not bad and ps == [5, 6, 7, 8, 9, 10, 11, 12, 13, 14] and secs < 120,
                   f"closed-form delta and one-handle delta equal counts, {frac} tuples, "
                   f"p in {ps[0]}..{ps[-1]}, n<=4, {secs:.1f}s")
    assert ok, bad[:5]


def test_c2_genus0_nonvanishing(delta_report, criterion):
    rep, _ = delta_report
    recs = rep.by_kind("nonzero")
    m5 = {r.inputs["p"] for r in recs if r.inputs["colors"].count(",") == 4}
    frac, bad = _ratio(recs)
    ok = criterion(2, not bad and m5 == {5, 6, 7, 8, 9},
                   f"nonvanishing test equals dimension > 0, {frac} tuples, m=5 for p<=9")
    assert ok, bad[:5]


def test_c3_genus1(criterion):
    rep = verify_genus1(p_max=16)
    p4 = {r.inputs["p"]: r.computed for r in rep.by_kind("p-4")}
    frac, bad = _ratio(rep.records)
    ok = criterion(3, not bad and sorted(p4) == [8, 10, 12, 14, 16],
                   f"genus-1 two-leg formula equals enumeration on two graphs, {frac} checks, "
                   f"dim at legs (1,1) = {p4}")
    assert ok, bad[:5]


def test_c4_verlinde(criterion):
    rep = verify_verlinde(p_max=14)
    vals = [r.computed for r in rep.by_kind("value")]
    frac, bad = _ratio(rep.records)
    ok = criterion(4, not bad and vals == [5, 5],
                   f"genus-2 and genus-3 decompositions agree for p<=14, {frac} checks, "
                   f"theta and dumbbell give {vals} at p=5")
    assert ok, bad[:5]


def _exceptional_rows(table):
    nonsep6 = {r.computed for r in table
               if r.inputs["p"] == 6 and "nonseparating-higher-genus" in r.note}
    split = {}
    for r in table:
        legs = r.inputs["legs"]
        if (r.inputs["graph"] == "TLTL" and r.inputs["edge"] == 0
                and int(legs.split(",")[0]) % 2 == 1 and r.inputs["p"] % 2 == 0):
            split.setdefault(r.inputs["p"], set()).add(r.computed)
    return nonsep6, split


def test_c5_order_tables(orders_report, criterion):
    rep, secs = orders_report
    table = rep.by_kind("table")
    nonsep6, split = _exceptional_rows(table)
    frac, bad = _ratio(table)
    expected_split = {6: {1}, 8: {1}, 10: {5}, 12: {2}, 14: {7}}
    ok = criterion(5, not bad and nonsep6 == {4} and split == expected_split and secs < 300,
                   f"twist orders equal the tables on {frac} covered curves, odd p<=13, even p<=14, "
                   f"g<=3, n<=3; p=6 non-separating {sorted(nonsep6)}, odd-split "
                   f"{ {p: min(v) for p, v in sorted(split.items())} }, {secs:.1f}s")
    assert ok, bad[:5]


def test_c6_divisibility(orders_report, criterion):
    rep, _ = orders_report
    frac, bad = _ratio(rep.by_kind("divides"))
    ok = criterion(6, not bad, f"every twist order divides p (odd) or 2p (even), {frac} curves")
    assert ok, bad[:5]


def test_c7_factorization(factor_report, criterion):
    good, bad_good = _ratio(factor_report.by_kind("level-vector"))
    wrong, bad_wrong = _ratio(factor_report.by_kind("wrong-vector"))
    ok = criterion(7, not bad_good and not bad_wrong,
                   f"level vector passes on {good} spaces, wrong vectors rejected on {wrong}")
    assert ok, (bad_good + bad_wrong)[:5]


def test_c10_curve_types(factor_report, criterion):
    frac, bad = _ratio(factor_report.by_kind("curve-types"))
    counts = {(r.inputs["g"], r.inputs["n"]): r.computed for r in factor_report.by_kind("curve-types")}
    ok = criterion(10, not bad, f"curve-type counts on chain graphs {frac}: {counts}")
    assert ok, bad


# -- criterion 8 ------------------------------------------------------------


@pytest.fixture(scope="module")
def stabilizer_report():
    return verify_stabilizer(p_max=16, genera=(2, 3), n_max=2, even_from=8)


@pytest.mark.xfail(strict=True, reason="at p=8 the colors (2,2,2) are not admissible, "
                   "so with two or more legs the separating order is 1, not 2")
def test_c8_stabilizer(stabilizer_report, criterion):
    frac, bad = _ratio(stabilizer_report.records)
    where = sorted({(r.inputs["p"], r.inputs["g"], r.inputs["n"], r.inputs["type"], r.computed, r.expected)
                    for r in bad})
    ok = criterion(8, not bad, f"all-2 stabilizer orders for g in {{2,3}}, odd p 5..15, even p 8..16: {frac} match; "
                   f"mismatches (p,g,n,type,computed,claimed) {where}")
    assert ok


def test_c8_holds_away_from_p8(stabilizer_report):
    bad = [r for r in stabilizer_report.mismatches if r.inputs["p"] != 8]
    assert not bad


def test_c8_counterexample_at_p8():
    level = make_level(8)
    G = chain(2, 2)
    orders = {classify_edge(G, e).separating: set() for e in range(G.n_edges)}
    for e in range(G.n_edges):
        orders[classify_edge(G, e).separating].add(twist_projective_order(level, G, e, (2, 2)))
    assert orders[False] == {16}
    assert 1 in orders[True] and 8 // gcd(8, 4) == 2


# -- criterion 9 ------------------------------------------------------------


@pytest.fixture(scope="module")
def indef_report():
    return _timed(verify_indef, p_max=16)


@pytest.mark.xfail(strict=True, reason="at p=12 every embedding gives the same sign to all "
                   "weights at legs (1,1): the ratio of consecutive weights is "
                   "[k+2]^2/([k+1][k+3]), positive for all four root classes")
def test_c9_indefiniteness(indef_report, criterion):
    rep, secs = indef_report
    indef = rep.by_kind("indefinite")
    unitary = rep.by_kind("unitary-definite")
    witnesses = {r.inputs["p"]: r.note for r in indef}
    frac_u, bad_u = _ratio(unitary)
    ok = criterion(9, all(r.match for r in indef) and not bad_u and secs < 60,
                   f"indefinite at some embedding {witnesses}; unitary root definite on {frac_u} "
                   f"spaces; {secs:.1f}s")
    assert ok


def test_c9_holds_except_p12(indef_report):
    rep, secs = indef_report
    assert [r.inputs["p"] for r in rep.by_kind("indefinite") if not r.match] == [12]
    assert all(r.match for r in rep.by_kind("unitary-definite"))
    assert secs < 60


def test_c9_counterexample_at_p12():
    assert is_indefinite_some_embedding(make_level(12), necklace(2), (1, 1)) == (False, None)
    assert is_indefinite_some_embedding(make_level(12), chain(1, 2), (1, 1)) == (False, None)
