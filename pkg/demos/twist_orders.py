"""Projective orders of Dehn twists along the curves of a decomposition.

For each internal edge of a graph the twist acts on the color-j summand by a
power of A, so its projective order only depends on which colors survive the
cut. The script lists those colors, the computed order and the tabulated one.

    python demos/twist_orders.py [--p 10] [--graph caterpillar:TLTL] [--legs 1,1]
"""

from __future__ import annotations

import argparse
from math import gcd

from skeinblocks import (
    bracket_vector,
    builtin_graph,
    check_factorization,
    classify_edge,
    effective_colors,
    make_level,
    order_report,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=10)
    ap.add_argument("--graph", default="caterpillar:TLTL")
    ap.add_argument("--legs", default="1,1")
    args = ap.parse_args()

    lv = make_level(args.p)
    G = builtin_graph(args.graph)
    legs = tuple(int(x) for x in args.legs.split(",")) if args.legs else ()
    print(f"p={lv.p} graph={args.graph} genus={G.genus} legs={legs}\n")

    for e in range(G.n_edges):
        ct = classify_edge(G, e)
        r = order_report(lv, G, e, legs)
        case = r.situation.case if r.situation else "outside the tables"
        print(f"edge {e}: {ct}")
        print(f"  surviving colors {effective_colors(lv, G, e, legs)}")
        print(f"  order {r.computed}, tabulated {r.predicted if r.predicted is not None else '-'} ({case})")

    # the orders should divide the level vector [2p; p/gcd(4,p)] (even) or [p; p] (odd)
    p = lv.p
    k = bracket_vector(G, p, p) if lv.is_odd else bracket_vector(G, 2 * p, p // gcd(4, p))
    rep = check_factorization(lv, G, legs, k)
    print(f"\nlevel vector {sorted(set(k.values()))}: passed={rep.passed}")

if __name__ == "__main__":
    main()
