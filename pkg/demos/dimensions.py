"""Block-space dimensions on a few surfaces.

Counts admissible colorings on the demo graphs, compares two decompositions
of the same closed surface, and shows how the holed-sphere count delta
collapses to its closed form.

    python demos/dimensions.py [--p-max 12]
"""

from __future__ import annotations

import argparse
from pathlib import Path

from skeinblocks import (
    chain,
    delta,
    delta_by_enumeration,
    dim_blocks,
    dim_genus1_pair,
    dumbbell,
    make_level,
    parse_graph,
    tetrahedron,
    theta,
)

GRAPHS = Path(__file__).resolve().parent / "graphs"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p-max", type=int, default=12)
    args = ap.parse_args()

    print("closed surfaces: two decompositions each")
    print(f"{'p':>3} {'theta':>7} {'dumbbell':>9} {'tetra':>7} {'chain3':>7}")
    for p in range(3, args.p_max + 1):
        lv = make_level(p)
        print(f"{p:>3} {dim_blocks(lv, theta()):>7} {dim_blocks(lv, dumbbell()):>9} "
              f"{dim_blocks(lv, tetrahedron()):>7} {dim_blocks(lv, chain(3, 0)):>7}")

    # graphs stored as JSON, read the same way the CLI reads them
    print("\nJSON graphs at p=7")
    lv = make_level(7)
    for name, legs in [("genus1_two_legs", (2, 2)), ("genus2_one_leg", (2,))]:
        G = parse_graph((GRAPHS / f"{name}.json").read_bytes())
        print(f"  {name:<16} legs={legs}  g={G.genus}  dim={dim_blocks(lv, G, legs)}")

    print("\nholed sphere, delta from the bounds against direct counting (p=9)")
    lv = make_level(9)
    for cs in [(2, 2), (2, 4), (4, 4, 2), (6, 6, 2, 2)]:
        rep = delta(lv, cs)
        print(f"  colors={cs!s:<14} J={rep.j_min}..{rep.j_max}  delta={rep.value}  "
              f"count={delta_by_enumeration(lv, cs)}")

    print("\ngenus one, two legs colored (1,1): the dimension grows like p-4")
    for p in range(8, args.p_max + 1, 2):
        print(f"  p={p:<3} dim={dim_genus1_pair(make_level(p), 1, 1)}")


if __name__ == "__main__":
    main()
