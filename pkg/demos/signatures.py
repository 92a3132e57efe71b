"""Signs of the Hermitian form under different embeddings of A.

The diagonal entries are exact cyclotomic numbers; their signs depend on which
primitive 2p-th root A stands for. At the unitary root all entries share one
sign. Elsewhere the form is often indefinite, though not always: at p=12 the
genus-one space with legs (1,1) stays definite for every root.

    python demos/signatures.py
"""

from __future__ import annotations

from skeinblocks import (
    RootSelector,
    admissible_ells,
    diagonal_weights,
    make_level,
    necklace,
    unitary_root,
)


def sign_table(p: int, legs) -> None:
    lv = make_level(p)
    wv = diagonal_weights(lv, necklace(2), legs)
    u = unitary_root(p).ell
    print(f"p={p} legs={legs} dim={len(wv)} (unitary ell={u})")
    for ell in admissible_ells(p):
        signs = wv.signs(RootSelector(p, ell))
        pattern = "".join("+" if s > 0 else "-" for s in signs)
        kind = "definite" if len(set(signs)) == 1 else "indefinite"
        mark = " <- unitary" if ell == u else ""
        print(f"  ell={ell:>2} {pattern:<14} {kind}{mark}")
    print()


def main() -> None:
    for p, legs in [(10, (1, 1)), (12, (1, 1)), (14, (1, 1)), (7, (2, 2))]:
        sign_table(p, legs)


if __name__ == "__main__":
    main()
