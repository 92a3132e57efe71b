import itertools
from math import gcd

import pytest

from skeinblocks import (
    EmptyBlockSpace,
    MissingCurveType,
    NotCovered,
    chain,
    check_factorization,
    classify_edge,
    curve_situation,
    curve_types,
    cyclo_field,
    dumbbell,
    make_level,
    order_report,
    predicted_order,
    theta,
    twist_exponent,
    twist_projective_order,
)
from skeinblocks.graph import caterpillar
from skeinblocks.twist import (
    HOLED_SPHERE,
    NONSEPARATING_GENUS_ONE,
    SEPARATING_POSITIVE,
    as_level_vector,
    bracket_vector,
    effective_colors,
    order_from_exponents,
)

L = make_level


def test_exponent_examples():
    assert twist_exponent(L(7), 0) == 0
    assert twist_exponent(L(5), 2) == 8
    assert twist_exponent(L(10), 1) == 13
    F = cyclo_field(10)
    assert F.power(13) == -F.power(3)


@pytest.mark.parametrize("p", range(5, 17))
def test_exponent_matches_signed_eigenvalue(p):
    F = cyclo_field(p)
    for j in L(p).colors:
        eig = F.power(j * (j + 2)) * (-1) ** j
        assert F.power(twist_exponent(L(p), j)) == eig


def test_effective_color_examples():
    assert effective_colors(L(5), dumbbell(), 1) == (0, 2)
    assert effective_colors(L(10), dumbbell(), 0) == (0, 1, 2, 3)
    G = chain(0, 4)
    # spine edge 0 cuts off legs 0 and 1; the total color must be even at even p
    assert classify_edge(G, 0).sides[0][1] == (0, 1)
    assert effective_colors(L(8), G, 0, (1,) * 4) == (0, 2)
    assert effective_colors(L(8), chain(0, 5), 0, (1,) * 5) == ()


def test_order_examples():
    assert twist_projective_order(L(5), dumbbell(), 1) == 5
    assert twist_projective_order(L(10), dumbbell(), 0) == 20
    assert twist_projective_order(L(6), dumbbell(), 0) == 4
    assert twist_projective_order(L(8), chain(0, 4), 0, (1,) * 4) == 2


def test_empty_block_space():
    with pytest.raises(EmptyBlockSpace):
        twist_projective_order(L(8), chain(1, 2), 0, (0, 1))
    with pytest.raises(EmptyBlockSpace):
        order_from_exponents(8, [])


@pytest.mark.parametrize("p", [5, 7, 8, 10, 12])
def test_order_does_not_depend_on_anchor(p):
    level = L(p)
    G = chain(2, 1)
    for b in itertools.product(level.colors, repeat=1):
        for e in range(G.n_edges):
            try:
                eff = effective_colors(level, G, e, b)
            except EmptyBlockSpace:
                continue
            if not eff:
                continue
            exps = [twist_exponent(level, j) for j in eff]
            orders = {order_from_exponents(p, exps[k:] + exps[:k]) for k in range(len(exps))}
            assert len(orders) == 1


def test_order_is_relabel_invariant():
    level = L(10)
    G = chain(2, 2)
    H = G.relabel(list(reversed(range(G.vertex_count))), list(reversed(range(G.n_edges))), [1, 0])
    for e in range(G.n_edges):
        for b in [(1, 1), (2, 2), (1, 3)]:
            assert twist_projective_order(level, G, e, b) == \
                twist_projective_order(level, H, G.n_edges - 1 - e, b[::-1])


# genus 2, two legs, each leg sharing a vertex with a tadpole: edge 0 splits
# the surface into two genus-1 halves with one leg each
SPLIT = caterpillar("TLTL")


def _situations(level, g, n, colors=None, G=None):
    colors = colors or [c for c in level.colors if c]
    G = G or chain(g, n)
    for b in itertools.product(colors, repeat=n):
        for e in range(G.n_edges):
            try:
                yield G, b, e, curve_situation(level, G, e, b)
            except NotCovered:
                pass


def test_predicted_rows():
    sit = next(s for _, _, _, s in _situations(L(7), 2, 1) if s.case == SEPARATING_POSITIVE)
    assert predicted_order(L(7), sit) == 7
    for p, expected in [(6, 1), (8, 1), (10, 5), (12, 2), (14, 7), (16, 8)]:
        level = L(p)
        found = [(G, b, e, s) for G, b, e, s in _situations(level, 2, 2, G=SPLIT)
                 if s.case == SEPARATING_POSITIVE and s.side_parity == 1]
        assert found
        for G, b, e, s in found:
            assert predicted_order(level, s) == expected
            assert twist_projective_order(level, G, e, b) == expected


def test_even_holed_sphere_two_color_row():
    level = L(8)
    sit = curve_situation(level, chain(1, 3), 0, (2, 1, 1))
    assert sit.case == HOLED_SPHERE and sit.delta == 2 and sit.side_colors == (1, 1)
    assert predicted_order(level, sit) == (8 // 2) // gcd(sit.j_max, 4)


def test_not_covered():
    with pytest.raises(NotCovered):
        curve_situation(L(7), chain(0, 4), 0, (2, 2, 2, 2))
    with pytest.raises(NotCovered):
        curve_situation(L(7), chain(1, 2), 0, (0, 2))
    with pytest.raises(NotCovered):
        curve_situation(L(10), chain(1, 2), 0, (1, 2))
    r = order_report(L(7), chain(0, 4), 0, (2, 2, 2, 2))
    assert r.predicted is None and r.match


@pytest.mark.parametrize("p", [5, 7, 9, 11, 13, 6, 8, 10, 12, 14])
def test_tables_match_computation(p):
    level = L(p)
    shapes = [(g, n, None) for g, n in [(1, 1), (1, 2), (1, 3), (2, 0), (2, 1), (2, 2), (3, 0), (3, 1)]]
    for g, n, G0 in shapes + [(2, 2, SPLIT)]:
        for G, b, e, sit in _situations(level, g, n, G=G0):
            r = order_report(level, G, e, b)
            assert r.match, (p, g, n, b, e, r)
            period = p if level.is_odd else 2 * p
            assert period % r.computed == 0


def test_even_genus_one_row_is_flagged():
    level = L(10)
    r = order_report(level, chain(1, 1), 0, (2,))
    assert r.situation.case == NONSEPARATING_GENUS_ONE and r.situation.delta == 2
    assert r.typography_resolved and r.match
    assert (r.computed, r.literal_predicted) == (4, 10)


def test_factorization_examples():
    G = dumbbell()
    assert check_factorization(L(7), G, (), (7, 7)).passed
    assert check_factorization(L(12), G, (), (24, 3)).passed
    r = check_factorization(L(5), G, (), (2, 5))
    assert not r.passed
    assert {e for e, *_ in r.violations} == {0, 2}
    assert all(not ct.separating and order == 5 for _, ct, order, _ in r.violations)


def test_level_vector_forms():
    G = dumbbell()
    types = list(curve_types(G))
    assert as_level_vector(G, {types[0]: 3, types[1]: 4}) == {types[0]: 3, types[1]: 4}
    assert bracket_vector(G, 10, 5) == {types[0]: 10, types[1]: 5}
    with pytest.raises(MissingCurveType):
        as_level_vector(G, (3,))
    with pytest.raises(MissingCurveType):
        as_level_vector(G, {types[0]: 3})
    with pytest.raises(ValueError):
        as_level_vector(theta(), (3, 4))
